#include "cobalex/descriptor.hpp"

#include <limits>
#include <string>

#include "cobalex/error.hpp"

namespace cobalex {

namespace {

using nlohmann::json;

mpz_class integer_from_json(const json& v) {
  if (v.is_number_integer()) return mpz_class(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    mpz_class out;
    if (out.set_str(v.get<std::string>(), 10) == 0) return out;
  }
  throw Error(ErrorKind::InvalidInput, "expected an integer, got " + v.dump());
}

nlohmann::ordered_json integer_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

unsigned genus_from_json(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 30) {
    throw Error(ErrorKind::InvalidInput, std::string(what) + " must be an integer in [0, 30]");
  }
  return static_cast<unsigned>(v.get<long long>());
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::InvalidInput, std::string("missing key '") + key + "'");
  return j.at(key);
}

Cobordism explicit_lattice(const json& j) {
  const unsigned g0 = genus_from_json(require(j, "g0"), "g0");
  const unsigned g1 = genus_from_json(require(j, "g1"), "g1");
  const json& cols = require(j, "gamma");
  if (!cols.is_array()) throw Error(ErrorKind::InvalidInput, "gamma must be a list of column vectors");
  const std::size_t rows = 2 * (g0 + g1);
  Cobordism c{g0, g1, IntMatrix(rows, cols.size())};
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const json& col = cols[k];
    if (!col.is_array() || col.size() != rows) {
      throw Error(ErrorKind::InvalidInput, "gamma column " + std::to_string(k) + " must have length " +
                                               std::to_string(rows));
    }
    for (std::size_t r = 0; r < rows; ++r) c.gamma(r, k) = integer_from_json(col[r]);
  }
  return c;
}

Cobordism elementary(const json& j) {
  const json& kind = require(j, "kind");
  const unsigned g = genus_from_json(require(j, "g"), "g");
  if (kind == "Z") return elementary_z(g);
  if (kind == "Zprime") return elementary_zprime(g);
  throw Error(ErrorKind::InvalidInput, "elementary kind must be \"Z\" or \"Zprime\"");
}

}  // namespace

IntMatrix matrix_from_json(const json& rows) {
  if (!rows.is_array()) throw Error(ErrorKind::InvalidInput, "matrix must be a list of rows");
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != cols) throw Error(ErrorKind::InvalidInput, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer_from_json(rows[r][c]);
  }
  return m;
}

nlohmann::ordered_json matrix_to_json(const IntMatrix& m) {
  auto out = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Described parse_descriptor(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "descriptor must be a JSON object");
  if (j.contains("gamma")) return explicit_lattice(j);
  if (j.contains("monodromy")) return graph_cobordism(matrix_from_json(j.at("monodromy")));
  if (j.contains("elementary")) return elementary(j.at("elementary"));
  if (j.contains("compose")) {
    const json& parts = j.at("compose");
    if (!parts.is_array() || parts.empty()) throw Error(ErrorKind::InvalidInput, "compose needs a non-empty list");
    Cobordism acc = cobordism_from_descriptor(parts[0]);
    require_valid(acc);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      Cobordism next = cobordism_from_descriptor(parts[i]);
      require_valid(next);
      acc = compose(acc, next);
    }
    return acc;
  }
  if (j.contains("close_up")) {
    const json& body = j.at("close_up");
    Cobordism of = cobordism_from_descriptor(require(body, "of"));
    require_valid(of);
    std::optional<IntMatrix> phi;
    if (body.contains("phi")) phi = matrix_from_json(body.at("phi"));
    return close_up(of, phi);
  }
  throw Error(ErrorKind::InvalidInput, "unrecognised descriptor: " + j.dump());
}

Cobordism cobordism_from_descriptor(const json& j) {
  auto d = parse_descriptor(j);
  if (auto* c = std::get_if<Cobordism>(&d)) return std::move(*c);
  throw Error(ErrorKind::InvalidInput, "expected a cobordism, got a closed manifold");
}

ClosedManifold closed_from_descriptor(const json& j) {
  auto d = parse_descriptor(j);
  if (auto* cm = std::get_if<ClosedManifold>(&d)) return std::move(*cm);
  auto& c = std::get<Cobordism>(d);
  require_valid(c);
  return close_up(c);
}

nlohmann::ordered_json to_json(const Cobordism& c) {
  nlohmann::ordered_json j;
  j["g0"] = c.g0;
  j["g1"] = c.g1;
  j["gamma"] = matrix_to_json(c.gamma.transpose());
  return j;
}

nlohmann::ordered_json to_json(const ClosedManifold& cm) {
  nlohmann::ordered_json j;
  j["genus"] = cm.genus;
  j["sigma"] = matrix_to_json(cm.sigma);
  j["tau"] = matrix_to_json(cm.tau);
  j["phi"] = matrix_to_json(cm.phi);
  return j;
}

}  // namespace cobalex
