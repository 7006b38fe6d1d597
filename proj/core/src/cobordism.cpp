#include "cobalex/cobordism.hpp"

#include <sstream>

#include "cobalex/error.hpp"

namespace cobalex {

ValidationReport validate(const Cobordism& c) {
  ValidationReport report;
  const std::size_t rows = c.n0() + c.n1();
  const std::size_t cols = c.g0 + c.g1;
  if (c.gamma.rows() != rows || c.gamma.cols() != cols) {
    report.shape_ok = false;
    std::ostringstream os;
    os << "shape: expected " << rows << "x" << cols << " lattice basis, got " << c.gamma.rows() << "x"
       << c.gamma.cols();
    report.violations.push_back(os.str());
    return report;
  }
  if (rank(c.gamma) != cols) {
    report.independent = false;
    report.violations.push_back("independence: lattice basis columns are linearly dependent");
  } else {
    const auto divisors = smith_invariants(c.gamma);
    for (const auto& d : divisors) {
      if (d == 1) continue;
      report.primitive = false;
      report.violations.push_back("primitivity: Smith divisor " + d.get_str() + " != 1");
      break;
    }
  }
  const auto defects = isotropy_defects(c.gamma, c.g0, c.g1);
  if (!defects.empty()) {
    report.isotropic = false;
    std::ostringstream os;
    os << "isotropy: (ω0, -ω1) pairs columns " << defects.front().first << " and " << defects.front().second
       << " nontrivially";
    report.violations.push_back(os.str());
  }
  return report;
}

void require_valid(const Cobordism& c) {
  const auto report = validate(c);
  if (report.ok()) return;
  std::string msg;
  for (const auto& v : report.violations) msg += (msg.empty() ? "" : "; ") + v;
  throw Error(ErrorKind::ValidationFailure, msg);
}

bool is_symplectic(const IntMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) return false;
  const IntMatrix j = SymplecticSpace{static_cast<unsigned>(m.rows() / 2)}.form();
  return m.transpose() * j * m == j;
}

Cobordism graph_cobordism(const IntMatrix& m) {
  if (!is_symplectic(m)) throw Error(ErrorKind::NotSymplectic, "monodromy does not preserve the intersection form");
  const auto g = static_cast<unsigned>(m.rows() / 2);
  return Cobordism{g, g, vstack(IntMatrix::identity(2 * g), m)};
}

Cobordism elementary_z(unsigned g) {
  const SymplecticSpace s0{g}, s1{g + 1};
  Cobordism c{g, g + 1, IntMatrix(s0.dim() + s1.dim(), 2 * g + 1)};
  for (unsigned i = 0; i < g; ++i) {
    c.gamma(s0.a(i), i) = 1;
    c.gamma(s0.dim() + s1.a(i), i) = 1;
    c.gamma(s0.b(i), g + i) = 1;
    c.gamma(s0.dim() + s1.b(i), g + i) = 1;
  }
  c.gamma(s0.dim() + s1.a(g), 2 * g) = 1;
  return c;
}

Cobordism elementary_zprime(unsigned g) {
  const SymplecticSpace s0{g + 1}, s1{g};
  Cobordism c{g + 1, g, IntMatrix(s0.dim() + s1.dim(), 2 * g + 1)};
  for (unsigned i = 0; i < g; ++i) {
    c.gamma(s0.a(i), i) = 1;
    c.gamma(s0.dim() + s1.a(i), i) = 1;
    c.gamma(s0.b(i), g + i) = 1;
    c.gamma(s0.dim() + s1.b(i), g + i) = 1;
  }
  c.gamma(s0.b(g), 2 * g) = 1;
  return c;
}

Composition compose_detailed(const Cobordism& first, const Cobordism& second) {
  if (first.g1 != second.g0) {
    throw Error(ErrorKind::GenusMismatch, "cannot glue genus " + std::to_string(first.g1) + " to genus " +
                                              std::to_string(second.g0));
  }
  const IntMatrix p1 = first.target_part();
  const IntMatrix p2 = second.source_part();
  const std::size_t n1 = p1.rows();

  const IntMatrix junction = hstack(p1, p2);
  if (rank(junction) != n1) {
    throw Error(ErrorKind::TransversalityFailure, "projections of Γ1 and Γ2 do not span the middle surface");
  }

  // Integral fibre product: (x, y) with p1·x = p2·y.
  const IntMatrix fibre = integer_kernel(hstack(p1, mpz_class(-1) * p2));
  const std::size_t r1 = first.gamma.cols();
  const IntMatrix xs = fibre.row_block(0, r1);
  const IntMatrix ys = fibre.row_block(r1, fibre.rows() - r1);
  const IntMatrix image = vstack(first.source_part() * xs, second.target_part() * ys);

  Composition out;
  out.junction_index = saturation_index(junction);
  out.saturation_index = saturation_index(image);
  out.result = Cobordism{first.g0, second.g1, hermite_column_form(saturate(image))};
  return out;
}

Cobordism compose(const Cobordism& first, const Cobordism& second) { return compose_detailed(first, second).result; }

ClosedManifold close_up(const Cobordism& c, const std::optional<IntMatrix>& phi) {
  if (c.g0 != c.g1) {
    throw Error(ErrorKind::GenusMismatch, "close_up needs equal genera, got " + std::to_string(c.g0) + " and " +
                                              std::to_string(c.g1));
  }
  ClosedManifold cm;
  cm.genus = c.g0;
  cm.phi = phi.value_or(IntMatrix::identity(2 * c.g0));
  if (cm.phi.rows() != 2 * c.g0 || !is_symplectic(cm.phi)) {
    throw Error(ErrorKind::NotSymplectic, "identification φ is not in Sp(2g, Z)");
  }
  cm.sigma = c.source_part();
  cm.tau = cm.phi * c.target_part();
  return cm;
}

namespace {

RatMatrix alpha_block(const IntMatrix& gamma, unsigned g0, unsigned g1, int j, Side side) {
  if (j < 0 || j > static_cast<int>(std::min(g0, g1))) throw Error(ErrorKind::OutOfRange, "alpha_map index j");
  const int degree = side == Side::Low ? static_cast<int>(g0) - j : static_cast<int>(g0) + j;
  return correspondence_map(gamma, 2 * g0).block(static_cast<unsigned>(degree)).dense();
}

}  // namespace

RatMatrix alpha_map(const Cobordism& c, int j, Side side) { return alpha_block(c.gamma, c.g0, c.g1, j, side); }

RatMatrix alpha_map(const ClosedManifold& cm, int j, Side side) {
  return alpha_block(cm.gamma(), cm.genus, cm.genus, j, side);
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  return a.rows() == b.rows() && hermite_column_form(a) == hermite_column_form(b);
}

}  // namespace cobalex
