#include "cobalex/invariants.hpp"

#include <algorithm>
#include <cstdlib>

#include "cobalex/error.hpp"
#include "cobalex/extalg.hpp"

namespace cobalex {

namespace {

using Exponent = LaurentPolynomial::Exponent;

// Fraction-free elimination over Z[t, t^-1]; every division is exact.
LaurentPolynomial bareiss_determinant(std::vector<std::vector<LaurentPolynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  LaurentPolynomial prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = lp_exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

mpz_class integral(const mpq_class& q) {
  if (q.get_den() != 1) throw Error(ErrorKind::InvalidInput, "non-integral trace " + q.get_str());
  return q.get_num();
}

mpz_class weighted_sum(const LaurentPolynomial& delta, const TheoryMultiplicities& theory) {
  mpz_class total = 0;
  for (const auto& [e, c] : delta.terms())
    if (e >= 0) total += theory.mu(static_cast<unsigned>(e)) * c;
  return total;
}

LaurentPolynomial geometric_ratio(Exponent step, Exponent j) {
  // (t^{step·j} - t^{-step·j}) / (t^step - t^-step), an exact Laurent quotient
  const LaurentPolynomial num = LaurentPolynomial::monomial(step * j) - LaurentPolynomial::monomial(-step * j);
  const LaurentPolynomial den = LaurentPolynomial::monomial(step) - LaurentPolynomial::monomial(-step);
  return lp_exact_div(num, den);
}

LaurentPolynomial power(const LaurentPolynomial& p, unsigned k) {
  LaurentPolynomial out = 1;
  for (unsigned i = 0; i < k; ++i) out *= p;
  return out;
}

mpz_class value_at_one(const LaurentPolynomial& p) {
  mpz_class s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

}  // namespace

LaurentPolynomial AlexanderCoefficients::polynomial() const {
  LaurentPolynomial p;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const auto e = static_cast<Exponent>(j);
    p += LaurentPolynomial::monomial(e, a[j]);
    if (j > 0) p += LaurentPolynomial::monomial(-e, a[j]);
  }
  return p;
}

LaurentPolynomial alexander_det(const ClosedManifold& cm) {
  const std::size_t n = cm.sigma.rows();
  std::vector<std::vector<LaurentPolynomial>> m(n, std::vector<LaurentPolynomial>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m[r][c] = LaurentPolynomial(cm.sigma(r, c)) - LaurentPolynomial::monomial(1, cm.tau(r, c));
  return bareiss_determinant(std::move(m));
}

AlexanderCoefficients alexander_traces(const ClosedManifold& cm) {
  const unsigned g = cm.genus;
  const GradedMap gm = correspondence_map(cm.gamma(), 2 * g);
  AlexanderCoefficients out;
  out.genus = g;
  out.a.resize(g + 1);
  for (unsigned j = 0; j <= g; ++j) {
    mpz_class tr = integral(gm.block(g - j).trace());
    out.a[j] = (j % 2 == 0) ? tr : mpz_class(-tr);
  }
  return out;
}

AlexanderResult alexander(const ClosedManifold& cm, Route route) {
  AlexanderResult out;
  if (route != Route::Trace) {
    LaurentPolynomial delta = alexander_det(cm);
    if (delta.is_zero()) throw Error(ErrorKind::ZeroDeterminant, "det(σ - tτ) vanishes identically");
    out.normalized = lp_symmetrize(delta);
    out.delta_det = std::move(delta);
  }
  if (route != Route::Det) {
    LaurentPolynomial traced = alexander_traces(cm).polynomial();
    if (traced.is_zero()) throw Error(ErrorKind::ZeroDeterminant, "trace route gives the zero polynomial");
    if (route == Route::Trace) {
      const int sign = positive_leading_sign(traced);
      out.normalized = NormalizedAlexander{sign > 0 ? traced : -traced, 0, sign};
      out.overall_sign = sign;
    } else if (traced == out.normalized.poly) {
      out.overall_sign = 1;
    } else if (traced == -out.normalized.poly) {
      out.overall_sign = -1;
    } else {
      throw Error(ErrorKind::RouteMismatch, "determinant route " + to_string(out.normalized.poly) +
                                                " vs trace route " + to_string(traced));
    }
    out.delta_trace = std::move(traced);
  }
  return out;
}

bool is_homology_s1xs2(const ClosedManifold& cm) { return abs(determinant(cm.sigma - cm.tau)) == 1; }

TheoryMultiplicities TheoryMultiplicities::casson() {
  return {"casson", [](unsigned j) -> mpz_class { return mpz_class(j * j); }};
}

TheoryMultiplicities TheoryMultiplicities::seiberg_witten(unsigned d) {
  return {"sw" + std::to_string(d), [d](unsigned j) -> mpz_class { return j > d ? mpz_class(j - d) : mpz_class(0); }};
}

mpz_class invariant_from_multiplicities(const ClosedManifold& cm, const TheoryMultiplicities& theory) {
  return weighted_sum(alexander(cm, Route::Both).normalized.poly, theory);
}

mpz_class supertrace_invariant(const ClosedManifold& cm, const TheoryMultiplicities& theory) {
  const int sign = alexander(cm, Route::Both).overall_sign.value();
  const unsigned g = cm.genus;
  const GradedMap gm = correspondence_map(cm.gamma(), 2 * g);
  mpz_class str = 0;
  for (unsigned j = 0; j <= g; ++j) {
    const mpz_class tr = integral(gm.block(g - j).trace());
    const mpz_class term = theory.mu(j) * tr;
    str += (j % 2 == 0) ? term : mpz_class(-term);
  }
  return sign * str;
}

mpz_class casson(const ClosedManifold& cm) {
  return invariant_from_multiplicities(cm, TheoryMultiplicities::casson());
}

mpz_class seiberg_witten(const ClosedManifold& cm, unsigned d) {
  return invariant_from_multiplicities(cm, TheoryMultiplicities::seiberg_witten(d));
}

LaurentPolynomial sym_poincare(unsigned g, unsigned k) {
  LaurentPolynomial p;
  for (unsigned m = 0; m <= k; ++m) {
    const long ext = static_cast<long>(k - m);
    const mpz_class dim = binomial(2 * static_cast<long>(g), ext);
    if (dim == 0) continue;
    for (unsigned w = 0; w <= m; ++w) p += LaurentPolynomial::monomial(ext + 2 * static_cast<long>(w), dim);
  }
  return p;
}

std::map<unsigned, long> vd_multiplicities(unsigned g, long d) {
  std::map<unsigned, long> mu;
  const long k = static_cast<long>(g) - 1 - d;
  for (long m = 1; m <= k + 1; ++m) {
    const long idx = d + m;
    if (std::labs(idx) > static_cast<long>(g)) continue;
    mu[static_cast<unsigned>(std::labs(idx))] += m;
  }
  return mu;
}

mpz_class vd_dimension(unsigned g, long d) {
  mpz_class total = 0;
  for (const auto& [j, m] : vd_multiplicities(g, d))
    total += mpz_class(m) * mpz_class(std::to_string(binomial(2 * static_cast<long>(g), static_cast<long>(g) - j)));
  return total;
}

LaurentPolynomial moduli_poincare(unsigned g) {
  if (g < 1) throw Error(ErrorKind::OutOfRange, "moduli_poincare needs genus >= 1");
  const LaurentPolynomial t = t_var();
  const LaurentPolynomial one = 1;
  const LaurentPolynomial num =
      power(one + power(t, 3), 2 * g) - LaurentPolynomial::monomial(2 * g) * power(one + t, 2 * g);
  const LaurentPolynomial den = (one - power(t, 2)) * (one - power(t, 4));
  return lp_exact_div(num, den);
}

LaurentPolynomial casson_graded_dims(unsigned g) {
  if (g < 1) throw Error(ErrorKind::OutOfRange, "casson_graded_dims needs genus >= 1");
  LaurentPolynomial total;
  for (unsigned j = 1; j <= g; ++j) {
    const mpz_class dim = mpz_class(std::to_string(modified_exterior_dimension(g, j)));
    total += geometric_ratio(2, j) * geometric_ratio(1, j) * LaurentPolynomial(dim);
  }
  return total;
}

mpz_class casson_total_dimension(unsigned g) {
  mpz_class total = 0;
  for (unsigned j = 1; j <= g; ++j)
    total += mpz_class(j) * j * mpz_class(std::to_string(modified_exterior_dimension(g, j)));
  return total;
}

bool ThaddeusReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass(); });
}

ThaddeusReport thaddeus_check(unsigned g) {
  if (g < 1) throw Error(ErrorKind::OutOfRange, "thaddeus_check needs genus >= 1");
  ThaddeusReport report;
  report.genus = g;
  const mpz_class moduli_total = value_at_one(moduli_poincare(g));
  const long gl = g;

  // (2g+1)·H_*(M) = Σ_{j=0}^{2g-1} (5g-2-3j)·H_*(Sym^j)
  mpz_class weighted = 0;
  for (unsigned j = 0; j + 1 <= 2 * g; ++j)
    weighted += mpz_class(5 * gl - 2 - 3 * static_cast<long>(j)) * value_at_one(sym_poincare(g, j));
  report.checks.push_back({"(2g+1)·dim H(M) = Σ(5g-2-3j)·dim H(Sym^j)", (2 * gl + 1) * moduli_total, weighted});

  // V^C = V_0 + 2V_1 + 2V_2 + ...
  mpz_class chain = vd_dimension(g, 0);
  for (long d = 1; d <= gl - 1; ++d) chain += 2 * vd_dimension(g, d);
  report.checks.push_back({"dim H(M) = dim V_0 + 2·Σ_{d>=1} dim V_d", moduli_total, chain});

  // V_{-d} = V_d ⊕ d·T with dim T = 2^{2g}
  mpz_class torus;
  mpz_ui_pow_ui(torus.get_mpz_t(), 2, 2 * g);
  for (long d = 1; d <= gl; ++d) {
    report.checks.push_back({"dim V_-" + std::to_string(d) + " = dim V_" + std::to_string(d) + " + " +
                                 std::to_string(d) + "·2^{2g}",
                             vd_dimension(g, -d), vd_dimension(g, d) + d * torus});
  }
  return report;
}

nlohmann::ordered_json json_integer(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

nlohmann::ordered_json to_json(const NormalizedAlexander& n) {
  nlohmann::ordered_json j;
  j["poly"] = to_json(n.poly);
  j["mu"] = n.mu;
  j["sign"] = n.sign;
  return j;
}

nlohmann::ordered_json to_json(const ThaddeusReport& r) {
  nlohmann::ordered_json j;
  j["genus"] = r.genus;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"identity", c.name}, {"lhs", json_integer(c.lhs)}, {"rhs", json_integer(c.rhs)},
                      {"pass", c.pass()}});
  }
  j["checks"] = std::move(checks);
  j["pass"] = r.pass();
  return j;
}

nlohmann::ordered_json invariants_report(const ClosedManifold& cm, Route route) {
  const AlexanderResult res = alexander(cm, route);
  nlohmann::ordered_json j;
  if (res.delta_det) j["delta_det"] = to_json(*res.delta_det);
  if (res.delta_trace) j["delta_trace"] = to_json(*res.delta_trace);
  if (res.overall_sign) j["overall_sign"] = *res.overall_sign;
  j["normalized"] = to_json(res.normalized.poly);
  j["mu"] = res.normalized.mu;
  j["sign"] = res.normalized.sign;
  j["casson"] = json_integer(weighted_sum(res.normalized.poly, TheoryMultiplicities::casson()));
  nlohmann::ordered_json sw = nlohmann::ordered_json::object();
  for (unsigned d = 0; d <= cm.genus; ++d)
    sw[std::to_string(d)] = json_integer(weighted_sum(res.normalized.poly, TheoryMultiplicities::seiberg_witten(d)));
  j["sw"] = std::move(sw);
  const bool s1xs2 = is_homology_s1xs2(cm);
  j["homology_s1xs2"] = s1xs2;
  if (!s1xs2) {
    j["warnings"] = nlohmann::ordered_json::array(
        {"manifold is not a homology S1xS2; Casson/SW values are formal sums only"});
  }
  return j;
}

}  // namespace cobalex
