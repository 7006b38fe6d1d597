#include "cobalex/cli/properties.hpp"

#include <optional>
#include <sstream>

#include "cobalex/error.hpp"

namespace cobalex::cli {

namespace {

std::string str(const IntMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

// s with a = s·b, if one exists. Shapes must agree exactly.
std::optional<mpq_class> scalar_multiple(const GradedMap& a, const GradedMap& b) {
  if (a.n0 != b.n0 || a.n1 != b.n1 || a.shift != b.shift || a.blocks.size() != b.blocks.size()) return std::nullopt;
  std::optional<mpq_class> s;
  for (std::size_t d = 0; d < a.blocks.size(); ++d) {
    const auto& ea = a.blocks[d].entries;
    const auto& eb = b.blocks[d].entries;
    if (a.blocks[d].rows != b.blocks[d].rows || a.blocks[d].cols != b.blocks[d].cols) return std::nullopt;
    if (ea.size() != eb.size()) return std::nullopt;
    for (const auto& [pos, v] : ea) {
      const auto it = eb.find(pos);
      if (it == eb.end()) return std::nullopt;
      const mpq_class r = v / it->second;
      if (!s) s = r;
      else if (*s != r) return std::nullopt;
    }
  }
  return s.value_or(mpq_class(1));
}

IntMatrix graph_lattice(const IntMatrix& f) { return vstack(IntMatrix::identity(f.rows()), f); }

}  // namespace

void CheckResult::fail(const std::string& why) {
  if (failures++ == 0) first_failure = why;
}

void CheckResult::merge(const CheckResult& other) {
  cases += other.cases;
  skipped += other.skipped;
  if (other.failures > 0 && failures == 0) first_failure = other.first_failure;
  failures += other.failures;
}

nlohmann::ordered_json to_json(const CheckResult& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["pass"] = r.pass();
  j["cases"] = r.cases;
  j["skipped"] = r.skipped;
  j["failures"] = r.failures;
  if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

DualRouteOutcome dual_route_case(const ClosedManifold& cm, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return DualRouteOutcome::Disagree;
  };
  const LaurentPolynomial det = alexander_det(cm);
  if (det.is_zero()) return DualRouteOutcome::Skipped;
  NormalizedAlexander n;
  try {
    n = lp_symmetrize(det);
  } catch (const Error&) {
    return fail("det route not symmetrizable: " + to_string(det));
  }
  const LaurentPolynomial tr = alexander_traces(cm).polynomial();
  if (!tr.is_palindromic()) return fail("trace route not palindromic: " + to_string(tr));
  if (tr != n.poly && tr != -n.poly) return fail("det " + to_string(n.poly) + " vs trace " + to_string(tr));
  for (unsigned j = 0; j <= cm.genus; ++j) {
    const mpq_class lo = alpha_map(cm, static_cast<int>(j), Side::Low).trace();
    const mpq_class hi = alpha_map(cm, static_cast<int>(j), Side::High).trace();
    if (lo != hi) return fail("Tr α_" + std::to_string(j) + " low " + lo.get_str() + " != high " + hi.get_str());
  }
  return DualRouteOutcome::Agree;
}

std::vector<IntMatrix> enumerate_sp2(long bound) {
  std::vector<IntMatrix> out;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      for (long c = -bound; c <= bound; ++c)
        for (long d = -bound; d <= bound; ++d)
          if (a * d - b * c == 1) out.push_back(IntMatrix{{a, b}, {c, d}});
  return out;
}

CheckResult check_dual_route_sp2(long bound) {
  CheckResult r{.name = "dual-route/sp2"};
  for (const auto& m : enumerate_sp2(bound)) {
    std::string why;
    switch (dual_route_case(close_up(graph_cobordism(m)), &why)) {
      case DualRouteOutcome::Agree: ++r.cases; break;
      case DualRouteOutcome::Skipped: ++r.skipped; break;
      case DualRouteOutcome::Disagree: ++r.cases; r.fail(str(m) + ": " + why); break;
    }
  }
  return r;
}

CheckResult check_dual_route_words(unsigned g_max, unsigned samples, Rng& rng) {
  CheckResult r{.name = "dual-route/words"};
  for (unsigned s = 0; s < samples; ++s) {
    const unsigned g = 1 + static_cast<unsigned>(rng.below(g_max));
    const IntMatrix m = random_symplectic(g, 4 + static_cast<unsigned>(rng.below(12)), rng);
    std::string why;
    switch (dual_route_case(close_up(graph_cobordism(m)), &why)) {
      case DualRouteOutcome::Agree: ++r.cases; break;
      case DualRouteOutcome::Skipped: ++r.skipped; break;
      case DualRouteOutcome::Disagree: ++r.cases; r.fail(str(m) + ": " + why); break;
    }
  }
  return r;
}

CheckResult check_dual_route_composites(unsigned g_max, unsigned samples, Rng& rng) {
  CheckResult r{.name = "dual-route/composites"};
  CobordismSampler opts;
  opts.max_genus = g_max;
  for (unsigned attempts = 0; r.cases < samples && attempts < 20 * samples; ++attempts) {
    const unsigned g = 1 + static_cast<unsigned>(rng.below(g_max));
    const ClosedManifold cm = random_closed_manifold(g, rng, opts);
    std::string why;
    switch (dual_route_case(cm, &why)) {
      case DualRouteOutcome::Agree: ++r.cases; break;
      case DualRouteOutcome::Skipped: ++r.skipped; break;
      case DualRouteOutcome::Disagree: ++r.cases; r.fail("sigma " + str(cm.sigma) + " tau " + str(cm.tau) + ": " + why); break;
    }
  }
  if (r.cases < samples) r.fail("only " + std::to_string(r.cases) + " nondegenerate composites drawn");
  return r;
}

CheckResult check_graph_charpoly(unsigned g_max, unsigned samples, Rng& rng) {
  CheckResult r{.name = "graph-charpoly"};
  for (unsigned s = 0; s < samples; ++s) {
    const unsigned g = 1 + static_cast<unsigned>(rng.below(g_max));
    const IntMatrix m = random_symplectic(g, 8, rng);
    LaurentPolynomial expect;
    for (unsigned k = 0; k <= 2 * g; ++k) {
      const mpz_class tr = induced_exterior_power(m, k).trace();
      expect += LaurentPolynomial::monomial(k, k % 2 == 0 ? tr : mpz_class(-tr));
    }
    ++r.cases;
    const LaurentPolynomial got = alexander_det(close_up(graph_cobordism(m)));
    if (got != expect) r.fail(str(m) + ": det " + to_string(got) + " vs " + to_string(expect));
  }
  return r;
}

CheckResult check_functoriality(unsigned samples, unsigned max_ambient, Rng& rng, unsigned* exact_cases) {
  CheckResult r{.name = "functoriality"};
  const unsigned h = max_ambient / 2;
  CobordismSampler opts;
  opts.max_genus = h;
  opts.steps = 2;
  opts.split_weight = 3;
  unsigned exact = 0;
  for (unsigned attempts = 0; r.cases < samples && attempts < 20 * samples; ++attempts) {
    const unsigned g1 = static_cast<unsigned>(rng.below(h + 1));
    const unsigned g0 = static_cast<unsigned>(rng.below(h - g1 + 1));
    const unsigned g2 = static_cast<unsigned>(rng.below(h - g1 + 1));
    const Cobordism c1 = random_cobordism(g0, g1, rng, opts);
    const Cobordism c2 = random_cobordism(g1, g2, rng, opts);
    Composition comp;
    try {
      comp = compose_detailed(c1, c2);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TransversalityFailure) throw;
      ++r.skipped;
      continue;
    }
    ++r.cases;
    const GradedMap lhs = compose_graded(correspondence_map(c1.gamma, c1.n0()), correspondence_map(c2.gamma, c2.n0()));
    const GradedMap rhs = correspondence_map(comp.result.gamma, comp.result.n0());
    const auto s = scalar_multiple(lhs, rhs);
    // Integrally transverse (Γ1 ⊕ Γ2 -> U1 onto the lattice): the unit is ±1.
    // Transverse only over Q: the unit is ± the product of the two indices.
    const bool integral = comp.junction_index == 1;
    const mpz_class expect = integral ? mpz_class(1) : mpz_class(comp.junction_index * comp.saturation_index);
    if (!s) {
      r.fail("genera " + std::to_string(g0) + "," + std::to_string(g1) + "," + std::to_string(g2) +
             ": composite is not proportional to the composition");
    } else if (abs(*s) != expect) {
      r.fail("scalar " + s->get_str() + ", expected ±" + expect.get_str() + " (junction " +
             comp.junction_index.get_str() + ", saturation " + comp.saturation_index.get_str() + ")");
    } else if (integral) {
      ++exact;
    }
  }
  if (exact_cases) *exact_cases = exact;
  r.note = std::to_string(exact) + " integrally transverse (exact ±), " + std::to_string(r.cases - exact) +
           " transverse over Q only (± gluing index)";
  return r;
}

CheckResult check_cancelling_handles(unsigned g_max) {
  CheckResult r{.name = "cancelling-handles"};
  for (unsigned g = 0; g <= g_max; ++g) {
    ++r.cases;
    const Cobordism c = compose(elementary_z(g), elementary_zprime(g));
    const IntMatrix id = IntMatrix::identity(2 * g);
    if (c.g0 != g || c.g1 != g || !same_lattice(c.gamma, graph_lattice(id))) {
      r.fail("g=" + std::to_string(g) + ": lattice differs from the identity graph");
    } else if (correspondence_map(c.gamma, c.n0()) != identity_graded(2 * g)) {
      r.fail("g=" + std::to_string(g) + ": correspondence map is not the identity");
    }
  }
  return r;
}

CheckResult check_primitive_images(unsigned g_max, unsigned samples, Rng& rng) {
  CheckResult r{.name = "primitive-images"};
  CobordismSampler opts;
  opts.max_genus = g_max;
  opts.steps = 3;
  opts.split_weight = 2;
  for (unsigned s = 0; s < samples; ++s) {
    const unsigned g0 = static_cast<unsigned>(rng.below(g_max + 1));
    const unsigned g1 = static_cast<unsigned>(rng.below(g_max + 1));
    const Cobordism c = random_cobordism(g0, g1, rng, opts);
    ++r.cases;
    for (unsigned j = 0; j <= std::min(g0, g1); ++j) {
      try {
        primitive_restriction(SymplecticSpace{g0}, SymplecticSpace{g1}, c.gamma, static_cast<int>(j));
      } catch (const Error& e) {
        r.fail("g0=" + std::to_string(g0) + " g1=" + std::to_string(g1) + " j=" + std::to_string(j) + ": " + e.what());
        break;
      }
    }
  }
  return r;
}

CheckResult check_primitive_dimensions(unsigned g_max) {
  CheckResult r{.name = "primitive-dimensions"};
  for (unsigned g = 0; g <= g_max; ++g) {
    for (long j = 0; j <= static_cast<long>(g) + 1; ++j) {
      ++r.cases;
      const auto lhs = modified_primitive_dimension(g + 1, j);
      const auto rhs = modified_primitive_dimension(g, j + 1) + 2 * modified_primitive_dimension(g, j) +
                       modified_primitive_dimension(g, j - 1);
      if (lhs != rhs) {
        r.fail("g=" + std::to_string(g) + " j=" + std::to_string(j) + ": " + std::to_string(lhs) +
               " != " + std::to_string(rhs));
      }
    }
  }
  // The closed form against actual kernel ranks, where that is cheap.
  for (unsigned g = 0; g <= std::min(g_max, 4u); ++g) {
    for (int i = 0; i <= static_cast<int>(2 * g); ++i) {
      ++r.cases;
      const auto cols = primitive_basis(SymplecticSpace{g}, i).cols();
      if (cols != primitive_dimension(g, i)) {
        r.fail("dim P^" + std::to_string(i) + " at g=" + std::to_string(g) + " is " + std::to_string(cols));
      }
    }
  }
  return r;
}

CheckResult check_thaddeus(unsigned g_max) {
  CheckResult r{.name = "thaddeus"};
  for (unsigned g = 1; g <= g_max; ++g) {
    for (const auto& c : thaddeus_check(g).checks) {
      ++r.cases;
      if (!c.pass()) r.fail("g=" + std::to_string(g) + " " + c.name + ": " + c.lhs.get_str() + " != " + c.rhs.get_str());
    }
  }
  return r;
}

CheckResult check_betti_closed_forms(unsigned g_max) {
  CheckResult r{.name = "betti-closed-forms"};
  auto expect = [&](bool ok, const std::string& what) {
    ++r.cases;
    if (!ok) r.fail(what);
  };
  expect(moduli_poincare(1) == LaurentPolynomial(1), "moduli_poincare(1) != 1");
  const LaurentPolynomial g2 = LaurentPolynomial::monomial(0) + LaurentPolynomial::monomial(2) +
                               LaurentPolynomial::monomial(3, 4) + LaurentPolynomial::monomial(4) +
                               LaurentPolynomial::monomial(6);
  expect(moduli_poincare(2) == g2, "moduli_poincare(2) = " + to_string(moduli_poincare(2)));
  for (unsigned g = 1; g <= g_max; ++g) {
    const LaurentPolynomial m = moduli_poincare(g);
    const auto top = static_cast<LaurentPolynomial::Exponent>(6 * g - 6);
    const std::string at = " at g=" + std::to_string(g);
    expect(m.low_degree() == 0 && m.high_degree() == top, "moduli degree" + at);
    expect(m.reflected().shifted(top) == m, "moduli palindrome" + at);
    expect(casson_graded_dims(g).shifted(3 * g - 3) == m, "graded Casson dimensions vs moduli" + at);
    expect(lp_eval(m, 1) == casson_total_dimension(g), "total dimension" + at);
  }
  return r;
}

CheckResult check_sym_duality(unsigned g_max, unsigned k_max) {
  CheckResult r{.name = "sym-duality"};
  for (unsigned g = 0; g <= g_max; ++g) {
    for (unsigned k = 0; k <= k_max; ++k) {
      ++r.cases;
      const LaurentPolynomial p = sym_poincare(g, k);
      if (p.reflected().shifted(2 * k) != p) {
        r.fail("Sym^" + std::to_string(k) + " at g=" + std::to_string(g) + ": " + to_string(p));
      }
    }
  }
  return r;
}

CheckResult check_vd_totals(unsigned g_max) {
  CheckResult r{.name = "vd-totals"};
  for (unsigned g = 1; g <= g_max; ++g) {
    const long gl = g;
    for (long d = -gl; d <= gl - 1; ++d) {
      ++r.cases;
      const mpq_class sym = lp_eval(sym_poincare(g, static_cast<unsigned>(gl - 1 - d)), 1);
      if (vd_dimension(g, d) != sym) {
        r.fail("g=" + std::to_string(g) + " d=" + std::to_string(d) + ": " + vd_dimension(g, d).get_str() +
               " != " + sym.get_str());
      }
    }
    for (long d = gl; d <= gl + 2; ++d) {
      ++r.cases;
      if (!vd_multiplicities(g, d).empty()) r.fail("V_" + std::to_string(d) + " nonzero at g=" + std::to_string(g));
    }
  }
  return r;
}

CheckResult check_graph_oracle(unsigned samples, unsigned max_dim, Rng& rng) {
  CheckResult r{.name = "graph-oracle"};
  for (unsigned s = 0; s < samples; ++s) {
    const auto m = static_cast<unsigned>(1 + rng.below(max_dim));
    IntMatrix f(m, m);
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = 0; j < m; ++j) f(i, j) = rng.between(-3, 3);
    ++r.cases;
    const GradedMap gm = correspondence_map(graph_lattice(f), m);
    for (unsigned k = 0; k <= m; ++k) {
      if (gm.block(k).dense() != to_rational(induced_exterior_power(f, k))) {
        r.fail("degree " + std::to_string(k) + " of " + str(f));
        break;
      }
    }
  }
  return r;
}

std::vector<CheckResult> run_suite(const SuiteOptions& opts) {
  // Each check draws from its own stream so that adding samples to one
  // check leaves the instances of the others unchanged.
  unsigned stream = 0;
  auto rng = [&] { return Rng(opts.seed * 0x9E3779B97F4A7C15ULL + ++stream); };
  const unsigned g = std::max(1u, opts.g_max);
  const unsigned n = std::max(1u, opts.samples);

  std::vector<CheckResult> out;
  out.push_back(check_dual_route_sp2(3));
  {
    Rng r = rng();
    out.push_back(check_dual_route_words(g, n, r));
  }
  {
    Rng r = rng();
    out.push_back(check_dual_route_composites(g, std::max(1u, n / 4), r));
  }
  {
    Rng r = rng();
    out.push_back(check_graph_charpoly(g, std::max(1u, n / 4), r));
  }
  {
    Rng r = rng();
    out.push_back(check_functoriality(n, 8, r));
  }
  out.push_back(check_cancelling_handles(5));
  {
    Rng r = rng();
    out.push_back(check_primitive_images(g, std::max(1u, n / 2), r));
  }
  out.push_back(check_primitive_dimensions(8));
  out.push_back(check_thaddeus(6));
  out.push_back(check_betti_closed_forms(6));
  out.push_back(check_sym_duality(5, 6));
  out.push_back(check_vd_totals(6));
  {
    Rng r = rng();
    out.push_back(check_graph_oracle(std::max(1u, n / 2), 8, r));
  }
  return out;
}

}  // namespace cobalex::cli
