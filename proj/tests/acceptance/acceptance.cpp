// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria, so ctest fails if any line says FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cobalex/cli/properties.hpp"
#include "cobalex/error.hpp"
#include "cobalex/invariants.hpp"

using namespace cobalex;
using cobalex::cli::CheckResult;

namespace {

constexpr std::uint64_t kSeed = 20240501;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
  void absorb(const CheckResult& r) {
    require(r.pass(), r.name + ": " + (r.first_failure.empty() ? "no cases" : r.first_failure));
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

LaurentPolynomial poly(std::initializer_list<std::pair<long, long>> terms) {
  LaurentPolynomial p;
  for (auto [e, c] : terms) p += LaurentPolynomial::monomial(e, c);
  return p;
}

std::string summary(const CheckResult& r) {
  std::ostringstream os;
  os << r.name << " " << r.cases;
  if (r.skipped) os << " (+" << r.skipped << " skipped)";
  return os.str();
}

Verdict criterion1() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  cobalex::Rng words_rng(kSeed + 1), comp_rng(kSeed + 2);
  const auto sp2 = cli::check_dual_route_sp2(3);
  const auto words = cli::check_dual_route_words(3, 200, words_rng);
  const auto comps = cli::check_dual_route_composites(3, 50, comp_rng);
  const double secs = seconds_since(start);
  for (const auto* r : {&sp2, &words, &comps}) v.absorb(*r);
  v.require(sp2.cases + sp2.skipped == cli::enumerate_sp2(3).size(), "Sp(2,Z) enumeration incomplete");
  v.require(words.cases >= 200, "fewer than 200 words compared");
  v.require(comps.cases >= 50, "fewer than 50 composites compared");
  v.require(secs < 60.0, "took " + std::to_string(secs) + " s");
  std::ostringstream os;
  os << summary(sp2) << "; " << summary(words) << "; " << summary(comps) << "; " << secs << " s";
  if (v.pass) v.detail = os.str();
  return v;
}

Verdict criterion2() {
  Verdict v;
  const auto trefoil = close_up(graph_cobordism(IntMatrix{{1, -1}, {1, 0}}));
  const auto eight = close_up(graph_cobordism(IntMatrix{{2, 1}, {1, 1}}));
  const auto identity = close_up(graph_cobordism(IntMatrix::identity(2)));

  v.require(alexander(trefoil).normalized.poly == poly({{-1, 1}, {0, -1}, {1, 1}}), "trefoil Δ");
  v.require(casson(trefoil) == 1, "trefoil C");
  v.require(seiberg_witten(trefoil, 0) == 1, "trefoil SW_0");
  v.require(seiberg_witten(trefoil, 1) == 0, "trefoil SW_1");
  v.require(alexander(eight).normalized.poly == poly({{-1, 1}, {0, -3}, {1, 1}}), "figure-eight Δ");
  v.require(casson(eight) == 1, "figure-eight C");
  v.require(seiberg_witten(eight, 0) == 1, "figure-eight SW_0");
  v.require(alexander(identity).normalized.poly == poly({{-1, 1}, {0, -2}, {1, 1}}), "identity Δ");
  v.require(!is_homology_s1xs2(identity), "identity flagged as homology S1xS2");
  if (v.pass) v.detail = "trefoil, figure-eight, identity g=1";
  return v;
}

Verdict criterion3() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  v.require(moduli_poincare(1) == LaurentPolynomial(1), "moduli_poincare(1)");
  v.require(moduli_poincare(2) == poly({{0, 1}, {2, 1}, {3, 4}, {4, 1}, {6, 1}}), "moduli_poincare(2)");
  for (unsigned g = 1; g <= 6; ++g) {
    const auto shifted = LaurentPolynomial::monomial(3 * static_cast<long>(g) - 3) * casson_graded_dims(g);
    v.require(shifted == moduli_poincare(g), "shift identity at g=" + std::to_string(g));
    mpz_class total = 0;
    for (unsigned j = 1; j <= g; ++j) total += mpz_class(j * j) * mpz_class(binomial(2 * g, g - j));
    v.require(lp_eval(moduli_poincare(g), 1) == mpq_class(total), "value at 1, g=" + std::to_string(g));
  }
  v.absorb(cli::check_betti_closed_forms(6));
  const double secs = seconds_since(start);
  v.require(secs < 5.0, "took " + std::to_string(secs) + " s");
  if (v.pass) v.detail = "g=1..6, " + std::to_string(secs) + " s";
  return v;
}

Verdict criterion4() {
  Verdict v;
  for (unsigned g = 1; g <= 6; ++g) {
    const auto report = thaddeus_check(g);
    for (const auto& c : report.checks)
      v.require(c.pass(), "g=" + std::to_string(g) + ": " + c.name + " (" + c.lhs.get_str() + " vs " + c.rhs.get_str() + ")");
  }
  // Spot values at g = 2.
  v.require(lp_eval(moduli_poincare(2), 1) == 8, "dim H(M) at g=2 is not 8");
  v.require(vd_dimension(2, 0) == 6 && vd_dimension(2, 1) == 1, "8 = 6 + 2·1 at g=2");
  v.require(vd_dimension(2, -1) == 17 && vd_dimension(2, 1) + 16 == 17, "17 = 1 + 16 at (g,d)=(2,1)");
  if (v.pass) v.detail = "identities (i)-(iii) for g=1..6; 8 = 6 + 2·1; 17 = 1 + 16";
  return v;
}

Verdict criterion5() {
  Verdict v;
  cobalex::Rng rng(kSeed + 5);
  unsigned exact = 0;
  const auto fun = cli::check_functoriality(400, 8, rng, &exact);
  const auto handles = cli::check_cancelling_handles(5);
  v.absorb(fun);
  v.absorb(handles);
  v.require(exact >= 100, "fewer than 100 integrally transverse pairs");
  std::ostringstream os;
  os << exact << " integrally transverse pairs exact ±; " << fun.cases - exact
     << " pairs transverse only over Q match ± their gluing index; " << fun.skipped
     << " non-transverse skipped; cancelling handles g=0..5";
  if (v.pass) v.detail = os.str();
  return v;
}

Verdict criterion6() {
  Verdict v;
  cobalex::Rng rng(kSeed + 6);
  const auto images = cli::check_primitive_images(3, 120, rng);
  const auto dims = cli::check_primitive_dimensions(8);
  v.absorb(images);
  v.absorb(dims);
  v.require(images.cases >= 100, "fewer than 100 cobordisms");
  if (v.pass) v.detail = summary(images) + "; " + summary(dims);
  return v;
}

Verdict criterion7() {
  Verdict v;
  const auto sym = cli::check_sym_duality(5, 6);
  const auto vd = cli::check_vd_totals(6);
  v.absorb(sym);
  v.absorb(vd);
  if (v.pass) v.detail = summary(sym) + "; " + summary(vd);
  return v;
}

Verdict criterion8() {
  Verdict v;
  cobalex::Rng rng(kSeed + 8);
  const auto r = cli::check_graph_oracle(100, 8, rng);
  v.absorb(r);
  v.require(r.cases >= 100, "fewer than 100 matrices");
  if (v.pass) v.detail = summary(r);
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"dual-route Alexander polynomial", criterion1},
      {"named values", criterion2},
      {"Betti closed forms", criterion3},
      {"Thaddeus identities", criterion4},
      {"functoriality and cancelling handles", criterion5},
      {"primitive subspaces and dimension identity", criterion6},
      {"symmetric-product duality and V_d totals", criterion7},
      {"graph oracle", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    if (!v.pass) ++failed;
    std::printf("%s %zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
