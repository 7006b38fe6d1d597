#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cobalex/cobordism.hpp"
#include "cobalex/laurent.hpp"

namespace cobalex {

// --- Alexander polynomial -----------------------------------------------------

/// a_j for 0 <= j <= g; the polynomial a_0 + Σ a_j (t^j + t^-j).
struct AlexanderCoefficients {
  unsigned genus = 0;
  std::vector<mpz_class> a;

  LaurentPolynomial polynomial() const;
};

/// δ(t) = det(σ - tτ); 1 for genus 0.
LaurentPolynomial alexander_det(const ClosedManifold& cm);

/// a_j = (-1)^j Tr(α_j) with α_j the degree g-j block of |Γ|.
AlexanderCoefficients alexander_traces(const ClosedManifold& cm);

enum class Route { Det, Trace, Both };

struct AlexanderResult {
  NormalizedAlexander normalized;
  std::optional<LaurentPolynomial> delta_det;
  std::optional<LaurentPolynomial> delta_trace;
  /// delta_trace == overall_sign * normalized.poly, when the trace route ran.
  std::optional<int> overall_sign;
};

/// Throws ZeroDeterminant, NotSymmetrizable, or RouteMismatch (Both only).
AlexanderResult alexander(const ClosedManifold& cm, Route route = Route::Both);

/// |det(σ - τ)| == 1.
bool is_homology_s1xs2(const ClosedManifold& cm);

// --- Numerical invariants -------------------------------------------------------

struct TheoryMultiplicities {
  std::string name;
  std::function<mpz_class(unsigned)> mu;

  /// μ_j = j²
  static TheoryMultiplicities casson();
  /// μ_j = max(j - d, 0)
  static TheoryMultiplicities seiberg_witten(unsigned d);
};

/// Σ_j μ_j a_j over the sign-normalised Δ.
mpz_class invariant_from_multiplicities(const ClosedManifold& cm, const TheoryMultiplicities& theory);

/// The same number computed as a graded supertrace Σ_j (-1)^j μ_j Tr(α_j),
/// multiplied by the recorded overall sign of the trace route.
mpz_class supertrace_invariant(const ClosedManifold& cm, const TheoryMultiplicities& theory);

mpz_class casson(const ClosedManifold& cm);
mpz_class seiberg_witten(const ClosedManifold& cm, unsigned d);

// --- Betti tables ----------------------------------------------------------------

/// Poincaré polynomial of Sym^k(Σ_g).
LaurentPolynomial sym_poincare(unsigned g, unsigned k);

/// Multiplicity μ_j of Λ_(j) in V_d (negative indices folded onto |j|).
/// Empty when d > g - 1.
std::map<unsigned, long> vd_multiplicities(unsigned g, long d);

/// Σ_j μ_j · dim Λ_(j).
mpz_class vd_dimension(unsigned g, long d);

/// Atiyah-Bott Poincaré polynomial of the genus-g flat-connection moduli space, g >= 1.
LaurentPolynomial moduli_poincare(unsigned g);

/// Σ_{j>0} [(t^{2j} - t^{-2j})(t^j - t^{-j})] / [(t^2 - t^{-2})(t - t^{-1})] · dim Λ_(j).
LaurentPolynomial casson_graded_dims(unsigned g);

/// Σ_{j>0} j² · binomial(2g, g - j).
mpz_class casson_total_dimension(unsigned g);

struct IdentityCheck {
  std::string name;
  mpz_class lhs;
  mpz_class rhs;
  bool pass() const { return lhs == rhs; }
};

struct ThaddeusReport {
  unsigned genus = 0;
  std::vector<IdentityCheck> checks;

  bool pass() const;
};

ThaddeusReport thaddeus_check(unsigned g);

// --- Reports ---------------------------------------------------------------------

nlohmann::ordered_json to_json(const NormalizedAlexander& n);
nlohmann::ordered_json to_json(const ThaddeusReport& r);

/// {"delta_det", "delta_trace", "overall_sign", "normalized", "mu", "sign",
///  "casson", "sw", "homology_s1xs2"}; fields for routes not run are omitted.
nlohmann::ordered_json invariants_report(const ClosedManifold& cm, Route route = Route::Both);

nlohmann::ordered_json json_integer(const mpz_class& v);

}  // namespace cobalex
