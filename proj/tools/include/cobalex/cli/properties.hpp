#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cobalex/invariants.hpp"
#include "cobalex/sampling.hpp"

namespace cobalex::cli {

/// Outcome of one property over many instances. Skipped instances (outside
/// the property's hypothesis, e.g. a vanishing determinant) are counted apart.
struct CheckResult {
  std::string name;
  unsigned cases = 0;
  unsigned skipped = 0;
  unsigned failures = 0;
  std::string first_failure{};
  std::string note{};

  bool pass() const { return failures == 0 && cases > 0; }
  void fail(const std::string& why);
  void merge(const CheckResult& other);
};

nlohmann::ordered_json to_json(const CheckResult& r);

enum class DualRouteOutcome { Agree, Skipped, Disagree };

/// Det route vs trace route on one manifold. Also requires the trace
/// polynomial to be palindromic and Tr α_{j,low} = Tr α_{j,high} for every j.
DualRouteOutcome dual_route_case(const ClosedManifold& cm, std::string* why = nullptr);

/// Every M in Sp(2,Z) with |entries| <= bound, in lexicographic order.
std::vector<IntMatrix> enumerate_sp2(long bound);

CheckResult check_dual_route_sp2(long bound);
CheckResult check_dual_route_words(unsigned g_max, unsigned samples, Rng& rng);
/// Keeps drawing until `samples` manifolds with a nonzero determinant were compared.
CheckResult check_dual_route_composites(unsigned g_max, unsigned samples, Rng& rng);

/// det(I - tM) = Σ (-1)^k Tr(Λ^k M) t^k over random symplectic M.
CheckResult check_graph_charpoly(unsigned g_max, unsigned samples, Rng& rng);

/// |Γ''| against |Γ2|∘|Γ1| on transverse pairs with n0 + n1 <= max_ambient on
/// both factors. Exact ± when the gluing is integrally transverse (junction
/// index 1), ± junction·saturation index otherwise. `exact_cases` receives the
/// count of the former.
CheckResult check_functoriality(unsigned samples, unsigned max_ambient, Rng& rng, unsigned* exact_cases = nullptr);

CheckResult check_cancelling_handles(unsigned g_max);
CheckResult check_primitive_images(unsigned g_max, unsigned samples, Rng& rng);
CheckResult check_primitive_dimensions(unsigned g_max);
CheckResult check_thaddeus(unsigned g_max);
CheckResult check_betti_closed_forms(unsigned g_max);
CheckResult check_sym_duality(unsigned g_max, unsigned k_max);
CheckResult check_vd_totals(unsigned g_max);
/// Random integer f (not necessarily symplectic), m <= max_dim.
CheckResult check_graph_oracle(unsigned samples, unsigned max_dim, Rng& rng);

struct SuiteOptions {
  unsigned g_max = 3;
  unsigned samples = 200;
  std::uint64_t seed = 1;
};

/// The verify command: dual-route, functoriality, primitive images, cancelling
/// handles, Thaddeus, duality, plus the Betti and graph-oracle identities.
std::vector<CheckResult> run_suite(const SuiteOptions& opts);

}  // namespace cobalex::cli
