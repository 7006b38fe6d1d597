#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "cobalex/extalg.hpp"
#include "cobalex/matrix.hpp"
#include "cobalex/symplectic.hpp"

namespace cobalex {

/// A cobordism Σ_{g0} -> Σ_{g1}, modelled by the lattice Γ ⊂ H1(Σ0) ⊕ H1(Σ1).
///
/// gamma has 2g0 + 2g1 rows (a_1..a_g0, b_1..b_g0 of Σ0, then the same for
/// Σ1) and g0 + g1 columns forming a Z-basis of Γ. Construction does not
/// validate; see validate().
struct Cobordism {
  unsigned g0 = 0;
  unsigned g1 = 0;
  IntMatrix gamma;

  unsigned n0() const noexcept { return 2 * g0; }
  unsigned n1() const noexcept { return 2 * g1; }
  IntMatrix source_part() const { return gamma.row_block(0, n0()); }
  IntMatrix target_part() const { return gamma.row_block(n0(), n1()); }

  friend bool operator==(const Cobordism&, const Cobordism&) = default;
};

struct ValidationReport {
  bool shape_ok = true;
  bool independent = true;
  bool primitive = true;
  bool isotropic = true;
  std::vector<std::string> violations;

  bool ok() const noexcept { return shape_ok && independent && primitive && isotropic; }
};

ValidationReport validate(const Cobordism& c);

/// Throws ValidationFailure with the report's messages when c is invalid.
void require_valid(const Cobordism& c);

bool is_symplectic(const IntMatrix& m);

/// Γ = {(x, Mx)}. Throws NotSymplectic unless Mᵀ J M = J.
Cobordism graph_cobordism(const IntMatrix& m);

/// Index-1 handle Σ^g -> Σ^{g+1}: span{(a_i,a_i), (b_i,b_i)} ∪ {(0, a_{g+1})}.
Cobordism elementary_z(unsigned g);
/// Index-2 handle Σ^{g+1} -> Σ^g: span{(a_i,a_i), (b_i,b_i)} ∪ {(b_{g+1}, 0)}.
Cobordism elementary_zprime(unsigned g);

/// Result of gluing, with the two integer indices that measure how far the
/// lattice-normalised correspondence maps are from composing on the nose.
struct Composition {
  Cobordism result;
  /// [U1_Z : π(Γ1_Z) + π(Γ2_Z)]
  mpz_class junction_index = 1;
  /// [Γ''_Z : image of the integral fibre product]
  mpz_class saturation_index = 1;
};

/// Γ'' = {(u0, u2) : ∃ u1, (u0, u1) ∈ Γ1, (u1, u2) ∈ Γ2}, saturated, in
/// canonical Hermite form. Throws GenusMismatch or TransversalityFailure.
Composition compose_detailed(const Cobordism& first, const Cobordism& second);
Cobordism compose(const Cobordism& first, const Cobordism& second);

/// A closed-up cobordism: column i of the lattice is (σ_i, τ_i) with τ already
/// pushed through the identification φ.
struct ClosedManifold {
  unsigned genus = 0;
  IntMatrix sigma;
  IntMatrix tau;
  IntMatrix phi;

  IntMatrix gamma() const { return vstack(sigma, tau); }
};

/// Throws GenusMismatch when g0 != g1 and NotSymplectic for a bad φ.
ClosedManifold close_up(const Cobordism& c, const std::optional<IntMatrix>& phi = std::nullopt);

enum class Side { Low, High };

/// Block of |Γ| in degree g0 - j (Low) or g0 + j (High), as a dense matrix.
RatMatrix alpha_map(const Cobordism& c, int j, Side side);
RatMatrix alpha_map(const ClosedManifold& cm, int j, Side side);

/// Two lattice bases span the same lattice.
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

}  // namespace cobalex
