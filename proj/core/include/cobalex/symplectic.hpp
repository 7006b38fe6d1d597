#pragma once

#include <cstdint>
#include <vector>

#include "cobalex/extalg.hpp"
#include "cobalex/matrix.hpp"

namespace cobalex {

/// H_1 of a closed genus-g surface with basis a_1..a_g, b_1..b_g (in that
/// order, 0-based indices 0..2g-1) and intersection form ω(a_i, b_i) = 1.
struct SymplecticSpace {
  unsigned genus = 0;

  unsigned dim() const noexcept { return 2 * genus; }
  unsigned a(unsigned i) const noexcept { return i; }          // a_{i+1}
  unsigned b(unsigned i) const noexcept { return genus + i; }  // b_{i+1}

  /// J with ω(x, y) = xᵀ J y.
  IntMatrix form() const;
};

/// ω = Σ a_i ∧ b_i.
MultiVector symplectic_element(const SymplecticSpace& space);

/// Matrix of L = ω ∧ · from Λ^i to Λ^{i+2}. Zero rows when i + 2 > 2g.
IntMatrix lefschetz_matrix(const SymplecticSpace& space, int i);

/// Matrix of L^p from Λ^i to Λ^{i+2p}.
RatMatrix lefschetz_power(const SymplecticSpace& space, int i, int p);

/// Basis (columns, Λ^i coordinates) of P^i = ker(L^{g-i+1} : Λ^i -> Λ^{2g-i+2}).
/// Empty (zero columns) for i < 0 and i > g.
RatMatrix primitive_basis(const SymplecticSpace& space, int i);

/// dim P^i = binomial(2g, i) - binomial(2g, i - 2) for 0 <= i <= g, else 0.
std::uint64_t primitive_dimension(unsigned genus, long i);

/// dim P_(j) = dim P^{g-j}; zero for j < 0 or j > g.
std::uint64_t modified_primitive_dimension(unsigned genus, long j);

/// dim Λ_(i) = binomial(2g, g - i).
std::uint64_t modified_exterior_dimension(unsigned genus, long i);

struct PrimitiveDecomposition {
  int source_degree = 0;
  /// components[j] is the primitive p_{i-2j} (possibly zero).
  std::vector<MultiVector> components;

  /// Σ_j L^j p_{i-2j}.
  MultiVector recombine(const SymplecticSpace& space) const;
};

/// Unique x = Σ_j L^j p_{i-2j} with p primitive. Throws DegreeAboveMiddle
/// for i > g and InvalidInput when x is not homogeneous of degree i.
PrimitiveDecomposition lefschetz_decompose(const SymplecticSpace& space, const MultiVector& x, int degree);

/// xᵀ·diag(J0, -J1)·y over all pairs of columns; empty when Γ is isotropic.
/// Returns pairs (i, j) of offending columns.
std::vector<std::pair<std::size_t, std::size_t>> isotropy_defects(const IntMatrix& gamma_basis,
                                                                  unsigned g0, unsigned g1);

/// True when gamma_basis spans a Lagrangian subspace for (ω0, -ω1).
bool is_lagrangian(const IntMatrix& gamma_basis, unsigned g0, unsigned g1);

/// |Γ| restricted to P_(j)(U0) = P^{g0-j}, in primitive bases of both ends.
/// Throws NotLagrangian, OutOfRange (j), or PrimitivityViolated if an image
/// leaves P_(j)(U1).
RatMatrix primitive_restriction(const SymplecticSpace& space0, const SymplecticSpace& space1,
                                const IntMatrix& gamma_basis, int j);

}  // namespace cobalex
