#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cobalex/matrix.hpp"

namespace cobalex {

/// A subset of {0, ..., n-1} as a bit mask; bit i set means e_{i+1} is present.
/// Bit order is index order, so a mask is a canonically sorted index list.
using Subset = std::uint64_t;

inline constexpr unsigned kMaxAmbientDim = 62;

unsigned subset_size(Subset s) noexcept;

/// Sign of e_a ∧ e_b relative to e_{a ∪ b}: 0 if the subsets overlap,
/// otherwise the parity of the merge permutation.
int wedge_sign(Subset a, Subset b) noexcept;

/// All k-subsets of {0..n-1}, in lexicographic order of their sorted index lists.
/// This is the basis order of Λ^k used by every matrix in the library.
std::vector<Subset> subsets_of_size(unsigned n, unsigned k);

/// Position of a k-subset in subsets_of_size(n, k).
std::size_t subset_rank(unsigned n, Subset s);

std::uint64_t binomial(unsigned n, unsigned k);
/// binomial(n, k) with the convention 0 for k < 0 or k > n.
std::uint64_t binomial(long n, long k);

/// Element of the rational exterior algebra Λ*(Q^n) in the subset basis.
class MultiVector {
 public:
  using Terms = std::map<Subset, mpq_class>;

  explicit MultiVector(unsigned ambient_dim = 0);

  /// e_{i1} ∧ ... ∧ e_{ik} for 0-based indices in any order (sign applied).
  static MultiVector basis_blade(unsigned ambient_dim, std::span<const unsigned> indices);
  static MultiVector scalar(unsigned ambient_dim, const mpq_class& value);
  static MultiVector vector(unsigned ambient_dim, std::span<const mpz_class> coords);
  static MultiVector vector(unsigned ambient_dim, std::span<const mpq_class> coords);

  /// Degree-k element from coordinates in the subsets_of_size(n, k) basis.
  static MultiVector from_coordinates(unsigned ambient_dim, unsigned k, std::span<const mpq_class> coords);

  unsigned ambient_dim() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  mpq_class coefficient(Subset s) const;

  /// Terms of exact degree k.
  MultiVector homogeneous(unsigned k) const;

  /// Dense coordinates of the degree-k part.
  std::vector<mpq_class> coordinates(unsigned k) const;

  void add_term(Subset s, const mpq_class& c);

  MultiVector& operator+=(const MultiVector& o);
  MultiVector& operator-=(const MultiVector& o);
  MultiVector& operator*=(const mpq_class& s);

  friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
  friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
  friend MultiVector operator*(const mpq_class& s, MultiVector a) { return a *= s; }
  friend bool operator==(const MultiVector&, const MultiVector&) = default;

 private:
  unsigned n_ = 0;
  Terms terms_;
};

/// Exterior product; throws DimensionMismatch on differing ambient dimensions.
MultiVector wedge(const MultiVector& a, const MultiVector& b);

/// Wedge of the columns of an n x r integer matrix. Throws RankDeficient
/// when the columns are linearly dependent.
MultiVector plucker_point(const IntMatrix& basis);

/// Debug form: [[index list (1-based)], numerator, denominator] triples.
nlohmann::ordered_json to_json(const MultiVector& v);

/// Sparse rational matrix block (row, col) -> value, zero entries omitted.
struct SparseBlock {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::map<std::pair<std::size_t, std::size_t>, mpq_class> entries;

  mpq_class trace() const;
  RatMatrix dense() const;
  void add(std::size_t r, std::size_t c, const mpq_class& v);

  friend bool operator==(const SparseBlock&, const SparseBlock&) = default;
};

/// Degree-indexed linear map Λ*(Q^n0) -> Λ*(Q^n1). Source degree a lands in
/// target degree a - shift; blocks[a] has shape binomial(n1, a - shift) x binomial(n0, a).
struct GradedMap {
  unsigned n0 = 0;
  unsigned n1 = 0;
  long shift = 0;
  std::vector<SparseBlock> blocks;  // indexed by source degree 0..n0

  /// Target degree for a source degree; may be out of range (block then has 0 rows).
  long target_degree(long source_degree) const { return source_degree - shift; }

  const SparseBlock& block(unsigned source_degree) const { return blocks.at(source_degree); }

  bool is_zero() const;
  GradedMap negated() const;

  friend bool operator==(const GradedMap&, const GradedMap&) = default;
};

/// The correspondence |Γ| defined by the Plücker point of Γ ⊂ U0 ⊕ U1.
/// Rows of gamma_basis: U0 coordinates (n0 of them) first, then U1.
GradedMap correspondence_map(const IntMatrix& gamma_basis, unsigned n0);

/// Λ^k(f): the k x k minors of f in the subset basis.
IntMatrix induced_exterior_power(const IntMatrix& f, unsigned k);

/// Degree-wise second ∘ first. Throws DimensionMismatch when first.n1 != second.n0.
GradedMap compose_graded(const GradedMap& first, const GradedMap& second);

/// Identity graded map on Λ*(Q^n).
GradedMap identity_graded(unsigned n);

}  // namespace cobalex
