#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "cobalex/cobordism.hpp"

namespace cobalex {

/// Deterministic generator: std::mt19937_64 (its output sequence is fixed by
/// the standard) with our own unbiased bounded draw, so a seed reproduces the
/// same samples on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  long between(long lo, long hi);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// x -> x + k·ω(v, x)·v, a symplectic transvection of H1(Σ_g).
IntMatrix transvection(unsigned g, std::span<const long> v, long k = 1);

/// Transvection directions a_i, b_i (1 <= i <= g) and b_i - b_{i+1} (1 <= i < g).
std::vector<std::vector<long>> transvection_directions(unsigned g);

/// Product of `length` generators T_v^{±1}, chosen uniformly.
IntMatrix random_symplectic(unsigned g, unsigned length, Rng& rng);

/// Γ = (A ⊕ B)(span{a_i of Σ0} ⊕ span{a_i of Σ1}) with random A, B in Sp. Not a graph.
Cobordism random_split_lagrangian(unsigned g0, unsigned g1, Rng& rng);

struct CobordismSampler {
  unsigned max_genus = 3;
  unsigned steps = 4;
  unsigned word_length = 6;
  /// Probability weight (out of 8) of inserting a split Lagrangian piece.
  unsigned split_weight = 1;
};

/// Random composite of graphs, elementary Z/Z' handles, and split pieces,
/// from genus g0 to genus g1. Always passes validate().
Cobordism random_cobordism(unsigned g0, unsigned g1, Rng& rng, const CobordismSampler& opts = {});

/// close_up of a random composite with a random identification φ.
ClosedManifold random_closed_manifold(unsigned g, Rng& rng, const CobordismSampler& opts = {});

}  // namespace cobalex
