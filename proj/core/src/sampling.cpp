#include "cobalex/sampling.hpp"

#include <limits>

#include "cobalex/error.hpp"

namespace cobalex {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "Rng::below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % n;
  }
}

long Rng::between(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

IntMatrix transvection(unsigned g, std::span<const long> v, long k) {
  const SymplecticSpace space{g};
  if (v.size() != space.dim()) throw Error(ErrorKind::DimensionMismatch, "transvection direction length");
  const IntMatrix j = space.form();
  // T = I + k·v·(vᵀJ)
  IntMatrix t = IntMatrix::identity(space.dim());
  std::vector<mpz_class> vj(space.dim());
  for (unsigned c = 0; c < space.dim(); ++c)
    for (unsigned r = 0; r < space.dim(); ++r) vj[c] += v[r] * j(r, c);
  for (unsigned r = 0; r < space.dim(); ++r)
    for (unsigned c = 0; c < space.dim(); ++c) t(r, c) += k * v[r] * vj[c];
  return t;
}

std::vector<std::vector<long>> transvection_directions(unsigned g) {
  const SymplecticSpace space{g};
  std::vector<std::vector<long>> dirs;
  for (unsigned i = 0; i < g; ++i) {
    std::vector<long> a(space.dim()), b(space.dim());
    a[space.a(i)] = 1;
    b[space.b(i)] = 1;
    dirs.push_back(std::move(a));
    dirs.push_back(std::move(b));
  }
  for (unsigned i = 0; i + 1 < g; ++i) {
    std::vector<long> c(space.dim());
    c[space.b(i)] = 1;
    c[space.b(i + 1)] = -1;
    dirs.push_back(std::move(c));
  }
  return dirs;
}

IntMatrix random_symplectic(unsigned g, unsigned length, Rng& rng) {
  IntMatrix m = IntMatrix::identity(2 * g);
  if (g == 0) return m;
  const auto dirs = transvection_directions(g);
  for (unsigned step = 0; step < length; ++step) {
    const auto& v = dirs[rng.below(dirs.size())];
    m = transvection(g, v, rng.coin() ? 1 : -1) * m;
  }
  return m;
}

Cobordism random_split_lagrangian(unsigned g0, unsigned g1, Rng& rng) {
  const SymplecticSpace s0{g0}, s1{g1};
  IntMatrix split(s0.dim() + s1.dim(), g0 + g1);
  for (unsigned i = 0; i < g0; ++i) split(s0.a(i), i) = 1;
  for (unsigned i = 0; i < g1; ++i) split(s0.dim() + s1.a(i), g0 + i) = 1;
  const IntMatrix a = random_symplectic(g0, 6, rng);
  const IntMatrix b = random_symplectic(g1, 6, rng);
  IntMatrix block(s0.dim() + s1.dim(), s0.dim() + s1.dim());
  for (unsigned r = 0; r < s0.dim(); ++r)
    for (unsigned c = 0; c < s0.dim(); ++c) block(r, c) = a(r, c);
  for (unsigned r = 0; r < s1.dim(); ++r)
    for (unsigned c = 0; c < s1.dim(); ++c) block(s0.dim() + r, s0.dim() + c) = b(r, c);
  return Cobordism{g0, g1, block * split};
}

Cobordism random_cobordism(unsigned g0, unsigned g1, Rng& rng, const CobordismSampler& opts) {
  if (g0 > opts.max_genus || g1 > opts.max_genus) throw Error(ErrorKind::OutOfRange, "genus above sampler limit");
  for (;;) {
    try {
      Cobordism acc = graph_cobordism(random_symplectic(g0, opts.word_length, rng));
      unsigned h = g0;
      auto step_toward = [&](bool up) {
        acc = up ? compose(acc, elementary_z(h)) : compose(acc, elementary_zprime(h - 1));
        h = up ? h + 1 : h - 1;
      };
      for (unsigned s = 0; s < opts.steps; ++s) {
        const auto choice = rng.below(8);
        if (choice < opts.split_weight) {
          const unsigned next = static_cast<unsigned>(rng.below(opts.max_genus + 1));
          acc = compose(acc, random_split_lagrangian(h, next, rng));
          h = next;
        } else if (choice < 4 && h < opts.max_genus) {
          step_toward(true);
        } else if (choice < 6 && h > 0) {
          step_toward(false);
        } else {
          acc = compose(acc, graph_cobordism(random_symplectic(h, opts.word_length, rng)));
        }
      }
      while (h != g1) step_toward(h < g1);
      acc = compose(acc, graph_cobordism(random_symplectic(h, opts.word_length, rng)));
      require_valid(acc);
      return acc;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TransversalityFailure) throw;
    }
  }
}

ClosedManifold random_closed_manifold(unsigned g, Rng& rng, const CobordismSampler& opts) {
  const Cobordism c = random_cobordism(g, g, rng, opts);
  return close_up(c, random_symplectic(g, opts.word_length, rng));
}

}  // namespace cobalex
