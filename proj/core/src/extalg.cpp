#include "cobalex/extalg.hpp"

#include <array>
#include <bit>
#include <string>

#include "cobalex/error.hpp"

namespace cobalex {

namespace {

constexpr unsigned kBinomRows = 64;

const std::array<std::array<std::uint64_t, kBinomRows>, kBinomRows>& binomial_table() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kBinomRows>, kBinomRows> t{};
    for (unsigned n = 0; n < kBinomRows; ++n) {
      t[n][0] = 1;
      for (unsigned k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

Subset low_mask(unsigned n) { return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1; }

void check_dim(unsigned n) {
  if (n > kMaxAmbientDim) {
    throw Error(ErrorKind::OutOfRange, "ambient dimension " + std::to_string(n) + " exceeds " +
                                           std::to_string(kMaxAmbientDim));
  }
}

// x ∧ v for a single vector v given by coordinates.
template <typename Scalar>
MultiVector wedge_with_vector(const MultiVector& x, std::span<const Scalar> v) {
  MultiVector out(x.ambient_dim());
  for (const auto& [s, c] : x.terms()) {
    for (unsigned i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      const Subset bit = Subset{1} << i;
      if (s & bit) continue;
      // moving e_i left past the members of s above i
      const int sign = (std::popcount(s >> (i + 1)) & 1) ? -1 : 1;
      mpq_class term = c * mpq_class(v[i]);
      if (sign < 0) term = -term;
      out.add_term(s | bit, term);
    }
  }
  return out;
}

}  // namespace

unsigned subset_size(Subset s) noexcept { return static_cast<unsigned>(std::popcount(s)); }

int wedge_sign(Subset a, Subset b) noexcept {
  if (a & b) return 0;
  unsigned inversions = 0;
  for (Subset rest = b; rest; rest &= rest - 1) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(rest));
    inversions += static_cast<unsigned>(std::popcount(a >> (j + 1)));
  }
  return (inversions & 1) ? -1 : 1;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (n >= kBinomRows) throw Error(ErrorKind::OutOfRange, "binomial table limit");
  return binomial_table()[n][k];
}

std::uint64_t binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
}

std::vector<Subset> subsets_of_size(unsigned n, unsigned k) {
  check_dim(n);
  std::vector<Subset> out;
  if (k > n) return out;
  out.reserve(binomial(n, k));
  std::vector<unsigned> idx(k);
  for (unsigned i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    Subset s = 0;
    for (unsigned i : idx) s |= Subset{1} << i;
    out.push_back(s);
    // advance to the next combination in lexicographic order
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0 && idx[pos] == n - k + static_cast<unsigned>(pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (unsigned i = static_cast<unsigned>(pos) + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

std::size_t subset_rank(unsigned n, Subset s) {
  const unsigned k = subset_size(s);
  std::size_t rank = 0;
  unsigned i = 0;
  long prev = -1;
  for (Subset rest = s; rest; rest &= rest - 1, ++i) {
    const long c = std::countr_zero(rest);
    for (long v = prev + 1; v < c; ++v) rank += binomial(static_cast<long>(n) - 1 - v, static_cast<long>(k) - 1 - i);
    prev = c;
  }
  return rank;
}

// --- MultiVector -------------------------------------------------------------

MultiVector::MultiVector(unsigned ambient_dim) : n_(ambient_dim) { check_dim(ambient_dim); }

MultiVector MultiVector::basis_blade(unsigned ambient_dim, std::span<const unsigned> indices) {
  MultiVector out = scalar(ambient_dim, 1);
  for (unsigned i : indices) {
    if (i >= ambient_dim) throw Error(ErrorKind::OutOfRange, "basis index out of range");
    std::vector<mpq_class> e(ambient_dim);
    e[i] = 1;
    out = wedge_with_vector<mpq_class>(out, e);
  }
  return out;
}

MultiVector MultiVector::scalar(unsigned ambient_dim, const mpq_class& value) {
  MultiVector out(ambient_dim);
  out.add_term(0, value);
  return out;
}

MultiVector MultiVector::vector(unsigned ambient_dim, std::span<const mpz_class> coords) {
  if (coords.size() != ambient_dim) throw Error(ErrorKind::DimensionMismatch, "vector length");
  MultiVector out(ambient_dim);
  for (unsigned i = 0; i < ambient_dim; ++i) out.add_term(Subset{1} << i, mpq_class(coords[i]));
  return out;
}

MultiVector MultiVector::vector(unsigned ambient_dim, std::span<const mpq_class> coords) {
  if (coords.size() != ambient_dim) throw Error(ErrorKind::DimensionMismatch, "vector length");
  MultiVector out(ambient_dim);
  for (unsigned i = 0; i < ambient_dim; ++i) out.add_term(Subset{1} << i, coords[i]);
  return out;
}

MultiVector MultiVector::from_coordinates(unsigned ambient_dim, unsigned k, std::span<const mpq_class> coords) {
  const auto basis = subsets_of_size(ambient_dim, k);
  if (coords.size() != basis.size()) throw Error(ErrorKind::DimensionMismatch, "coordinate count");
  MultiVector out(ambient_dim);
  for (std::size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], coords[i]);
  return out;
}

mpq_class MultiVector::coefficient(Subset s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

MultiVector MultiVector::homogeneous(unsigned k) const {
  MultiVector out(n_);
  for (const auto& [s, c] : terms_)
    if (subset_size(s) == k) out.terms_.emplace_hint(out.terms_.end(), s, c);
  return out;
}

std::vector<mpq_class> MultiVector::coordinates(unsigned k) const {
  std::vector<mpq_class> out(binomial(n_, k));
  for (const auto& [s, c] : terms_)
    if (subset_size(s) == k) out[subset_rank(n_, s)] = c;
  return out;
}

void MultiVector::add_term(Subset s, const mpq_class& c) {
  if (c == 0) return;
  if (s & ~low_mask(n_)) throw Error(ErrorKind::OutOfRange, "subset outside ambient dimension");
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MultiVector& MultiVector::operator+=(const MultiVector& o) {
  if (o.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "multivector sum");
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& o) {
  if (o.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "multivector difference");
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

MultiVector& MultiVector::operator*=(const mpq_class& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

MultiVector wedge(const MultiVector& a, const MultiVector& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "wedge of different ambient dimensions");
  MultiVector out(a.ambient_dim());
  for (const auto& [sa, ca] : a.terms())
    for (const auto& [sb, cb] : b.terms()) {
      const int sign = wedge_sign(sa, sb);
      if (sign == 0) continue;
      mpq_class v = ca * cb;
      if (sign < 0) v = -v;
      out.add_term(sa | sb, v);
    }
  return out;
}

MultiVector plucker_point(const IntMatrix& basis) {
  const auto n = static_cast<unsigned>(basis.rows());
  if (basis.cols() > basis.rows()) throw Error(ErrorKind::RankDeficient, "more columns than rows");
  MultiVector out = MultiVector::scalar(n, 1);
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    const auto col = basis.column(c);
    out = wedge_with_vector<mpz_class>(out, col);
    if (out.is_zero()) throw Error(ErrorKind::RankDeficient, "lattice basis columns are dependent");
  }
  return out;
}

nlohmann::ordered_json to_json(const MultiVector& v) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [s, c] : v.terms()) {
    auto idx = nlohmann::ordered_json::array();
    for (unsigned i = 0; i < v.ambient_dim(); ++i)
      if (s & (Subset{1} << i)) idx.push_back(i + 1);
    arr.push_back({idx, c.get_num().get_str(), c.get_den().get_str()});
  }
  return arr;
}

// --- Graded maps -------------------------------------------------------------

mpq_class SparseBlock::trace() const {
  mpq_class t = 0;
  for (const auto& [rc, v] : entries)
    if (rc.first == rc.second) t += v;
  return t;
}

RatMatrix SparseBlock::dense() const {
  RatMatrix m(rows, cols);
  for (const auto& [rc, v] : entries) m(rc.first, rc.second) = v;
  return m;
}

void SparseBlock::add(std::size_t r, std::size_t c, const mpq_class& v) {
  if (v == 0) return;
  if (r >= rows || c >= cols) throw Error(ErrorKind::OutOfRange, "sparse block index");
  auto [it, inserted] = entries.try_emplace({r, c}, v);
  if (inserted) return;
  it->second += v;
  if (it->second == 0) entries.erase(it);
}

bool GradedMap::is_zero() const {
  for (const auto& b : blocks)
    if (!b.entries.empty()) return false;
  return true;
}

GradedMap GradedMap::negated() const {
  GradedMap out = *this;
  for (auto& b : out.blocks)
    for (auto& [rc, v] : b.entries) v = -v;
  return out;
}

namespace {

GradedMap empty_graded(unsigned n0, unsigned n1, long shift) {
  GradedMap gm;
  gm.n0 = n0;
  gm.n1 = n1;
  gm.shift = shift;
  gm.blocks.resize(n0 + 1);
  for (unsigned a = 0; a <= n0; ++a) {
    gm.blocks[a].rows = binomial(static_cast<long>(n1), static_cast<long>(a) - shift);
    gm.blocks[a].cols = binomial(n0, a);
  }
  return gm;
}

}  // namespace

GradedMap correspondence_map(const IntMatrix& gamma_basis, unsigned n0) {
  if (n0 > gamma_basis.rows()) throw Error(ErrorKind::DimensionMismatch, "n0 exceeds ambient dimension");
  const auto n1 = static_cast<unsigned>(gamma_basis.rows()) - n0;
  const auto r = static_cast<long>(gamma_basis.cols());
  const MultiVector point = plucker_point(gamma_basis);

  GradedMap gm = empty_graded(n0, n1, static_cast<long>(n0) - r);
  const Subset source_mask = low_mask(n0);
  for (const auto& [k, c] : point.terms()) {
    const Subset in_source = k & source_mask;
    const Subset target = k >> n0;
    const Subset image_of = source_mask & ~in_source;  // only the complement pairs to the volume
    const int eps = wedge_sign(in_source, image_of);
    const unsigned a = subset_size(image_of);
    gm.blocks[a].add(subset_rank(n1, target), subset_rank(n0, image_of), eps > 0 ? c : mpq_class(-c));
  }
  return gm;
}

IntMatrix induced_exterior_power(const IntMatrix& f, unsigned k) {
  const auto rows = subsets_of_size(static_cast<unsigned>(f.rows()), k);
  const auto cols = subsets_of_size(static_cast<unsigned>(f.cols()), k);
  IntMatrix out(rows.size(), cols.size());
  IntMatrix minor(k, k);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      unsigned mr = 0;
      for (unsigned r = 0; r < f.rows(); ++r) {
        if (!(rows[i] & (Subset{1} << r))) continue;
        unsigned mc = 0;
        for (unsigned c = 0; c < f.cols(); ++c)
          if (cols[j] & (Subset{1} << c)) minor(mr, mc++) = f(r, c);
        ++mr;
      }
      out(i, j) = determinant(minor);
    }
  return out;
}

GradedMap compose_graded(const GradedMap& first, const GradedMap& second) {
  if (first.n1 != second.n0) throw Error(ErrorKind::DimensionMismatch, "graded maps are not composable");
  GradedMap out = empty_graded(first.n0, second.n1, first.shift + second.shift);
  for (unsigned a = 0; a <= first.n0; ++a) {
    const long mid = first.target_degree(a);
    if (mid < 0 || mid > static_cast<long>(first.n1)) continue;
    const SparseBlock& f = first.blocks[a];
    const SparseBlock& g = second.blocks[static_cast<std::size_t>(mid)];
    if (f.entries.empty() || g.entries.empty()) continue;
    std::map<std::size_t, std::vector<std::pair<std::size_t, const mpq_class*>>> g_by_col;
    for (const auto& [rc, v] : g.entries) g_by_col[rc.second].emplace_back(rc.first, &v);
    for (const auto& [rc, v] : f.entries) {
      auto it = g_by_col.find(rc.first);
      if (it == g_by_col.end()) continue;
      for (const auto& [row, gv] : it->second) out.blocks[a].add(row, rc.second, *gv * v);
    }
  }
  return out;
}

GradedMap identity_graded(unsigned n) {
  GradedMap gm = empty_graded(n, n, 0);
  for (unsigned a = 0; a <= n; ++a)
    for (std::size_t i = 0; i < gm.blocks[a].cols; ++i) gm.blocks[a].add(i, i, 1);
  return gm;
}

}  // namespace cobalex
