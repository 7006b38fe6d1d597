#include "cobalex/matrix.hpp"

#include <algorithm>
#include <utility>

namespace cobalex {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = mpq_class(m(r, c));
  return out;
}

RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
    const mpq_class inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c) == 0) continue;
      const mpq_class f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(lead_row, k);
    }
    if (pivots) pivots->push_back(c);
    ++lead_row;
  }
  return m;
}

std::size_t rank(const RatMatrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

RatMatrix kernel_basis(const RatMatrix& m) {
  std::vector<std::size_t> pivots;
  const RatMatrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  RatMatrix basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -r(i, f);
  }
  return basis;
}

std::optional<std::vector<mpq_class>> solve(const RatMatrix& m, std::span<const mpq_class> b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: rhs length");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  std::vector<std::size_t> pivots;
  const RatMatrix red = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<mpq_class> x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, m.cols());
  return x;
}

mpz_class determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Column operation on (m, u): replace columns (p, q) by
// (x·col_p + y·col_q, -b·col_p + a·col_q) with a = A_p / g, b = A_q / g.
// The 2x2 transform has determinant x·a + y·b = 1.
void combine_columns(IntMatrix& m, IntMatrix* u, std::size_t row, std::size_t p, std::size_t q) {
  mpz_class g, x, y;
  const mpz_class ap = m(row, p), aq = m(row, q);
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), ap.get_mpz_t(), aq.get_mpz_t());
  const mpz_class a = ap / g, b = aq / g;
  auto mix = [&](IntMatrix& t) {
    for (std::size_t r = 0; r < t.rows(); ++r) {
      const mpz_class vp = t(r, p), vq = t(r, q);
      t(r, p) = x * vp + y * vq;
      t(r, q) = a * vq - b * vp;
    }
  };
  mix(m);
  if (u) mix(*u);
}

// Column-echelon reduction. Returns the number of pivot columns; `u` (if given)
// accumulates the unimodular transform so that input·u = output.
std::size_t column_echelon(IntMatrix& m, IntMatrix* u, bool reduce) {
  std::size_t r = 0;
  for (std::size_t row = 0; row < m.rows() && r < m.cols(); ++row) {
    for (std::size_t c = r + 1; c < m.cols(); ++c)
      if (m(row, c) != 0) combine_columns(m, u, row, r, c);
    if (m(row, r) == 0) continue;
    if (m(row, r) < 0) {
      for (std::size_t k = 0; k < m.rows(); ++k) m(k, r) = -m(k, r);
      if (u)
        for (std::size_t k = 0; k < u->rows(); ++k) (*u)(k, r) = -(*u)(k, r);
    }
    if (reduce) {
      const mpz_class& pivot = m(row, r);
      for (std::size_t c = 0; c < r; ++c) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m(row, c).get_mpz_t(), pivot.get_mpz_t());
        if (q == 0) continue;
        for (std::size_t k = 0; k < m.rows(); ++k) m(k, c) -= q * m(k, r);
        if (u)
          for (std::size_t k = 0; k < u->rows(); ++k) (*u)(k, c) -= q * (*u)(k, r);
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

IntMatrix integer_kernel(const IntMatrix& m) {
  IntMatrix work = m;
  IntMatrix u = IntMatrix::identity(m.cols());
  const std::size_t r = column_echelon(work, &u, false);
  return u.col_block(r, m.cols() - r);
}

IntMatrix saturate(const IntMatrix& m) {
  // span ∩ Z^n is the kernel of the integer left-annihilator.
  const IntMatrix left = integer_kernel(m.transpose());
  if (left.cols() == 0) return IntMatrix::identity(m.rows());
  return integer_kernel(left.transpose());
}

IntMatrix hermite_column_form(const IntMatrix& m) {
  IntMatrix work = m;
  const std::size_t r = column_echelon(work, nullptr, true);
  return work.col_block(0, r);
}

std::vector<mpz_class> smith_invariants(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<mpz_class> out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      bool found = false;
      std::size_t pr = t, pc = t;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (m(r, c) != 0 && (!found || abs(m(r, c)) < abs(m(pr, pc)))) {
            found = true;
            pr = r;
            pc = c;
          }
      if (!found) {
        std::sort(out.begin(), out.end());
        return out;
      }
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(t, c), m(pr, c));
      for (std::size_t r = 0; r < rows; ++r) std::swap(m(r, t), m(r, pc));

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m(r, t) == 0) continue;
        const mpz_class q = m(r, t) / m(t, t);
        for (std::size_t c = t; c < cols; ++c) m(r, c) -= q * m(t, c);
        if (m(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        const mpz_class q = m(t, c) / m(t, t);
        for (std::size_t r = t; r < rows; ++r) m(r, c) -= q * m(r, t);
        if (m(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into row t and go again
      std::size_t bad = rows;
      for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (m(r, c) % m(t, t) != 0) {
            bad = r;
            break;
          }
      if (bad == rows) break;
      for (std::size_t c = t; c < cols; ++c) m(t, c) += m(bad, c);
    }
    out.push_back(abs(m(t, t)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class saturation_index(const IntMatrix& m) {
  mpz_class p = 1;
  for (const auto& d : smith_invariants(m)) p *= d;
  return p;
}

}  // namespace cobalex
