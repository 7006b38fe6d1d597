#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

namespace cobalex {

/// Element of Z[t, t^-1] with arbitrary-precision coefficients.
///
/// Stored as a sparse exponent -> coefficient map; zero coefficients are
/// never stored, so the zero polynomial is the empty map.
class LaurentPolynomial {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, mpz_class>;

  LaurentPolynomial() = default;
  LaurentPolynomial(long constant);  // NOLINT: integers embed as constants
  explicit LaurentPolynomial(const mpz_class& constant);
  explicit LaurentPolynomial(Terms terms);

  /// c * t^e
  static LaurentPolynomial monomial(Exponent e, const mpz_class& c = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  mpz_class coefficient(Exponent e) const;

  /// Lowest / highest exponent with a nonzero coefficient. Precondition: nonzero.
  Exponent low_degree() const;
  Exponent high_degree() const;

  /// Coefficient at high_degree(). Precondition: nonzero.
  const mpz_class& leading_coefficient() const;

  /// p(t) * t^k
  LaurentPolynomial shifted(Exponent k) const;

  /// p(1/t)
  LaurentPolynomial reflected() const;

  bool is_palindromic() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(LaurentPolynomial a);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) = default;

 private:
  void add_term(Exponent e, const mpz_class& c);

  Terms terms_;
};

/// The generator t.
inline LaurentPolynomial t_var() { return LaurentPolynomial::monomial(1); }

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);
std::string to_string(const LaurentPolynomial& p);

enum class LaurentOp { Add, Sub, Mul };

LaurentPolynomial lp_arith(const LaurentPolynomial& a, const LaurentPolynomial& b, LaurentOp op);

/// q with q * den == num. Throws NotDivisible when no such q exists in
/// Z[t, t^-1], InvalidInput when den is zero.
LaurentPolynomial lp_exact_div(const LaurentPolynomial& num, const LaurentPolynomial& den);

/// Exact value at a nonzero rational point.
mpq_class lp_eval(const LaurentPolynomial& p, const mpq_class& x);

/// Palindromic representative Δ = sign * t^mu * δ.
struct NormalizedAlexander {
  LaurentPolynomial poly;
  LaurentPolynomial::Exponent mu = 0;
  int sign = 1;

  friend bool operator==(const NormalizedAlexander&, const NormalizedAlexander&) = default;
};

/// Sign convention: the coefficient at the top exponent is positive.
/// Throws NotSymmetrizable (odd exponent span, or no shift is palindromic)
/// and InvalidInput for the zero polynomial.
NormalizedAlexander lp_symmetrize(const LaurentPolynomial& delta);

/// Multiply by -1 if needed so that the top coefficient is positive; returns the sign used.
int positive_leading_sign(const LaurentPolynomial& p);

// JSON: {"<exponent>": "<coefficient>", ...} in increasing exponent order.
nlohmann::ordered_json to_json(const LaurentPolynomial& p);
LaurentPolynomial laurent_from_json(const nlohmann::json& j);

}  // namespace cobalex
