#include "cobalex/laurent.hpp"

#include <sstream>

#include "cobalex/error.hpp"

namespace cobalex {

LaurentPolynomial::LaurentPolynomial(long constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPolynomial::LaurentPolynomial(const mpz_class& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPolynomial::LaurentPolynomial(Terms terms) {
  for (auto& [e, c] : terms)
    if (c != 0) terms_.emplace(e, std::move(c));
}

LaurentPolynomial LaurentPolynomial::monomial(Exponent e, const mpz_class& c) {
  LaurentPolynomial p;
  p.add_term(e, c);
  return p;
}

mpz_class LaurentPolynomial::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

LaurentPolynomial::Exponent LaurentPolynomial::low_degree() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidInput, "low_degree of zero polynomial");
  return terms_.begin()->first;
}

LaurentPolynomial::Exponent LaurentPolynomial::high_degree() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidInput, "high_degree of zero polynomial");
  return terms_.rbegin()->first;
}

const mpz_class& LaurentPolynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidInput, "leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

LaurentPolynomial LaurentPolynomial::shifted(Exponent k) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::reflected() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

bool LaurentPolynomial::is_palindromic() const {
  for (const auto& [e, c] : terms_) {
    auto it = terms_.find(-e);
    if (it == terms_.end() || it->second != c) return false;
  }
  return true;
}

void LaurentPolynomial::add_term(Exponent e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

LaurentPolynomial operator-(LaurentPolynomial a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) {
  if (p.is_zero()) return os << '0';
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os;
}

std::string to_string(const LaurentPolynomial& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

LaurentPolynomial lp_arith(const LaurentPolynomial& a, const LaurentPolynomial& b, LaurentOp op) {
  switch (op) {
    case LaurentOp::Add: return a + b;
    case LaurentOp::Sub: return a - b;
    case LaurentOp::Mul: return a * b;
  }
  throw Error(ErrorKind::InvalidInput, "unknown Laurent operation");
}

LaurentPolynomial lp_exact_div(const LaurentPolynomial& num, const LaurentPolynomial& den) {
  if (den.is_zero()) throw Error(ErrorKind::InvalidInput, "division by the zero polynomial");
  if (num.is_zero()) return {};

  // Strip the monomial parts; both remainders then have nonzero constant
  // terms and any Laurent quotient is an ordinary polynomial.
  const auto shift = num.low_degree() - den.low_degree();
  LaurentPolynomial rem = num.shifted(-num.low_degree());
  const LaurentPolynomial d = den.shifted(-den.low_degree());
  const auto d_top = d.high_degree();
  const mpz_class& d_lead = d.leading_coefficient();

  LaurentPolynomial quotient;
  while (!rem.is_zero() && rem.high_degree() >= d_top) {
    const mpz_class& r_lead = rem.leading_coefficient();
    if (!mpz_divisible_p(r_lead.get_mpz_t(), d_lead.get_mpz_t())) {
      throw Error(ErrorKind::NotDivisible, to_string(num) + " by " + to_string(den));
    }
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), r_lead.get_mpz_t(), d_lead.get_mpz_t());
    const auto e = rem.high_degree() - d_top;
    const auto term = LaurentPolynomial::monomial(e, c);
    quotient += term;
    rem -= term * d;
  }
  if (!rem.is_zero()) throw Error(ErrorKind::NotDivisible, to_string(num) + " by " + to_string(den));
  return quotient.shifted(shift);
}

mpq_class lp_eval(const LaurentPolynomial& p, const mpq_class& x) {
  if (x == 0) throw Error(ErrorKind::InvalidInput, "evaluation at t = 0");
  mpq_class sum = 0;
  for (const auto& [e, c] : p.terms()) {
    const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), k);
    mpq_class power = e < 0 ? mpq_class(den, num) : mpq_class(num, den);
    power.canonicalize();
    sum += c * power;
  }
  return sum;
}

int positive_leading_sign(const LaurentPolynomial& p) { return p.leading_coefficient() > 0 ? 1 : -1; }

NormalizedAlexander lp_symmetrize(const LaurentPolynomial& delta) {
  if (delta.is_zero()) throw Error(ErrorKind::InvalidInput, "cannot symmetrize the zero polynomial");
  const auto lo = delta.low_degree();
  const auto hi = delta.high_degree();
  if ((hi - lo) % 2 != 0) {
    throw Error(ErrorKind::NotSymmetrizable, "odd exponent span in " + to_string(delta));
  }
  NormalizedAlexander out;
  out.mu = -(lo + hi) / 2;
  LaurentPolynomial centred = delta.shifted(out.mu);
  if (!centred.is_palindromic()) {
    throw Error(ErrorKind::NotSymmetrizable, "no unit multiple of " + to_string(delta) + " is palindromic");
  }
  out.sign = positive_leading_sign(centred);
  out.poly = out.sign > 0 ? std::move(centred) : -centred;
  return out;
}

nlohmann::ordered_json to_json(const LaurentPolynomial& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.get_str();
  return j;
}

LaurentPolynomial laurent_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "Laurent polynomial must be a JSON object");
  LaurentPolynomial::Terms terms;
  for (const auto& [key, value] : j.items()) {
    LaurentPolynomial::Exponent e = 0;
    try {
      std::size_t used = 0;
      e = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "bad exponent key '" + key + "'");
    }
    mpz_class c;
    if (value.is_string()) {
      if (c.set_str(value.get<std::string>(), 10) != 0)
        throw Error(ErrorKind::InvalidInput, "bad coefficient for exponent " + key);
    } else if (value.is_number_integer()) {
      c = mpz_class(std::to_string(value.get<long long>()));
    } else {
      throw Error(ErrorKind::InvalidInput, "coefficient must be a decimal string");
    }
    if (terms.contains(e)) throw Error(ErrorKind::InvalidInput, "duplicate exponent " + key);
    terms.emplace(e, std::move(c));
  }
  return LaurentPolynomial(std::move(terms));
}

}  // namespace cobalex
