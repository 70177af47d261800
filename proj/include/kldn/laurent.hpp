#pragma once

// Exact arithmetic in Z[q, q^-1].

#include <gmpxx.h>

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace kldn {

using Integer = mpz_class;
using Rational = mpq_class;

/// A Laurent polynomial with arbitrary-precision integer coefficients.
/// Only nonzero coefficients are stored, so the zero polynomial is the empty
/// term map and equality is term-map equality.
class LaurentPoly {
public:
  using TermMap = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long constant) { add_term(0, Integer(constant)); }

  static LaurentPoly monomial(int exponent, const Integer& coeff = 1) {
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
  }
  static LaurentPoly q() { return monomial(1); }
  static LaurentPoly q_inverse() { return monomial(-1); }
  /// q + q^-1, the value of a plain closed loop.
  static LaurentPoly loop_value() { return monomial(1) + monomial(-1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() <= 1; }
  std::size_t term_count() const { return terms_.size(); }

  Integer coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
  }
  int min_exponent() const {
    require_nonzero("min_exponent");
    return terms_.begin()->first;
  }
  int max_exponent() const {
    require_nonzero("max_exponent");
    return terms_.rbegin()->first;
  }

  /// Multiplies by q^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, Integer(-c));
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& other) {
    *this = *this * other;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, Integer(ca * cb));
    return out;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Substitutes q := x. Rejects x = 0 since negative exponents may occur.
  Rational eval(const Rational& x) const {
    if (x == 0) throw std::domain_error("LaurentPoly::eval: q = 0 is not allowed");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) sum += Rational(c) * power(x, e);
    return sum;
  }

  Integer at_one() const {
    Integer sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
  }

  /// Ascending by exponent, e.g. "q^-1 + 2 + q" or "1 + 4q + 3q^2 + q^3".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Integer mag = abs(c);
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (e == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str();
      os << 'q';
      if (e != 1) os << '^' << e;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

private:
  void add_term(int exponent, const Integer& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void require_nonzero(const char* what) const {
    if (terms_.empty()) throw std::domain_error(std::string("LaurentPoly::") + what + " of zero polynomial");
  }

  static Rational power(const Rational& x, int e) {
    Rational base = e < 0 ? Rational(1) / x : x;
    unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
    Rational r = 1;
    while (k) {
      if (k & 1u) r *= base;
      base *= base;
      k >>= 1u;
    }
    return r;
  }

  TermMap terms_;
};

inline LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline Rational eval_rational(const LaurentPoly& a, const Rational& x) { return a.eval(x); }
inline bool is_monomial(const LaurentPoly& a) { return a.is_monomial(); }

/// Exact quotient a / b in Z[q, q^-1]; throws std::domain_error if b does not divide a.
inline LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
  if (a.is_zero()) return {};
  // Work with ordinary polynomials: strip the lowest powers of q.
  const int shift = a.min_exponent() - b.min_exponent();
  LaurentPoly rem = a.shifted(-a.min_exponent());
  const LaurentPoly div = b.shifted(-b.min_exponent());
  const int div_deg = div.max_exponent();
  const Integer lead = div.coeff(div_deg);
  LaurentPoly quot;
  while (!rem.is_zero() && rem.max_exponent() >= div_deg) {
    const int d = rem.max_exponent();
    const Integer c = rem.coeff(d);
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t()))
      throw std::domain_error("divide_exact: not divisible");
    const Integer qc = c / lead;
    const LaurentPoly term = LaurentPoly::monomial(d - div_deg, qc);
    quot += term;
    rem -= term * div;
  }
  if (!rem.is_zero()) throw std::domain_error("divide_exact: not divisible");
  return quot.shifted(shift);
}

} // namespace kldn
