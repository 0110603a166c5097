#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>

namespace trikit {

using BigInt = mpz_class;

/*
 * Integer Laurent polynomial in one variable t.
 *
 * Stored sparsely as exponent -> coefficient. Zero coefficients are never
 * stored, so the zero polynomial is the empty map and structural equality is
 * polynomial equality.
 */
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, BigInt>;

  LaurentPoly() = default;
  explicit LaurentPoly(Terms terms);
  LaurentPoly(std::initializer_list<std::pair<const Exponent, long>> terms);

  static LaurentPoly constant(const BigInt& c);
  static LaurentPoly monomial(const BigInt& c, Exponent e);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of t^e (zero if absent).
  BigInt coeff(Exponent e) const;

  /// Smallest / largest stored exponent. Undefined on the zero polynomial.
  Exponent min_exponent() const { return terms_.begin()->first; }
  Exponent max_exponent() const { return terms_.rbegin()->first; }

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  void add_term(Exponent e, const BigInt& c);

  Terms terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

/// Substitutes t -> t^-1.
LaurentPoly involute(const LaurentPoly& a);

/// Multiplies by t^k.
LaurentPoly shift(const LaurentPoly& a, LaurentPoly::Exponent k);

/// Sum of coefficients.
BigInt eval_at_one(const LaurentPoly& a);

/// d^2/dt^2 at t = 1, i.e. sum of c * e * (e - 1) over all terms.
BigInt second_derivative_at_one(const LaurentPoly& a);

/// The unit multiple +-t^k of `a` with minimum exponent 0 and positive
/// constant term. Throws DomainError on zero.
LaurentPoly normalize_unit(const LaurentPoly& a);

/// True iff a and b differ by a unit +-t^k.
bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b);

/// involute(a) == a.
bool is_symmetric(const LaurentPoly& a);

/// The unique unit multiple of `a` that is symmetric under t -> t^-1 and has
/// positive value at t = 1. Throws DomainError if none exists (zero input,
/// no palindromic shift, or a(1) == 0).
LaurentPoly symmetrize_alexander(const LaurentPoly& a);

/// Exact quotient a / b in Z[t, t^-1]. Throws DomainError if b is zero or
/// does not divide a.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// Renders "-2*t^1 + 5 - 2*t^-1", highest exponent first; "0" for zero.
std::string to_string(const LaurentPoly& a);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& a);

}  // namespace trikit
