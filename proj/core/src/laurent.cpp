#include "trikit/laurent.hpp"

#include <ostream>
#include <sstream>

#include "trikit/error.hpp"

namespace trikit {

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [e, c] : terms) {
    if (c != 0) terms_.emplace(e, std::move(c));
  }
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const Exponent, long>> terms) {
  for (const auto& [e, c] : terms) add_term(e, BigInt(c));
}

LaurentPoly LaurentPoly::constant(const BigInt& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const BigInt& c, Exponent e) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

BigInt LaurentPoly::coeff(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(Exponent e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly involute(const LaurentPoly& a) {
  LaurentPoly::Terms t;
  for (const auto& [e, c] : a.terms()) t.emplace(-e, c);
  return LaurentPoly(std::move(t));
}

LaurentPoly shift(const LaurentPoly& a, LaurentPoly::Exponent k) {
  LaurentPoly::Terms t;
  for (const auto& [e, c] : a.terms()) t.emplace(e + k, c);
  return LaurentPoly(std::move(t));
}

BigInt eval_at_one(const LaurentPoly& a) {
  BigInt sum = 0;
  for (const auto& [e, c] : a.terms()) sum += c;
  return sum;
}

BigInt second_derivative_at_one(const LaurentPoly& a) {
  BigInt sum = 0;
  for (const auto& [e, c] : a.terms()) {
    BigInt ee(static_cast<long>(e));
    sum += c * ee * (ee - 1);
  }
  return sum;
}

LaurentPoly normalize_unit(const LaurentPoly& a) {
  if (a.is_zero()) throw DomainError("normalize_unit: zero polynomial has no normal form");
  LaurentPoly out = shift(a, -a.min_exponent());
  if (out.coeff(0) < 0) out = -out;
  return out;
}

bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return normalize_unit(a) == normalize_unit(b);
}

bool is_symmetric(const LaurentPoly& a) { return involute(a) == a; }

LaurentPoly symmetrize_alexander(const LaurentPoly& a) {
  if (a.is_zero()) throw DomainError("symmetrize_alexander: zero polynomial");
  // A palindromic shift must centre the exponent span on 0.
  const auto span = a.min_exponent() + a.max_exponent();
  if (span % 2 != 0) {
    throw DomainError("symmetrize_alexander: no unit multiple of " + to_string(a) +
                      " is symmetric");
  }
  LaurentPoly out = shift(a, -span / 2);
  if (!is_symmetric(out)) {
    throw DomainError("symmetrize_alexander: no unit multiple of " + to_string(a) +
                      " is symmetric");
  }
  const BigInt at_one = eval_at_one(out);
  if (at_one == 0) throw DomainError("symmetrize_alexander: value at t=1 is zero, sign undefined");
  if (at_one < 0) out = -out;
  return out;
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DomainError("exact_divide: division by zero polynomial");
  if (a.is_zero()) return {};
  // Long division from the top degree down; both sides are finite so the
  // remainder must vanish once its top degree drops below that of b.
  LaurentPoly rem = a;
  LaurentPoly quot;
  const auto b_top = b.max_exponent();
  const auto b_span = b.max_exponent() - b.min_exponent();
  const BigInt& lead = b.terms().rbegin()->second;
  while (!rem.is_zero()) {
    if (rem.max_exponent() - rem.min_exponent() < b_span) {
      throw DomainError("exact_divide: " + to_string(b) + " does not divide " + to_string(a));
    }
    const BigInt& top = rem.terms().rbegin()->second;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw DomainError("exact_divide: " + to_string(b) + " does not divide " + to_string(a));
    }
    LaurentPoly step = LaurentPoly::monomial(top / lead, rem.max_exponent() - b_top);
    quot += step;
    rem -= step * b;
  }
  return quot;
}

std::string to_string(const LaurentPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const BigInt mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << "t^" << e;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& a) { return os << to_string(a); }

}  // namespace trikit
