#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "trikit/laurent.hpp"

namespace trikit {

/// Type (p,q) of a 2-bridge link, normalized so 0 < p < q and gcd(p,q) = 1.
/// The isotopy criterion works modulo q.
struct TwoBridgeType {
  BigInt p;
  BigInt q;

  /// Reduces p mod q and checks the invariants; throws DomainError.
  static TwoBridgeType make(const BigInt& p, const BigInt& q);

  friend bool operator==(const TwoBridgeType&, const TwoBridgeType&) = default;
};

std::string to_string(const TwoBridgeType& t);
std::ostream& operator<<(std::ostream& os, const TwoBridgeType& t);

/// Exact value of the tower a_1 - 1/(a_2 - 1/(... - 1/a_k)) as q/p.
mpq_class evaluate_negative_cf(std::span<const std::int64_t> word);

/*
 * Type of the 2-bridge link with the given negative continued fraction word:
 * the value is q/p in lowest terms, q = |numerator|, and p is the
 * denominator (sign-adjusted for negative values) reduced mod q.
 * Throws DomainError on an empty word, a zero entry, a vanishing
 * intermediate denominator, or a value with |q| <= 1.
 */
TwoBridgeType cf_to_type(std::span<const std::int64_t> word);

/// Word with every entry >= 2 whose tower evaluates to q/p.
std::vector<std::int64_t> to_negative_cf(const TwoBridgeType& t);

/// q == q' and (p == p' or p p' == 1) mod q.
bool isotopic(const TwoBridgeType& a, const TwoBridgeType& b);

/// True iff p == +-1 mod q, i.e. the (2,q) torus link.
bool is_torus_type(const TwoBridgeType& t);

}  // namespace trikit
