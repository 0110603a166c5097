#include "trikit/twobridge.hpp"

#include <ostream>
#include <sstream>

#include "trikit/error.hpp"

namespace trikit {

namespace {

BigInt mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

void check_type(const TwoBridgeType& t) {
  if (t.q < 2 || t.p <= 0 || t.p >= t.q) {
    throw DomainError("2-bridge type " + to_string(t) + " violates 0 < p < q");
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), t.p.get_mpz_t(), t.q.get_mpz_t());
  if (g != 1) throw DomainError("2-bridge type " + to_string(t) + " has gcd(p,q) != 1");
}

}  // namespace

TwoBridgeType TwoBridgeType::make(const BigInt& p, const BigInt& q) {
  if (q <= 0) throw DomainError("2-bridge type needs q > 0, got q = " + q.get_str());
  TwoBridgeType t{mod(p, q), q};
  check_type(t);
  return t;
}

std::string to_string(const TwoBridgeType& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TwoBridgeType& t) {
  return os << '(' << t.p << ',' << t.q << ')';
}

mpq_class evaluate_negative_cf(std::span<const std::int64_t> word) {
  if (word.empty()) throw DomainError("continued fraction word is empty");
  for (auto a : word) {
    if (a == 0) throw DomainError("continued fraction word contains a zero entry");
  }
  mpq_class value(static_cast<long>(word.back()));
  for (std::size_t i = word.size() - 1; i-- > 0;) {
    if (value == 0) throw DomainError("continued fraction tower divides by zero");
    value = mpq_class(static_cast<long>(word[i])) - 1 / value;
  }
  return value;
}

TwoBridgeType cf_to_type(std::span<const std::int64_t> word) {
  const mpq_class value = evaluate_negative_cf(word);  // canonical: den > 0
  const BigInt num = value.get_num();
  const BigInt q = abs(num);
  if (q <= 1) {
    throw DomainError("continued fraction value " + value.get_str() +
                      " does not describe a non-trivial 2-bridge link");
  }
  const BigInt p = num < 0 ? BigInt(-value.get_den()) : BigInt(value.get_den());
  return TwoBridgeType::make(p, q);
}

std::vector<std::int64_t> to_negative_cf(const TwoBridgeType& t) {
  check_type(t);
  std::vector<std::int64_t> word;
  mpq_class x(t.q, t.p);
  x.canonicalize();
  while (true) {
    BigInt a;
    mpz_cdiv_q(a.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    if (!a.fits_slong_p()) throw DomainError("continued fraction entry exceeds 64 bits");
    word.push_back(a.get_si());
    mpq_class rest = mpq_class(a) - x;
    if (rest == 0) break;
    x = 1 / rest;
  }
  return word;
}

bool isotopic(const TwoBridgeType& a, const TwoBridgeType& b) {
  check_type(a);
  check_type(b);
  if (a.q != b.q) return false;
  return mod(a.p - b.p, a.q) == 0 || mod(a.p * b.p, a.q) == 1;
}

bool is_torus_type(const TwoBridgeType& t) {
  check_type(t);
  // (q-1, q) is the mirror of (1, q); both are (2,q) torus links.
  return t.p == 1 || t.p == t.q - 1;
}

}  // namespace trikit
