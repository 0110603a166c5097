#include "trikit/casson.hpp"

#include <set>
#include <string>

#include "trikit/error.hpp"
#include "trikit/ribbon.hpp"

namespace trikit {

BigInt casson_surgery(const SurgeryDatum& d) {
  if (d.m == 0) throw DomainError("casson_surgery: surgery coefficient 1/m needs m != 0");
  if (!is_symmetric(d.alexander)) {
    throw DomainError("casson_surgery: Alexander polynomial " + to_string(d.alexander) +
                      " is not symmetric");
  }
  if (eval_at_one(d.alexander) != 1) {
    throw DomainError("casson_surgery: Alexander polynomial " + to_string(d.alexander) +
                      " does not satisfy Delta(1) = 1");
  }
  const BigInt second = second_derivative_at_one(d.alexander);
  if (!mpz_even_p(second.get_mpz_t())) {
    throw ConsistencyError("casson_surgery: Delta''(1) = " + second.get_str() +
                           " is odd for a symmetric polynomial");
  }
  return BigInt(static_cast<long>(d.m)) * (second / 2);
}

BigInt kn_casson(std::int64_t n) {
  return casson_surgery({alexander_from_bands(kn_presentation(n)), 1});
}

std::vector<BigInt> distinguish_family(std::span<const std::int64_t> ns) {
  std::set<std::int64_t> seen;
  for (auto n : ns) {
    if (!seen.insert(n).second) {
      throw DomainError("distinguish_family: duplicate entry n = " + std::to_string(n));
    }
  }
  std::vector<BigInt> out;
  out.reserve(ns.size());
  std::set<BigInt> values;
  for (auto n : ns) {
    out.push_back(kn_casson(n));
    if (!values.insert(out.back()).second) {
      throw ConsistencyError("distinguish_family: Casson invariant " + out.back().get_str() +
                             " repeats at n = " + std::to_string(n));
    }
  }
  return out;
}

}  // namespace trikit
