#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trikit/laurent.hpp"

namespace trikit {

/// A knot's Alexander polynomial together with a 1/m surgery coefficient.
struct SurgeryDatum {
  LaurentPoly alexander;  // symmetric, value 1 at t = 1
  std::int64_t m = 1;     // nonzero
};

/// Casson invariant of S^3 + (1/m) K, taking lambda(S^3) = 0:
///   lambda = m * Delta''(1) / 2.
/// Throws DomainError if the datum is invalid and ConsistencyError if
/// Delta''(1) is odd.
BigInt casson_surgery(const SurgeryDatum& d);

/// lambda of the boundary of M_n, computed through the full band pipeline.
BigInt kn_casson(std::int64_t n);

/// lambda(boundary M_n) for every n in `ns`. Rejects duplicate or
/// non-positive entries; throws ConsistencyError if two values coincide.
std::vector<BigInt> distinguish_family(std::span<const std::int64_t> ns);

}  // namespace trikit
