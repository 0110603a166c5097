#pragma once

// Generators and brute-force oracles shared by the unit and acceptance
// suites. Nothing here calls into the code path it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "trikit/diagram.hpp"
#include "trikit/laurent.hpp"
#include "trikit/ribbon.hpp"
#include "trikit/tripar.hpp"

namespace trikit::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x7121'5eed);
  return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline LaurentPoly random_poly(int max_terms = 5, int exp_range = 4, long coeff_range = 9) {
  LaurentPoly::Terms terms;
  const auto count = uniform(0, max_terms);
  for (std::int64_t i = 0; i < count; ++i) {
    terms[uniform(-exp_range, exp_range)] = BigInt(static_cast<long>(uniform(-coeff_range, coeff_range)));
  }
  return LaurentPoly(std::move(terms));
}

inline BandPresentation random_bands(std::size_t max_bands, std::int64_t exp_range = 2) {
  BandPresentation b;
  const auto count = uniform(0, static_cast<std::int64_t>(max_bands));
  for (std::int64_t i = 0; i < count; ++i) {
    b.bands.push_back({uniform(-exp_range, exp_range), uniform(-exp_range, exp_range)});
  }
  return b;
}

inline TrisectionType random_valid_type(int max_g = 20, int max_b = 20) {
  while (true) {
    const int g = static_cast<int>(uniform(0, max_g));
    const int p = static_cast<int>(uniform(0, g));
    const int b = static_cast<int>(uniform(1, max_b));
    const int k = static_cast<int>(uniform(2 * p + b - 1, g + p + b - 1));
    const TrisectionType t{g, k, p, b};
    if (t.g >= 0 && t.p >= 0 && t.k >= 2 * p + b - 1 && t.k <= g + p + b - 1) return t;
  }
}

/// Naive triple loop over (k, p, b) checking the defining inequalities and
/// the Euler characteristic formula directly.
inline std::set<TrisectionType> brute_force_tuples(int chi, int g, bool exclude_seifert) {
  std::set<TrisectionType> out;
  const int b_max = 3 * g + 3 + std::abs(chi);
  for (int b = 1; b <= b_max; ++b) {
    for (int p = 0; p <= g + b; ++p) {
      for (int k = 0; k <= g + b + p; ++k) {
        if (!(2 * p + b - 1 <= k && k <= g + p + b - 1)) continue;
        if (g - 3 * k + 3 * p + 2 * b - 1 != chi) continue;
        if (exclude_seifert && p == 0 && b <= 3) continue;
        out.insert({g, k, p, b});
      }
    }
  }
  return out;
}

/// Integer determinant by Laplace expansion (small matrices only).
inline BigInt int_det(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t cc = 0; cc < n; ++cc) {
        if (cc != c) row.push_back(m[r][cc]);
      }
      minor.push_back(std::move(row));
    }
    BigInt term = m[0][c] * int_det(minor);
    det += (c % 2 == 0) ? term : BigInt(-term);
  }
  return det;
}

inline void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Invariant factors from determinantal divisors: s_k = D_k / D_{k-1},
/// D_k = gcd of all k x k minors.
inline std::vector<BigInt> snf_by_minors(const IntMatrix& m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  std::vector<BigInt> out(n, BigInt(0));
  BigInt prev = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> rows, cols;
    std::vector<std::size_t> cur;
    choose(m.rows(), k, 0, cur, rows);
    choose(m.cols(), k, 0, cur, cols);
    BigInt g = 0;
    for (const auto& rs : rows) {
      for (const auto& cs : cols) {
        std::vector<std::vector<BigInt>> sub(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rs[i], cs[j]);
        }
        BigInt d = int_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    }
    if (g == 0) break;  // every larger minor vanishes too
    out[k - 1] = g / prev;
    prev = g;
  }
  return out;
}

/// All valid types with g <= max_g and b <= max_b.
inline std::vector<TrisectionType> all_valid_types(int max_g, int max_b) {
  std::vector<TrisectionType> out;
  for (int g = 0; g <= max_g; ++g) {
    for (int b = 1; b <= max_b; ++b) {
      for (int p = 0; p <= g; ++p) {
        for (int k = 2 * p + b - 1; k <= g + p + b - 1; ++k) out.push_back({g, k, p, b});
      }
    }
  }
  return out;
}

/// Applies `count` random slides (random family, indices, sign).
inline RelTrisectionDiagram random_slides(RelTrisectionDiagram d, int count) {
  CurveSystem* families[3] = {&d.alpha, &d.beta, &d.gamma};
  for (int s = 0; s < count; ++s) {
    CurveSystem& sys = *families[uniform(0, 2)];
    if (sys.size() < 2) continue;
    const auto i = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(sys.size()) - 1));
    auto j = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(sys.size()) - 2));
    if (j >= i) ++j;
    sys = handle_slide(std::move(sys), i, j, uniform(0, 1) ? 1 : -1);
  }
  return d;
}

}  // namespace trikit::testing
