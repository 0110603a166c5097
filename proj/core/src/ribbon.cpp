#include "trikit/ribbon.hpp"

#include <string>
#include <utility>

#include "trikit/error.hpp"

namespace trikit {

namespace {

const LaurentPoly kOne = LaurentPoly::constant(1);

LaurentPoly diagonal_entry(const Band& band) { return LaurentPoly::monomial(-1, band.delta); }

LaurentPoly column_entry(const Band& band) {
  return LaurentPoly::monomial(1, band.delta_c) - kOne;
}

PolyMatrix minor_without(const PolyMatrix& m, std::size_t row, std::size_t col) {
  const std::size_t n = m.size();
  PolyMatrix out(n - 1);
  for (std::size_t r = 0, rr = 0; r < n; ++r) {
    if (r == row) continue;
    for (std::size_t c = 0, cc = 0; c < n; ++c) {
      if (c == col) continue;
      out(rr, cc) = m(r, c);
      ++cc;
    }
    ++rr;
  }
  return out;
}

LaurentPoly signed_term(const LaurentPoly& entry, const LaurentPoly& minor_det, std::size_t r,
                        std::size_t c) {
  LaurentPoly term = entry * minor_det;
  return (r + c) % 2 == 0 ? term : -term;
}

LaurentPoly laplace_first_row(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return kOne;
  if (n == 1) return m(0, 0);
  LaurentPoly det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    det += signed_term(m(0, c), laplace_first_row(minor_without(m, 0, c)), 0, c);
  }
  return det;
}

}  // namespace

BandPresentation kn_presentation(std::int64_t n) {
  if (n < 1) throw DomainError("kn_presentation: n must be >= 1, got " + std::to_string(n));
  BandPresentation out;
  out.bands.reserve(static_cast<std::size_t>(2 * n));
  for (std::int64_t i = 1; i <= 2 * n; ++i) {
    if (i % 2 == 1) {
      out.bands.push_back({-1, -1});
    } else {
      out.bands.push_back({1, 0});
    }
  }
  return out;
}

PolyMatrix build_matrix(const BandPresentation& b) {
  const std::size_t m = b.size();
  PolyMatrix out(m);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    out(i, i) = diagonal_entry(b.bands[i]);
    out(i + 1, i) = kOne;
    out(i, m - 1) = column_entry(b.bands[i]);
  }
  out(m - 1, m - 1) = LaurentPoly::constant(-1);
  return out;
}

LaurentPoly banded_determinant(const BandPresentation& b) {
  // Deleting row i and the last column leaves a block triangular minor whose
  // determinant is the product of the first i diagonal entries, so
  //   det = sum_i (-1)^(i+m-1) * c_i * prod_{j<i} d_j   (0-based).
  const std::size_t m = b.size();
  LaurentPoly det;
  LaurentPoly prefix = kOne;
  for (std::size_t i = 0; i < m; ++i) {
    const LaurentPoly c = i + 1 < m ? column_entry(b.bands[i]) : LaurentPoly::constant(-1);
    det += signed_term(c, prefix, i, m - 1);
    if (i + 1 < m) prefix *= diagonal_entry(b.bands[i]);
  }
  return det;
}

LaurentPoly cofactor_determinant(const PolyMatrix& m, Line line, std::size_t index) {
  const std::size_t n = m.size();
  if (n == 0) return kOne;
  if (index >= n) throw DomainError("cofactor_determinant: line index out of range");
  LaurentPoly det;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t r = line == Line::row ? index : k;
    const std::size_t c = line == Line::row ? k : index;
    if (m(r, c).is_zero()) continue;
    det += signed_term(m(r, c), laplace_first_row(minor_without(m, r, c)), r, c);
  }
  return det;
}

LaurentPoly bareiss_determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return kOne;
  bool negate = false;
  LaurentPoly prev = kOne;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return {};
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_divide(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = LaurentPoly{};
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

LaurentPoly fox_milnor_factor(const BandPresentation& b) {
  return normalize_unit(banded_determinant(b));
}

LaurentPoly alexander_from_bands(const BandPresentation& b) {
  const LaurentPoly f = fox_milnor_factor(b);
  return symmetrize_alexander(f * involute(f));
}

std::optional<LaurentPoly> verify_fox_milnor(const LaurentPoly& delta, int max_degree,
                                             std::int64_t max_coeff) {
  if (!is_symmetric(delta) || eval_at_one(delta) != 1) {
    throw DomainError("verify_fox_milnor: expected a symmetric polynomial with value 1 at t=1, got " +
                      to_string(delta));
  }
  if (max_degree < 0 || max_coeff < 0) {
    throw DomainError("verify_fox_milnor: search bounds must be non-negative");
  }
  const std::size_t len = static_cast<std::size_t>(max_degree) + 1;
  std::vector<std::int64_t> coeffs(len, -max_coeff);
  while (true) {
    std::int64_t sum = 0;
    for (auto c : coeffs) sum += c;
    // g(1)^2 must equal delta(1) = 1.
    if (sum == 1 || sum == -1) {
      LaurentPoly::Terms terms;
      for (std::size_t i = 0; i < len; ++i) {
        terms.emplace(static_cast<LaurentPoly::Exponent>(i), BigInt(static_cast<long>(coeffs[i])));
      }
      LaurentPoly g(std::move(terms));
      if (unit_equivalent(g * involute(g), delta)) return normalize_unit(g);
    }
    // Odometer increment, last coefficient fastest.
    std::size_t pos = len;
    while (pos > 0 && coeffs[pos - 1] == max_coeff) {
      coeffs[pos - 1] = -max_coeff;
      --pos;
    }
    if (pos == 0) return std::nullopt;
    ++coeffs[pos - 1];
  }
}

}  // namespace trikit
