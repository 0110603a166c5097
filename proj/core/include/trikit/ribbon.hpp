#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "trikit/laurent.hpp"

namespace trikit {

/// Twist exponents of one parametrised band.
struct Band {
  std::int64_t delta = 0;
  std::int64_t delta_c = 0;

  friend bool operator==(const Band&, const Band&) = default;
};

/*
 * Chain-type ribbon presentation: m - 1 parametrised bands followed by a
 * final band whose matrix row is fixed. An empty list is the m = 1 case.
 */
struct BandPresentation {
  std::vector<Band> bands;

  std::size_t size() const { return bands.size() + 1; }

  friend bool operator==(const BandPresentation&, const BandPresentation&) = default;
};

/// Dense square matrix of Laurent polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t n) : n_(n), cells_(n * n) {}

  std::size_t size() const { return n_; }
  LaurentPoly& operator()(std::size_t r, std::size_t c) { return cells_[r * n_ + c]; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return cells_[r * n_ + c]; }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<LaurentPoly> cells_;
};

/// The presentation of K_n: (-1,-1) at odd positions, (1,0) at even ones,
/// 2n parametrised bands in total. Throws DomainError for n < 1.
BandPresentation kn_presentation(std::int64_t n);

/*
 * Terasaka matrix of a chain-type presentation (0-based indices, m = size):
 *   (i,i)   = -t^delta_i        for i < m-1
 *   (i+1,i) = 1                 for i < m-1
 *   (i,m-1) = t^delta_c_i - 1   for i < m-1
 *   (m-1,m-1) = -1
 */
PolyMatrix build_matrix(const BandPresentation& b);

/// Determinant of build_matrix(b) by cofactor expansion down the last
/// column; each minor is block triangular so this runs in O(m).
LaurentPoly banded_determinant(const BandPresentation& b);

enum class Line { row, column };

/// Laplace expansion along the given row or column at the top level,
/// recursing on the first row of each minor. Exponential; intended for
/// cross-checking small matrices.
LaurentPoly cofactor_determinant(const PolyMatrix& m, Line line, std::size_t index);

/// Fraction-free (Bareiss) elimination over Z[t, t^-1] with row pivoting.
LaurentPoly bareiss_determinant(PolyMatrix m);

/// f(t): normalize_unit of the Terasaka determinant.
LaurentPoly fox_milnor_factor(const BandPresentation& b);

/// Delta(t) = symmetrize_alexander(f(t) f(t^-1)).
LaurentPoly alexander_from_bands(const BandPresentation& b);

/*
 * Bounded search for g with g(t) g(t^-1) unit-equivalent to `delta`, over all
 * g = c_0 + c_1 t + ... + c_d t^d with d <= max_degree and |c_i| <= max_coeff.
 * Coefficient vectors are visited lexicographically; the first hit wins.
 * Requires delta symmetric with delta(1) = 1 (DomainError otherwise).
 */
std::optional<LaurentPoly> verify_fox_milnor(const LaurentPoly& delta, int max_degree,
                                             std::int64_t max_coeff);

}  // namespace trikit
