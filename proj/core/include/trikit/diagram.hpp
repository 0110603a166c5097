#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "trikit/laurent.hpp"
#include "trikit/tripar.hpp"

namespace trikit {

using IntVector = std::vector<BigInt>;

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

  bool is_zero() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> cells_;
};

/*
 * First homology of Sigma_{g,b} with basis a_1, b_1, ..., a_g, b_g,
 * d_1, ..., d_{b-1} (rank 2g + b - 1). The intersection pairing has
 * a_i . b_i = 1 = -(b_i . a_i); every other basis pairing, and every pairing
 * involving a d-class, is 0.
 */
struct SurfaceModel {
  int genus = 0;
  int boundaries = 1;

  std::size_t rank() const { return static_cast<std::size_t>(2 * genus + boundaries - 1); }

  /// Basis vectors, 0-based index.
  IntVector a(int i) const;
  IntVector b(int i) const;
  IntVector d(int i) const;

  /// x . y. Throws DomainError if either length differs from rank().
  BigInt pair(const IntVector& x, const IntVector& y) const;

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

/// A family of curves, recorded by their homology classes.
struct CurveSystem {
  std::vector<IntVector> classes;

  std::size_t size() const { return classes.size(); }

  friend bool operator==(const CurveSystem&, const CurveSystem&) = default;
};

struct RelTrisectionDiagram {
  SurfaceModel surface;
  CurveSystem alpha;
  CurveSystem beta;
  CurveSystem gamma;
  TrisectionType declared;

  friend bool operator==(const RelTrisectionDiagram&, const RelTrisectionDiagram&) = default;
};

/// Entry (i,j) = x_i . y_j.
IntMatrix pair_matrix(const CurveSystem& x, const CurveSystem& y, const SurfaceModel& s);

/// Slides curve i over curve j: class_i += sign * class_j. Indices are
/// 0-based; sign must be +1 or -1 and i != j.
CurveSystem handle_slide(CurveSystem sys, std::size_t i, std::size_t j, int sign);

/// Invariant factors d_1 | d_2 | ... (min(rows, cols) of them, all >= 0).
std::vector<BigInt> smith_normal_form(IntMatrix m);

/*
 * Homology image of the standard diagram of type t. With A once-intersecting
 * pairs and g - p curves per family:
 *   alpha_i = a_i
 *   beta_i  = b_i        (i < A),  a_i otherwise
 *   gamma_i = a_i + b_i  (i < A),  a_i otherwise
 * so each of (alpha,beta), (beta,gamma), (gamma,alpha) pairs as +-I_A plus
 * zeros.
 */
RelTrisectionDiagram std_diagram(const TrisectionType& t);

struct CrossCheck {
  std::string name;          // "alpha-beta", "beta-gamma", "gamma-alpha"
  std::vector<BigInt> snf;
  bool ok = false;
};

struct ValidationReport {
  bool type_valid = false;
  bool surface_matches = false;
  bool dimensions_ok = false;
  std::array<bool, 3> counts_ok{};
  std::array<bool, 3> within_family_disjoint{};
  std::array<CrossCheck, 3> cross{};
  int expected_count = 0;  // g - p
  int expected_ones = 0;   // A
  bool passed = false;
  std::vector<std::string> messages;

  /// Passing is necessary for a genuine diagram, not sufficient.
  static constexpr const char* kScope =
      "homology-level check: necessary for a relative trisection diagram, not sufficient; "
      "parallel curves are recorded by their a-class";
};

/// Runs every check and records failures in the report; never throws.
ValidationReport validate(const RelTrisectionDiagram& d);

/// euler_char of the declared type, after requiring validate() to pass
/// (DomainError otherwise).
int consistency_with_euler(const RelTrisectionDiagram& d);

}  // namespace trikit
