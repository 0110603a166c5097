#include "trikit/diagram.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "trikit/error.hpp"

namespace trikit {

namespace {

const char* const kFamilyNames[3] = {"alpha", "beta", "gamma"};

void add_scaled_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& factor) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += factor * m(src, c);
}

void add_scaled_col(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& factor) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += factor * m(r, src);
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// Moves the entry of least nonzero magnitude in the trailing block to (t,t).
bool place_pivot(IntMatrix& m, std::size_t t) {
  bool found = false;
  std::size_t br = 0, bc = 0;
  BigInt best;
  for (std::size_t r = t; r < m.rows(); ++r) {
    for (std::size_t c = t; c < m.cols(); ++c) {
      if (m(r, c) == 0) continue;
      BigInt mag = abs(m(r, c));
      if (!found || mag < best) {
        found = true;
        best = std::move(mag);
        br = r;
        bc = c;
      }
    }
  }
  if (!found) return false;
  swap_rows(m, t, br);
  swap_cols(m, t, bc);
  return true;
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  cells_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DomainError("IntMatrix: ragged initializer");
    for (long v : row) cells_.emplace_back(v);
  }
}

bool IntMatrix::is_zero() const {
  for (const auto& v : cells_) {
    if (v != 0) return false;
  }
  return true;
}

IntVector SurfaceModel::a(int i) const {
  IntVector v(rank());
  v.at(static_cast<std::size_t>(2 * i)) = 1;
  return v;
}

IntVector SurfaceModel::b(int i) const {
  IntVector v(rank());
  v.at(static_cast<std::size_t>(2 * i + 1)) = 1;
  return v;
}

IntVector SurfaceModel::d(int i) const {
  IntVector v(rank());
  v.at(static_cast<std::size_t>(2 * genus + i)) = 1;
  return v;
}

BigInt SurfaceModel::pair(const IntVector& x, const IntVector& y) const {
  if (x.size() != rank() || y.size() != rank()) {
    throw DomainError("pairing: class length " + std::to_string(x.size()) + "/" +
                      std::to_string(y.size()) + " does not match surface rank " +
                      std::to_string(rank()));
  }
  BigInt sum = 0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(genus); ++i) {
    sum += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i];
  }
  return sum;
}

IntMatrix pair_matrix(const CurveSystem& x, const CurveSystem& y, const SurfaceModel& s) {
  IntMatrix out(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) out(i, j) = s.pair(x.classes[i], y.classes[j]);
  }
  return out;
}

CurveSystem handle_slide(CurveSystem sys, std::size_t i, std::size_t j, int sign) {
  if (i == j) throw DomainError("handle_slide: a curve cannot slide over itself");
  if (i >= sys.size() || j >= sys.size()) throw DomainError("handle_slide: index out of range");
  if (sign != 1 && sign != -1) throw DomainError("handle_slide: sign must be +1 or -1");
  auto& target = sys.classes[i];
  const auto& source = sys.classes[j];
  if (target.size() != source.size()) throw DomainError("handle_slide: class lengths differ");
  for (std::size_t k = 0; k < target.size(); ++k) {
    if (sign > 0) {
      target[k] += source[k];
    } else {
      target[k] -= source[k];
    }
  }
  return sys;
}

std::vector<BigInt> smith_normal_form(IntMatrix m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  std::vector<BigInt> diag(n);
  for (std::size_t t = 0; t < n; ++t) {
    if (!place_pivot(m, t)) break;  // trailing block is zero
    while (true) {
      bool clean = true;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (m(r, t) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), m(t, t).get_mpz_t());
        add_scaled_row(m, r, t, -q);
        if (m(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (m(t, c) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), m(t, t).get_mpz_t());
        add_scaled_col(m, c, t, -q);
        if (m(t, c) != 0) clean = false;
      }
      if (clean) {
        // The pivot must divide the whole trailing block.
        for (std::size_t r = t + 1; r < m.rows() && clean; ++r) {
          for (std::size_t c = t + 1; c < m.cols(); ++c) {
            if (!mpz_divisible_p(m(r, c).get_mpz_t(), m(t, t).get_mpz_t())) {
              add_scaled_row(m, t, r, BigInt(1));
              clean = false;
              break;
            }
          }
        }
      }
      if (clean) break;
      place_pivot(m, t);
    }
    diag[t] = abs(m(t, t));
  }
  return diag;
}

RelTrisectionDiagram std_diagram(const TrisectionType& t) {
  const int pairs = intersection_pairs(t);
  const int count = t.g - t.p;
  RelTrisectionDiagram d;
  d.surface = {t.g, t.b};
  d.declared = t;
  for (int i = 0; i < count; ++i) {
    const IntVector a = d.surface.a(i);
    d.alpha.classes.push_back(a);
    if (i < pairs) {
      const IntVector b = d.surface.b(i);
      IntVector sum(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) sum[k] = a[k] + b[k];
      d.beta.classes.push_back(b);
      d.gamma.classes.push_back(std::move(sum));
    } else {
      d.beta.classes.push_back(a);
      d.gamma.classes.push_back(a);
    }
  }
  return d;
}

ValidationReport validate(const RelTrisectionDiagram& d) {
  ValidationReport rep;
  auto note = [&rep](std::string msg) { rep.messages.push_back(std::move(msg)); };

  rep.type_valid = d.declared.is_valid();
  if (!rep.type_valid) {
    note("declared type " + to_string(d.declared) + " violates the parameter bounds");
    return rep;
  }
  rep.expected_count = d.declared.g - d.declared.p;
  rep.expected_ones = intersection_pairs(d.declared);

  rep.surface_matches = d.surface.genus == d.declared.g && d.surface.boundaries == d.declared.b;
  if (!rep.surface_matches) {
    note("surface (" + std::to_string(d.surface.genus) + "," + std::to_string(d.surface.boundaries) +
         ") does not match declared (g,b)");
  }

  const std::array<const CurveSystem*, 3> families = {&d.alpha, &d.beta, &d.gamma};
  rep.dimensions_ok = d.surface.genus >= 0 && d.surface.boundaries >= 1;
  for (std::size_t f = 0; f < 3; ++f) {
    for (const auto& cls : families[f]->classes) {
      if (cls.size() != d.surface.rank()) {
        rep.dimensions_ok = false;
        note(std::string(kFamilyNames[f]) + ": class of length " + std::to_string(cls.size()) +
             ", expected " + std::to_string(d.surface.rank()));
        break;
      }
    }
  }

  for (std::size_t f = 0; f < 3; ++f) {
    rep.counts_ok[f] = families[f]->size() == static_cast<std::size_t>(rep.expected_count);
    if (!rep.counts_ok[f]) {
      note(std::string(kFamilyNames[f]) + ": " + std::to_string(families[f]->size()) +
           " curves, expected g - p = " + std::to_string(rep.expected_count));
    }
  }

  for (std::size_t f = 0; f < 3; ++f) {
    rep.cross[f].name = std::string(kFamilyNames[f]) + "-" + kFamilyNames[(f + 1) % 3];
  }
  if (!rep.dimensions_ok) return rep;

  for (std::size_t f = 0; f < 3; ++f) {
    rep.within_family_disjoint[f] = pair_matrix(*families[f], *families[f], d.surface).is_zero();
    if (!rep.within_family_disjoint[f]) {
      note(std::string(kFamilyNames[f]) + ": curves of one family intersect algebraically");
    }
  }

  for (std::size_t f = 0; f < 3; ++f) {
    auto& check = rep.cross[f];
    check.snf = smith_normal_form(pair_matrix(*families[f], *families[(f + 1) % 3], d.surface));
    std::vector<BigInt> expected(static_cast<std::size_t>(rep.expected_count), BigInt(0));
    for (int i = 0; i < rep.expected_ones && i < rep.expected_count; ++i) expected[i] = 1;
    check.ok = rep.counts_ok[f] && rep.counts_ok[(f + 1) % 3] && check.snf == expected;
    if (!check.ok) {
      note(check.name + ": Smith normal form differs from " + std::to_string(rep.expected_ones) +
           " ones followed by zeros");
    }
  }

  rep.passed = rep.surface_matches;
  for (std::size_t f = 0; f < 3; ++f) {
    rep.passed = rep.passed && rep.counts_ok[f] && rep.within_family_disjoint[f] && rep.cross[f].ok;
  }
  return rep;
}

int consistency_with_euler(const RelTrisectionDiagram& d) {
  const ValidationReport rep = validate(d);
  if (!rep.passed) {
    std::string why = rep.messages.empty() ? "validation failed" : rep.messages.front();
    throw DomainError("consistency_with_euler: diagram does not validate: " + why);
  }
  return euler_char(d.declared);
}

}  // namespace trikit
