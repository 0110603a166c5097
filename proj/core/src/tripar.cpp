#include "trikit/tripar.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "trikit/error.hpp"

namespace trikit {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

}  // namespace

TrisectionType TrisectionType::make(int g, int k, int p, int b) {
  TrisectionType t{g, k, p, b};
  t.validate();
  return t;
}

bool TrisectionType::is_valid() const {
  return g >= 0 && k >= 0 && p >= 0 && b >= 1 && 2 * p + b - 1 <= k && k <= g + p + b - 1;
}

void TrisectionType::validate() const {
  auto fail = [this](const char* why) {
    throw DomainError("invalid trisection type " + to_string(*this) + ": " + why);
  };
  if (g < 0 || k < 0 || p < 0) fail("g, k, p must be non-negative");
  if (b < 1) fail("b must be at least 1");
  if (2 * p + b - 1 > k) fail("requires 2p + b - 1 <= k");
  if (k > g + p + b - 1) fail("requires k <= g + p + b - 1");
}

std::string to_string(const TrisectionType& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TrisectionType& t) {
  return os << '(' << t.g << ',' << t.k << ';' << t.p << ',' << t.b << ')';
}

std::string_view to_string(BoundaryClass c) {
  switch (c) {
    case BoundaryClass::sphere: return "sphere";
    case BoundaryClass::lens: return "lens";
    case BoundaryClass::seifert: return "seifert";
    case BoundaryClass::non_seifert_constraint_unknown: return "non_seifert_constraint_unknown";
    case BoundaryClass::known_non_seifert: return "known_non_seifert";
  }
  return "?";
}

BoundaryClass parse_boundary_class(std::string_view name) {
  for (auto c : {BoundaryClass::sphere, BoundaryClass::lens, BoundaryClass::seifert,
                 BoundaryClass::non_seifert_constraint_unknown,
                 BoundaryClass::known_non_seifert}) {
    if (to_string(c) == name) return c;
  }
  throw ParseError("unknown boundary class '" + std::string(name) + "'");
}

bool is_seifert_forced(BoundaryClass c) {
  return c == BoundaryClass::sphere || c == BoundaryClass::lens || c == BoundaryClass::seifert;
}

int euler_char(const TrisectionType& t) {
  t.validate();
  return t.g - 3 * t.k + 3 * t.p + 2 * t.b - 1;
}

int intersection_pairs(const TrisectionType& t) {
  t.validate();
  const int a = t.g + t.p + t.b - 1 - t.k;
  if (a < 0 || a > t.g - t.p) {
    throw ConsistencyError("intersection_pairs: A = " + std::to_string(a) + " outside [0, g-p] for " +
                           to_string(t));
  }
  return a;
}

OpenBook open_book(const TrisectionType& t) {
  t.validate();
  return {t.p, t.b};
}

int heegaard_genus(const TrisectionType& t) {
  t.validate();
  return 2 * t.p + t.b - 1;
}

BoundaryClass boundary_forcing(const TrisectionType& t) {
  t.validate();
  if (t.p == 0) {
    if (t.b == 1) return BoundaryClass::sphere;
    if (t.b == 2) return BoundaryClass::lens;
    if (t.b == 3) return BoundaryClass::seifert;
  }
  return BoundaryClass::non_seifert_constraint_unknown;
}

std::vector<TrisectionType> admissible_tuples(int chi, int g, bool exclude_seifert_forced) {
  std::vector<TrisectionType> out;
  if (g < 0) return out;
  const int p_max = std::min(floor_div(g + 1 - chi, 3), g);
  const int a_min = std::max(0, ceil_div(2 * g - 1 + chi, 3));
  for (int p = 0; p <= p_max; ++p) {
    for (int a = a_min; a <= g - p; ++a) {
      const TrisectionType t{g, 1 - chi - g + p + 2 * a, p, 3 * a - 2 * g + 2 - chi};
      if (!t.is_valid()) continue;
      if (euler_char(t) != chi || intersection_pairs(t) != a) {
        throw ConsistencyError("admissible_tuples: derived type " + to_string(t) +
                               " disagrees with chi = " + std::to_string(chi));
      }
      if (exclude_seifert_forced && is_seifert_forced(boundary_forcing(t))) continue;
      out.push_back(t);
    }
  }
  return out;
}

GenusBound genus_lower_bound(int chi, BoundaryClass boundary) {
  if (boundary != BoundaryClass::known_non_seifert) {
    return {0, false,
            "no bound: the boundary is not asserted to be non-Seifert (class " +
                std::string(to_string(boundary)) + ")"};
  }
  for (int g = 0; g <= chi + 1; ++g) {
    const auto survivors = admissible_tuples(chi, g, true);
    if (!survivors.empty()) {
      throw ConsistencyError("genus_lower_bound: type " + to_string(survivors.front()) +
                             " of genus " + std::to_string(g) + " is not Seifert-forced");
    }
  }
  const int bound = std::max(chi + 2, 0);
  return {bound, true,
          "every type of genus <= " + std::to_string(chi + 1) +
              " has a planar page with at most 3 bindings, so a non-Seifert boundary needs genus >= " +
              std::to_string(bound)};
}

}  // namespace trikit
