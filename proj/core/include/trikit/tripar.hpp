#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace trikit {

/*
 * Parameters (g,k;p,b) of a relative trisection: central surface genus g,
 * sector genus k, page genus p, binding count b.
 *
 * Valid iff g,k,p >= 0, b >= 1 and 2p+b-1 <= k <= g+p+b-1.
 */
struct TrisectionType {
  int g = 0;
  int k = 0;
  int p = 0;
  int b = 1;

  /// Builds and validates; throws DomainError on violation.
  static TrisectionType make(int g, int k, int p, int b);

  bool is_valid() const;
  /// Throws DomainError naming the first violated bound.
  void validate() const;

  friend auto operator<=>(const TrisectionType&, const TrisectionType&) = default;
};

std::string to_string(const TrisectionType& t);
std::ostream& operator<<(std::ostream& os, const TrisectionType& t);

enum class BoundaryClass {
  sphere,
  lens,
  seifert,
  non_seifert_constraint_unknown,
  known_non_seifert,
};

std::string_view to_string(BoundaryClass c);
/// Inverse of to_string; throws ParseError on an unknown name.
BoundaryClass parse_boundary_class(std::string_view name);

/// True for the classes whose boundary is a Seifert fibred space
/// (sphere, lens, seifert).
bool is_seifert_forced(BoundaryClass c);

struct OpenBook {
  int page_genus = 0;
  int bindings = 0;

  friend bool operator==(const OpenBook&, const OpenBook&) = default;
};

/// chi(X) = g - 3k + 3p + 2b - 1.
int euler_char(const TrisectionType& t);

/// A = g + p + b - 1 - k, the number of once-intersecting pairs in the
/// standard diagram. Always in [0, g - p].
int intersection_pairs(const TrisectionType& t);

/// Page genus p and b binding components of the induced open book.
OpenBook open_book(const TrisectionType& t);

/// Genus 2p + b - 1 of the induced Heegaard splitting of the boundary.
int heegaard_genus(const TrisectionType& t);

/// What the induced open book forces on the boundary: planar pages with at
/// most three bindings give S^3, a lens space or a Seifert fibred space.
BoundaryClass boundary_forcing(const TrisectionType& t);

/*
 * All valid types of genus g with euler_char == chi, ordered by p then k.
 * Iterates p and A over their admissible ranges and derives
 *   k = 1 - chi - g + p + 2A,  b = 3A - 2g + 2 - chi.
 * With exclude_seifert_forced, drops types whose boundary is forced to be
 * Seifert fibred.
 */
std::vector<TrisectionType> admissible_tuples(int chi, int g, bool exclude_seifert_forced);

struct GenusBound {
  int genus = 0;      // least trisection genus not excluded; 0 when no claim
  bool claimed = false;
  std::string explanation;
};

/*
 * Lower bound on the trisection genus of a 4-manifold with Euler
 * characteristic chi and the given boundary class. Only a known non-Seifert
 * boundary yields a claim: every type of genus <= chi + 1 is then checked to
 * be Seifert-forced and the bound chi + 2 (at least 0) is returned.
 */
GenusBound genus_lower_bound(int chi, BoundaryClass boundary);

}  // namespace trikit
