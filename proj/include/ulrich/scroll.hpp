#ifndef ULRICH_SCROLL_HPP
#define ULRICH_SCROLL_HPP

#include <array>
#include <string>
#include <vector>

#include "ulrich/cohomology.hpp"
#include "ulrich/presentation.hpp"

namespace ulrich {

// Divisor class m*xi + phi^*(l) on the projectivization X_e = P(E) -> F_e,
// where xi is the relative hyperplane class.
struct ScrollClass {
  Int m = 0;
  DivisorClass l;

  friend bool operator==(const ScrollClass& x, const ScrollClass& y) {
    return x.m == y.m && x.l == y.l;
  }
  friend bool operator!=(const ScrollClass& x, const ScrollClass& y) { return !(x == y); }
};

ScrollClass xi_class(long e);
ScrollClass pullback(const DivisorClass& d);
ScrollClass operator+(const ScrollClass& x, const ScrollClass& y);
ScrollClass operator-(const ScrollClass& x, const ScrollClass& y);
ScrollClass operator*(const Int& n, const ScrollClass& x);
std::ostream& operator<<(std::ostream& os, const ScrollClass& c);

// Trilinear product in the Chow ring of X, reduced by
// xi^2 = xi.phi^*c1(E) - c2(E).phi^*[pt], with c1(E) = (3,b), c2(E) = k.
Int triple_product(const ScrollConfig& c, const ScrollClass& x, const ScrollClass& y,
                   const ScrollClass& z);

Int xi_cubed(const ScrollConfig& c);  // (3,b)^2 - k = 6b - 9e - k

// K_X = -2 xi + phi^*(K_F + c1(E)).
ScrollClass canonical_scroll_class(const ScrollConfig& c);

// c1(U_r) for U_r = phi^*(H_r(-c1 E)) (xi): r xi + phi^*(c1(H_r) - r(3,b)).
ScrollClass c1_of_ulrich(const ScrollConfig& c, long r);

// The same class written by parity:
//   even r: r xi + phi^*((r/2)(1, b-e-2))
//   odd  r: r xi + phi^*((3, b-3) + ((r-3)/2)(1, b-e-2))
ScrollClass printed_c1_of_ulrich(const ScrollConfig& c, long r);

// slope = c1(U_r).xi^2 / r; equals 8b - k - 12e - 3 for every r and parity.
Rat slope_of_ulrich(const ScrollConfig& c, long r);
Int slope_closed_form(const ScrollConfig& c);

// Rank-2 specialness: c1(U_2) = K_X + 4 xi.
bool rank2_is_special(const ScrollConfig& c);

// Chern data of U_r: c2 = xi.phi^*(c2_xi) + c2_pt.phi^*[pt], c3 as a number.
struct ChernData {
  ScrollClass c1;
  DivisorClass c2_xi;
  Int c2_pt = 0;
  Int c3 = 0;
};

ChernData chern_of_ulrich(const ScrollConfig& c, long r);

// Interval [lo, hi] for one cohomology dimension; exact when lo == hi.
struct HBound {
  Int lo = 0;
  Int hi = 0;
  bool exact() const { return lo == hi; }
};

// h^0..h^3 of a line bundle on X. "exact" means every connecting map in the
// symmetric-power filtration was forced to vanish, so all four values are
// determined; otherwise the entries are honest upper/lower bounds.
struct ScrollCohTable {
  std::array<HBound, 4> h;
  bool exact = true;

  bool is_zero() const {
    for (const HBound& x : h)
      if (x.hi != 0) return false;
    return true;
  }
  bool has_forced_nonzero() const {
    for (const HBound& x : h)
      if (x.lo > 0) return true;
    return false;
  }
};

// Pushforward along phi: m = -1 has no cohomology; m >= 0 filters Sym^m(E)(l)
// by A^i B^(m-i)(l); m <= -2 shifts Sym^(-m-2)(E) tensor det(E)^(m+1) (l) up
// one degree. Extension steps propagate intervals unless the vanishing pattern
// forces exactness.
ScrollCohTable scroll_line_cohomology(const ScrollConfig& c, const ScrollClass& d);

enum class Verdict { yes, no, unknown };
std::string to_string(Verdict v);

// D is an Ulrich line bundle for (X, xi) iff H^*(D - j xi) = 0 for j = 1,2,3.
struct CandidateReport {
  std::string name;
  ScrollClass cls;
  std::array<ScrollCohTable, 3> twists;  // j = 1, 2, 3
  Verdict verdict = Verdict::unknown;
};

CandidateReport assess_line_candidate(const ScrollConfig& c, const std::string& name,
                                      const ScrollClass& cls);

// The candidate families: two mixed classes defined for every config, and a
// pair defined on the b = 2t, k = 3t configs (parameter t can also be probed
// directly on other configs).
ScrollClass candidate_mixed_one(const ScrollConfig& c);   // xi + phi^*(2,-1)
ScrollClass candidate_mixed_two(const ScrollConfig& c);   // xi + phi^*(-1,b-1)
ScrollClass candidate_double(const ScrollConfig& c, const Int& t);    // 2xi + phi^*(-1,-t-1)
ScrollClass candidate_pullback(const ScrollConfig& c, const Int& t);  // phi^*(2,3t-1)

// True when (b,k) = (2t,3t); sets t.
bool has_double_shape(const ScrollConfig& c, Int& t);

struct LineClassification {
  ScrollConfig config;
  long box = 0;
  std::vector<DivisorClass> surface_lines;  // Ulrich lines on (F_e, (3,b)) within box
  std::vector<CandidateReport> candidates;
  bool any_yes = false;
  bool any_unknown = false;
};

// Assesses the candidate families (plus optional extra t-probes for the
// b=2t,k=3t pair) and runs the bounded surface search.
LineClassification classify_ulrich_lines(const ScrollConfig& c, long box = 20,
                                         const std::vector<Int>& probe_ts = {});

}  // namespace ulrich

#endif
