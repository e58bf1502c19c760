#ifndef ULRICH_COHOMOLOGY_HPP
#define ULRICH_COHOMOLOGY_HPP

#include <vector>

#include "ulrich/lattice.hpp"

namespace ulrich {

struct CohTable {
  Int h0 = 0;
  Int h1 = 0;
  Int h2 = 0;

  Int chi() const { return h0 - h1 + h2; }
  bool is_zero() const { return h0 == 0 && h1 == 0 && h2 == 0; }

  friend bool operator==(const CohTable& x, const CohTable& y) {
    return x.h0 == y.h0 && x.h1 == y.h1 && x.h2 == y.h2;
  }
};

// Sections of O(a,b) on F_e: sum over pushforward summands O_P1(b - i*e), i = 0..a.
Int h0(const DivisorClass& d);

// h2 by Serre duality, h1 = h0 + h2 - chi.
CohTable line_bundle_cohomology(const DivisorClass& d);

// All three cohomology tables of D - H and D - 2H vanish.
bool is_ulrich_line_bundle(const DivisorClass& d, const DivisorClass& h);

// Exhaustive scan of |alpha|,|beta| <= box against the polarization (3,b).
std::vector<DivisorClass> search_ulrich_line_bundles(long e, const Int& b, long box = 20);

}  // namespace ulrich

#endif
