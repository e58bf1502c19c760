#ifndef ULRICH_MODULI_HPP
#define ULRICH_MODULI_HPP

#include "ulrich/presentation.hpp"

namespace ulrich {

// Dimensions of the Hom spaces attached to the presentation of one bundle:
// hom_ab = dim Hom(A, B), end_a = dim End(A), end_b = dim End(B).
struct HomCounts {
  Int hom_ab = 0;
  Int end_a = 0;
  Int end_b = 0;
};

HomCounts hom_counts(long e, const Int& b, long r);

// Expected Ext^1 dimension of a general simple cokernel:
// hom_ab - end_a - end_b + 1 (the two automorphism groups share one scalar).
Int dimension_from_counts(const HomCounts& c);

// Closed form of the same number:
//   even r: (r^2/4) (6b - 9e - 4) + 1
//   odd  r: ((r^2 - 1)/4) (6b - 9e - 4)
Int dimension_formula(long e, const Int& b, long r);

struct DimensionReport {
  long e = 0;
  Int b = 0;
  long r = 0;
  HomCounts counts;
  Int counted = 0;
  Int formula = 0;
  bool agree = false;
  bool has_sample = false;  // set when a sampled Ext^1 is attached
  Int ext1_sampled = 0;
  bool sample_agrees = false;
};

DimensionReport compare_dimensions(long e, const Int& b, long r);

}  // namespace ulrich

#endif
