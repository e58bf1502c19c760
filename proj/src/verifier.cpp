#include "ulrich/verifier.hpp"

#include "ulrich/cohomology.hpp"

namespace ulrich {

ShapeDims shape_dims(const PresentationShape& s) {
  return {to_size(s.gamma, "gamma"), to_size(s.delta, "delta"), to_size(s.tau, "tau")};
}

std::array<CohTable, 3> twist1_block_tables(const PresentationShape& s) {
  const DivisorClass twist = Int(-1) * DivisorClass{s.e, 3, s.b};
  return {line_bundle_cohomology(s.block_a + twist),
          line_bundle_cohomology(s.block_b_top + twist),
          line_bundle_cohomology(s.block_b_bot + twist)};
}

void assert_structural_vanishing(const PresentationShape& s) {
  const long e = s.e;
  // Hom(B, A) side: H^*(B_i^v . A) = 0 in all degrees.
  for (const DivisorClass& d : {s.block_a - s.block_b_top, s.block_a - s.block_b_bot}) {
    if (!line_bundle_cohomology(d).is_zero())
      throw std::logic_error("structural vanishing: H*(A - B) != 0");
  }
  // End(B) and Hom(A, B) sides: no higher cohomology.
  const DivisorClass eb[] = {
      {e, 0, 0},                            // B_i - B_i
      {e, 1, Int(e) - 1},                   // bot - top
      {e, -1, Int(1) - e},                  // top - bot
      s.block_b_top - s.block_a,            // (0,1)
      s.block_b_bot - s.block_a,            // (1,e)
  };
  for (const DivisorClass& d : eb) {
    const CohTable t = line_bundle_cohomology(d);
    if (t.h1 != 0 || t.h2 != 0)
      throw std::logic_error("structural vanishing: higher cohomology in End/Hom degree");
  }
}

Int expected_h0(const PresentationShape& s) {
  const DivisorClass h{s.e, 3, s.b};
  return Int(s.r) * intersect(h, h);
}

}  // namespace ulrich
