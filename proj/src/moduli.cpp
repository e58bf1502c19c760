#include "ulrich/moduli.hpp"

#include "ulrich/cohomology.hpp"

namespace ulrich {

HomCounts hom_counts(long e, const Int& b, long r) {
  const PresentationShape s = presentation_shape(e, b, r);
  // Hom(A, B_i) = H0(B_i - A): degrees (0,1) and (1,e); End cross terms use
  // H0(0,0) = 1 and H0(1,e-1) = e (the reverse cross degree has no sections).
  const Int h_top = h0(s.block_b_top - s.block_a);
  const Int h_bot = h0(s.block_b_bot - s.block_a);
  const Int h_cross = h0(s.block_b_bot - s.block_b_top);
  HomCounts c;
  c.hom_ab = s.gamma * (s.delta * h_top + s.tau * h_bot);
  c.end_a = s.gamma * s.gamma;
  c.end_b = s.delta * s.delta + s.tau * s.tau + s.delta * s.tau * h_cross;
  return c;
}

Int dimension_from_counts(const HomCounts& c) { return c.hom_ab - c.end_a - c.end_b + 1; }

Int dimension_formula(long e, const Int& b, long r) {
  if (r < 2) throw ConfigError("dimension formula needs rank r >= 2");
  const Int base = Int(6) * b - Int(9) * e - 4;
  if (r % 2 == 0) {
    const Int h = Int(r) / 2;
    return h * h * base + 1;
  }
  return exact_div(Int(r) * r - 1, Int(4)) * base;
}

DimensionReport compare_dimensions(long e, const Int& b, long r) {
  DimensionReport rep;
  rep.e = e;
  rep.b = b;
  rep.r = r;
  rep.counts = hom_counts(e, b, r);
  rep.counted = dimension_from_counts(rep.counts);
  rep.formula = dimension_formula(e, b, r);
  rep.agree = rep.counted == rep.formula;
  return rep;
}

}  // namespace ulrich
