#include "ulrich/scroll.hpp"

#include <ostream>

namespace ulrich {

namespace {

void require_same_threefold(const ScrollClass& x, const ScrollClass& y) {
  require_same_surface(x.l, y.l);
}

Int binom2(long n) { return n < 2 ? Int(0) : Int(n) * (n - 1) / 2; }
Int binom3(long n) { return n < 3 ? Int(0) : Int(n) * (n - 1) * (n - 2) / 6; }

}  // namespace

ScrollClass xi_class(long e) { return {1, DivisorClass{e, 0, 0}}; }

ScrollClass pullback(const DivisorClass& d) { return {0, d}; }

ScrollClass operator+(const ScrollClass& x, const ScrollClass& y) {
  require_same_threefold(x, y);
  return {x.m + y.m, x.l + y.l};
}

ScrollClass operator-(const ScrollClass& x, const ScrollClass& y) {
  require_same_threefold(x, y);
  return {x.m - y.m, x.l - y.l};
}

ScrollClass operator*(const Int& n, const ScrollClass& x) { return {n * x.m, n * x.l}; }

std::ostream& operator<<(std::ostream& os, const ScrollClass& c) {
  return os << c.m << "*xi + pi*" << c.l;
}

Int triple_product(const ScrollConfig& c, const ScrollClass& x, const ScrollClass& y,
                   const ScrollClass& z) {
  for (const ScrollClass* s : {&x, &y, &z})
    if (s->l.e != c.e) throw SurfaceMismatch();
  const DivisorClass c1 = c1_of_bundle(c);
  Int v = x.m * y.m * z.m * (intersect(c1, c1) - c.k);
  v += x.m * y.m * intersect(z.l, c1);
  v += x.m * z.m * intersect(y.l, c1);
  v += y.m * z.m * intersect(x.l, c1);
  v += x.m * intersect(y.l, z.l);
  v += y.m * intersect(x.l, z.l);
  v += z.m * intersect(x.l, y.l);
  return v;
}

Int xi_cubed(const ScrollConfig& c) {
  const ScrollClass xi = xi_class(c.e);
  return triple_product(c, xi, xi, xi);
}

ScrollClass canonical_scroll_class(const ScrollConfig& c) {
  return Int(-2) * xi_class(c.e) + pullback(canonical_class(c.e) + c1_of_bundle(c));
}

ScrollClass c1_of_ulrich(const ScrollConfig& c, long r) {
  require_valid_config(c);
  const PresentationShape s = presentation_shape(c.e, c.b, r);
  return Int(r) * xi_class(c.e) + pullback(s.c1 - Int(r) * c1_of_bundle(c));
}

ScrollClass printed_c1_of_ulrich(const ScrollConfig& c, long r) {
  if (r < 2) throw ConfigError("rank must be at least 2");
  const DivisorClass step{c.e, 1, c.b - c.e - 2};
  DivisorClass l{c.e, 0, 0};
  if (r % 2 == 0)
    l = Int(r / 2) * step;
  else
    l = DivisorClass{c.e, 3, c.b - 3} + Int((r - 3) / 2) * step;
  return Int(r) * xi_class(c.e) + pullback(l);
}

Rat slope_of_ulrich(const ScrollConfig& c, long r) {
  const ScrollClass xi = xi_class(c.e);
  Rat s(triple_product(c, c1_of_ulrich(c, r), xi, xi), Int(r));
  s.canonicalize();
  return s;
}

Int slope_closed_form(const ScrollConfig& c) {
  return Int(8) * c.b - c.k - Int(12) * c.e - 3;
}

bool rank2_is_special(const ScrollConfig& c) {
  const ScrollClass lhs = c1_of_ulrich(c, 2);
  const ScrollClass rhs = canonical_scroll_class(c) + Int(4) * xi_class(c.e);
  return lhs == rhs;
}

ChernData chern_of_ulrich(const ScrollConfig& c, long r) {
  require_valid_config(c);
  const PresentationShape s = presentation_shape(c.e, c.b, r);
  const DivisorClass c1e = c1_of_bundle(c);
  // F = H_r(-c1 E) on the surface, then U_r = phi^* F (xi).
  const DivisorClass c1f = s.c1 - Int(r) * c1e;
  const Int c2f = c2_of_coker(s) - Int(r - 1) * intersect(s.c1, c1e) +
                  binom2(r) * intersect(c1e, c1e);
  ChernData out;
  out.c1 = Int(r) * xi_class(c.e) + pullback(c1f);
  out.c2_xi = Int(r - 1) * c1f + binom2(r) * c1e;
  out.c2_pt = c2f - binom2(r) * c.k;
  out.c3 = binom3(r) * (intersect(c1e, c1e) - c.k) + binom2(r - 1) * intersect(c1f, c1e) +
           Int(r - 2) * c2f;
  return out;
}

namespace {

ScrollCohTable exact_table(const CohTable& t) {
  ScrollCohTable out;
  out.h = {HBound{t.h0, t.h0}, HBound{t.h1, t.h1}, HBound{t.h2, t.h2}, HBound{0, 0}};
  out.exact = true;
  return out;
}

ScrollCohTable zero_table() { return exact_table(CohTable{}); }

// Bounds for the middle of an extension 0 -> S -> F -> Q -> 0 from bounds on
// the ends. The connecting map H^i(Q) -> H^(i+1)(S) has rank at most
// min(h^i(Q), h^(i+1)(S)); when every such bound is zero the sequence splits
// into short exact pieces and the middle is determined.
ScrollCohTable extension_bounds(const ScrollCohTable& sub, const ScrollCohTable& quot) {
  std::array<Int, 4> dmax;
  for (std::size_t i = 0; i < 4; ++i) {
    const Int cap = i + 1 < 4 ? sub.h[i + 1].hi : Int(0);
    dmax[i] = quot.h[i].hi < cap ? quot.h[i].hi : cap;
  }
  ScrollCohTable out;
  out.exact = sub.exact && quot.exact;
  for (std::size_t i = 0; i < 4; ++i)
    if (dmax[i] != 0) out.exact = false;
  for (std::size_t i = 0; i < 4; ++i) {
    const Int up = sub.h[i].hi + quot.h[i].hi;
    Int down = sub.h[i].lo + quot.h[i].lo - dmax[i];
    if (i > 0) down -= dmax[i - 1];
    out.h[i] = {down > 0 ? down : Int(0), up};
  }
  return out;
}

// Graded pieces of Sym^j(E) tensor det(E)^extra_det (l), sub-first:
// i = j down to 0 contributes A^i B^(j-i) + extra_det (A+B) + l.
ScrollCohTable sym_power_table(const ScrollConfig& c, long j, long extra_det,
                               const DivisorClass& l) {
  const DivisorClass a = class_a(c);
  const DivisorClass b = class_b(c);
  const DivisorClass base = Int(extra_det) * (a + b) + l;
  ScrollCohTable acc;
  bool first = true;
  for (long i = j; i >= 0; --i) {
    const DivisorClass piece = Int(i) * a + Int(j - i) * b + base;
    const ScrollCohTable t = exact_table(line_bundle_cohomology(piece));
    acc = first ? t : extension_bounds(acc, t);
    first = false;
  }
  return acc;
}

}  // namespace

ScrollCohTable scroll_line_cohomology(const ScrollConfig& c, const ScrollClass& d) {
  require_valid_config(c);
  if (d.l.e != c.e) throw SurfaceMismatch();
  const long m = to_long(d.m, "xi multiplicity");
  if (m == -1) return zero_table();
  if (m >= 0) return sym_power_table(c, m, 0, d.l);
  // m <= -2: R^1 phi_* only, shifting surface degrees up by one.
  const long j = -m - 2;
  const ScrollCohTable s = sym_power_table(c, j, -(j + 1), d.l);
  ScrollCohTable out;
  out.exact = s.exact;
  out.h = {HBound{0, 0}, s.h[0], s.h[1], s.h[2]};
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    default:
      return "unknown";
  }
}

CandidateReport assess_line_candidate(const ScrollConfig& c, const std::string& name,
                                      const ScrollClass& cls) {
  CandidateReport rep;
  rep.name = name;
  rep.cls = cls;
  const ScrollClass xi = xi_class(c.e);
  bool all_zero = true;
  bool all_exact = true;
  bool forced_nonzero = false;
  for (long j = 1; j <= 3; ++j) {
    const ScrollCohTable t = scroll_line_cohomology(c, cls - Int(j) * xi);
    rep.twists[static_cast<std::size_t>(j - 1)] = t;
    all_zero = all_zero && t.is_zero();
    all_exact = all_exact && t.exact;
    forced_nonzero = forced_nonzero || t.has_forced_nonzero();
  }
  if (all_zero)
    rep.verdict = Verdict::yes;
  else if (forced_nonzero)
    rep.verdict = Verdict::no;
  else
    rep.verdict = Verdict::unknown;
  return rep;
}

ScrollClass candidate_mixed_one(const ScrollConfig& c) {
  return xi_class(c.e) + pullback(DivisorClass{c.e, 2, -1});
}

ScrollClass candidate_mixed_two(const ScrollConfig& c) {
  return xi_class(c.e) + pullback(DivisorClass{c.e, -1, c.b - 1});
}

ScrollClass candidate_double(const ScrollConfig& c, const Int& t) {
  return Int(2) * xi_class(c.e) + pullback(DivisorClass{c.e, -1, -t - 1});
}

ScrollClass candidate_pullback(const ScrollConfig& c, const Int& t) {
  return pullback(DivisorClass{c.e, 2, Int(3) * t - 1});
}

bool has_double_shape(const ScrollConfig& c, Int& t) {
  if (c.b % 2 != 0) return false;
  t = c.b / 2;
  return c.k == Int(3) * t;
}

LineClassification classify_ulrich_lines(const ScrollConfig& c, long box,
                                         const std::vector<Int>& probe_ts) {
  require_valid_config(c);
  LineClassification out;
  out.config = c;
  out.box = box;
  out.surface_lines = search_ulrich_line_bundles(c.e, c.b, box);

  out.candidates.push_back(assess_line_candidate(c, "xi+pi*(2,-1)", candidate_mixed_one(c)));
  out.candidates.push_back(
      assess_line_candidate(c, "xi+pi*(-1,b-1)", candidate_mixed_two(c)));
  std::vector<Int> ts = probe_ts;
  Int t0;
  if (has_double_shape(c, t0)) ts.insert(ts.begin(), t0);
  for (const Int& t : ts) {
    const std::string suf = "[t=" + t.get_str() + "]";
    out.candidates.push_back(
        assess_line_candidate(c, "2xi+pi*(-1,-t-1)" + suf, candidate_double(c, t)));
    out.candidates.push_back(
        assess_line_candidate(c, "pi*(2,3t-1)" + suf, candidate_pullback(c, t)));
  }
  for (const CandidateReport& r : out.candidates) {
    out.any_yes = out.any_yes || r.verdict == Verdict::yes;
    out.any_unknown = out.any_unknown || r.verdict == Verdict::unknown;
  }
  return out;
}

}  // namespace ulrich
