#include "ulrich/presentation.hpp"

#include <sstream>

namespace ulrich {

namespace {

std::string fmt(const Int& n) { return n.get_str(); }

}  // namespace

ConfigCheck validate_config(const ScrollConfig& c) {
  ConfigCheck out;
  if (c.e < 0) {
    out.reason = "e must be >= 0 (got e=" + std::to_string(c.e) + ")";
    return out;
  }
  const Int lo = c.b - c.e;        // k must exceed this
  const Int hi = 2 * c.b - 4 * c.e;  // k must stay below this
  if (!(c.k > lo && c.k < hi)) {
    std::ostringstream os;
    os << "need b - e < k < 2b - 4e, i.e. " << fmt(lo) << " < k < " << fmt(hi)
       << " (got e=" << c.e << " b=" << fmt(c.b) << " k=" << fmt(c.k) << ")";
    out.reason = os.str();
    return out;
  }
  out.valid = true;
  return out;
}

void require_valid_config(const ScrollConfig& c) {
  const ConfigCheck check = validate_config(c);
  if (!check.valid) throw ConfigError("invalid config: " + check.reason);
}

DivisorClass class_a(const ScrollConfig& c) { return {c.e, 2, 2 * c.b - c.k - 2 * c.e}; }

DivisorClass class_b(const ScrollConfig& c) { return {c.e, 1, c.k - c.b + 2 * c.e}; }

DivisorClass c1_of_bundle(const ScrollConfig& c) { return {c.e, 3, c.b}; }

DivisorClass c1_target(long e, const Int& b, long r) {
  if (r % 2 == 0) {
    const Int half = r / 2;
    return {e, 3 * Int(r) + half, Int(r) * b + half * (b - e - 2)};
  }
  const Int half = (r - 3) / 2;
  return {e, 3 * Int(r + 1) + half, Int(r + 1) * b - 3 + half * (b - e - 2)};
}

PresentationShape presentation_shape(long e, const Int& b, long r) {
  if (r < 2)
    throw ConfigError(
        "presentation requires r >= 2; rank 1 is the line-bundle case, see search-lines");
  if (e < 0) throw ConfigError("presentation requires e >= 0");
  if (b < 3 * Int(e) + 2) throw ConfigError("presentation requires b >= 3e + 2");

  PresentationShape s;
  s.e = e;
  s.b = b;
  s.r = r;
  s.c1 = c1_target(e, b, r);

  const Int alpha = s.c1.a;
  const Int beta = s.c1.b;
  s.gamma = alpha + beta - Int(r) * (2 + b) - Int(e) * (alpha - 3 * r);
  s.delta = beta - Int(r) * (b - 1) - Int(e) * (alpha - 3 * r);
  s.tau = alpha - 2 * Int(r);

  // Parity closed forms must reproduce the general route.
  Int g2, d2, t2;
  if (r % 2 == 0) {
    g2 = exact_div((b - 2 * Int(e) + 1) * r, 2);
    d2 = exact_div((b - 2 * Int(e)) * r, 2);
    t2 = exact_div(Int(3) * r, 2);
  } else {
    g2 = exact_div((b - 2 * Int(e) + 1) * r - b + 3, 2);
    d2 = exact_div(Int(r - 1) * b, 2) - Int(e) * r;
    t2 = exact_div(Int(3) * (r + 1), 2);
  }
  if (s.gamma != g2 || s.delta != d2 || s.tau != t2)
    throw std::logic_error("presentation_shape: closed forms disagree with general route");
  if (s.delta + s.tau - s.gamma != r)
    throw std::logic_error("presentation_shape: rank identity delta + tau - gamma = r failed");
  if (s.gamma <= 0 || s.delta <= 0 || s.tau <= 0)
    throw std::logic_error("presentation_shape: nonpositive multiplicity");

  s.block_a = {e, 2, b - e - 1};
  s.block_b_top = {e, 2, b - e};
  s.block_b_bot = {e, 3, b - 1};
  return s;
}

Int c2_of_coker(const PresentationShape& s) {
  const DivisorClass& a = s.block_a;
  const DivisorClass& u = s.block_b_top;
  const DivisorClass& v = s.block_b_bot;
  const Int c2a = exact_div(s.gamma * (s.gamma - 1), 2) * intersect(a, a);
  const Int c2b = exact_div(s.delta * (s.delta - 1), 2) * intersect(u, u) +
                  exact_div(s.tau * (s.tau - 1), 2) * intersect(v, v) +
                  s.delta * s.tau * intersect(u, v);
  const DivisorClass c1a = s.gamma * a;
  return c2b - c2a - intersect(c1a, s.c1);
}

}  // namespace ulrich
