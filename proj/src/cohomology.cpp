#include "ulrich/cohomology.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace ulrich {

namespace {

Int h0_uncached(const DivisorClass& d) {
  if (d.a < 0) return 0;
  const long a = to_long(d.a, "divisor a-coefficient");
  Int total = 0;
  for (long i = 0; i <= a; ++i) {
    Int piece = d.b - Int(d.e) * i + 1;
    if (piece > 0) total += piece;
  }
  return total;
}

}  // namespace

Int h0(const DivisorClass& d) {
  // Cache is an idempotent fill; concurrent callers observe the same values.
  using Key = std::tuple<long, Int, Int>;
  static std::mutex mu;
  static std::map<Key, Int> cache;
  Key key{d.e, d.a, d.b};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Int value = h0_uncached(d);
  cache.emplace(std::move(key), value);
  return value;
}

CohTable line_bundle_cohomology(const DivisorClass& d) {
  CohTable t;
  t.h0 = h0(d);
  t.h2 = h0(canonical_class(d.e) - d);
  t.h1 = t.h0 + t.h2 - euler_char(d);
  if (t.h1 < 0) throw std::logic_error("line_bundle_cohomology: negative h1");
  return t;
}

bool is_ulrich_line_bundle(const DivisorClass& d, const DivisorClass& h) {
  require_same_surface(d, h);
  const DivisorClass t1 = d - h;
  const DivisorClass t2 = t1 - h;
  return line_bundle_cohomology(t1).is_zero() && line_bundle_cohomology(t2).is_zero();
}

std::vector<DivisorClass> search_ulrich_line_bundles(long e, const Int& b, long box) {
  const DivisorClass h{e, 3, b};
  std::vector<DivisorClass> found;
  for (long alpha = -box; alpha <= box; ++alpha) {
    for (long beta = -box; beta <= box; ++beta) {
      DivisorClass d{e, alpha, beta};
      if (is_ulrich_line_bundle(d, h)) found.push_back(d);
    }
  }
  return found;
}

}  // namespace ulrich
