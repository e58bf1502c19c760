#include "ulrich/cox.hpp"

namespace ulrich {

std::vector<Monomial> monomial_basis(const DivisorClass& d) {
  std::vector<Monomial> basis;
  if (d.a < 0) return basis;
  const long a = to_long(d.a, "divisor a-coefficient");
  for (long q = 0; q <= a; ++q) {
    const Int rest = d.b - Int(d.e) * q;
    if (rest < 0) continue;
    const long k = to_long(rest, "t-degree");
    for (long k1 = 0; k1 <= k; ++k1) basis.push_back({a - q, q, k - k1, k1});
  }
  return basis;
}

}  // namespace ulrich
