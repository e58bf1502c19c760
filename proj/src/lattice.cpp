#include "ulrich/lattice.hpp"

#include <ostream>

namespace ulrich {

void require_same_surface(const DivisorClass& x, const DivisorClass& y) {
  if (x.e != y.e) throw SurfaceMismatch();
}

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
  require_same_surface(x, y);
  return {x.e, x.a + y.a, x.b + y.b};
}

DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
  require_same_surface(x, y);
  return {x.e, x.a - y.a, x.b - y.b};
}

DivisorClass operator-(const DivisorClass& x) { return {x.e, -x.a, -x.b}; }

DivisorClass operator*(const Int& n, const DivisorClass& x) { return {x.e, n * x.a, n * x.b}; }

Int intersect(const DivisorClass& x, const DivisorClass& y) {
  require_same_surface(x, y);
  return -Int(x.e) * x.a * y.a + x.a * y.b + y.a * x.b;
}

DivisorClass canonical_class(long e) { return {e, -2, -(Int(e) + 2)}; }

Int euler_char(const DivisorClass& d) {
  return (d.a + 1) * (d.b + 1) - exact_div(Int(d.e) * d.a * (d.a + 1), 2);
}

std::ostream& operator<<(std::ostream& os, const DivisorClass& d) {
  return os << "(" << d.a << "," << d.b << ")@F" << d.e;
}

}  // namespace ulrich
