#ifndef ULRICH_LATTICE_HPP
#define ULRICH_LATTICE_HPP

#include <iosfwd>

#include "ulrich/basics.hpp"

namespace ulrich {

// Numerical class a*C + b*f on the Hirzebruch surface F_e, where C is the
// section with C^2 = -e and f the fiber (f^2 = 0, C.f = 1).
struct DivisorClass {
  long e = 0;
  Int a = 0;
  Int b = 0;

  DivisorClass() = default;
  DivisorClass(long e_, Int a_, Int b_) : e(e_), a(std::move(a_)), b(std::move(b_)) {}

  friend bool operator==(const DivisorClass& x, const DivisorClass& y) {
    return x.e == y.e && x.a == y.a && x.b == y.b;
  }
};

void require_same_surface(const DivisorClass& x, const DivisorClass& y);

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator-(const DivisorClass& x);
DivisorClass operator*(const Int& n, const DivisorClass& x);

Int intersect(const DivisorClass& x, const DivisorClass& y);

// K = -2C - (e+2)f
DivisorClass canonical_class(long e);

// chi(O(D)) = (a+1)(b+1) - e*a(a+1)/2, equal to D.(D-K)/2 + 1
Int euler_char(const DivisorClass& d);

std::ostream& operator<<(std::ostream& os, const DivisorClass& d);

}  // namespace ulrich

#endif
