#ifndef ULRICH_BASICS_HPP
#define ULRICH_BASICS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ulrich {

// All bookkeeping integers are arbitrary precision; overflow is not a failure mode.
using Int = mpz_class;
using Rat = mpq_class;

// Violation of the (e,b,k) admissibility inequalities or other rejected run parameters.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Divisor classes living on different Hirzebruch surfaces were combined.
struct SurfaceMismatch : std::invalid_argument {
  SurfaceMismatch() : std::invalid_argument("surface mismatch") {}
};

// The requested value is outside what the engine can decide exactly.
struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline long to_long(const Int& n, const char* what) {
  if (!n.fits_slong_p()) throw std::overflow_error(std::string(what) + " does not fit in long");
  return n.get_si();
}

inline std::size_t to_size(const Int& n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + " is negative");
  if (!n.fits_ulong_p()) throw std::overflow_error(std::string(what) + " does not fit in size_t");
  return static_cast<std::size_t>(n.get_ui());
}

inline Int exact_div(const Int& num, const Int& den) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("exact_div: division is not exact");
  return q;
}

}  // namespace ulrich

#endif
