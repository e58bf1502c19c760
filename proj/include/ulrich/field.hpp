#ifndef ULRICH_FIELD_HPP
#define ULRICH_FIELD_HPP

#include <cstdint>
#include <string>

#include "ulrich/basics.hpp"
#include "ulrich/rng.hpp"

namespace ulrich {

bool is_prime_u32(std::uint32_t n);

// Runtime selection of the coefficient field: "q" or "fp:<prime>".
struct FieldSpec {
  enum class Kind { rationals, prime };
  Kind kind = Kind::prime;
  std::uint32_t p = 32003;

  static FieldSpec parse(const std::string& text);
  std::string name() const;
};

// Z/p for an odd prime p < 2^31. Elements are residues in [0,p) stored as uint64_t.
class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime_u32(p)) throw ConfigError("field modulus " + std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw ConfigError("field modulus must be below 2^31");
  }

  std::uint64_t modulus() const { return p_; }
  std::string name() const { return "fp:" + std::to_string(p_); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem x) const { return x == 0; }
  Elem add(Elem x, Elem y) const { Elem s = x + y; return s >= p_ ? s - p_ : s; }
  Elem sub(Elem x, Elem y) const { return x >= y ? x - y : x + p_ - y; }
  Elem neg(Elem x) const { return x == 0 ? 0 : p_ - x; }
  Elem mul(Elem x, Elem y) const { return (x * y) % p_; }  // p < 2^31 keeps x*y < 2^62

  Elem inv(Elem x) const {
    if (x == 0) throw std::domain_error("inverse of zero");
    Elem r = 1, base = x;
    std::uint64_t k = p_ - 2;
    while (k) {
      if (k & 1) r = mul(r, base);
      base = mul(base, base);
      k >>= 1;
    }
    return r;
  }

  Elem from_int(const Int& n) const {
    Int r = n % Int(static_cast<unsigned long>(p_));
    if (r < 0) r += static_cast<unsigned long>(p_);
    return r.get_ui();
  }

  // Coefficient draws are uniform on [0,p); point coordinates uniform on [1,p).
  Elem sample(Rng& rng) const { return rng.below(p_); }
  Elem sample_nonzero(Rng& rng) const { return 1 + rng.below(p_ - 1); }

  static constexpr bool is_rational = false;

 private:
  std::uint64_t p_;
};

// Exact rationals backed by GMP.
class RationalField {
 public:
  using Elem = Rat;

  std::string name() const { return "q"; }

  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  bool is_zero(const Elem& x) const { return x == 0; }
  Elem add(const Elem& x, const Elem& y) const { return x + y; }
  Elem sub(const Elem& x, const Elem& y) const { return x - y; }
  Elem neg(const Elem& x) const { return -x; }
  Elem mul(const Elem& x, const Elem& y) const { return x * y; }
  Elem inv(const Elem& x) const {
    if (x == 0) throw std::domain_error("inverse of zero");
    return 1 / x;
  }
  Elem from_int(const Int& n) const { return Rat(n); }

  // Coefficient draws are uniform integers in [-10,10]; point coordinates avoid zero.
  Elem sample(Rng& rng) const { return Rat(rng.int_in(-10, 10)); }
  Elem sample_nonzero(Rng& rng) const {
    long v = static_cast<long>(rng.int_in(-10, 9));
    if (v >= 0) ++v;
    return Rat(v);
  }

  static constexpr bool is_rational = true;
};

}  // namespace ulrich

#endif
