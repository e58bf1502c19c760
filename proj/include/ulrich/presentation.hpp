#ifndef ULRICH_PRESENTATION_HPP
#define ULRICH_PRESENTATION_HPP

#include <string>

#include "ulrich/lattice.hpp"

namespace ulrich {

// Scroll datum: X_e = P(E) over F_e where E is an extension of B_e by A_e with
// c1(E) = (3,b) and c2(E) = k, subject to b - e < k < 2b - 4e.
struct ScrollConfig {
  long e = 0;
  Int b = 0;
  Int k = 0;
};

struct ConfigCheck {
  bool valid = false;
  std::string reason;  // names the violated inequality when invalid
};

ConfigCheck validate_config(const ScrollConfig& c);
void require_valid_config(const ScrollConfig& c);  // throws ConfigError

DivisorClass class_a(const ScrollConfig& c);  // (2, 2b - k - 2e)
DivisorClass class_b(const ScrollConfig& c);  // (1, k - b + 2e)
DivisorClass c1_of_bundle(const ScrollConfig& c);  // (3, b)

// Cokernel shape O(2,b-e-1)^gamma -> O(2,b-e)^delta + O(3,b-1)^tau -> H_r.
// Independent of k.
struct PresentationShape {
  long e = 0;
  Int b = 0;
  long r = 0;

  DivisorClass c1;  // (alpha, beta), the target first Chern class of H_r
  Int gamma = 0;
  Int delta = 0;
  Int tau = 0;

  DivisorClass block_a;      // (2, b-e-1)
  DivisorClass block_b_top;  // (2, b-e)
  DivisorClass block_b_bot;  // (3, b-1)
};

// Target c1 of H_r, split by parity of r.
DivisorClass c1_target(long e, const Int& b, long r);

// Computes (gamma, delta, tau) from (alpha, beta) and cross-checks the parity
// closed forms; requires r >= 2 and b >= 3e + 2.
PresentationShape presentation_shape(long e, const Int& b, long r);

// Whitney: c2(H_r) = c2(B) - c2(A) - c1(A).c1(H_r).
Int c2_of_coker(const PresentationShape& s);

}  // namespace ulrich

#endif
