#ifndef ULRICH_MATRIX_HPP
#define ULRICH_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "ulrich/field.hpp"

namespace ulrich {

// Dense row-major matrix over a runtime field.
template <class F>
struct Dense {
  using Elem = typename F::Elem;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> a;

  Dense() = default;
  Dense(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Elem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  // Copies src into this matrix with upper-left corner at (r0, c0).
  void paste(std::size_t r0, std::size_t c0, const Dense& src) {
    for (std::size_t i = 0; i < src.rows; ++i)
      for (std::size_t j = 0; j < src.cols; ++j) at(r0 + i, c0 + j) = src.at(i, j);
  }
};

struct RankProfile {
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;    // cols - rank
  std::size_t cokernel_dim = 0;  // rows - rank
};

// Gaussian elimination over F_p. For p < 2^15 the inner loop adds m*u products
// (each < 2^30) without reducing; accumulators stay below 2^30 * min(rows,cols),
// which is safe for any matrix this engine builds. Larger p reduces per step.
std::size_t rank(const PrimeField& f, Dense<PrimeField> m);

// Fraction-free Bareiss elimination with row and column pivoting; every interior
// division is exact. Rational input is scaled row-wise to integers first.
std::size_t rank(const RationalField& f, Dense<RationalField> m);

template <class F>
RankProfile rank_profile(const F& f, Dense<F> m) {
  const std::size_t r = m.rows;
  const std::size_t c = m.cols;
  RankProfile p;
  p.rank = rank(f, std::move(m));
  p.kernel_dim = c - p.rank;
  p.cokernel_dim = r - p.rank;
  return p;
}

template <class F>
Dense<F> matmul(const F& f, const Dense<F>& x, const Dense<F>& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matmul: shape mismatch");
  Dense<F> z(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const auto& xv = x.at(i, k);
      if (f.is_zero(xv)) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        z.at(i, j) = f.add(z.at(i, j), f.mul(xv, y.at(k, j)));
    }
  return z;
}

template <class F>
Dense<F> transpose(const Dense<F>& m) {
  Dense<F> t(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

inline RankProfile make_profile(std::size_t rows, std::size_t cols, std::size_t rk) {
  return RankProfile{rk, cols - rk, rows - rk};
}

}  // namespace ulrich

#endif
