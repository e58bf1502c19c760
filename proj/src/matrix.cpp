#include "ulrich/matrix.hpp"

#include <algorithm>
#include <utility>

namespace ulrich {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::parse(const std::string& text) {
  FieldSpec spec;
  if (text == "q" || text == "Q") {
    spec.kind = Kind::rationals;
    return spec;
  }
  if (text.rfind("fp:", 0) == 0) {
    spec.kind = Kind::prime;
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ConfigError("bad field spec '" + text + "': expected q or fp:<prime>");
    unsigned long value = std::stoul(digits);
    if (value >= (1ul << 31)) throw ConfigError("field modulus must be below 2^31");
    spec.p = static_cast<std::uint32_t>(value);
    if (!is_prime_u32(spec.p))
      throw ConfigError("field modulus " + digits + " is not prime");
    return spec;
  }
  throw ConfigError("bad field spec '" + text + "': expected q or fp:<prime>");
}

std::string FieldSpec::name() const {
  return kind == Kind::rationals ? "q" : "fp:" + std::to_string(p);
}

namespace {

// Delayed-reduction elimination; requires p < 2^15 and min(rows,cols) < 2^20
// so that unreduced accumulators never exceed 2^15 + 2^30 * 2^20 < 2^51.
std::size_t fp_rank_small_prime(const PrimeField& f, Dense<PrimeField>& m) {
  const std::uint64_t p = f.modulus();
  const std::size_t rows = m.rows, cols = m.cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    for (; piv < rows; ++piv) {
      m.at(piv, col) %= p;
      if (m.at(piv, col) != 0) break;
    }
    if (piv == rows) continue;
    if (piv != rank)
      std::swap_ranges(m.a.begin() + piv * cols + col, m.a.begin() + (piv + 1) * cols,
                       m.a.begin() + rank * cols + col);
    std::uint64_t* pivot_row = &m.a[rank * cols];
    for (std::size_t j = col; j < cols; ++j) pivot_row[j] %= p;
    const std::uint64_t scale = f.inv(pivot_row[col]);
    for (std::size_t j = col; j < cols; ++j) pivot_row[j] = (pivot_row[j] * scale) % p;
    for (std::size_t i = rank + 1; i < rows; ++i) {
      std::uint64_t* row = &m.a[i * cols];
      const std::uint64_t mult = row[col] % p;
      if (mult == 0) {
        row[col] = 0;
        continue;
      }
      const std::uint64_t mneg = p - mult;
      for (std::size_t j = col + 1; j < cols; ++j) row[j] += mneg * pivot_row[j];
      row[col] = 0;
    }
    ++rank;
  }
  return rank;
}

// Fallback for primes >= 2^15: reduce every update through 128-bit arithmetic.
std::size_t fp_rank_generic(const PrimeField& f, Dense<PrimeField>& m) {
  const std::uint64_t p = f.modulus();
  const std::size_t rows = m.rows, cols = m.cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m.at(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      std::swap_ranges(m.a.begin() + piv * cols + col, m.a.begin() + (piv + 1) * cols,
                       m.a.begin() + rank * cols + col);
    std::uint64_t* pivot_row = &m.a[rank * cols];
    const std::uint64_t scale = f.inv(pivot_row[col]);
    for (std::size_t j = col; j < cols; ++j)
      pivot_row[j] = static_cast<std::uint64_t>((static_cast<unsigned __int128>(pivot_row[j]) * scale) % p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      std::uint64_t* row = &m.a[i * cols];
      const std::uint64_t mult = row[col];
      if (mult == 0) continue;
      const std::uint64_t mneg = p - mult;
      for (std::size_t j = col; j < cols; ++j) {
        unsigned __int128 v = row[j];
        v += static_cast<unsigned __int128>(mneg) * pivot_row[j];
        row[j] = static_cast<std::uint64_t>(v % p);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(const PrimeField& f, Dense<PrimeField> m) {
  if (std::min(m.rows, m.cols) >= (1u << 20))
    throw Unsupported("matrix too large for exact rank");
  if (f.modulus() < (1u << 15)) return fp_rank_small_prime(f, m);
  return fp_rank_generic(f, m);
}

std::size_t rank(const RationalField&, Dense<RationalField> m) {
  const std::size_t rows = m.rows, cols = m.cols;

  // Row-scale to integers; scaling by the denominator lcm preserves rank.
  std::vector<Int> z(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    Int lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      const Int den = m.at(i, j).get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      Rat v = m.at(i, j) * Rat(lcm);
      v.canonicalize();
      z[i * cols + j] = v.get_num();
    }
  }

  std::vector<std::size_t> colperm(cols);
  for (std::size_t j = 0; j < cols; ++j) colperm[j] = j;
  auto at = [&](std::size_t i, std::size_t j) -> Int& { return z[i * cols + colperm[j]]; };

  Int prev = 1;
  std::size_t rank = 0;
  for (std::size_t step = 0; rank < rows && step < cols; ++step) {
    // Pivot search over the remaining block; prefer the current column, then later ones.
    std::size_t pr = rows, pc = cols;
    for (std::size_t j = step; j < cols && pr == rows; ++j)
      for (std::size_t i = rank; i < rows; ++i)
        if (at(i, j) != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;
    if (pc != step) std::swap(colperm[step], colperm[pc]);
    if (pr != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(rank, j), at(pr, j));

    const Int& pivot = at(rank, step);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Int head = at(i, step);
      for (std::size_t j = step + 1; j < cols; ++j) {
        Int v = at(i, j) * pivot - head * at(rank, j);
        at(i, j) = exact_div(v, prev);
      }
      at(i, step) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

}  // namespace ulrich
