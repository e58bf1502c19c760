#include <doctest.h>

#include "ulrich/matrix.hpp"
#include "ulrich/rng.hpp"

using namespace ulrich;

namespace {

// Textbook fractional Gaussian elimination; the oracle for the Bareiss path.
std::size_t naive_rational_rank(Dense<RationalField> m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
    const Rat inv = 1 / m.at(rank, col);
    for (std::size_t j = col; j < m.cols; ++j) m.at(rank, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == rank || m.at(i, col) == 0) continue;
      const Rat factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= factor * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

template <class F>
Dense<F> random_matrix(const F& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Dense<F> m(rows, cols);
  for (auto& v : m.a) v = f.sample(rng);
  return m;
}

// rank(A*B) = inner for random A, B with small inner dimension.
template <class F>
Dense<F> random_product(const F& f, std::size_t rows, std::size_t inner, std::size_t cols,
                        Rng& rng) {
  return matmul(f, random_matrix(f, rows, inner, rng), random_matrix(f, inner, cols, rng));
}

}  // namespace

TEST_SUITE("matrix") {
  TEST_CASE("frozen ranks over a prime field") {
    const PrimeField f(32003);
    Dense<PrimeField> id(4, 4);
    for (std::size_t i = 0; i < 4; ++i) id.at(i, i) = 1;
    CHECK(rank(f, id) == 4);
    CHECK(rank(f, Dense<PrimeField>(3, 7)) == 0);
    Dense<PrimeField> twice(2, 3);
    for (std::size_t j = 0; j < 3; ++j) {
      twice.at(0, j) = j + 1;
      twice.at(1, j) = f.mul(2, j + 1);
    }
    CHECK(rank(f, twice) == 1);
  }

  TEST_CASE("product rank equals inner dimension in both fields") {
    const PrimeField fp(32003);
    const RationalField fq;
    Rng rng(2024);
    for (int trial = 0; trial < 4; ++trial) {
      auto mp = random_product(fp, 12, 5, 14, rng);
      CHECK(rank(fp, mp) == 5);
      auto mq = random_product(fq, 9, 4, 11, rng);
      CHECK(rank(fq, mq) == 4);
    }
  }

  TEST_CASE("rank is transpose-invariant") {
    const PrimeField fp(32003);
    const RationalField fq;
    Rng rng(5);
    for (int trial = 0; trial < 4; ++trial) {
      const auto mp = random_product(fp, 10, 3, 8, rng);
      CHECK(rank(fp, mp) == rank(fp, transpose(mp)));
      const auto mq = random_product(fq, 7, 2, 9, rng);
      CHECK(rank(fq, mq) == rank(fq, transpose(mq)));
    }
  }

  TEST_CASE("Bareiss agrees with naive fractional elimination") {
    const RationalField fq;
    Rng rng(31337);
    for (int trial = 0; trial < 12; ++trial) {
      Dense<RationalField> m(8, 10);
      for (auto& v : m.a) {
        // numerators in [-10,10], denominators in [1,5]
        v = Rat(rng.int_in(-10, 10), rng.int_in(1, 5));
        v.canonicalize();
      }
      REQUIRE(rank(fq, m) == naive_rational_rank(m));
    }
  }

  TEST_CASE("generic-modulus path agrees with the small-modulus path") {
    // 65537 >= 2^15 exercises the per-step reduction branch; 101 the batched one.
    const PrimeField big(65537);
    const PrimeField small(101);
    Rng rng(8);
    for (int trial = 0; trial < 4; ++trial) {
      Dense<PrimeField> a(9, 4), b(4, 9);
      for (auto& v : a.a) v = rng.below(100);
      for (auto& v : b.a) v = rng.below(100);
      // Same integer entries reduce to the same matrices in either field.
      CHECK(rank(big, matmul(big, a, b)) == 4);
      CHECK(rank(small, matmul(small, a, b)) == 4);
    }
  }

  TEST_CASE("characteristic matters: diag(p)") {
    const std::uint32_t p = 32003;
    const PrimeField fp(p);
    const RationalField fq;
    Dense<PrimeField> dp(3, 3);
    Dense<RationalField> dq(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      dp.at(i, i) = fp.from_int(Int(p));
      dq.at(i, i) = Rat(p);
    }
    CHECK(rank(fp, dp) == 0);
    CHECK(rank(fq, dq) == 3);
  }

  TEST_CASE("modular rank never exceeds the rational rank") {
    const PrimeField fp(101);
    const RationalField fq;
    Rng rng(77);
    for (int trial = 0; trial < 8; ++trial) {
      Dense<RationalField> mq(6, 7);
      Dense<PrimeField> mp(6, 7);
      for (std::size_t i = 0; i < mq.a.size(); ++i) {
        const long v = static_cast<long>(rng.int_in(-30, 30));
        mq.a[i] = Rat(v);
        mp.a[i] = fp.from_int(Int(v));
      }
      REQUIRE(rank(fp, mp) <= rank(fq, mq));
    }
  }

  TEST_CASE("rank profile") {
    const PrimeField f(32003);
    Rng rng(3);
    const auto m = random_product(f, 9, 4, 6, rng);
    const RankProfile p = rank_profile(f, m);
    CHECK(p.rank == 4);
    CHECK(p.kernel_dim == 2);
    CHECK(p.cokernel_dim == 5);
  }

  TEST_CASE("field spec parsing") {
    CHECK(FieldSpec::parse("q").kind == FieldSpec::Kind::rationals);
    const FieldSpec fp = FieldSpec::parse("fp:32003");
    CHECK(fp.kind == FieldSpec::Kind::prime);
    CHECK(fp.p == 32003);
    CHECK(FieldSpec::parse("fp:32003").name() == "fp:32003");
    CHECK_THROWS_AS(FieldSpec::parse("fp:15"), ConfigError);   // composite
    CHECK_THROWS_AS(FieldSpec::parse("gf:7"), ConfigError);
    CHECK_THROWS_AS(FieldSpec::parse(""), ConfigError);
    CHECK_THROWS_AS(PrimeField(4), ConfigError);
  }

  TEST_CASE("prime field arithmetic") {
    const PrimeField f(101);
    for (std::uint64_t x = 1; x < 101; ++x) {
      REQUIRE(f.mul(x, f.inv(x)) == 1);
      REQUIRE(f.add(x, f.neg(x)) == 0);
    }
    CHECK(f.from_int(Int(-1)) == 100);
    CHECK(f.from_int(Int(202)) == 0);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
  }

  TEST_CASE("seed derivation separates streams") {
    const std::uint64_t a = derive_seed(42, 0);
    const std::uint64_t b = derive_seed(42, 1);
    const std::uint64_t c = derive_seed(43, 0);
    CHECK(a != b);
    CHECK(a != c);
    CHECK(derive_seed(42, 0) == a);
  }
}
