#include <doctest.h>

#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "heisenhom/algebra.hpp"
#include "heisenhom/errors.hpp"
#include "heisenhom/linalg.hpp"
#include "oracle.hpp"

using namespace heisenhom;

TEST_CASE("rank of trivial matrices") {
  CHECK(rank(DenseMatrixGFp(FieldChar(5), 4, 7)) == 0);
  CHECK(rank_gf2(BitMatrix(4, 7)) == 0);
  CHECK(rank(DenseMatrixGFp(FieldChar(5), 0, 3)) == 0);
  CHECK(rank_gf2(BitMatrix(3, 0)) == 0);

  DenseMatrixGFp id(FieldChar(7), 9, 9);
  BitMatrix bid(130, 130);
  for (std::size_t i = 0; i < 9; ++i) id.set(i, i, 1);
  for (std::size_t i = 0; i < 130; ++i) bid.set(i, i, true);
  CHECK(rank(id) == 9);
  CHECK(rank_gf2(bid) == 130);
}

TEST_CASE("rank is computed on a copy") {
  BitMatrix m(2, 2);
  m.set(0, 0, true);
  m.set(1, 0, true);
  CHECK(rank_gf2(m) == 1);
  CHECK(m.get(1, 0));
}

TEST_CASE("packed GF(2) rank agrees with dense rank and the oracle") {
  std::mt19937_64 rng(20240611);
  const FieldChar f2(2);
  for (int trial = 0; trial < 1200; ++trial) {
    const std::size_t rows = rng() % 129;
    const std::size_t cols = rng() % 129;
    // Vary density so low-rank and full-rank cases both appear.
    const unsigned density = 1 + static_cast<unsigned>(rng() % 8);
    BitMatrix bits(rows, cols);
    DenseMatrixGFp dense(f2, rows, cols);
    std::vector<std::vector<std::int64_t>> plain(rows, std::vector<std::int64_t>(cols, 0));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (rng() % 16 < density) {
          bits.set(r, c, true);
          dense.set(r, c, 1);
          plain[r][c] = 1;
        }
      }
    }
    const auto expected = rank(dense);
    CHECK(rank_gf2(bits) == expected);
    if (trial % 10 == 0) CHECK(oracle::rank_mod(plain, 2) == expected);
  }
}

TEST_CASE("dense rank over odd primes agrees with the oracle") {
  std::mt19937_64 rng(99);
  for (std::uint32_t p : {3u, 5u, 1009u}) {
    const FieldChar f(p);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t rows = 1 + rng() % 24;
      const std::size_t cols = 1 + rng() % 24;
      DenseMatrixGFp m(f, rows, cols);
      std::vector<std::vector<std::int64_t>> plain(rows, std::vector<std::int64_t>(cols, 0));
      // Low-rank products make the test meaningful beyond generic full rank.
      const std::size_t inner = 1 + rng() % 12;
      std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(inner));
      std::vector<std::vector<std::int64_t>> b(inner, std::vector<std::int64_t>(cols));
      for (auto& row : a) for (auto& x : row) x = static_cast<std::int64_t>(rng() % p);
      for (auto& row : b) for (auto& x : row) x = static_cast<std::int64_t>(rng() % p);
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          std::int64_t s = 0;
          for (std::size_t k = 0; k < inner; ++k) s = (s + a[r][k] * b[k][c]) % p;
          m.set(r, c, s);
          plain[r][c] = s;
        }
      }
      CHECK(rank(m) == oracle::rank_mod(plain, p));
      CHECK(rank(m) <= inner);
    }
  }
}

TEST_CASE("rank is invariant under row and column permutations") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 1 + rng() % 40;
    const std::size_t cols = 1 + rng() % 40;
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() % 3 == 0);
    std::vector<std::size_t> rp(rows), cp(cols);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    BitMatrix shuffled(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) shuffled.set(rp[r], cp[c], m.get(r, c));
    CHECK(rank_gf2(shuffled) == rank_gf2(m));
  }
}

TEST_CASE("boundary map ranks: graded blocks agree with the full matrix") {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto h = heisenberg_algebra(n);
    for (std::uint32_t p : {2u, 3u, 7u}) {
      for (int k = 1; k <= static_cast<int>(h.dim()); ++k) {
        const auto map = boundary_matrix(h, k, FieldChar(p));
        CHECK(differential_rank(h, k, FieldChar(p)) == rank(map));
      }
    }
  }
  CHECK_THROWS_AS(to_bits(boundary_matrix(heisenberg_algebra(1), 2, FieldChar(3))), Error);
}

TEST_CASE("ungraded algebras take the single-block path") {
  const auto filiform = make_lie_algebra(
      5, {{0, 1, {{2, 1}}}, {0, 2, {{3, 1}}}, {0, 3, {{4, 1}}}, {1, 2, {{4, 1}}}});
  oracle::Brackets br{{{0, 1}, {{2, 1}}}, {{0, 2}, {{3, 1}}}, {{0, 3}, {{4, 1}}}, {{1, 2}, {{4, 1}}}};
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto got = betti_numbers(filiform, FieldChar(p));
    const auto want = oracle::betti(br, 5, p);
    CHECK(got == want);
  }
}

TEST_CASE("Heisenberg Betti numbers match frozen values") {
  for (std::size_t n = 0; n < fixtures::kBettiChar2.size(); ++n) {
    CAPTURE(n);
    CHECK(betti_numbers(heisenberg_algebra(n), FieldChar(2)) == fixtures::kBettiChar2[n]);
  }
  for (std::size_t n = 0; n < fixtures::kBettiChar1009.size(); ++n) {
    CAPTURE(n);
    CHECK(betti_numbers(heisenberg_algebra(n), FieldChar(1009)) == fixtures::kBettiChar1009[n]);
  }
  CHECK(betti_numbers(heisenberg_algebra(5), FieldChar(3)) == fixtures::kBettiChar3N5);
}

TEST_CASE("Heisenberg Betti numbers match the oracle directly") {
  for (int n = 0; n <= 3; ++n) {
    for (std::int64_t p : {2, 3, 1009}) {
      CAPTURE(n);
      CAPTURE(p);
      const auto want = oracle::betti(oracle::heisenberg_brackets(n), 2 * n + 1, p);
      CHECK(betti_numbers(heisenberg_algebra(static_cast<std::size_t>(n)),
                          FieldChar(static_cast<std::uint32_t>(p))) == want);
    }
  }
}

TEST_CASE("Euler characteristic and Poincare duality") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::uint32_t p : {2u, 3u}) {
      const auto b = betti_numbers(heisenberg_algebra(n), FieldChar(p));
      std::int64_t chi = 0;
      for (std::size_t i = 0; i < b.size(); ++i) {
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(b[i]);
      }
      CHECK(chi == 0);
      CHECK(std::equal(b.begin(), b.end(), b.rbegin()));
    }
  }
}

TEST_CASE("rank route respects the dimension cap") {
  CHECK_THROWS_AS(betti_numbers(heisenberg_algebra(4), FieldChar(2), 8), ResourceCap);
  CHECK_NOTHROW(betti_numbers(heisenberg_algebra(4), FieldChar(2), 9));
  CHECK_THROWS_AS(betti_numbers(heisenberg_algebra(15), FieldChar(2)), ResourceCap);
}
