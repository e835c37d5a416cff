#include <doctest.h>

#include <random>

#include "dzeta/linalg.hpp"
#include "dzeta/matrices.hpp"

using namespace dzeta;

namespace {

RatMatrix random_matrix(std::mt19937& rng, Index rows, Index cols) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  RatMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = make_rat(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("rref: identity stays put") {
  const RatMatrix m = RatMatrix::Identity(3, 3);
  const RrefResult r = rref(m);
  CHECK(r.rank == 3);
  CHECK(matrices_equal<Rat>(r.reduced, m));
  CHECK(r.pivot_columns == std::vector<Index>{0, 1, 2});
}

TEST_CASE("rref: dependent rows are eliminated") {
  RatMatrix m(3, 3);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(0, 2) = 3;
  m.row(1) = m.row(0) * Rat(2);
  m(2, 0) = 1;
  m(2, 1) = 0;
  m(2, 2) = 1;
  const RrefResult r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.pivot_columns == std::vector<Index>{0, 1});
  for (Index j = 0; j < 3; ++j) CHECK(r.reduced(2, j) == 0);
}

TEST_CASE("rank of the level-1 matrix at weight 12 is 3") {
  CHECK(rref(build_c(1, 12)).rank == 3);
}

TEST_CASE("left kernel: zero, identity, level-1 weight 12") {
  CHECK(left_kernel(RatMatrix::Zero(3, 3)).rows() == 3);
  CHECK(left_kernel(RatMatrix::Identity(4, 4)).rows() == 0);

  const RatMatrix kernel = left_kernel(build_c(1, 12));
  REQUIRE(kernel.rows() == 1);
  // canonical form is scaled to a leading 1, so the row is (1,-3,3,-1)
  CHECK(kernel(0, 0) == 1);
  CHECK(kernel(0, 1) == -3);
  CHECK(kernel(0, 2) == 3);
  CHECK(kernel(0, 3) == -1);
}

TEST_CASE("charpoly: small explicit cases") {
  RatMatrix one(1, 1);
  one(0, 0) = 5;
  CHECK(charpoly(one) == RatPoly{Rat(-5), Rat(1)});

  CHECK(charpoly(RatMatrix::Identity(2, 2)) == RatPoly{Rat(1), Rat(-2), Rat(1)});

  RatMatrix d(1, 1);
  d(0, 0) = make_rat(-15, 16);
  CHECK(charpoly(d) == RatPoly{make_rat(15, 16), Rat(1)});

  CHECK(charpoly(RatMatrix(0, 0)) == RatPoly{Rat(1)});
}

TEST_CASE("eigenspace_left at a known eigenvalue and at a non-eigenvalue") {
  const RatMatrix c = build_c(2, 12);
  CHECK(eigenspace_left(c, make_rat(-2073, 1024)).rows() == 1);
  CHECK(eigenspace_left(c, Rat(0)).rows() == 0);
}

TEST_CASE("property: rank + right kernel dimension = column count") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 20; ++trial) {
    const Index rows = 1 + static_cast<Index>(rng() % 5);
    const Index cols = 1 + static_cast<Index>(rng() % 5);
    const RatMatrix m = random_matrix(rng, rows, cols);
    const RrefResult r = rref(m);
    const RatMatrix kernel = right_kernel(m);
    CHECK(r.rank + kernel.rows() == cols);
    for (Index i = 0; i < kernel.rows(); ++i) {
      const RatMatrix prod = m * kernel.row(i).transpose();
      for (Index j = 0; j < prod.rows(); ++j) CHECK(prod(j, 0) == 0);
    }
  }
}

TEST_CASE("property: left kernel rows annihilate exactly") {
  std::mt19937 rng(7151);
  for (int trial = 0; trial < 20; ++trial) {
    const Index rows = 1 + static_cast<Index>(rng() % 5);
    const Index cols = 1 + static_cast<Index>(rng() % 5);
    const RatMatrix m = random_matrix(rng, rows, cols);
    const RatMatrix kernel = left_kernel(m);
    for (Index i = 0; i < kernel.rows(); ++i) {
      const RatRowVector prod = kernel.row(i) * m;
      for (Index j = 0; j < prod.cols(); ++j) CHECK(prod(j) == 0);
    }
  }
}

TEST_CASE("property: Cayley-Hamilton for random matrices") {
  std::mt19937 rng(90210);
  for (int trial = 0; trial < 8; ++trial) {
    const Index n = 1 + static_cast<Index>(rng() % 5);
    const RatMatrix m = random_matrix(rng, n, n);
    const RatPoly p = charpoly(m);
    RatMatrix acc = RatMatrix::Zero(n, n);
    RatMatrix power = RatMatrix::Identity(n, n);
    for (int i = 0; i <= p.degree(); ++i) {
      acc += power * p[i];
      power = (power * m).eval();
    }
    CHECK(matrices_equal<Rat>(acc, RatMatrix::Zero(n, n)));
  }
}

TEST_CASE("property: rref is idempotent and preserves the row space") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 10; ++trial) {
    const Index rows = 1 + static_cast<Index>(rng() % 4);
    const Index cols = 1 + static_cast<Index>(rng() % 4);
    const RatMatrix m = random_matrix(rng, rows, cols);
    const RrefResult once = rref(m);
    const RrefResult twice = rref(once.reduced);
    CHECK(matrices_equal<Rat>(once.reduced, twice.reduced));
    CHECK(once.rank == twice.rank);
    // same row space: each has rank equal to the rank of the stacked pair
    RatMatrix stacked(2 * rows, cols);
    stacked.topRows(rows) = m;
    stacked.bottomRows(rows) = once.reduced;
    CHECK(rref(stacked).rank == once.rank);
  }
}
