#include "doctest.h"
#include "rng.hpp"
#include "snf.hpp"
#include "support/oracles.hpp"

using namespace morincob;

namespace {

IntMatrix mat(std::size_t r, std::size_t c, std::vector<long long> v) {
  std::vector<Int> entries(v.begin(), v.end());
  return IntMatrix(r, c, std::move(entries));
}

void check_contract(const IntMatrix& a, const SmithResult& s) {
  CHECK(s.u * a * s.v == s.d);
  CHECK(abs_int(s.u.determinant()) == 1);
  CHECK(abs_int(s.v.determinant()) == 1);
  CHECK(s.u * s.u_inv == IntMatrix::identity(a.rows()));
  CHECK(s.v * s.v_inv == IntMatrix::identity(a.cols()));
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) {
    CHECK(s.diag(i) >= 0);
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j && i < s.d.rows() && j < s.d.cols()) CHECK(s.d.at(i, j) == 0);
  }
  for (std::size_t i = 0; i + 1 < std::min(a.rows(), a.cols()); ++i) {
    Int di = s.diag(i), dj = s.diag(i + 1);
    if (di == 0)
      CHECK(dj == 0);
    else
      CHECK(dj % di == 0);
  }
}

IntMatrix random_matrix(SplitMix64& rng, std::size_t maxdim) {
  std::size_t r = 1 + rng.below(maxdim), c = 1 + rng.below(maxdim);
  IntMatrix a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a.at(i, j) = Int(rng.range(-9, 9));
  return a;
}

}  // namespace

TEST_CASE("smith normal form of the identity") {
  IntMatrix a = IntMatrix::identity(2);
  SmithResult s = smith_normal_form(a);
  check_contract(a, s);
  CHECK(s.d == IntMatrix::identity(2));
}

TEST_CASE("smith normal form of [[2,4],[6,8]]") {
  IntMatrix a = mat(2, 2, {2, 4, 6, 8});
  SmithResult s = smith_normal_form(a);
  check_contract(a, s);
  // determinantal-divisor oracle: d1 = gcd of entries = 2, d1*d2 = |det| = 8
  CHECK(s.diag(0) == 2);
  CHECK(s.diag(1) == 4);
  CHECK(testing::determinantal_invariant_factors(a) == std::vector<Int>{Int(2), Int(4)});
}

TEST_CASE("deterministic pivoting reproduces frozen transforms") {
  // The pivot rule (smallest absolute value, then lowest row, then lowest
  // column) makes u and v themselves stable, not just d.
  IntMatrix a = mat(2, 3, {4, -6, 10, 2, 8, -4});
  SmithResult s = smith_normal_form(a);
  check_contract(a, s);
  CHECK(s.u == mat(2, 2, {0, 1, 1, -2}));
  CHECK(s.d == mat(2, 3, {2, 0, 0, 0, 2, 0}));
  CHECK(s.v == mat(3, 3, {1, -6, -14, 0, 4, 9, 0, 5, 11}));
}

TEST_CASE("smith normal form of a zero matrix") {
  IntMatrix a(2, 3);
  SmithResult s = smith_normal_form(a);
  check_contract(a, s);
  CHECK(s.d.is_zero());
}

TEST_CASE("smith normal form contract on random matrices") {
  SplitMix64 rng(0xabcdefull);
  for (int trial = 0; trial < 120; ++trial) {
    IntMatrix a = random_matrix(rng, 5);
    SmithResult s = smith_normal_form(a);
    check_contract(a, s);
    // Independent oracle for the invariant factors.
    std::vector<Int> expect = testing::determinantal_invariant_factors(a);
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) {
      Int want = i < expect.size() ? expect[i] : Int(0);
      CHECK(s.diag(i) == want);
    }
  }
}

TEST_CASE("integer kernel") {
  IntMatrix a = mat(1, 2, {2, 4});
  IntMatrix k = integer_kernel(a);
  REQUIRE(k.cols() == 1);
  CHECK((a * k).is_zero());
  // (2, -1) spans; accept any sign / unimodular scaling of the rank-1 lattice
  CHECK(abs_int(k.at(0, 0)) == 2);
  CHECK(abs_int(k.at(1, 0)) == 1);

  SplitMix64 rng(0x1234ull);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m = random_matrix(rng, 4);
    IntMatrix ker = integer_kernel(m);
    CHECK((m * ker).is_zero());
    CHECK(ker.cols() == m.cols() - smith_normal_form(m).rank());
  }
}

TEST_CASE("lattice membership") {
  IntMatrix lat = mat(2, 2, {2, 0, 0, 3});
  CHECK(lattice_contains(lat, mat(2, 1, {4, 3})));
  CHECK(!lattice_contains(lat, mat(2, 1, {1, 0})));
  CHECK(lattice_contains(lat, mat(2, 1, {0, 0})));
}

TEST_CASE("preimage lattice") {
  // x such that 2x is a multiple of 6: multiples of 3.
  IntMatrix a = mat(1, 1, {2});
  IntMatrix lat = mat(1, 1, {6});
  IntMatrix pre = preimage_lattice(a, lat);
  SmithResult s = smith_normal_form(pre);
  CHECK(s.diag(0) == 3);
}
