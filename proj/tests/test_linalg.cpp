#include <random>

#include "brauer/linalg.hpp"
#include "doctest.h"

using namespace brauer;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Product of elementary matrices; determinant ±1 by construction.
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> k(-3, 3);
  for (int step = 0; step < 12; ++step) {
    std::size_t a = idx(rng), b = idx(rng);
    if (a == b) continue;
    u.add_row_multiple(a, b, k(rng));
    if (step % 5 == 0) u.swap_rows(a, b);
  }
  return u;
}

mpz_class cofactor_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  mpz_class total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c) == 0) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j)
      if (j != c) cols.push_back(j);
    mpz_class minor = cofactor_det(a.select_rows(rows).select_columns(cols));
    total += (c % 2 ? -1 : 1) * a(0, c) * minor;
  }
  return total;
}

bool is_smith_form(const IntMatrix& s) {
  const std::size_t k = std::min(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (i != j && s(i, j) != 0) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (s(i, i) < 0) return false;
    if (i + 1 < k) {
      if (s(i, i) == 0 && s(i + 1, i + 1) != 0) return false;
      if (s(i, i) != 0 && s(i + 1, i + 1) % s(i, i) != 0) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(7);
  for (std::size_t n = 0; n <= 6; ++n)
    for (int t = 0; t < 10; ++t) {
      IntMatrix a = random_matrix(rng, n, n, -5, 5);
      CHECK(determinant(a) == cofactor_det(a));
      CHECK(rational_det(RationalMatrix(a)) == mpq_class(cofactor_det(a)));
    }
  CHECK(determinant(IntMatrix{{2, 4}, {1, 2}}) == 0);
  CHECK_THROWS_AS(rational_det(RationalMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("smith decomposition") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix a = random_matrix(rng, r, c, -6, 6);
    if (t % 4 == 0) a = a * random_matrix(rng, c, c, 0, 0);  // zero matrix
    SmithDecomposition sd = smith(a);
    CHECK(sd.u * a * sd.v == sd.s);
    CHECK(is_smith_form(sd.s));
    CHECK(abs(determinant(sd.u)) == 1);
    CHECK(abs(determinant(sd.v)) == 1);
    CHECK(smith_diagonal(a) == sd.diagonal());
    CHECK(rank(a) == sd.rank());
  }
  IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto d = smith_diagonal(a);
  CHECK(d == std::vector<mpz_class>{2, 6, 12});
}

TEST_CASE("smith form is invariant under unimodular change of basis") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 25; ++t) {
    std::size_t r = 2 + rng() % 4, c = 2 + rng() % 4;
    IntMatrix a = random_matrix(rng, r, c, -4, 4);
    IntMatrix b = random_unimodular(rng, r) * a * random_unimodular(rng, c);
    CHECK(smith_diagonal(a) == smith_diagonal(b));
    CHECK(cokernel_invariants(a) == cokernel_invariants(b));
  }
}

TEST_CASE("kernel basis is saturated and exact") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 6;
    IntMatrix a = random_matrix(rng, r, c, -3, 3);
    IntMatrix k = kernel_basis(a);
    CHECK(k.rows() == c);
    CHECK(k.cols() == c - rank(a));
    CHECK((a * k).is_zero());
    // saturated: Z^c / im k is torsion free
    for (const auto& d : cokernel_invariants(k)) CHECK(d == 0);
    CHECK(column_hnf(k) == k);
  }
  IntMatrix a{{2, 4}};
  IntMatrix k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  CHECK(abs(k(0, 0)) == 2);
  CHECK(abs(k(1, 0)) == 1);
}

TEST_CASE("cokernel invariants") {
  CHECK(cokernel_invariants(IntMatrix{{2, 0}, {0, 3}}) == std::vector<mpz_class>{6});
  CHECK(cokernel_invariants(IntMatrix{{2}, {0}}) == std::vector<mpz_class>{2, 0});
  CHECK(cokernel_invariants(IntMatrix(2, 0)) == std::vector<mpz_class>{0, 0});
  CHECK(cokernel_invariants(IntMatrix{{1, 0}, {0, 1}}).empty());
}

TEST_CASE("column hermite form depends only on the lattice") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 25; ++t) {
    std::size_t r = 2 + rng() % 3, c = 1 + rng() % 4;
    IntMatrix a = random_matrix(rng, r, c, -5, 5);
    IntMatrix h = column_hnf(a);
    CHECK(column_hnf(a * random_unimodular(rng, c)) == h);
    CHECK(column_hnf(h) == h);
    CHECK(h.cols() == rank(a));
    ImageLattice lat(a);
    CHECK(lat.contains_columns(h));
    ImageLattice lh(h);
    CHECK(lh.contains_columns(a));
  }
}

TEST_CASE("integer solve") {
  IntMatrix b{{2, 0}, {0, 3}, {1, 1}};
  auto x = solve_integer(b, IntMatrix{{4}, {-3}, {1}});
  REQUIRE(x);
  CHECK(*x == IntMatrix{{2}, {-1}});
  CHECK_FALSE(solve_integer(b, IntMatrix{{1}, {0}, {0}}));
  CHECK_FALSE(solve_integer(b, IntMatrix{{2}, {3}, {0}}));
  CHECK_THROWS_AS(solve_integer(IntMatrix{{1, 2}, {2, 4}}, IntMatrix{{1}, {2}}), std::invalid_argument);
  auto empty = solve_integer(IntMatrix(3, 0), IntMatrix(3, 2));
  REQUIRE(empty);
  CHECK(empty->rows() == 0);
}

TEST_CASE("rational helpers") {
  CHECK(rational_power(mpq_class(2, 3), -2) == mpq_class(9, 4));
  CHECK(rational_power(mpq_class(5), 0) == 1);
  CHECK_THROWS(rational_power(mpq_class(0), -1));
  CHECK(to_string(mpq_class(-3, 6)) == "-1/2");
  CHECK(to_string(mpq_class(4)) == "4");
}
