#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tautrank/models.hpp"
#include "tautrank/oracle.hpp"

using namespace tautrank;
using oracle::count_a;
using oracle::count_a_total;
using oracle::grassmann_betti;
using oracle::hilbert_g2n;
using oracle::nu;
using oracle::primitive_middle;

TEST_CASE("frozen rank formula values") {
  CHECK(nu(1) == 1);
  CHECK(nu(2) == 2);
  CHECK(nu(3) == 21);
  CHECK(nu(4) == 204);
  CHECK(nu(5) == 2605);
}

TEST_CASE("exponent-vector count identity: sum over divisible s equals nu") {
  for (int n = 1; n <= 8; ++n) CHECK(count_a_total(n) == nu(n));
}

TEST_CASE("count_a sums to n^(n+1) over all s") {
  for (int n = 1; n <= 6; ++n) {
    Int total = 0;
    for (int s = 0; s <= n * (n + 1); ++s) total += count_a(n, s);
    Int expected = 1;
    for (int i = 0; i <= n; ++i) expected *= n;
    CHECK(total == expected);
  }
}

TEST_CASE("count_a is symmetric about the middle degree") {
  // Replacing every k_i by n-1-k_i maps weight s to n(n+1)/... total - s.
  for (int n = 2; n <= 6; ++n) {
    int top = (n - 1) * (n + 1);
    for (int s = 0; s <= top; ++s) CHECK(count_a(n, s) == count_a(n, top - s));
  }
}

TEST_CASE("Grassmannian Betti numbers for 2-planes") {
  // G(2,4): Poincaré polynomial 1 + q^2 + 2 q^4 + q^6 + q^8.
  CHECK(grassmann_betti(4, 0) == 1);
  CHECK(grassmann_betti(4, 2) == 1);
  CHECK(grassmann_betti(4, 4) == 2);
  CHECK(grassmann_betti(4, 6) == 1);
  CHECK(grassmann_betti(4, 8) == 1);
  CHECK(grassmann_betti(4, 1) == 0);
  CHECK(grassmann_betti(4, 10) == 0);
  // G(2,3) = P^2.
  for (int k = 0; k <= 4; k += 2) CHECK(grassmann_betti(3, k) == 1);
  // Total must be the Euler characteristic C(N,2).
  for (int N = 3; N <= 7; ++N) {
    long long total = 0;
    for (int k = 0; k <= 4 * (N - 2); ++k) total += grassmann_betti(N, k);
    CHECK(total == N * (N - 1) / 2);
  }
}

TEST_CASE("primitive middle cohomology dimension") {
  CHECK(primitive_middle(4) == 1);  // b_4 - b_2 = 2 - 1
  CHECK(primitive_middle(3) == 0);  // G(2,3) = P^2: no primitive middle part
  CHECK(primitive_middle(5) == 0);  // b_6 - b_4 = 2 - 2
  CHECK(primitive_middle(6) == 1);  // b_8 - b_6 = 3 - 2
  CHECK(primitive_middle(7) == 0);
}

TEST_CASE("frozen Hilbert function values") {
  CHECK(hilbert_g2n(4, 0) == 1);
  CHECK(hilbert_g2n(4, 1) == 6);
  CHECK(hilbert_g2n(4, 2) == 20);
  CHECK(hilbert_g2n(5, 0) == 1);
  CHECK(hilbert_g2n(5, 1) == 10);
  CHECK(hilbert_g2n(6, 1) == 15);
}

TEST_CASE("Hilbert function satisfies the quadric quotient recursion at N=4") {
  // One quadric in 6 variables: h(d) = C(d+5,5) - C(d+3,5).
  auto binom = [](long long a, long long b) {
    if (b < 0 || b > a) return 0LL;
    long long r = 1;
    for (long long i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  for (int d = 0; d <= 6; ++d)
    CHECK(hilbert_g2n(4, d) == binom(d + 5, 5) - binom(d + 3, 5));
}

TEST_CASE("completeness predicate") {
  for (int n = 1; n <= 4; ++n) CHECK(oracle::is_complete(Model::pn(n)));
  CHECK_FALSE(oracle::is_complete(Model::g2n(4)));
  CHECK(oracle::is_complete(Model::g2n(5)));
  CHECK_FALSE(oracle::is_complete(Model::g2n(6)));
}

TEST_CASE("closed-form predictions") {
  auto p2 = oracle::predict(Model::pn(2));
  REQUIRE(p2.period_rank.has_value());
  REQUIRE(p2.solution_rank.has_value());
  CHECK(*p2.period_rank == 2);
  CHECK(*p2.solution_rank == 2);
  CHECK(p2.complete);

  auto p3 = oracle::predict(Model::pn(3));
  CHECK(*p3.solution_rank == 21);

  auto g4 = oracle::predict(Model::g2n(4));
  CHECK_FALSE(g4.solution_rank.has_value());
  CHECK_FALSE(g4.complete);
}
