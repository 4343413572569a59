#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <vector>

#include "tautrank/eliminator.hpp"
#include "tautrank/sparse.hpp"

using namespace tautrank;

namespace {

SparseVec vec(std::initializer_list<std::pair<int, int>> entries) {
  SparseVec v;
  for (auto [i, c] : entries) v.push_back({i, Scalar(c)});
  normalize(v);
  return v;
}

SparseMatrix random_matrix(int rows, int cols, int density_pct,
                           std::mt19937_64& rng) {
  SparseMatrix m(rows, cols);
  std::uniform_int_distribution<int> pct(0, 99), val(-9, 9);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r)
      if (pct(rng) < density_pct) m.add(r, c, Scalar(val(rng)));
  return m;
}

}  // namespace

TEST_CASE("sparse vector normalize merges and drops zeros") {
  SparseVec v{{3, Scalar(2)}, {1, Scalar(5)}, {3, Scalar(-2)}, {0, Scalar(1)}};
  normalize(v);
  REQUIRE(v.size() == 2);
  CHECK(v[0].index == 0);
  CHECK(v[0].value == Scalar(1));
  CHECK(v[1].index == 1);
  CHECK(v[1].value == Scalar(5));
}

TEST_CASE("axpy is exact rational accumulation") {
  SparseVec u = vec({{0, 1}, {2, 3}});
  SparseVec v = vec({{0, 2}, {1, 1}, {2, -6}});
  axpy(u, Scalar(1) / Scalar(2), v);
  REQUIRE(u.size() == 2);
  CHECK(u[0].index == 0);
  CHECK(u[0].value == Scalar(2));
  CHECK(u[1].index == 1);
  CHECK(u[1].value == Scalar(1) / Scalar(2));
}

TEST_CASE("make_primitive extracts content") {
  SparseVec v;
  v.push_back({0, Scalar(2) / Scalar(3)});
  v.push_back({5, Scalar(-4) / Scalar(9)});
  Scalar factor = make_primitive(v);
  CHECK(factor == Scalar(2) / Scalar(9));
  CHECK(v[0].value == Scalar(3));
  CHECK(v[1].value == Scalar(-2));

  SparseVec zero;
  CHECK(make_primitive(zero) == Scalar(1));
}

TEST_CASE("eliminator rank on a hand matrix with dependent columns") {
  // columns: c0, c1, c0+c1, and an independent third direction
  Eliminator e(3);
  CHECK(e.add_column(vec({{0, 1}, {1, 2}})));
  CHECK(e.add_column(vec({{1, 1}, {2, 1}})));
  CHECK_FALSE(e.add_column(vec({{0, 1}, {1, 3}, {2, 1}})));
  CHECK(e.add_column(vec({{0, 0}, {2, 7}})));
  CHECK(e.rank() == 3);
  CHECK(e.columns_seen() == 4);
  CHECK(e.non_pivot_rows().empty());
}

TEST_CASE("eliminator reduce returns zero exactly on span members") {
  Eliminator e(4);
  e.add_column(vec({{0, 1}, {1, 1}}));
  e.add_column(vec({{2, 1}, {3, -1}}));
  CHECK(e.reduce(vec({{0, 2}, {1, 2}, {2, 5}, {3, -5}})).empty());
  CHECK_FALSE(e.reduce(vec({{0, 1}, {1, 2}})).empty());
}

TEST_CASE("express recovers column combinations when tracking") {
  Eliminator e(3, /*track_combos=*/true);
  e.add_column(vec({{0, 1}, {1, 1}}), 10);
  e.add_column(vec({{1, 1}, {2, 1}}), 20);
  auto combo = e.express(vec({{0, 2}, {1, 5}, {2, 3}}));
  REQUIRE(combo.has_value());
  // 2*(col 10) + 3*(col 20)
  REQUIRE(combo->size() == 2);
  CHECK((*combo)[0].index == 10);
  CHECK((*combo)[0].value == Scalar(2));
  CHECK((*combo)[1].index == 20);
  CHECK((*combo)[1].value == Scalar(3));
  CHECK_FALSE(e.express(vec({{0, 1}})).has_value());
}

TEST_CASE("pivot and non-pivot rows partition the row set") {
  std::mt19937_64 rng(7);
  SparseMatrix m = random_matrix(12, 8, 40, rng);
  Eliminator e(12);
  for (int c = 0; c < m.cols(); ++c) e.add_column(m.column(c));
  auto piv = e.pivot_rows();
  auto non = e.non_pivot_rows();
  CHECK(static_cast<int>(piv.size()) == e.rank());
  CHECK(piv.size() + non.size() == 12);
  std::vector<bool> seen(12, false);
  for (int r : piv) seen[r] = true;
  for (int r : non) {
    CHECK_FALSE(seen[r]);
    seen[r] = true;
  }
}

TEST_CASE("rank is invariant under transposition") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    SparseMatrix m = random_matrix(9, 7, 35, rng);
    auto a = rank(m, RankMode::Exact);
    auto b = rank(m.transpose(), RankMode::Exact);
    CHECK(a.value == b.value);
  }
}

TEST_CASE("modular rank never exceeds the exact rank and usually matches") {
  std::mt19937_64 rng(2026);
  int matches = 0;
  for (int trial = 0; trial < 12; ++trial) {
    SparseMatrix m = random_matrix(10, 10, 30, rng);
    auto exact = rank(m, RankMode::Exact);
    auto modular = rank(m, RankMode::Modular);
    CHECK(modular.value <= exact.value);
    if (modular.value == exact.value) ++matches;
    CHECK(modular.mode == "modular");
    CHECK_FALSE(modular.primes_used.empty());
  }
  // Random small matrices essentially never hit a bad prime > 2^20.
  CHECK(matches == 12);
}

TEST_CASE("modular eliminator agrees with exact on planted rank") {
  // r independent columns plus random combinations of them
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> val(-4, 4);
  constexpr int rows = 14, r = 5, extra = 9;
  std::vector<SparseVec> basis;
  for (int i = 0; i < r; ++i) {
    SparseVec v;
    for (int j = 0; j < rows; ++j) {
      int x = val(rng);
      if (x != 0 || j == 2 * i) v.push_back({j, Scalar(x == 0 ? 1 : x)});
    }
    normalize(v);
    basis.push_back(v);
  }
  Eliminator exact(rows);
  ModEliminator mod(rows, (1u << 20) + 7);  // 1048583 is prime
  std::vector<SparseVec> cols = basis;
  for (int i = 0; i < extra; ++i) {
    SparseVec v;
    for (const auto& b : basis) axpy(v, Scalar(val(rng)), b);
    cols.push_back(v);
  }
  for (const auto& c : cols) {
    exact.add_column(c);
    mod.add_column(c);
  }
  CHECK(exact.rank() == r);
  CHECK(mod.rank() == r);
}

TEST_CASE("cokernel basis has dimension rows - rank") {
  std::mt19937_64 rng(99);
  SparseMatrix m = random_matrix(11, 6, 45, rng);
  auto rk = rank(m, RankMode::Exact);
  auto co = cokernel_basis(m);
  CHECK(static_cast<long long>(co.size()) == 11 - rk.value);
  // Standard vectors at cokernel rows must be independent of the span.
  Eliminator e(11);
  for (int c = 0; c < m.cols(); ++c) e.add_column(m.column(c));
  for (int r : co) CHECK_FALSE(e.reduce(vec({{r, 1}})).empty());
}

TEST_CASE("in_span solves exactly") {
  SparseMatrix m(3, 2);
  m.set(0, 0, Scalar(1));
  m.set(1, 0, Scalar(2));
  m.set(1, 1, Scalar(1));
  m.set(2, 1, Scalar(3));
  // v = 2*c0 - c1
  SparseVec v = vec({{0, 2}, {1, 3}, {2, -3}});
  auto sol = in_span(m, v);
  REQUIRE(sol.has_value());
  REQUIRE(sol->size() == 2);
  CHECK((*sol)[0] == Scalar(2));
  CHECK((*sol)[1] == Scalar(-1));
  CHECK_FALSE(in_span(m, vec({{2, 1}, {0, 5}, {1, 1}})).has_value());
}

TEST_CASE("sparse matrix JSON round-trip") {
  SparseMatrix m(4, 3);
  m.set(0, 0, Scalar(1));
  m.set(3, 1, Scalar(-7) / Scalar(2));
  m.set(2, 2, Scalar(5));
  SparseMatrix back = SparseMatrix::from_json(m.to_json());
  CHECK(back.rows() == 4);
  CHECK(back.cols() == 3);
  CHECK(back.nnz() == 3);
  for (int c = 0; c < 3; ++c) {
    const auto& a = m.column(c);
    const auto& b = back.column(c);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].index == b[i].index);
      CHECK(a[i].value == b[i].value);
    }
  }
}

TEST_CASE("modular config resolves requested prime count") {
  ModularConfig cfg;
  cfg.count = 4;
  auto primes = cfg.resolved();
  REQUIRE(primes.size() == 4);
  for (auto p : primes) CHECK(p > (1u << 20));
  // all distinct
  for (std::size_t i = 0; i + 1 < primes.size(); ++i)
    CHECK(primes[i] != primes[i + 1]);
}
