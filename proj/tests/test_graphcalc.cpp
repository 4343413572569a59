#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "tautrank/graphcalc.hpp"
#include "tautrank/models.hpp"
#include "tautrank/oracle.hpp"

using namespace tautrank;
using namespace tautrank::graphcalc;

namespace {

bool crossing_free(const PluckerGraph& g) { return crossings(g).empty(); }

bool all_crossing_free(const GraphSum& s) {
  for (const auto& [g, c] : s.terms)
    if (!crossing_free(g)) return false;
  return true;
}

bool sums_equal(const GraphSum& a, const GraphSum& b) {
  GraphSum d = a + b * Scalar(-1);
  return d.is_zero();
}

}  // namespace

TEST_CASE("oriented_edge normalizes endpoint order with antisymmetry sign") {
  auto [e1, s1] = oriented_edge(2, 5);
  CHECK(e1 == Edge{2, 5});
  CHECK(s1 == 1);
  auto [e2, s2] = oriented_edge(5, 2);
  CHECK(e2 == Edge{2, 5});
  CHECK(s2 == -1);
  auto [e3, s3] = oriented_edge(3, 3);
  CHECK(s3 == 0);
}

TEST_CASE("graph parse/print round-trip and canonical edge sorting") {
  PluckerGraph g = parse_graph(4, "3-4,1-2,1-2");
  CHECK(g.degree() == 3);
  CHECK(g.str() == "1-2,1-2,3-4");
  CHECK(parse_graph(4, g.str()) == g);
  CHECK(parse_graph(4, "1").degree() == 0);
  CHECK(parse_graph(4, "1").str() == "1");
  CHECK_THROWS_AS(parse_graph(4, "1-5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph(4, "nonsense"), std::invalid_argument);
}

TEST_CASE("valences and torus invariance") {
  PluckerGraph f = cyclic_graph(4);
  CHECK(f.valences() == std::vector<int>{2, 2, 2, 2});
  CHECK(f.is_torus_invariant());
  PluckerGraph g = parse_graph(4, "1-2,1-2");
  CHECK(g.valences() == std::vector<int>{2, 2, 0, 0});
  CHECK_FALSE(g.is_torus_invariant());
  CHECK(g.multiplicity({1, 2}) == 2);
  CHECK(g.multiplicity({3, 4}) == 0);
}

TEST_CASE("crossings detect exactly the interleaved pairs") {
  CHECK(crossings(parse_graph(4, "1-3,2-4")).size() == 1);
  CHECK(crossings(parse_graph(4, "1-2,3-4")).empty());
  CHECK(crossings(parse_graph(4, "1-2,2-3,3-4,1-4")).empty());
  CHECK(crossings(parse_graph(6, "1-4,2-5,3-6")).size() == 3);
}

TEST_CASE("the basic exchange identity") {
  GraphSum s = straighten(parse_graph(4, "1-3,2-4"));
  GraphSum expected(4);
  expected.add(parse_graph(4, "1-2,3-4"), Scalar(1));
  expected.add(parse_graph(4, "1-4,2-3"), Scalar(1));
  CHECK(sums_equal(s, expected));
  CHECK(s.str() == "(1)*1-2,3-4 + (1)*1-4,2-3");
}

TEST_CASE("a frozen three-edge straightening on five vertices") {
  GraphSum s = straighten(parse_graph(5, "1-3,2-4,2-5"));
  CHECK(s.str() == "(1)*1-2,2-3,4-5 + (1)*1-2,2-5,3-4 + (1)*1-5,2-3,2-4");
}

TEST_CASE("straighten output is crossing-free and idempotent") {
  // Crossing-free graphs are fixed points.
  for (int N = 4; N <= 5; ++N)
    for (int d = 1; d <= 4; ++d)
      for (const auto& g : enumerate_crossing_free(N, d)) {
        GraphSum s = straighten(g);
        CHECK(all_crossing_free(s));
        CHECK(sums_equal(s, GraphSum::single(g)));
      }
  // straighten twice equals straighten once on crossing graphs
  for (const char* text : {"1-3,2-4", "1-3,1-3,2-4", "1-3,2-4,2-5,1-4"}) {
    int N = 5;
    GraphSum once = straighten(parse_graph(N, text));
    StraightenStats stats;
    GraphSum twice = straighten(once, &stats);
    CHECK(all_crossing_free(once));
    CHECK(sums_equal(once, twice));
    CHECK(stats.operations == 0);  // nothing left to do
  }
}

TEST_CASE("crossing-free count matches the quotient ring dimension") {
  for (int N = 4; N <= 5; ++N)
    for (int d = 0; d <= 4; ++d)
      CHECK(static_cast<long long>(enumerate_crossing_free(N, d).size()) ==
            oracle::hilbert_g2n(N, d));
  CHECK(enumerate_crossing_free(4, 2).size() == 20);
}

TEST_CASE("every exchange strictly lex-decreases the intersection pair") {
  // Exhaustive over all crossings of all graphs with <= 4 edges, N <= 6.
  for (int N = 4; N <= 6; ++N) {
    // Enumerate all multigraphs with up to 4 edges: recursively choose
    // edges from the ordered chord list, allowing repeats.
    std::vector<Edge> chords;
    for (int a = 1; a <= N; ++a)
      for (int b = a + 1; b <= N; ++b) chords.push_back({a, b});
    std::vector<PluckerGraph> graphs;
    std::vector<Edge> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (cur.size() >= 1) graphs.emplace_back(N, cur);
      if (cur.size() == 4) return;
      for (std::size_t i = start; i < chords.size(); ++i) {
        cur.push_back(chords[i]);
        self(self, i);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    long long checked = 0;
    for (const auto& g : graphs) {
      long long ia = additive_intersection(g);
      Int im = multiplicative_intersection(g);
      for (auto cr : crossings(g)) {
        GraphSum children = plucker_op(g, cr);
        REQUIRE(children.terms.size() == 2);
        for (const auto& [child, coeff] : children.terms) {
          CHECK(coeff == Scalar(1));
          long long cia = additive_intersection(child);
          Int cim = multiplicative_intersection(child);
          bool lex_less = cia < ia || (cia == ia && cim < im);
          CHECK(lex_less);
          ++checked;
        }
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("cyclic loops and the d-value") {
  PluckerGraph f = cyclic_graph(4);
  CHECK(d_value(f) == 0);
  auto loops = cyclic_loops(f);
  REQUIRE_FALSE(loops.empty());
  CHECK(loops[0].length == 4);  // the full cycle

  CHECK(d_value(parse_graph(4, "1-2,2-3,3-4")) == 1);   // missing 1-4
  CHECK(d_value(parse_graph(4, "1-2,1-2,3-4,3-4")) == 2);
  CHECK(d_value(parse_graph(4, "1-3,2-4")) == 4);

  // A loop must return to its start: a bare path has none, a doubled edge
  // is the length-2 loop i -> i+1 -> i.
  CHECK(cyclic_loops(parse_graph(4, "1-2,2-3")).empty());
  auto loops_a = cyclic_loops(parse_graph(4, "1-2,1-2,2-3"));
  REQUIRE(loops_a.size() >= 1);
  CHECK(loops_a[0].start == 1);
  CHECK(loops_a[0].length == 2);
}

TEST_CASE("g_action is a derivation matching the polynomial route") {
  // The same operator on the Plücker polynomial ring: x_to d/dx_from acting
  // through the model's variable images, then straightened back to graphs.
  // Exhaustive over all graphs of degree <= 2 and all off-diagonal
  // generators of G(2,4); this cross-check pins the orientation convention.
  Model m = Model::g2n(4);
  std::vector<PluckerGraph> graphs;
  for (int d = 1; d <= 2; ++d) {
    std::vector<Edge> chords;
    for (int a = 1; a <= 4; ++a)
      for (int b = a + 1; b <= 4; ++b) chords.push_back({a, b});
    std::vector<Edge> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (static_cast<int>(cur.size()) == d) {
        graphs.emplace_back(4, cur);
        return;
      }
      for (std::size_t i = start; i < chords.size(); ++i) {
        cur.push_back(chords[i]);
        self(self, i);
        cur.pop_back();
      }
    };
    rec(rec, 0);
  }
  long long pairs = 0;
  for (const auto& gen : m.generators()) {
    if (gen.kind != GeneratorKind::OffDiag) continue;
    for (const auto& g : graphs) {
      GraphSum via_graphs = straighten(g_action(gen.to, gen.from,
                                                GraphSum::single(g)));
      Polynomial via_poly = m.act(gen, m.to_polynomial(GraphSum::single(g)));
      CHECK(sums_equal(via_graphs, m.to_graphs(via_poly)));
      ++pairs;
    }
  }
  CHECK(pairs > 100);
}

TEST_CASE("g_action commutes with straightening") {
  // Acting then straightening equals straightening then acting: the
  // derivation descends to the quotient ring.
  Model m = Model::g2n(4);
  for (const char* text : {"1-3,2-4", "1-3,2-4,1-2", "1-3,1-3,2-4"}) {
    PluckerGraph g = parse_graph(4, text);
    for (const auto& gen : m.generators()) {
      if (gen.kind != GeneratorKind::OffDiag) continue;
      GraphSum act_first =
          straighten(g_action(gen.to, gen.from, GraphSum::single(g)));
      GraphSum straight_first =
          straighten(g_action(gen.to, gen.from, straighten(g)));
      CHECK(sums_equal(act_first, straight_first));
    }
  }
}

TEST_CASE("enumerate_with_valence frozen counts at N=4") {
  CHECK(enumerate_with_valence(4, {2, 2, 2, 2}, false).size() == 6);
  CHECK(enumerate_with_valence(4, {2, 2, 2, 2}, true).size() == 3);
  CHECK(enumerate_with_valence(4, {4, 4, 4, 4}, false).size() == 15);
  CHECK(enumerate_with_valence(4, {4, 4, 4, 4}, true).size() == 5);
  CHECK(enumerate_with_valence(4, {1, 1, 1, 1}, false).size() == 3);
  // odd total valence admits no graphs
  CHECK(enumerate_with_valence(4, {1, 0, 0, 0}, false).empty());
}

TEST_CASE("enumerate_with_valence output has the requested valences") {
  for (bool cf : {false, true}) {
    for (const auto& g : enumerate_with_valence(5, {2, 1, 1, 1, 1}, cf)) {
      CHECK(g.valences() == std::vector<int>{2, 1, 1, 1, 1});
      if (cf) CHECK(crossing_free(g));
    }
  }
}

TEST_CASE("graph sum product unions edge multisets") {
  GraphSum a = GraphSum::single(parse_graph(4, "1-2"));
  GraphSum b = GraphSum::single(parse_graph(4, "3-4"), Scalar(2));
  GraphSum p = a * b;
  REQUIRE(p.terms.size() == 1);
  CHECK(p.terms.begin()->first == parse_graph(4, "1-2,3-4"));
  CHECK(p.terms.begin()->second == Scalar(2));
}
