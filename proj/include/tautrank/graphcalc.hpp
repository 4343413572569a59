// Multigraph calculus on Z/N for the Plücker coordinate ring of the
// Grassmannian of 2-planes.
//
// A graph is a multiset of edges on cyclically ordered vertices 1..N; it
// stands for the monomial with one Plücker variable p_{ij} per edge.  Two
// edges cross when their endpoints strictly interleave on the circle;
// crossing-free graphs of a fixed degree are a basis of the corresponding
// graded piece of the coordinate ring, and `straighten` rewrites any graph
// into that basis by quadratic exchange moves.  Termination is measured by
// the additive/multiplicative intersection pair (I_a, I_m), which drops
// strictly in lex order at every exchange.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tautrank/scalar.hpp"

namespace tautrank {
namespace graphcalc {

using Edge = std::pair<int, int>;  // 1-based endpoints, first < second

struct PluckerGraph {
  int N = 0;
  std::vector<Edge> edges;  // sorted multiset

  PluckerGraph() = default;
  PluckerGraph(int n, std::vector<Edge> es);

  int degree() const { return static_cast<int>(edges.size()); }
  /// Vertex valences (index 0 = vertex 1).
  std::vector<int> valences() const;
  bool is_torus_invariant() const;
  int multiplicity(Edge e) const;

  bool operator==(const PluckerGraph& o) const {
    return N == o.N && edges == o.edges;
  }
  bool operator<(const PluckerGraph& o) const;

  /// "1-2,2-3,3-4" (empty graph prints "1").
  std::string str() const;
};

/// Parse the serialization produced by PluckerGraph::str.
PluckerGraph parse_graph(int N, const std::string& text);

/// Normalize an edge given arbitrary distinct endpoints in 1..N; the sign
/// accounts for p_{ji} = -p_{ij}.  Equal endpoints yield sign 0.
std::pair<Edge, int> oriented_edge(int a, int b);

/// Circular distance between the endpoints of an edge.
int edge_distance(int N, Edge e);

/// I_a: sum of edge distances.    I_m: product of edge distances.
long long additive_intersection(const PluckerGraph& g);
Int multiplicative_intersection(const PluckerGraph& g);

/// Crossing edge pairs as index pairs into g.edges (a < b), lex sorted.
std::vector<std::pair<int, int>> crossings(const PluckerGraph& g);

struct GraphSum {
  int N = 0;
  std::map<PluckerGraph, Scalar> terms;

  GraphSum() = default;
  explicit GraphSum(int n) : N(n) {}
  static GraphSum single(const PluckerGraph& g, const Scalar& c = Scalar(1));

  bool is_zero() const { return terms.empty(); }
  void add(const PluckerGraph& g, const Scalar& c);
  GraphSum operator+(const GraphSum& o) const;
  GraphSum operator*(const Scalar& c) const;
  /// Monomial product: unions every pair of edge multisets.
  GraphSum operator*(const GraphSum& o) const;

  std::string str() const;
};

/// The quadratic exchange at one crossing: replaces the two crossing edges
/// (i1,i3),(i2,i4) (i1<i2<i3<i4) by (i1,i2),(i3,i4) plus (i1,i4),(i2,i3).
GraphSum plucker_op(const PluckerGraph& g, std::pair<int, int> crossing);

struct StraightenStats {
  long long operations = 0;  // exchange moves applied
};

/// Rewrite into crossing-free graphs.  Deterministic: always expands the
/// least crossing-bearing graph at its lex-least crossing.
GraphSum straighten(const GraphSum& s, StraightenStats* stats = nullptr);
GraphSum straighten(const PluckerGraph& g, StraightenStats* stats = nullptr);

/// The derivation x_j d/dx_i acting on Plücker monomials:
///   x_j d/dx_i p_{pq} = delta_{pi} p_{jq} + delta_{qi} p_{pj}
/// with p_{ab} antisymmetric and p_{aa} = 0.  Output is not straightened.
GraphSum g_action(int j, int i, const GraphSum& s);

struct CyclicLoop {
  int start = 0;   // vertex i
  int length = 0;  // s: edges between consecutive members of i,...,i+s-1,i
  bool operator==(const CyclicLoop& o) const {
    return start == o.start && length == o.length;
  }
};

/// Maximal cyclic loops (loops whose edge multiset is not contained in a
/// longer loop's), smallest start first.
std::vector<CyclicLoop> cyclic_loops(const PluckerGraph& g);

/// Number of edges of the cyclic graph missing from g.
int d_value(const PluckerGraph& g);

/// The cyclic graph F: edges (1,2),(2,3),...,(N-1,N),(1,N).
PluckerGraph cyclic_graph(int N);

/// All crossing-free multigraphs with d edges, canonical order.
std::vector<PluckerGraph> enumerate_crossing_free(int N, int d);

/// All multigraphs with the given valence vector (crossing-free or all),
/// canonical order.  Total valence must be even.
std::vector<PluckerGraph> enumerate_with_valence(int N,
                                                 const std::vector<int>& val,
                                                 bool crossing_free);

}  // namespace graphcalc
}  // namespace tautrank
