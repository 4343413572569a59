#include "tautrank/graphcalc.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tautrank {
namespace graphcalc {

namespace {

int wrap_vertex(int N, int v) {
  int w = ((v - 1) % N + N) % N + 1;
  return w;
}

void check_edge(int N, Edge e) {
  if (e.first < 1 || e.second > N || e.first >= e.second)
    throw std::invalid_argument("graph edge out of range");
}

}  // namespace

PluckerGraph::PluckerGraph(int n, std::vector<Edge> es)
    : N(n), edges(std::move(es)) {
  if (N < 3) throw std::invalid_argument("graph needs at least 3 vertices");
  for (const Edge& e : edges) check_edge(N, e);
  std::sort(edges.begin(), edges.end());
}

std::vector<int> PluckerGraph::valences() const {
  std::vector<int> val(static_cast<std::size_t>(N), 0);
  for (const Edge& e : edges) {
    ++val[static_cast<std::size_t>(e.first - 1)];
    ++val[static_cast<std::size_t>(e.second - 1)];
  }
  return val;
}

bool PluckerGraph::is_torus_invariant() const {
  std::vector<int> val = valences();
  for (int v : val)
    if (v != val[0]) return false;
  return true;
}

int PluckerGraph::multiplicity(Edge e) const {
  auto range = std::equal_range(edges.begin(), edges.end(), e);
  return static_cast<int>(range.second - range.first);
}

bool PluckerGraph::operator<(const PluckerGraph& o) const {
  if (N != o.N) return N < o.N;
  if (edges.size() != o.edges.size()) return edges.size() < o.edges.size();
  return edges < o.edges;
}

std::string PluckerGraph::str() const {
  if (edges.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out << ',';
    out << edges[i].first << '-' << edges[i].second;
  }
  return out.str();
}

PluckerGraph parse_graph(int N, const std::string& text) {
  std::vector<Edge> edges;
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  if (trimmed.empty() || trimmed == "1") return PluckerGraph(N, {});
  std::istringstream in(trimmed);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos)
      throw std::invalid_argument("bad edge '" + item + "'");
    int a = std::stoi(item.substr(0, dash));
    int b = std::stoi(item.substr(dash + 1));
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b);
  }
  return PluckerGraph(N, std::move(edges));
}

std::pair<Edge, int> oriented_edge(int a, int b) {
  if (a == b) return {Edge{0, 0}, 0};
  if (a < b) return {Edge{a, b}, 1};
  return {Edge{b, a}, -1};
}

int edge_distance(int N, Edge e) {
  int d = e.second - e.first;
  return std::min(d, N - d);
}

long long additive_intersection(const PluckerGraph& g) {
  long long total = 0;
  for (const Edge& e : g.edges) total += edge_distance(g.N, e);
  return total;
}

Int multiplicative_intersection(const PluckerGraph& g) {
  Int prod = 1;
  for (const Edge& e : g.edges) prod *= edge_distance(g.N, e);
  return prod;
}

std::vector<std::pair<int, int>> crossings(const PluckerGraph& g) {
  std::vector<std::pair<int, int>> out;
  const int m = g.degree();
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      // Order the two edges so the smaller first endpoint leads, then test
      // for strict interleaving i1 < i2 < i3 < i4.
      Edge e = g.edges[static_cast<std::size_t>(a)];
      Edge f = g.edges[static_cast<std::size_t>(b)];
      if (f.first < e.first) std::swap(e, f);
      if (e.first < f.first && f.first < e.second && e.second < f.second)
        out.emplace_back(a, b);
    }
  }
  return out;
}

GraphSum GraphSum::single(const PluckerGraph& g, const Scalar& c) {
  GraphSum s(g.N);
  s.add(g, c);
  return s;
}

void GraphSum::add(const PluckerGraph& g, const Scalar& c) {
  if (c == 0) return;
  if (N == 0) N = g.N;
  auto it = terms.find(g);
  if (it == terms.end()) {
    terms.emplace(g, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

GraphSum GraphSum::operator+(const GraphSum& o) const {
  GraphSum out = *this;
  if (out.N == 0) out.N = o.N;
  for (const auto& [g, c] : o.terms) out.add(g, c);
  return out;
}

GraphSum GraphSum::operator*(const Scalar& c) const {
  GraphSum out(N);
  if (c == 0) return out;
  for (const auto& [g, v] : terms) out.terms.emplace(g, v * c);
  return out;
}

GraphSum GraphSum::operator*(const GraphSum& o) const {
  GraphSum out(N ? N : o.N);
  for (const auto& [g, c] : terms) {
    for (const auto& [h, d] : o.terms) {
      std::vector<Edge> merged;
      merged.reserve(g.edges.size() + h.edges.size());
      std::merge(g.edges.begin(), g.edges.end(), h.edges.begin(),
                 h.edges.end(), std::back_inserter(merged));
      PluckerGraph prod;
      prod.N = out.N;
      prod.edges = std::move(merged);
      out.add(prod, c * d);
    }
  }
  return out;
}

std::string GraphSum::str() const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, c] : terms) {
    if (!first) out << " + ";
    first = false;
    out << '(' << to_string(c) << ")*" << g.str();
  }
  return out.str();
}

GraphSum g_action(int j, int i, const GraphSum& s) {
  GraphSum out(s.N);
  for (const auto& [g, coeff] : s.terms) {
    for (std::size_t pos = 0; pos < g.edges.size(); ++pos) {
      const Edge e = g.edges[pos];
      // Leibniz over edge occurrences; an edge hits the derivation once per
      // endpoint equal to i.
      for (int side = 0; side < 2; ++side) {
        int hit = side == 0 ? e.first : e.second;
        int other = side == 0 ? e.second : e.first;
        if (hit != i) continue;
        // x_j d/dx_i replaces the hit endpoint in place: x_{iq} -> x_{jq}
        // when the first endpoint is hit, x_{pi} -> x_{pj} for the second,
        // so the oriented pair keeps the surviving endpoint's position.
        auto [ne, sign] =
            side == 0 ? oriented_edge(j, other) : oriented_edge(other, j);
        if (sign == 0) continue;
        PluckerGraph img = g;
        img.edges.erase(img.edges.begin() + static_cast<std::ptrdiff_t>(pos));
        auto at = std::upper_bound(img.edges.begin(), img.edges.end(), ne);
        img.edges.insert(at, ne);
        out.add(img, coeff * sign);
      }
    }
  }
  return out;
}

std::vector<CyclicLoop> cyclic_loops(const PluckerGraph& g) {
  const int N = g.N;
  struct Candidate {
    CyclicLoop loop;
    std::multiset<Edge> support;
  };
  std::vector<Candidate> found;
  auto consecutive = [&](int v) {
    return oriented_edge(wrap_vertex(N, v), wrap_vertex(N, v + 1)).first;
  };
  for (int start = 1; start <= N; ++start) {
    for (int s = 2; s <= N; ++s) {
      std::multiset<Edge> need;
      if (s == 2) {
        Edge e = consecutive(start);
        need.insert(e);
        need.insert(e);
      } else {
        for (int k = 0; k + 1 < s; ++k) need.insert(consecutive(start + k));
        need.insert(
            oriented_edge(start, wrap_vertex(N, start + s - 1)).first);
      }
      bool ok = true;
      for (auto it = need.begin(); it != need.end();
           it = need.upper_bound(*it)) {
        if (g.multiplicity(*it) <
            static_cast<int>(need.count(*it))) {
          ok = false;
          break;
        }
      }
      if (ok) found.push_back({CyclicLoop{start, s}, need});
    }
  }
  // Keep maximal supports only, and deduplicate identical supports by
  // earliest start (the full cycle is found from every start).
  std::vector<CyclicLoop> out;
  for (std::size_t a = 0; a < found.size(); ++a) {
    bool keep = true;
    for (std::size_t b = 0; b < found.size(); ++b) {
      if (a == b) continue;
      if (std::includes(found[b].support.begin(), found[b].support.end(),
                        found[a].support.begin(), found[a].support.end())) {
        if (found[b].support.size() > found[a].support.size()) {
          keep = false;  // strictly contained in a bigger loop
          break;
        }
        if (found[b].support == found[a].support) {
          // Same support: keep the lexicographically first representative.
          auto key = [](const Candidate& c) {
            return std::make_pair(c.loop.start, c.loop.length);
          };
          if (key(found[b]) < key(found[a])) {
            keep = false;
            break;
          }
        }
      }
    }
    if (keep) out.push_back(found[a].loop);
  }
  std::sort(out.begin(), out.end(), [](const CyclicLoop& x, const CyclicLoop& y) {
    return std::make_pair(x.start, x.length) < std::make_pair(y.start, y.length);
  });
  return out;
}

int d_value(const PluckerGraph& g) {
  int missing = 0;
  for (int v = 1; v <= g.N; ++v) {
    Edge e = oriented_edge(v, wrap_vertex(g.N, v + 1)).first;
    if (g.multiplicity(e) == 0) ++missing;
  }
  return missing;
}

PluckerGraph cyclic_graph(int N) {
  std::vector<Edge> edges;
  for (int v = 1; v < N; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(1, N);
  return PluckerGraph(N, std::move(edges));
}

namespace {

std::vector<Edge> all_chords(int N) {
  std::vector<Edge> chords;
  for (int a = 1; a <= N; ++a)
    for (int b = a + 1; b <= N; ++b) chords.emplace_back(a, b);
  return chords;
}

bool chords_cross(Edge e, Edge f) {
  if (f.first < e.first) std::swap(e, f);
  return e.first < f.first && f.first < e.second && e.second < f.second;
}

}  // namespace

std::vector<PluckerGraph> enumerate_crossing_free(int N, int d) {
  std::vector<Edge> chords = all_chords(N);
  const std::size_t nc = chords.size();
  std::vector<std::vector<bool>> cross(nc, std::vector<bool>(nc, false));
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t b = 0; b < nc; ++b)
      cross[a][b] = chords_cross(chords[a], chords[b]);

  std::vector<PluckerGraph> out;
  std::vector<int> mult(nc, 0);
  std::vector<std::size_t> used;  // chord indices with mult > 0

  auto emit = [&]() {
    std::vector<Edge> edges;
    for (std::size_t c = 0; c < nc; ++c)
      for (int k = 0; k < mult[c]; ++k) edges.push_back(chords[c]);
    out.push_back(PluckerGraph(N, std::move(edges)));
  };

  // Choose multiplicities chord by chord; crossing-freeness only depends on
  // the support.
  auto rec = [&](auto&& self, std::size_t c, int remaining) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    if (c == nc) return;
    self(self, c + 1, remaining);  // multiplicity 0
    for (std::size_t u : used)
      if (cross[c][u]) return;  // chord unusable; nonzero choices all fail
    used.push_back(c);
    for (int k = 1; k <= remaining; ++k) {
      mult[c] = k;
      self(self, c + 1, remaining - k);
    }
    mult[c] = 0;
    used.pop_back();
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PluckerGraph> enumerate_with_valence(int N,
                                                 const std::vector<int>& val,
                                                 bool crossing_free) {
  if (static_cast<int>(val.size()) != N)
    throw std::invalid_argument("valence vector has wrong length");
  long long total = 0;
  for (int v : val) {
    if (v < 0) throw std::invalid_argument("negative valence");
    total += v;
  }
  std::vector<PluckerGraph> out;
  if (total % 2 != 0) return out;

  std::vector<Edge> chords = all_chords(N);
  const std::size_t nc = chords.size();
  std::vector<int> mult(nc, 0);
  std::vector<int> rem = val;
  std::vector<std::size_t> used;

  auto emit = [&]() {
    std::vector<Edge> edges;
    for (std::size_t c = 0; c < nc; ++c)
      for (int k = 0; k < mult[c]; ++k) edges.push_back(chords[c]);
    out.push_back(PluckerGraph(N, edges));
  };

  auto rec = [&](auto&& self, std::size_t c) -> void {
    if (c == nc) {
      for (int r : rem)
        if (r != 0) return;
      emit();
      return;
    }
    const auto [a, b] = chords[c];
    // Chords are in lex order, so vertices before the current first endpoint
    // can never gain valence again.
    for (int v = 1; v < a; ++v)
      if (rem[static_cast<std::size_t>(v - 1)] != 0) return;
    int cap = std::min(rem[static_cast<std::size_t>(a - 1)],
                       rem[static_cast<std::size_t>(b - 1)]);
    bool blocked = false;
    if (crossing_free)
      for (std::size_t u : used)
        if (chords_cross(chords[c], chords[u])) {
          blocked = true;
          break;
        }
    for (int k = 0; k <= (blocked ? 0 : cap); ++k) {
      mult[c] = k;
      rem[static_cast<std::size_t>(a - 1)] -= k;
      rem[static_cast<std::size_t>(b - 1)] -= k;
      if (k > 0) used.push_back(c);
      self(self, c + 1);
      if (k > 0) used.pop_back();
      rem[static_cast<std::size_t>(a - 1)] += k;
      rem[static_cast<std::size_t>(b - 1)] += k;
    }
    mult[c] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace graphcalc
}  // namespace tautrank
