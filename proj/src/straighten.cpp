#include "tautrank/graphcalc.hpp"

#include <mutex>
#include <stdexcept>

namespace tautrank {
namespace graphcalc {

GraphSum plucker_op(const PluckerGraph& g, std::pair<int, int> crossing) {
  const auto [ia, ib] = crossing;
  Edge e = g.edges.at(static_cast<std::size_t>(ia));
  Edge f = g.edges.at(static_cast<std::size_t>(ib));
  if (f.first < e.first) std::swap(e, f);
  const int i1 = e.first, i2 = f.first, i3 = e.second, i4 = f.second;
  if (!(i1 < i2 && i2 < i3 && i3 < i4))
    throw std::invalid_argument("edges do not cross");

  // p_{i1 i3} p_{i2 i4} = p_{i1 i2} p_{i3 i4} + p_{i1 i4} p_{i2 i3}
  std::vector<Edge> rest;
  rest.reserve(g.edges.size() - 2);
  for (int k = 0; k < g.degree(); ++k)
    if (k != ia && k != ib) rest.push_back(g.edges[static_cast<std::size_t>(k)]);

  GraphSum out(g.N);
  for (const auto& pair :
       {std::pair<Edge, Edge>{{i1, i2}, {i3, i4}},
        std::pair<Edge, Edge>{{i1, i4}, {i2, i3}}}) {
    std::vector<Edge> edges = rest;
    edges.push_back(pair.first);
    edges.push_back(pair.second);
    out.add(PluckerGraph(g.N, std::move(edges)), Scalar(1));
  }
  return out;
}

namespace {

std::mutex cache_mutex;
std::map<PluckerGraph, GraphSum> straighten_cache;

GraphSum straighten_one(const PluckerGraph& start, StraightenStats* stats) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = straighten_cache.find(start);
    if (it != straighten_cache.end()) return it->second;
  }

  GraphSum done(start.N);
  GraphSum work = GraphSum::single(start);
  long long ops = 0;
  // Safety cap: each move strictly decreases (I_a, I_m) lex, so termination
  // is guaranteed; the cap only guards against implementation bugs.
  const long long cap = 1'000'000;
  while (!work.terms.empty()) {
    auto it = work.terms.begin();  // least graph first
    PluckerGraph g = it->first;
    Scalar c = it->second;
    work.terms.erase(it);
    auto cr = crossings(g);
    if (cr.empty()) {
      done.add(g, c);
      continue;
    }
    if (++ops > cap) throw std::runtime_error("straighten did not terminate");
    GraphSum expanded = plucker_op(g, cr.front());
    for (const auto& [h, d] : expanded.terms) work.add(h, c * d);
  }
  if (stats) stats->operations += ops;

  std::lock_guard<std::mutex> lock(cache_mutex);
  straighten_cache.emplace(start, done);
  return done;
}

}  // namespace

GraphSum straighten(const PluckerGraph& g, StraightenStats* stats) {
  return straighten_one(g, stats);
}

GraphSum straighten(const GraphSum& s, StraightenStats* stats) {
  GraphSum out(s.N);
  for (const auto& [g, c] : s.terms) {
    GraphSum flat = straighten_one(g, stats);
    for (const auto& [h, d] : flat.terms) out.add(h, c * d);
  }
  return out;
}

}  // namespace graphcalc
}  // namespace tautrank
