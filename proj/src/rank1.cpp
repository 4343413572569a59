#include "tautrank/rank1.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tautrank {
namespace graphcalc {

namespace {

int wrap(int v, int N) { return (v - 1 + N) % N + 1; }

Edge make_edge(int a, int b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

bool contains_multiset(const std::vector<Edge>& big,
                       const std::vector<Edge>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Multiset difference of sorted edge lists; `small` must be contained.
std::vector<Edge> multiset_minus(const std::vector<Edge>& big,
                                 const std::vector<Edge>& small) {
  std::vector<Edge> out;
  out.reserve(big.size() - small.size());
  std::size_t j = 0;
  for (const Edge& e : big) {
    if (j < small.size() && small[j] == e) {
      ++j;
      continue;
    }
    out.push_back(e);
  }
  return out;
}

// Distinct neighbours of v, ascending.
std::vector<int> neighbours(const PluckerGraph& g, int v) {
  std::vector<int> out;
  for (const Edge& e : g.edges) {
    if (e.first == v) out.push_back(e.second);
    if (e.second == v) out.push_back(e.first);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void stamp(TraceStep& st, const PluckerGraph& subject) {
  st.subject = subject;
  st.ia = additive_intersection(subject);
  st.im = multiplicative_intersection(subject);
}

// The centre relation on H2:  (H2 ⊎ F) + (deg(H2)/N + 1)·H2 ≡ 0.
TraceStep strip_step(const PluckerGraph& top, const PluckerGraph& base) {
  TraceStep st;
  st.rule = "strip";
  stamp(st, top);
  Scalar m1(base.degree() / base.N + 1);
  st.relation = {{top, Scalar(1)}, {base, m1}};
  st.replacement = {{base, -m1}};
  return st;
}

enum class Verdict { Accepted, Rejected, Budget };

struct Engine {
  int N;
  long long budget;
  long long spent = 0;
  PluckerGraph F;
  GraphSum cur;
  ReductionTrace out;

  explicit Engine(const PluckerGraph& g, long long b)
      : N(g.N), budget(b), F(cyclic_graph(g.N)), cur(g.N) {
    out.N = N;
    out.input = g;
  }

  bool charge(long long amount) {
    spent += amount;
    return spent <= budget;
  }

  void apply(const PluckerGraph& subject, const Scalar& c,
             const std::vector<std::pair<PluckerGraph, Scalar>>& replacement) {
    cur.add(subject, -c);
    for (const auto& [g, w] : replacement) cur.add(g, c * w);
  }

  // Try the descent move anchored at vertex i with auxiliary endpoint k.
  // Case A needs (i,i+1) ∈ H, (i-1,i) ∉ H; it moves one (i,i+1) plus one
  // chord (i-1,k) to (i-1,i) plus (i,k) and applies x_{i+1} d/dx_i.  Case B
  // is the mirror image.  The resulting relation has degree-(d+N) terms all
  // containing F (consecutive edges never cross, so the copy of F assembled
  // from G1's new consecutive edge and x·F survives straightening); after
  // stripping them the candidate is accepted when the subject's coefficient
  // is nonzero and every other surviving term has strictly smaller D-value.
  Verdict try_candidate(const PluckerGraph& H, const Scalar& c, char case_,
                        int i, int k) {
    const int ip = wrap(i + 1, N);
    const int im = wrap(i - 1, N);
    std::vector<Edge> es = H.edges;
    Edge drop1, drop2, add1, add2;
    int op_to, op_from = i;
    if (case_ == 'A') {
      drop1 = make_edge(i, ip);
      drop2 = make_edge(im, k);
      add1 = make_edge(im, i);
      add2 = make_edge(i, k);
      op_to = ip;
    } else {
      drop1 = make_edge(im, i);
      drop2 = make_edge(ip, k);
      add1 = make_edge(i, ip);
      add2 = make_edge(i, k);
      op_to = im;
    }
    for (const Edge& d : {drop1, drop2}) {
      auto it = std::find(es.begin(), es.end(), d);
      if (it == es.end()) return Verdict::Rejected;
      es.erase(it);
    }
    es.push_back(add1);
    es.push_back(add2);
    std::sort(es.begin(), es.end());
    PluckerGraph G1(N, std::move(es));

    GraphSum rel = g_action(op_to, op_from, GraphSum::single(G1)) +
                   GraphSum::single(G1) * g_action(op_to, op_from,
                                                   GraphSum::single(F));
    StraightenStats stats;
    rel = straighten(rel, &stats);
    if (!charge(stats.operations + 1)) return Verdict::Budget;
    if (rel.is_zero()) return Verdict::Rejected;

    const int top_deg = H.degree() + N;
    const int DH = d_value(H);
    std::vector<TraceStep> strips;
    GraphSum acc(N);
    for (const auto& [T, cT] : rel.terms) {
      if (T.degree() == H.degree()) {
        acc.add(T, cT);
        continue;
      }
      if (T.degree() != top_deg) return Verdict::Rejected;
      if (!contains_multiset(T.edges, F.edges)) return Verdict::Rejected;
      PluckerGraph T2(N, multiset_minus(T.edges, F.edges));
      TraceStep st = strip_step(T, T2);
      acc.add(T2, cT * st.replacement.front().second);
      strips.push_back(std::move(st));
    }

    Scalar gamma(0);
    std::vector<std::pair<PluckerGraph, Scalar>> rest;
    for (const auto& [X, cX] : acc.terms) {
      if (X == H) {
        gamma = cX;
        continue;
      }
      if (d_value(X) >= DH) return Verdict::Rejected;
      rest.emplace_back(X, cX);
    }
    if (gamma == 0) return Verdict::Rejected;

    TraceStep st;
    st.rule = case_ == 'A' ? "descent-A" : "descent-B";
    stamp(st, H);
    st.op_to = op_to;
    st.op_from = op_from;
    st.relation.assign(rel.terms.begin(), rel.terms.end());
    for (auto& [X, cX] : rest) st.replacement.emplace_back(X, -(cX / gamma));
    out.steps.push_back(st);
    for (auto& s : strips) out.steps.push_back(std::move(s));
    apply(H, c, st.replacement);
    return Verdict::Accepted;
  }

  Verdict descend(const PluckerGraph& H, const Scalar& c) {
    for (int i = 1; i <= N; ++i) {
      const int ip = wrap(i + 1, N);
      const int im = wrap(i - 1, N);
      const bool has_next = H.multiplicity(make_edge(i, ip)) > 0;
      const bool has_prev = H.multiplicity(make_edge(im, i)) > 0;
      for (char case_ : {'A', 'B'}) {
        const int anchor = case_ == 'A' ? im : ip;
        if (case_ == 'A' && !(has_next && !has_prev)) continue;
        if (case_ == 'B' && !(has_prev && !has_next)) continue;
        for (int k : neighbours(H, anchor)) {
          if (k == i || k == ip || k == im) continue;
          Verdict v = try_candidate(H, c, case_, i, k);
          if (v != Verdict::Rejected) return v;
        }
      }
    }
    return Verdict::Rejected;
  }

  void run() {
    StraightenStats stats;
    GraphSum flat = straighten(out.input, &stats);
    charge(stats.operations);
    if (!crossings(out.input).empty()) {
      TraceStep st;
      st.rule = "straighten";
      stamp(st, out.input);
      st.relation.emplace_back(out.input, Scalar(1));
      for (const auto& [g, w] : flat.terms) {
        st.relation.emplace_back(g, -w);
        st.replacement.emplace_back(g, w);
      }
      out.steps.push_back(std::move(st));
    }
    cur = flat;

    while (true) {
      if (spent > budget) {
        out.budget_exhausted = true;
        return;
      }
      const PluckerGraph* pick = nullptr;
      for (const auto& [g, w] : cur.terms) {
        if (g.degree() == 0) continue;
        if (!pick || g.degree() > pick->degree()) pick = &g;
      }
      if (!pick) break;
      const PluckerGraph H = *pick;
      const Scalar c = cur.terms.at(H);

      if (!H.is_torus_invariant()) {
        TraceStep st;
        st.rule = "annihilate";
        stamp(st, H);
        st.relation.emplace_back(H, Scalar(1));
        out.steps.push_back(std::move(st));
        apply(H, c, {});
        continue;
      }
      if (contains_multiset(H.edges, F.edges)) {
        PluckerGraph base(N, multiset_minus(H.edges, F.edges));
        TraceStep st = strip_step(H, base);
        apply(H, c, st.replacement);
        out.steps.push_back(std::move(st));
        continue;
      }
      Verdict v = descend(H, c);
      if (v == Verdict::Budget) {
        out.budget_exhausted = true;
        return;
      }
      if (v == Verdict::Rejected) return;  // stuck: partial trace
    }

    out.success = true;
    Scalar c0(0);
    auto it = cur.terms.find(PluckerGraph(N, {}));
    if (it != cur.terms.end()) c0 = it->second;
    out.constant = c0;
  }
};

nlohmann::json pairs_json(
    const std::vector<std::pair<PluckerGraph, Scalar>>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& [g, c] : v)
    a.push_back({{"graph", g.str()}, {"coeff", to_string(c)}});
  return a;
}

}  // namespace

nlohmann::json TraceStep::to_json() const {
  nlohmann::json j{{"rule", rule},
                   {"subject", subject.str()},
                   {"ia", ia},
                   {"im", im.get_str()},
                   {"relation", pairs_json(relation)},
                   {"replacement", pairs_json(replacement)}};
  if (op_to != 0)
    j["op"] = {{"to", op_to}, {"from", op_from}};
  return j;
}

nlohmann::json ReductionTrace::to_json() const {
  nlohmann::json steps_json = nlohmann::json::array();
  for (const auto& s : steps) steps_json.push_back(s.to_json());
  nlohmann::json j{{"schema", 1},
                   {"N", N},
                   {"input", input.str()},
                   {"success", success},
                   {"budget_exhausted", budget_exhausted},
                   {"steps", std::move(steps_json)}};
  j["constant"] =
      constant ? nlohmann::json(to_string(*constant)) : nlohmann::json();
  return j;
}

ReductionTrace rank1_reduce(const PluckerGraph& g, long long budget) {
  if (g.N < 4)
    throw std::invalid_argument("rank1_reduce: need N >= 4");
  if (!g.is_torus_invariant())
    throw std::invalid_argument("rank1_reduce: graph is not torus-invariant");
  if (g.degree() % g.N != 0)
    throw std::invalid_argument(
        "rank1_reduce: edge count must be a multiple of N");
  Engine eng(g, budget);
  eng.run();
  return eng.out;
}

std::vector<RelationTerm> relation_terms(
    const Model& m, const std::vector<std::pair<PluckerGraph, Scalar>>& rel) {
  if (m.kind() != ModelKind::G2N)
    throw std::invalid_argument("relation_terms: Grassmannian models only");
  std::vector<RelationTerm> out;
  for (const auto& [g, c] : rel) {
    if (g.N != m.torus_rank())
      throw std::invalid_argument("relation_terms: graph/model N mismatch");
    if (g.degree() % g.N != 0)
      throw std::invalid_argument(
          "relation_terms: term degree not a multiple of N");
    RelationTerm t;
    t.value = m.normal_form(m.to_polynomial(GraphSum::single(g)));
    t.r = g.degree() / g.N;
    t.coeff = c;
    out.push_back(std::move(t));
  }
  return out;
}

TraceVerification verify_trace(const Model& m, const Section& f,
                               const ReductionTrace& trace) {
  TraceVerification out;
  for (const auto& st : trace.steps) {
    ++out.steps_checked;
    std::vector<RelationTerm> terms = relation_terms(m, st.relation);
    int D = 1;
    bool wz = f.torus_invariant;
    for (const auto& [g, c] : st.relation) {
      D = std::max(D, g.degree() / g.N + 1);
      if (!g.is_torus_invariant()) wz = false;
    }
    if (!verify_relation(m, f, terms, D, wz)) ++out.steps_failed;
  }
  if (trace.success && trace.constant) {
    int r_in = trace.input.degree() / trace.N;
    Polynomial cls =
        m.normal_form(m.to_polynomial(GraphSum::single(trace.input)));
    Polynomial one = Polynomial::constant(m.nvars(), Scalar(1));
    bool wz = f.torus_invariant && trace.input.is_torus_invariant();
    MembershipResult mr = membership(m, f, cls, r_in, one, 0, r_in + 1, wz);
    out.constant_consistent = mr.member && mr.c && *mr.c == *trace.constant;
  }
  return out;
}

}  // namespace graphcalc
}  // namespace tautrank
