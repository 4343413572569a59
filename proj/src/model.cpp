#include "tautrank/models.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tautrank {

namespace {

std::string pn_var_name(int i) { return "x" + std::to_string(i); }

std::string g2n_var_name(graphcalc::Edge e) {
  if (e.first < 10 && e.second < 10)
    return "p" + std::to_string(e.first) + std::to_string(e.second);
  return "p" + std::to_string(e.first) + "_" + std::to_string(e.second);
}

}  // namespace

int RPiece::dim() const {
  return static_cast<int>(std::max(monomials.size(), graphs.size()));
}

std::string RPiece::label(int k, const std::vector<std::string>& names) const {
  if (!graphs.empty() || monomials.empty()) {
    if (k < static_cast<int>(graphs.size()))
      return graphs[static_cast<std::size_t>(k)].str();
  }
  if (k < static_cast<int>(monomials.size()))
    return monomials[static_cast<std::size_t>(k)].str(names);
  throw std::out_of_range("basis index out of range");
}

Model Model::pn(int n) {
  if (n < 1) throw std::invalid_argument("pn model needs n >= 1");
  Model m;
  m.kind_ = ModelKind::Pn;
  m.param_ = n;
  m.id_ = "pn:" + std::to_string(n);
  m.nvars_ = n + 1;
  m.acdegree_ = n + 1;
  for (int i = 0; i <= n; ++i) m.names_.push_back(pn_var_name(i));

  auto zero_images = [&]() {
    return std::vector<Polynomial>(static_cast<std::size_t>(m.nvars_),
                                   Polynomial::constant(m.nvars_, Scalar(0)));
  };
  auto weight_delta = [&](int to, int from) {
    std::vector<int> w(static_cast<std::size_t>(m.nvars_), 0);
    w[static_cast<std::size_t>(to)] += 1;
    w[static_cast<std::size_t>(from)] -= 1;
    return w;
  };

  // Off-diagonal part: Z*(X_{ij}) = -x_i d/dx_j for i != j.
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      LieGenerator g;
      g.label = "X(" + std::to_string(i) + "," + std::to_string(j) + ")";
      g.kind = GeneratorKind::OffDiag;
      g.to = i;
      g.from = j;
      g.var_image = zero_images();
      g.var_image[static_cast<std::size_t>(j)] =
          -Polynomial::variable(m.nvars_, i);
      g.weight = weight_delta(i, j);
      m.gens_.push_back(std::move(g));
    }
  }
  // Cartan part: Z*(H_i) = -x_0 d/dx_0 + x_i d/dx_i, i = 1..n.
  for (int i = 1; i <= n; ++i) {
    LieGenerator g;
    g.label = "H(" + std::to_string(i) + ")";
    g.kind = GeneratorKind::Cartan;
    g.from = i;
    g.var_image = zero_images();
    g.var_image[0] = -Polynomial::variable(m.nvars_, 0);
    g.var_image[static_cast<std::size_t>(i)] =
        Polynomial::variable(m.nvars_, i);
    g.weight.assign(static_cast<std::size_t>(m.nvars_), 0);
    m.gens_.push_back(std::move(g));
  }
  // Center: Z*(1) = -(1/(n+1)) Σ x_k d/dx_k, β(1) = 1.
  {
    LieGenerator g;
    g.label = "Z";
    g.kind = GeneratorKind::Center;
    g.var_image = zero_images();
    for (int k = 0; k <= n; ++k)
      g.var_image[static_cast<std::size_t>(k)] =
          Polynomial::variable(m.nvars_, k) * Scalar(-1, n + 1);
    g.beta = Scalar(1);
    g.weight.assign(static_cast<std::size_t>(m.nvars_), 0);
    m.center_index_ = static_cast<int>(m.gens_.size());
    m.gens_.push_back(std::move(g));
  }
  return m;
}

Model Model::g2n(int N) {
  if (N < 4) throw std::invalid_argument("g2n model needs N >= 4");
  Model m;
  m.kind_ = ModelKind::G2N;
  m.param_ = N;
  m.id_ = "g2n:" + std::to_string(N);
  m.acdegree_ = N;
  for (int a = 1; a <= N; ++a)
    for (int b = a + 1; b <= N; ++b) m.chords_.emplace_back(a, b);
  m.nvars_ = static_cast<int>(m.chords_.size());
  for (const auto& e : m.chords_) m.names_.push_back(g2n_var_name(e));

  // Plücker quadrics p_ac p_bd - p_ab p_cd - p_ad p_bc, a<b<c<d.
  auto var_of = [&](int a, int b) {
    auto [e, sign] = graphcalc::oriented_edge(a, b);
    Polynomial v = Polynomial::variable(
        m.nvars_, static_cast<int>(std::lower_bound(m.chords_.begin(),
                                                    m.chords_.end(), e) -
                                   m.chords_.begin()));
    return v * Scalar(sign);
  };
  for (int a = 1; a <= N; ++a)
    for (int b = a + 1; b <= N; ++b)
      for (int c = b + 1; c <= N; ++c)
        for (int d = c + 1; d <= N; ++d)
          m.ideal_.push_back(var_of(a, c) * var_of(b, d) -
                             var_of(a, b) * var_of(c, d) -
                             var_of(a, d) * var_of(b, c));

  auto weight_delta = [&](int to, int from) {
    std::vector<int> w(static_cast<std::size_t>(N), 0);
    w[static_cast<std::size_t>(to - 1)] += 1;
    w[static_cast<std::size_t>(from - 1)] -= 1;
    return w;
  };

  // Derivation image of every Plücker variable under x_to d/dx_from:
  // x_to d/dx_from p_{pq} = δ_{p,from} p_{to,q} + δ_{q,from} p_{p,to}.
  auto offdiag_images = [&](int to, int from) {
    std::vector<Polynomial> images(
        static_cast<std::size_t>(m.nvars_),
        Polynomial::constant(m.nvars_, Scalar(0)));
    for (int v = 0; v < m.nvars_; ++v) {
      auto [p, q] = m.chords_[static_cast<std::size_t>(v)];
      Polynomial img = Polynomial::constant(m.nvars_, Scalar(0));
      if (p == from && to != q) img = img + var_of(to, q);
      if (q == from && p != to) img = img + var_of(p, to);
      images[static_cast<std::size_t>(v)] = img;
    }
    return images;
  };

  for (int from = 1; from <= N; ++from) {
    for (int to = 1; to <= N; ++to) {
      if (to == from) continue;
      LieGenerator g;
      g.label = "E(" + std::to_string(to) + "," + std::to_string(from) + ")";
      g.kind = GeneratorKind::OffDiag;
      g.to = to;
      g.from = from;
      g.var_image = offdiag_images(to, from);
      g.weight = weight_delta(to, from);
      m.gens_.push_back(std::move(g));
    }
  }
  // Cartan part: t_i = x_i d/dx_i - x_{i+1} d/dx_{i+1}, i = 1..N-1,
  // acting diagonally: t_i p_{pq} = (#{p,q}∩{i} - #{p,q}∩{i+1}) p_{pq}.
  for (int i = 1; i < N; ++i) {
    LieGenerator g;
    g.label = "t(" + std::to_string(i) + ")";
    g.kind = GeneratorKind::Cartan;
    g.from = i;
    g.var_image.assign(static_cast<std::size_t>(m.nvars_),
                       Polynomial::constant(m.nvars_, Scalar(0)));
    for (int v = 0; v < m.nvars_; ++v) {
      auto [p, q] = m.chords_[static_cast<std::size_t>(v)];
      int c = (p == i) + (q == i) - (p == i + 1) - (q == i + 1);
      if (c != 0)
        g.var_image[static_cast<std::size_t>(v)] =
            Polynomial::variable(m.nvars_, v) * Scalar(c);
    }
    g.weight.assign(static_cast<std::size_t>(N), 0);
    m.gens_.push_back(std::move(g));
  }
  // Center: Z*(1) = -(1/(2N)) Σ_i x_i d/dx_i, i.e. p_e ↦ -(1/N) p_e, β = 1.
  // Normalized so the center acts as -m on R_m, matching the Pn convention.
  {
    LieGenerator g;
    g.label = "Z";
    g.kind = GeneratorKind::Center;
    g.var_image.clear();
    for (int v = 0; v < m.nvars_; ++v)
      g.var_image.push_back(Polynomial::variable(m.nvars_, v) *
                            Scalar(-1, N));
    g.beta = Scalar(1);
    g.weight.assign(static_cast<std::size_t>(N), 0);
    m.center_index_ = static_cast<int>(m.gens_.size());
    m.gens_.push_back(std::move(g));
  }
  return m;
}

Model Model::parse(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string head = spec.substr(0, colon);
    std::string tail = spec.substr(colon + 1);
    try {
      int v = std::stoi(tail);
      if (head == "pn") return pn(v);
      if (head == "g2n") return g2n(v);
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::invalid_argument("bad model spec '" + spec +
                              "' (expected pn:<n> or g2n:<N>)");
}

int Model::dimension() const {
  return kind_ == ModelKind::Pn ? param_ : 2 * (param_ - 2);
}

int Model::torus_rank() const {
  return kind_ == ModelKind::Pn ? param_ + 1 : param_;
}

const RPiece& Model::piece(int r) const {
  if (r < 0) throw std::invalid_argument("negative piece degree");
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->pieces.find(r);
    if (it != cache_->pieces.end()) return *it->second;
  }
  auto p = std::make_shared<RPiece>();
  p->r = r;
  p->ambient_degree = r * acdegree_;
  if (kind_ == ModelKind::Pn) {
    p->monomials = enumerate_monomials(nvars_, p->ambient_degree);
    for (int k = 0; k < static_cast<int>(p->monomials.size()); ++k)
      p->mono_index.emplace(p->monomials[static_cast<std::size_t>(k)], k);
  } else {
    p->graphs = graphcalc::enumerate_crossing_free(param_, p->ambient_degree);
    for (int k = 0; k < static_cast<int>(p->graphs.size()); ++k)
      p->graph_index.emplace(p->graphs[static_cast<std::size_t>(k)], k);
  }
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto [it, inserted] = cache_->pieces.emplace(r, std::move(p));
  return *it->second;
}

std::vector<int> Model::torus_weight(const Monomial& m) const {
  if (kind_ == ModelKind::Pn) return m.e;
  std::vector<int> w(static_cast<std::size_t>(param_), 0);
  for (int v = 0; v < nvars_; ++v) {
    int e = m.e[static_cast<std::size_t>(v)];
    if (e == 0) continue;
    auto [a, b] = chords_[static_cast<std::size_t>(v)];
    w[static_cast<std::size_t>(a - 1)] += e;
    w[static_cast<std::size_t>(b - 1)] += e;
  }
  return w;
}

bool Model::weight_equal(const std::vector<int>& a,
                         const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  int d = a[0] - b[0];
  for (std::size_t k = 1; k < a.size(); ++k)
    if (a[k] - b[k] != d) return false;
  return true;
}

bool Model::weight_is_zero(const std::vector<int>& w) {
  for (std::size_t k = 1; k < w.size(); ++k)
    if (w[k] != w[0]) return false;
  return true;
}

RPiece Model::weighted_piece(int r, const std::vector<int>& shift) const {
  if (static_cast<int>(shift.size()) != torus_rank())
    throw std::invalid_argument("weight shift has wrong length");
  RPiece p;
  p.r = r;
  p.ambient_degree = r * acdegree_;
  if (kind_ == ModelKind::Pn) {
    Monomial m;
    m.e.assign(static_cast<std::size_t>(nvars_), r);
    for (int k = 0; k < nvars_; ++k) {
      m.e[static_cast<std::size_t>(k)] += shift[static_cast<std::size_t>(k)];
      if (m.e[static_cast<std::size_t>(k)] < 0) return p;  // empty
    }
    p.monomials.push_back(m);
    p.mono_index.emplace(m, 0);
  } else {
    std::vector<int> val(static_cast<std::size_t>(param_), 2 * r);
    for (int k = 0; k < param_; ++k) {
      val[static_cast<std::size_t>(k)] += shift[static_cast<std::size_t>(k)];
      if (val[static_cast<std::size_t>(k)] < 0) return p;
    }
    p.graphs = graphcalc::enumerate_with_valence(param_, val, true);
    for (int k = 0; k < static_cast<int>(p.graphs.size()); ++k)
      p.graph_index.emplace(p.graphs[static_cast<std::size_t>(k)], k);
  }
  return p;
}

int Model::chord_index(graphcalc::Edge e) const {
  auto it = std::lower_bound(chords_.begin(), chords_.end(), e);
  if (it == chords_.end() || *it != e)
    throw std::invalid_argument("edge is not a chord of this model");
  return static_cast<int>(it - chords_.begin());
}

graphcalc::Edge Model::chord_of(int var) const {
  return chords_.at(static_cast<std::size_t>(var));
}

Monomial Model::graph_monomial(const graphcalc::PluckerGraph& g) const {
  Monomial m = Monomial::one(nvars_);
  for (const auto& e : g.edges)
    ++m.e[static_cast<std::size_t>(chord_index(e))];
  return m;
}

graphcalc::GraphSum Model::to_graphs(const Polynomial& p) const {
  if (kind_ != ModelKind::G2N)
    throw std::logic_error("graph form is only defined for g2n models");
  graphcalc::GraphSum out(param_);
  for (const auto& [m, c] : p.terms) {
    std::vector<graphcalc::Edge> edges;
    for (int v = 0; v < nvars_; ++v)
      for (int k = 0; k < m.e[static_cast<std::size_t>(v)]; ++k)
        edges.push_back(chords_[static_cast<std::size_t>(v)]);
    out.add(graphcalc::PluckerGraph(param_, std::move(edges)), c);
  }
  return out;
}

Polynomial Model::to_polynomial(const graphcalc::GraphSum& s) const {
  Polynomial out = Polynomial::constant(nvars_, Scalar(0));
  for (const auto& [g, c] : s.terms) out.add_term(graph_monomial(g), c);
  return out;
}

Polynomial Model::normal_form(const Polynomial& p) const {
  if (kind_ == ModelKind::Pn) return p;
  return to_polynomial(graphcalc::straighten(to_graphs(p)));
}

Polynomial Model::act(const LieGenerator& g, const Polynomial& phi) const {
  return normal_form(phi.apply_derivation(g.var_image));
}

graphcalc::GraphSum Model::act_graph(const LieGenerator& g,
                                     const graphcalc::PluckerGraph& phi) const {
  using graphcalc::GraphSum;
  if (kind_ != ModelKind::G2N)
    throw std::logic_error("act_graph is only defined for g2n models");
  switch (g.kind) {
    case GeneratorKind::OffDiag:
      return graphcalc::straighten(
          graphcalc::g_action(g.to, g.from, GraphSum::single(phi)));
    case GeneratorKind::Cartan: {
      std::vector<int> val = phi.valences();
      int eig = val[static_cast<std::size_t>(g.from - 1)] -
                val[static_cast<std::size_t>(g.from)];
      return GraphSum::single(phi, Scalar(eig));
    }
    case GeneratorKind::Center:
      return GraphSum::single(phi, Scalar(-phi.degree(), param_));
  }
  throw std::logic_error("unreachable");
}

}  // namespace tautrank
