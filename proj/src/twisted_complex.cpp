#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tautrank/derham.hpp"
#include "tautrank/eliminator.hpp"
#include "tautrank/parallel.hpp"

namespace tautrank {
namespace derham {

namespace {

std::vector<std::uint32_t> masks_of_popcount(int nv, int j) {
  std::vector<std::uint32_t> out;
  if (j < 0 || j > nv) return out;
  for (std::uint32_t m = 0; m < (1u << nv); ++m)
    if (std::popcount(m) == j) out.push_back(m);
  return out;
}

// One (form degree, level) block of the complex.  Rows are (mask, basis
// monomial) pairs; for G(2,N) the basis monomials are the crossing-free
// graph monomials and `quot` holds the dQ ∧ Ω^{j-1} relations.
struct Block {
  int j = 0;
  int t = 0;
  int coef_deg = -1;
  std::vector<std::uint32_t> masks;
  std::vector<Monomial> coef;
  std::map<Monomial, int> coef_idx;
  std::unique_ptr<Eliminator> quot;
  long long dim = 0;

  int ncoef() const { return static_cast<int>(coef.size()); }
  long long raw_dim() const {
    return static_cast<long long>(masks.size()) * ncoef();
  }
  int mask_pos(std::uint32_t m) const {
    auto it = std::lower_bound(masks.begin(), masks.end(), m);
    if (it == masks.end() || *it != m)
      throw std::logic_error("derham: mask outside block");
    return static_cast<int>(it - masks.begin());
  }
  int row_of(int mp, int cp) const { return mp * ncoef() + cp; }
};

struct Context {
  const Model& model;
  const Section& section;
  int nv;
  int NX;
  Form df;
  std::vector<Form> dQ;  // exterior derivatives of the ideal generators
  std::map<std::pair<int, int>, std::unique_ptr<Block>> blocks;

  Context(const Model& m, const Section& f) : model(m), section(f) {
    nv = m.nvars();
    NX = m.acdegree();
    if (nv > 20)
      throw std::runtime_error(
          "derham: too many ambient variables for the form index");
    df = d(from_polynomial(f.poly));
    for (const Polynomial& q : m.ideal_gens())
      dQ.push_back(d(from_polynomial(q)));
  }

  // D from level t:  d − t·df∧.
  Form D_image(int t, const Form& v) const {
    Form out = d(v);
    if (t != 0) out = out - wedge(df, v) * Scalar(t);
    return out;
  }

  // Raw coordinates of a homogeneous form in a block, mapping coefficients
  // to normal form first (straightening for G(2,N)).
  SparseVec coords(const Block& b, const Form& v) const {
    std::map<std::uint32_t, Polynomial> by_mask;
    for (const auto& [key, c] : v.terms) {
      auto [it, fresh] = by_mask.try_emplace(key.mask, Polynomial(nv));
      it->second.add_term(key.mono, c);
    }
    SparseVec out;
    for (const auto& [mask, poly] : by_mask) {
      Polynomial nf = model.normal_form(poly);
      if (nf.is_zero()) continue;
      int mp = b.mask_pos(mask);
      for (const auto& [mono, c] : nf.terms) {
        auto it = b.coef_idx.find(mono);
        if (it == b.coef_idx.end())
          throw std::logic_error("derham: monomial outside block basis");
        out.push_back({b.row_of(mp, it->second), c});
      }
    }
    normalize(out);
    return out;
  }

  SparseVec reduced_coords(const Block& b, const Form& v) const {
    SparseVec raw = coords(b, v);
    return b.quot ? b.quot->reduce(std::move(raw)) : raw;
  }

  Block& block(int j, int t) {
    auto key = std::make_pair(j, t);
    auto found = blocks.find(key);
    if (found != blocks.end()) return *found->second;
    auto b = std::make_unique<Block>();
    b->j = j;
    b->t = t;
    b->coef_deg = NX * t - j;
    if (j >= 0 && j <= nv && b->coef_deg >= 0) {
      b->masks = masks_of_popcount(nv, j);
      if (model.kind() == ModelKind::Pn) {
        b->coef = enumerate_monomials(nv, b->coef_deg);
      } else {
        for (const auto& g :
             graphcalc::enumerate_crossing_free(model.param(), b->coef_deg))
          b->coef.push_back(model.graph_monomial(g));
      }
      for (int i = 0; i < b->ncoef(); ++i) b->coef_idx.emplace(b->coef[i], i);
    }
    b->dim = b->raw_dim();
    if (!dQ.empty() && b->raw_dim() > 0 && j >= 1 && b->coef_deg >= 1) {
      // Relations dQ ∧ (g' dx_T) spanning the non-free part of Ω^j on the
      // cone: T over (j−1)-masks, g' over the degree-(coef_deg−1) basis.
      std::vector<std::uint32_t> sub = masks_of_popcount(nv, j - 1);
      std::vector<Monomial> gens;
      if (model.kind() == ModelKind::Pn) {
        gens = enumerate_monomials(nv, b->coef_deg - 1);
      } else {
        for (const auto& g : graphcalc::enumerate_crossing_free(
                 model.param(), b->coef_deg - 1))
          gens.push_back(model.graph_monomial(g));
      }
      std::size_t jobs = dQ.size() * sub.size() * gens.size();
      std::vector<SparseVec> cols(jobs);
      parallel_for(jobs, [&](std::size_t idx) {
        std::size_t qi = idx / (sub.size() * gens.size());
        std::size_t rest = idx % (sub.size() * gens.size());
        std::uint32_t T = sub[rest / gens.size()];
        const Monomial& gm = gens[rest % gens.size()];
        Form rel = wedge(dQ[qi], Form::term(nv, T, gm, Scalar(1)));
        cols[idx] = coords(*b, rel);
      });
      b->quot = std::make_unique<Eliminator>(
          static_cast<int>(b->raw_dim()));
      for (auto& c : cols) b->quot->add_column(std::move(c));
      b->dim = b->raw_dim() - b->quot->rank();
    }
    auto [it, ok] = blocks.emplace(key, std::move(b));
    return *it->second;
  }
};

// Split a D-image by level and emit global coordinates: `low` is the block
// at the source level, `high` at level+1; offsets place the block rows in
// the global row space of the target form degree.
SparseVec global_image(const Context& ctx, const Block& src, int mp, int cp,
                       const Block& low, long long low_off, const Block& high,
                       long long high_off) {
  Form v = Form::term(ctx.nv, src.masks[mp], src.coef[cp], Scalar(1));
  Form img = ctx.D_image(src.t, v);
  Form at_low(ctx.nv), at_high(ctx.nv);
  for (const auto& [key, c] : img.terms) {
    int total = key.mono.degree() + std::popcount(key.mask);
    if (total % ctx.NX != 0)
      throw std::logic_error("derham: image term off the level grading");
    int lvl = total / ctx.NX;
    if (lvl == src.t)
      at_low.add(key.mask, key.mono, c);
    else if (lvl == src.t + 1)
      at_high.add(key.mask, key.mono, c);
    else
      throw std::logic_error("derham: image term at an impossible level");
  }
  SparseVec out;
  for (auto& [vec, off] :
       {std::make_pair(ctx.reduced_coords(low, at_low), low_off),
        std::make_pair(ctx.reduced_coords(high, at_high), high_off)}) {
    for (const auto& e : vec)
      out.push_back({static_cast<int>(off + e.index), e.value});
  }
  normalize(out);
  return out;
}

// All raw-basis image columns of one block, deterministic order.
std::vector<SparseVec> block_columns(const Context& ctx, const Block& src,
                                     const Block& low, long long low_off,
                                     const Block& high, long long high_off) {
  std::size_t n = static_cast<std::size_t>(src.raw_dim());
  std::vector<SparseVec> cols(n);
  parallel_for(n, [&](std::size_t idx) {
    int mp = static_cast<int>(idx) / src.ncoef();
    int cp = static_cast<int>(idx) % src.ncoef();
    cols[idx] = global_image(ctx, src, mp, cp, low, low_off, high, high_off);
  });
  return cols;
}

}  // namespace

DerhamReport twisted_cohomology_dim(const Model& m, const Section& f, int k,
                                    int tmax) {
  if (k < 0) throw std::invalid_argument("twisted_cohomology_dim: k >= 0");
  if (tmax < 1)
    throw std::invalid_argument("twisted_cohomology_dim: tmax >= 1");
  Context ctx(m, f);

  std::vector<Block*> mid(tmax + 1), tgt(tmax + 2), src(tmax);
  for (int t = 0; t <= tmax; ++t) mid[t] = &ctx.block(k + 1, t);
  for (int t = 0; t <= tmax + 1; ++t) tgt[t] = &ctx.block(k + 2, t);
  for (int t = 0; t < tmax; ++t) src[t] = &ctx.block(k, t);

  std::vector<long long> mid_off(tmax + 1), tgt_off(tmax + 2);
  long long mid_rows = 0, tgt_rows = 0;
  for (int t = 0; t <= tmax; ++t) {
    mid_off[t] = mid_rows;
    mid_rows += mid[t]->raw_dim();
  }
  for (int t = 0; t <= tmax + 1; ++t) {
    tgt_off[t] = tgt_rows;
    tgt_rows += tgt[t]->raw_dim();
  }

  Eliminator elim_ct(static_cast<int>(tgt_rows));  // middle → target
  Eliminator elim_sm(static_cast<int>(mid_rows));  // sources → middle

  DerhamReport rep;
  rep.model = m.id();
  rep.section = f.text;
  rep.k = k;
  rep.tmax = tmax;

  std::vector<long long> h;
  long long msum = 0;
  for (int t = 0; t <= tmax; ++t) {
    for (auto& col : block_columns(ctx, *mid[t], *tgt[t], tgt_off[t],
                                   *tgt[t + 1], tgt_off[t + 1]))
      elim_ct.add_column(std::move(col));
    if (t >= 1) {
      const Block& s = *src[t - 1];
      for (auto& col : block_columns(ctx, s, *mid[t - 1], mid_off[t - 1],
                                     *mid[t], mid_off[t]))
        elim_sm.add_column(std::move(col));
    }
    msum += mid[t]->dim;
    rep.t_dims.push_back(mid[t]->dim);
    h.push_back(msum - elim_ct.rank() - elim_sm.rank());
  }

  rep.dim = h[tmax];
  rep.stabilized = h[tmax] == h[tmax - 1];
  return rep;
}

bool rescale_check(const Model& m, const Section& f, int k, int tmax) {
  if (k < 0 || tmax < 1)
    throw std::invalid_argument("rescale_check: bad arguments");
  Context ctx(m, f);

  // μ(t) = 1/(t−1)!
  auto mu = [](int t) -> Scalar {
    Int fact = 1;
    for (int i = 2; i <= t - 1; ++i) fact *= i;
    return Scalar(1) / Scalar(fact);
  };

  std::vector<std::pair<int, int>> where;  // (form degree, level)
  for (int t = 1; t <= tmax - 1; ++t) where.emplace_back(k, t);
  for (int t = 1; t <= tmax; ++t) where.emplace_back(k + 1, t);

  for (auto [j, t] : where) {
    Block& b = ctx.block(j, t);
    for (int mp = 0; mp < static_cast<int>(b.masks.size()); ++mp) {
      for (int cp = 0; cp < b.ncoef(); ++cp) {
        Form v = Form::term(ctx.nv, b.masks[mp], b.coef[cp], Scalar(1));
        Form A = ctx.D_image(t, v);                         // d − t·df∧
        Form B = d(v) - wedge(ctx.df, v);                   // d − df∧
        std::map<FormKey, std::pair<Scalar, Scalar>> merged;
        for (const auto& [key, c] : A.terms) merged[key].first = c;
        for (const auto& [key, c] : B.terms) merged[key].second = c;
        for (const auto& [key, cs] : merged) {
          int total = key.mono.degree() + std::popcount(key.mask);
          if (total % ctx.NX != 0) return false;
          int t_row = total / ctx.NX;
          if (mu(t_row) * cs.first != mu(t) * cs.second) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace derham
}  // namespace tautrank
