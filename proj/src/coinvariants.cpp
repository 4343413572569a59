#include "tautrank/coinv.hpp"

#include <algorithm>
#include <map>

#include "coinv_internal.hpp"

namespace tautrank {

long long default_Dmax(const Model& m) {
  if (m.kind() == ModelKind::Pn && m.param() >= 3) return 4;
  return 6;
}

namespace {

// Restriction of a column to the rows of one degree block, reindexed to
// start at zero.  Only sources of the top degree can touch that block, so
// the projected rank is computed from the current batch alone.
SparseVec block_restrict(const SparseVec& v, int lo, int hi) {
  SparseVec out;
  for (const auto& e : v)
    if (e.index >= lo && e.index < hi) out.push_back({e.index - lo, e.value});
  return out;
}

}  // namespace

CoinvariantReport coinvariant_rank(const Model& m, const Section& f,
                                   const CoinvOptions& opt) {
  const int Dmax =
      opt.Dmax >= 0 ? opt.Dmax : static_cast<int>(default_Dmax(m));
  if (opt.stab_window < 2)
    throw std::invalid_argument("stab_window must be at least 2");
  // Columns with sources in R_D reach into R_{D+1}, so the row space is one
  // degree deeper than the deepest quotient truncation reported.
  detail::Assembly a = detail::make_assembly(m, f, Dmax + 1, opt.weight_zero);

  CoinvariantReport rep;
  rep.model = m.id();
  rep.section = f.text;
  rep.weight_zero = opt.weight_zero;

  const bool exact =
      opt.mode == RankMode::Exact ||
      (opt.mode == RankMode::Auto && a.total_rows <= kAutoModularThreshold);
  rep.arithmetic_mode = exact ? "exact" : "modular";

  // dim Q_D = dim R_{<=D} - dim(W_D ∩ R_{<=D}) where W_D is the span of the
  // generator images of all sources in R_r, r <= D.  The intersection
  // dimension is rank(W_D) minus the rank of the projection of W_D onto the
  // R_{D+1} block; only the degree-D sources meet that block.
  if (exact) {
    Eliminator full(a.total_rows);
    for (int D = 0; D <= Dmax; ++D) {
      std::vector<SparseVec> cols = a.columns_for_degree(D);
      const int lo = a.offsets[static_cast<std::size_t>(D + 1)];
      const int hi = a.rows_up_to(D + 1);
      Eliminator top(hi - lo);
      for (const SparseVec& v : cols) top.add_column(block_restrict(v, lo, hi));
      for (SparseVec& v : cols) full.add_column(std::move(v));
      rep.dims.push_back(a.rows_up_to(D) - (full.rank() - top.rank()));
      if (!opt.full_sweep && detail::tail_stable(rep.dims, opt.stab_window))
        break;
    }
  } else {
    std::vector<std::uint64_t> primes = opt.modular.resolved();
    rep.primes_used = primes;
    std::vector<ModEliminator> fulls;
    fulls.reserve(primes.size());
    for (std::uint64_t p : primes) fulls.emplace_back(a.total_rows, p);
    bool agreement_everywhere = true;
    for (int D = 0; D <= Dmax; ++D) {
      std::vector<SparseVec> cols = a.columns_for_degree(D);
      const int lo = a.offsets[static_cast<std::size_t>(D + 1)];
      const int hi = a.rows_up_to(D + 1);
      std::vector<long long> qs(primes.size());
      parallel_for(primes.size(), [&](std::size_t e) {
        ModEliminator top(hi - lo, primes[e]);
        for (const SparseVec& v : cols)
          top.add_column(block_restrict(v, lo, hi));
        for (const SparseVec& v : cols) fulls[e].add_column(v);
        qs[e] = a.rows_up_to(D) - (fulls[e].rank() - top.rank());
      });
      // Modal value across primes; a bad prime can shift the difference in
      // either direction, so agreement is counted on the value itself.
      std::map<long long, int> votes;
      for (long long q : qs) ++votes[q];
      auto modal = std::max_element(
          votes.begin(), votes.end(),
          [](const auto& x, const auto& y) { return x.second < y.second; });
      if (modal->second < opt.modular.agreement_count)
        agreement_everywhere = false;
      rep.dims.push_back(modal->first);
      if (!opt.full_sweep && detail::tail_stable(rep.dims, opt.stab_window))
        break;
    }
    rep.probabilistic = !agreement_everywhere;
  }

  rep.stabilized = detail::tail_stable(rep.dims, opt.stab_window);
  if (rep.stabilized) rep.rank = rep.dims.back();
  return rep;
}

CoinvariantReport weight_zero_rank(const Model& m, const Section& f,
                                   const CoinvOptions& opt) {
  CoinvOptions o = opt;
  o.weight_zero = true;
  return coinvariant_rank(m, f, o);
}

}  // namespace tautrank
