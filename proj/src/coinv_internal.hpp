// Internal row-layout and column-assembly machinery shared by the
// coinvariant rank, membership, and relation-verification entry points.

#pragma once

#include <stdexcept>
#include <vector>

#include "tautrank/coinv.hpp"
#include "tautrank/parallel.hpp"

namespace tautrank {
namespace detail {

struct Assembly {
  const Model* model = nullptr;
  const Section* section = nullptr;
  bool weight_zero = false;
  SectionAction action;
  std::vector<RPiece> row_pieces;  // degrees 0..Dmax
  std::vector<int> offsets;        // row offset per degree
  int total_rows = 0;

  int rows_up_to(int D) const {
    return offsets[static_cast<std::size_t>(D)] +
           row_pieces[static_cast<std::size_t>(D)].dim();
  }

  // Weight shift selecting the sources of one generator in weight-zero mode.
  std::vector<int> source_shift(const LieGenerator& g) const {
    std::vector<int> shift(static_cast<std::size_t>(model->torus_rank()), 0);
    if (g.kind == GeneratorKind::OffDiag) {
      int base = model->kind() == ModelKind::Pn ? 0 : 1;
      shift[static_cast<std::size_t>(g.from - base)] += 1;
      shift[static_cast<std::size_t>(g.to - base)] -= 1;
    }
    return shift;
  }

  // Coordinates of a normal-form element of R_r in the global row space.
  SparseVec coords(const Polynomial& value, int r) const {
    const RPiece& piece = row_pieces.at(static_cast<std::size_t>(r));
    const int off = offsets[static_cast<std::size_t>(r)];
    SparseVec v;
    if (model->kind() == ModelKind::Pn) {
      for (const auto& [mono, c] : value.terms) {
        auto it = piece.mono_index.find(mono);
        if (it == piece.mono_index.end())
          throw std::logic_error("monomial outside the row basis");
        v.push_back({off + it->second, c});
      }
    } else {
      graphcalc::GraphSum s = model->to_graphs(value);
      for (const auto& [g, c] : s.terms) {
        auto it = piece.graph_index.find(g);
        if (it == piece.graph_index.end())
          throw std::logic_error("graph outside the row basis");
        v.push_back({off + it->second, c});
      }
    }
    normalize(v);
    return v;
  }

  SparseVec graph_coords(const graphcalc::GraphSum& s, int r) const {
    const RPiece& piece = row_pieces.at(static_cast<std::size_t>(r));
    const int off = offsets[static_cast<std::size_t>(r)];
    SparseVec v;
    for (const auto& [g, c] : s.terms) {
      auto it = piece.graph_index.find(g);
      if (it == piece.graph_index.end())
        throw std::logic_error("graph outside the row basis");
      v.push_back({off + it->second, c});
    }
    normalize(v);
    return v;
  }

  // One relation column: the image of source element k of R_r under
  // generator gen_idx, as a vector supported on rows of degrees r and r+1.
  SparseVec column(int gen_idx, const RPiece& sources, int r, int k) const {
    const LieGenerator& g =
        model->generators()[static_cast<std::size_t>(gen_idx)];
    if (model->kind() == ModelKind::Pn) {
      Polynomial phi = Polynomial::term(
          sources.monomials[static_cast<std::size_t>(k)], Scalar(1));
      Polynomial keep = model->act(g, phi);
      if (g.beta != 0) keep = keep - phi * g.beta;
      SparseVec v = coords(keep, r);
      Polynomial raise = phi * action.poly[static_cast<std::size_t>(gen_idx)];
      axpy(v, Scalar(1), coords(raise, r + 1));
      return v;
    }
    const graphcalc::PluckerGraph& phi =
        sources.graphs[static_cast<std::size_t>(k)];
    graphcalc::GraphSum keep = model->act_graph(g, phi);
    if (g.beta != 0) keep.add(phi, -g.beta);
    SparseVec v = graph_coords(keep, r);
    graphcalc::GraphSum raise = graphcalc::straighten(
        graphcalc::GraphSum::single(phi) *
        action.graphs[static_cast<std::size_t>(gen_idx)]);
    axpy(v, Scalar(1), graph_coords(raise, r + 1));
    return v;
  }

  // All relation columns with sources in R_r, in deterministic order
  // (generator index, then basis index), computed in parallel.
  std::vector<SparseVec> columns_for_degree(int r) const {
    struct Job {
      int gen;
      const RPiece* sources;
      int k;
    };
    std::vector<RPiece> owned;  // weighted source pieces (weight-zero mode)
    std::vector<Job> jobs;
    const auto& gens = model->generators();
    if (!weight_zero) {
      const RPiece& sources = row_pieces[static_cast<std::size_t>(r)];
      for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi)
        for (int k = 0; k < sources.dim(); ++k)
          jobs.push_back({gi, &sources, k});
    } else {
      owned.reserve(gens.size());
      for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
        const LieGenerator& g = gens[static_cast<std::size_t>(gi)];
        if (g.kind == GeneratorKind::Cartan) continue;  // zero columns here
        if (g.kind == GeneratorKind::Center) {
          const RPiece& sources = row_pieces[static_cast<std::size_t>(r)];
          for (int k = 0; k < sources.dim(); ++k)
            jobs.push_back({gi, &sources, k});
          continue;
        }
        owned.push_back(model->weighted_piece(r, source_shift(g)));
        const RPiece* sources = &owned.back();
        for (int k = 0; k < sources->dim(); ++k)
          jobs.push_back({gi, sources, k});
      }
    }
    std::vector<SparseVec> cols(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t j) {
      cols[j] = column(jobs[j].gen, *jobs[j].sources, r, jobs[j].k);
    });
    return cols;
  }
};

inline Assembly make_assembly(const Model& m, const Section& f, int Dmax,
                              bool weight_zero) {
  if (weight_zero && !f.torus_invariant)
    throw std::invalid_argument(
        "weight-zero mode requires a torus-invariant section");
  Assembly a;
  a.model = &m;
  a.section = &f;
  a.weight_zero = weight_zero;
  a.action = precompute_action(m, f);
  std::vector<int> zero_shift(static_cast<std::size_t>(m.torus_rank()), 0);
  int off = 0;
  for (int r = 0; r <= Dmax; ++r) {
    a.row_pieces.push_back(weight_zero ? m.weighted_piece(r, zero_shift)
                                       : m.piece(r));
    a.offsets.push_back(off);
    off += a.row_pieces.back().dim();
  }
  a.total_rows = off;
  return a;
}

inline bool tail_stable(const std::vector<long long>& dims, int window) {
  // Q_0 never sees any relation, so the window must sit strictly past it.
  if (static_cast<int>(dims.size()) < window + 1) return false;
  for (int k = 1; k < window; ++k)
    if (dims[dims.size() - 1 - static_cast<std::size_t>(k)] != dims.back())
      return false;
  return true;
}

}  // namespace detail
}  // namespace tautrank
