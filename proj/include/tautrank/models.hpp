// Anticanonical models: the graded coordinate ring R = ⊕_r Γ(X, ω_X^{-r})
// together with the Lie algebra ĝ = g ⊕ ℂ acting on it by derivations, for
// X = P^n and X = G(2,N).
//
// For P^n the ambient ring is ℂ[x_0..x_n] and R_r is the full polynomial
// piece of degree r(n+1).  For G(2,N) the ambient ring is the Plücker
// coordinate ring ℂ[p_ij]/(quadrics) and R_r is its degree-rN piece; its
// canonical basis is the set of crossing-free multigraphs with rN edges,
// with graphcalc::straighten as the normal form map.

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tautrank/graphcalc.hpp"
#include "tautrank/ring.hpp"
#include "tautrank/scalar.hpp"

namespace tautrank {

enum class ModelKind { Pn, G2N };
enum class GeneratorKind { OffDiag, Cartan, Center };

struct LieGenerator {
  std::string label;
  GeneratorKind kind = GeneratorKind::OffDiag;
  // OffDiag: the derivation moving index `from` to index `to`
  // (P^n: -x_to ∂/∂x_from; G2N: x_to ∂/∂x_from acting on Plücker variables).
  // Cartan: `from` is the Cartan index i.
  int from = 0;
  int to = 0;
  std::vector<Polynomial> var_image;  // image of each ambient variable
  Scalar beta = Scalar(0);            // β(x): 1 on the center, 0 elsewhere
  std::vector<int> weight;            // torus weight of the operator
};

/// One graded piece R_r with its canonical ordered basis.
struct RPiece {
  int r = 0;
  int ambient_degree = 0;
  std::vector<Monomial> monomials;               // Pn basis
  std::vector<graphcalc::PluckerGraph> graphs;   // G2N basis
  std::map<Monomial, int> mono_index;
  std::map<graphcalc::PluckerGraph, int> graph_index;

  int dim() const;
  std::string label(int k, const std::vector<std::string>& names) const;
};

class Model {
 public:
  static Model pn(int n);
  static Model g2n(int N);
  /// Parse "pn:<n>" or "g2n:<N>".
  static Model parse(const std::string& spec);

  ModelKind kind() const { return kind_; }
  int param() const { return param_; }  // n for Pn, N for G2N
  const std::string& id() const { return id_; }
  int nvars() const { return nvars_; }
  /// Ambient degree of one anticanonical twist (n+1 for Pn, N for G2N).
  int acdegree() const { return acdegree_; }
  int dimension() const;   // dim X
  int torus_rank() const;  // length of weight vectors: n+1 or N
  const std::vector<std::string>& var_names() const { return names_; }
  const std::vector<Polynomial>& ideal_gens() const { return ideal_; }
  const std::vector<LieGenerator>& generators() const { return gens_; }
  int center_index() const { return center_index_; }

  /// Canonical basis of R_r (cached; thread-safe).
  const RPiece& piece(int r) const;

  /// Raw torus weight of a basis monomial: exponent vector for Pn, vertex
  /// valence vector for G2N monomials in the Plücker variables.
  std::vector<int> torus_weight(const Monomial& m) const;
  /// Weights are compared in the traceless quotient: w ~ w + k(1,..,1).
  static bool weight_equal(const std::vector<int>& a, const std::vector<int>& b);
  static bool weight_is_zero(const std::vector<int>& w);

  /// Basis elements of R_r of raw weight (base + shift), where base is the
  /// uniform weight (r per variable for Pn, valence 2r for G2N) and shift
  /// sums to zero.  shift = 0 gives the weight-zero (torus-invariant) basis.
  RPiece weighted_piece(int r, const std::vector<int>& shift) const;

  // --- G2N conversions between the two monomial representations ---
  int chord_index(graphcalc::Edge e) const;
  graphcalc::Edge chord_of(int var) const;
  graphcalc::GraphSum to_graphs(const Polynomial& p) const;
  Polynomial to_polynomial(const graphcalc::GraphSum& s) const;
  Monomial graph_monomial(const graphcalc::PluckerGraph& g) const;

  /// Normal form in the ambient coordinate ring (identity for Pn;
  /// straightening for G2N).
  Polynomial normal_form(const Polynomial& p) const;

  /// Z*(x)φ as a derivation image, in normal form.
  Polynomial act(const LieGenerator& g, const Polynomial& phi) const;
  /// G2N fast path on the graph basis (straightened).
  graphcalc::GraphSum act_graph(const LieGenerator& g,
                                const graphcalc::PluckerGraph& phi) const;

 private:
  Model() = default;

  ModelKind kind_ = ModelKind::Pn;
  int param_ = 0;
  std::string id_;
  int nvars_ = 0;
  int acdegree_ = 0;
  int center_index_ = -1;
  std::vector<std::string> names_;
  std::vector<Polynomial> ideal_;
  std::vector<LieGenerator> gens_;
  std::vector<graphcalc::Edge> chords_;  // G2N variable order

  // Shared so Model stays movable/copyable; copies of one model share the
  // piece cache, which is safe because pieces are immutable once built.
  struct PieceCache {
    std::mutex mutex;
    std::map<int, std::shared_ptr<const RPiece>> pieces;
  };
  std::shared_ptr<PieceCache> cache_ = std::make_shared<PieceCache>();
};

/// A section f ∈ R_1 in normal form.
struct Section {
  std::string text;   // as given on input ("fermat", "cyclic", or polynomial)
  Polynomial poly;    // ambient normal form
  graphcalc::GraphSum graphs;  // G2N mirror of poly
  bool torus_invariant = false;
};

Section fermat_section(const Model& m);   // Pn: x_0^{n+1}+...+x_n^{n+1}
Section cyclic_section(const Model& m);   // G2N: p_{12}p_{23}...p_{N1}
/// Keyword ("fermat"/"cyclic"), "@file", or an inline polynomial.
Section parse_section(const Model& m, const std::string& text);

/// Z*(x)f for every generator, precomputed once per (model, section) run.
struct SectionAction {
  std::vector<Polynomial> poly;
  std::vector<graphcalc::GraphSum> graphs;  // G2N, straightened
};
SectionAction precompute_action(const Model& m, const Section& f);

}  // namespace tautrank
