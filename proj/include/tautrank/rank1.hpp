// Constructive rank-1 reduction for torus-invariant graphs on ℤ/N with the
// cyclic section f: produces a step-by-step certificate that
// [G]·e^f ≡ c·e^f modulo ĝ(R e^f).
//
// Rewrite rules, every one of which is an independently checkable relation
// in the coinvariant space:
//   straighten   exact ring identities (Plücker exchanges),
//   annihilate   a Cartan kills any nonzero-weight class,
//   strip        the center relation  H⊎F ≡ −(deg(H)/N + 1)·H,
//   descent      an off-diagonal relation that rewrites a crossing-free
//                torus-invariant graph into graphs containing strictly more
//                of the cyclic graph F (smaller D-value), at the price of
//                F-multiples handled by strip.
// Termination: every accepted rewrite lowers (ambient degree, D-value)
// lexicographically over the rewritten term.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tautrank/coinv.hpp"
#include "tautrank/graphcalc.hpp"

#include "json.hpp"

namespace tautrank {
namespace graphcalc {

struct TraceStep {
  std::string rule;  // straighten | annihilate | strip | descent-A | descent-B
  PluckerGraph subject;
  int op_to = 0;    // descent operator x_to d/dx_from (0 when unused)
  int op_from = 0;
  long long ia = 0;  // subject intersection data
  Int im = 1;
  /// Certificate: Σ coeff·[graph] ≡ 0 in the coinvariant space.
  std::vector<std::pair<PluckerGraph, Scalar>> relation;
  /// How the algorithm used it: [subject] ↦ Σ coeff·[graph].
  std::vector<std::pair<PluckerGraph, Scalar>> replacement;

  nlohmann::json to_json() const;
};

struct ReductionTrace {
  int N = 0;
  PluckerGraph input;
  std::vector<TraceStep> steps;
  bool success = false;
  bool budget_exhausted = false;
  std::optional<Scalar> constant;

  nlohmann::json to_json() const;
};

/// Reduce a torus-invariant graph with edge count a multiple of N.
/// On success, constant holds c with [g] ≡ c·[empty graph]; otherwise the
/// partial trace is returned with success=false (budget_exhausted tells
/// whether the budget or the rewrite search gave out).
ReductionTrace rank1_reduce(const PluckerGraph& g, long long budget = 200000);

/// A trace step's relation as coinv terms (each graph has a multiple of N
/// edges).  Verify with verify_relation at D = (max edge count)/N + 1.
std::vector<RelationTerm> relation_terms(
    const Model& m, const std::vector<std::pair<PluckerGraph, Scalar>>& rel);

struct TraceVerification {
  int steps_checked = 0;
  int steps_failed = 0;
  bool constant_consistent = true;

  bool ok() const { return steps_failed == 0 && constant_consistent; }
};

/// Independently verifies a trace: every step relation by membership in the
/// ĝ-relation span at minimal truncation (weight-zero fast path when all
/// classes are torus-invariant), and the final constant by a membership
/// solve of [input] against [1].
TraceVerification verify_trace(const Model& m, const Section& f,
                               const ReductionTrace& trace);

}  // namespace graphcalc
}  // namespace tautrank
