// Closed-form and combinatorial counting oracles.
//
// These are deliberately independent of the linear-algebra pipeline: they
// provide the expected answers that the rank computations are checked
// against.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tautrank/models.hpp"
#include "tautrank/scalar.hpp"

namespace tautrank {
namespace oracle {

/// Expected solution rank for the degree-(n+1) hypersurface family in
/// projective n-space at a generic smooth point:
///   nu(n) = n/(n+1) * (n^n - (-1)^n).
Int nu(int n);

/// Number of exponent vectors (k_0,...,k_n) with all 0 <= k_i <= n-1 and
/// k_0 + ... + k_n = s.  Sum over s divisible by n+1 equals nu(n).
Int count_a(int n, int s);
Int count_a_total(int n);

/// Betti number b_{2k} of the Grassmannian of 2-planes in C^N: partitions
/// of k fitting in a 2 x (N-2) box.  Odd Betti numbers vanish.
long long grassmann_betti(int N, int two_k);

/// Dimension of the primitive middle cohomology: b_n - b_{n-2} for the
/// 2(N-2)-dimensional Grassmannian.
long long primitive_middle(int N);

/// Dimension of the degree-d graded piece of the Plücker coordinate ring of
/// the Grassmannian of 2-planes in C^N, counted by direct enumeration of
/// crossing-free multigraphs on Z/N with d edges.
long long hilbert_g2n(int N, int d);

/// Whether the system at hand has no rank gap: true for every P^n, and for
/// G(2,N) exactly when the primitive middle cohomology vanishes.
bool is_complete(const Model& m);

/// Closed-form expectations where known.  For P^n both ranks are nu(n); for
/// G(2,N) no generic closed form is implemented and the fields stay empty.
struct RankPrediction {
  std::string model;
  std::optional<Int> period_rank;    // vanishing cohomology dimension
  std::optional<Int> solution_rank;  // holonomic solution rank
  bool complete = false;             // period and solution ranks coincide
};

RankPrediction predict(const Model& m);

}  // namespace oracle
}  // namespace tautrank
