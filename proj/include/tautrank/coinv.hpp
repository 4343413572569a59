// Truncated coinvariant dimension of R·e^f under the ĝ-action
//   x · φ = Z*(x)φ + φ·(Z*(x)f) − β(x)φ ,
// whose stabilized value is the holonomic solution rank.
//
// The truncation Q_D is saturated: relations are sourced from R_r with
// r ≤ D, each lying in R_0 ⊕ … ⊕ R_{D+1}, and Q_D is the codimension of
// their projection to R_0 ⊕ … ⊕ R_D along the top block.  Equivalently,
// Q_D = dim R_{≤D} − dim(W ∩ R_{≤D}) with W the span of the relations;
// classes that only die one level up are already counted out at level D,
// which is what makes Q_D monotone under D and stable at the true rank.
//
// membership/verify_relation use the plain subcomplex (sources r < D):
// for soundness of certificates only the forward implication matters —
// everything they reduce to zero genuinely is zero in the full quotient.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tautrank/eliminator.hpp"
#include "tautrank/models.hpp"

#include "json.hpp"

namespace tautrank {

struct CoinvOptions {
  int Dmax = -1;         // -1: model default
  int stab_window = 2;   // consecutive equal Q_D values needed to stabilize
  bool weight_zero = false;
  bool full_sweep = false;  // do not stop early at stabilization
  RankMode mode = RankMode::Auto;
  ModularConfig modular;
};

struct CoinvariantReport {
  std::string model;
  std::string section;
  std::vector<long long> dims;  // Q_D for D = 0..(last tried)
  bool stabilized = false;
  long long rank = -1;  // -1 when not stabilized
  std::string arithmetic_mode;
  bool weight_zero = false;
  bool probabilistic = false;
  std::vector<std::uint64_t> primes_used;

  nlohmann::json to_json() const;
  static CoinvariantReport from_json(const nlohmann::json& j);
};

long long default_Dmax(const Model& m);

CoinvariantReport coinvariant_rank(const Model& m, const Section& f,
                                   const CoinvOptions& opt = {});

/// Same computation restricted to the torus-weight-zero subcomplex.
/// Requires f torus-invariant (contract error otherwise); agrees with
/// coinvariant_rank whenever both stabilize.
CoinvariantReport weight_zero_rank(const Model& m, const Section& f,
                                   const CoinvOptions& opt = {});

/// Jacobian-ring oracle for smooth sections on P^n: Σ over degrees
/// d ≡ 0 mod (n+1), d ≤ n(n+1), of dim (ℂ[x]/J(f))_d.  Throws
/// "oracle inapplicable" when the Jacobian ideal is not zero-dimensional.
long long jacobian_oracle(int n, const Section& f);

struct MembershipResult {
  bool member = false;
  std::optional<Scalar> c;  // class1 ≡ c·class2 when the scalar is unique
};

/// Decides class1·e^f ≡ c·class2·e^f modulo ĝ(R e^f) within truncation D.
/// class1 ∈ R_r1 and class2 ∈ R_r2 are ambient polynomials in normal form.
MembershipResult membership(const Model& m, const Section& f,
                            const Polynomial& class1, int r1,
                            const Polynomial& class2, int r2, int D,
                            bool weight_zero = false);

struct RelationTerm {
  Polynomial value;  // ambient normal form, element of R_r
  int r = 0;
  Scalar coeff = Scalar(1);
};

/// Verifies Σ coeff·value ≡ 0 modulo ĝ(R e^f) within truncation D.
bool verify_relation(const Model& m, const Section& f,
                     const std::vector<RelationTerm>& terms, int D,
                     bool weight_zero = false);

}  // namespace tautrank
