// Twisted de Rham route to the solution rank.
//
// Forms live on the ambient affine space (P^n models) or on the affine cone
// over the Grassmannian (G(2,N) models, where coefficients are taken modulo
// the Plücker quadrics and j-forms additionally modulo dQ ∧ (j-1)-forms).
// The complex is graded by (form degree, level t); the coefficient of a form
// at level t has polynomial degree N_X·t − (form degree).  The differential
// is D = d − t·df∧ from level t; its cohomology at form degree k+1,
// truncated at level tmax, approximates the solution rank from below and
// stabilizes in t.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tautrank/models.hpp"
#include "tautrank/ring.hpp"

#include "json.hpp"

namespace tautrank {
namespace derham {

struct FormKey {
  std::uint32_t mask = 0;  // dx index set, bit i = dx_i
  Monomial mono;

  bool operator==(const FormKey& o) const {
    return mask == o.mask && mono == o.mono;
  }
  bool operator<(const FormKey& o) const {
    if (mask != o.mask) return mask < o.mask;
    return mono < o.mono;
  }
};

/// Polynomial-coefficient differential form, not necessarily homogeneous in
/// either form degree or coefficient degree.
struct Form {
  int nvars = 0;
  std::map<FormKey, Scalar> terms;

  Form() = default;
  explicit Form(int nv) : nvars(nv) {}
  static Form term(int nv, std::uint32_t mask, const Monomial& m,
                   const Scalar& c);

  bool is_zero() const { return terms.empty(); }
  void add(std::uint32_t mask, const Monomial& m, const Scalar& c);
  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator*(const Scalar& c) const;

  std::string str(const std::vector<std::string>& names) const;
};

/// A polynomial as a 0-form.
Form from_polynomial(const Polynomial& p);

Form wedge(const Form& a, const Form& b);
Form mul(const Polynomial& p, const Form& a);

/// Exterior derivative.
Form d(const Form& a);

/// Interior product i_v with the linear field v(x_s) = field[s] (entries may
/// be arbitrary polynomials; Leibniz contraction with the usual sign).
Form contract(const Form& a, const std::vector<Polynomial>& field);

/// Koszul contraction Δ = i_E with the Euler field E = Σ x_s ∂_s:
///   Δ(m·dx_S) = Σ_{s∈S} (−1)^{pos(s)} x_s·m·dx_{S∖s}.
/// Satisfies Δ² = 0, dΔ + Δd = (internal degree), and the graded Leibniz
/// rule; Δ(df) = N_X·f for f homogeneous of degree N_X.
Form euler_contract(const Form& a);

struct DerhamReport {
  std::string model;
  std::string section;
  int k = 0;
  int tmax = 0;
  std::vector<long long> t_dims;  // middle-space dimension at each level t
  long long dim = -1;
  bool stabilized = false;

  nlohmann::json to_json() const;
  static DerhamReport from_json(const nlohmann::json& j);
};

/// dim of the degree-(k+1) cohomology of the twisted complex truncated at
/// level tmax: middle = (k+1)-forms with t ≤ tmax, relations from k-forms
/// with t ≤ tmax−1, corank inside (k+2)-forms with t ≤ tmax+1.  stabilized
/// means the tmax−1 truncation already gives the same value.
DerhamReport twisted_cohomology_dim(const Model& m, const Section& f, int k,
                                    int tmax);

/// Verifies on every matrix entry of the truncated complex that conjugating
/// by μ(t) = 1/(t−1)! turns d − df∧ into the level-dependent d − t·df∧
/// (blocks with t ≥ 1; lower blocks are empty at the form degrees involved).
bool rescale_check(const Model& m, const Section& f, int k, int tmax);

struct ChainMapReport {
  bool consistent = false;
  int sign = 0;  // global ε with φ∘d_CE = ε·(d + df∧)∘φ on all samples
  int samples = 0;
  int nonzero_samples = 0;

  nlohmann::json to_json() const;
};

/// Samples the comparison map φ(x_1∧…∧x_p ⊗ g) = g·i_{v_1}…i_{v_p}(Ω)
/// between Lie algebra chains and twisted forms on random Lie algebra
/// elements and sections g, and reports whether a single global sign makes
/// it a chain map.  P^n models only.
ChainMapReport chain_map_check(const Model& m, const Section& f, int p,
                               int samples, std::uint64_t seed);

}  // namespace derham
}  // namespace tautrank
