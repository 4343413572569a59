// Multigraded polynomial ring layer: monomials, sparse polynomials, graded
// pieces, and per-degree quotients by a homogeneous ideal.
//
// All monomial lists use one canonical enumeration order (degree ascending,
// then exponent tuple lexicographically descending, so e.g. the degree-2
// piece in two variables lists x0^2, x0*x1, x1^2).  Quotient pieces are
// presented by linear algebra: ambient monomials modulo the span of the
// ideal multiples landing in that degree, with the complement spanned by a
// deterministic subset of monomials.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tautrank/eliminator.hpp"
#include "tautrank/scalar.hpp"
#include "tautrank/sparse.hpp"

namespace tautrank {

struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

  int nvars() const { return static_cast<int>(e.size()); }
  int degree() const;
  Monomial times(const Monomial& other) const;

  bool operator==(const Monomial& o) const { return e == o.e; }
  /// Canonical order: degree ascending, then exponent tuple lex descending.
  bool operator<(const Monomial& o) const;

  std::string str(const std::vector<std::string>& names) const;
};

/// All monomials in `nvars` variables of total degree d, canonical order.
std::vector<Monomial> enumerate_monomials(int nvars, int degree);

struct Polynomial {
  int nv = 0;
  std::map<Monomial, Scalar> terms;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nv(nvars) {}
  static Polynomial constant(int nvars, const Scalar& c);
  static Polynomial variable(int nvars, int i);
  static Polynomial term(const Monomial& m, const Scalar& c);

  bool is_zero() const { return terms.empty(); }
  /// Total degree of the highest term, -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  void add_term(const Monomial& m, const Scalar& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Scalar& c) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const {
    return nv == o.nv && terms == o.terms;
  }

  /// Partial derivative with respect to variable i.
  Polynomial derive(int i) const;
  /// Euler operator: sum_i x_i d/dx_i.
  Polynomial euler() const;
  /// Apply the derivation sending x_i to var_images[i] (extended by
  /// Leibniz); var_images need not be linear.
  Polynomial apply_derivation(const std::vector<Polynomial>& var_images) const;

  std::string str(const std::vector<std::string>& names) const;
};

/// Parse a polynomial over the given variable names.  Accepts integer or
/// a/b coefficients, '*' products, '^' powers, and +/- separated terms,
/// e.g. "x0^2 + x1^2" or "p12*p34 - 2/3*p13*p24".  Throws
/// std::invalid_argument on malformed input.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& names);

struct GradedPiece {
  int degree = 0;
  std::vector<Monomial> basis;          // canonical order
  std::map<Monomial, int> index;

  int dim() const { return static_cast<int>(basis.size()); }
  int index_of(const Monomial& m) const;
  /// Coordinates of a homogeneous polynomial of this degree.
  SparseVec coords(const Polynomial& p) const;
};

GradedPiece graded_piece(int nvars, int degree);

/// Degree-d piece of k[x]/(gens): ambient monomials modulo the span of all
/// monomial multiples of the generators landing in degree d.
class QuotientPiece {
 public:
  QuotientPiece(int nvars, const std::vector<Polynomial>& gens, int degree);

  int degree() const { return ambient_.degree; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Monomial>& basis() const { return basis_; }
  const GradedPiece& ambient() const { return ambient_; }

  /// Coordinates of [p] in the quotient basis; p must be homogeneous of
  /// this degree (or zero).
  SparseVec reduce(const Polynomial& p) const;

 private:
  GradedPiece ambient_;
  Eliminator elim_;
  std::vector<Monomial> basis_;      // subset of ambient monomials
  std::vector<int> row_to_quot_;     // ambient row -> quotient index or -1
};

}  // namespace tautrank
