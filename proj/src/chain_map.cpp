#include <random>
#include <stdexcept>
#include <vector>

#include "tautrank/derham.hpp"

namespace tautrank {
namespace derham {

namespace {

// A linear vector field v(x_v) = Σ_w A[v][w]·x_w together with the character
// value β = −tr(A); these are exactly the Lie algebra elements of the P^n
// model (off-diagonals, Cartans and the center all have this shape).
struct LinField {
  std::vector<std::vector<int>> A;

  int nv() const { return static_cast<int>(A.size()); }

  std::vector<Polynomial> images() const {
    std::vector<Polynomial> out;
    for (int v = 0; v < nv(); ++v) {
      Polynomial p(nv());
      for (int w = 0; w < nv(); ++w) {
        if (A[v][w] == 0) continue;
        Monomial m = Monomial::one(nv());
        m.e[w] = 1;
        p.add_term(m, Scalar(A[v][w]));
      }
      out.push_back(std::move(p));
    }
    return out;
  }

  Scalar beta() const {
    long tr = 0;
    for (int v = 0; v < nv(); ++v) tr += A[v][v];
    return Scalar(-tr);
  }
};

LinField bracket(const LinField& x, const LinField& y) {
  // [v_A, v_B] has matrix B·A − A·B in this convention.
  int n = x.nv();
  LinField out;
  out.A.assign(n, std::vector<int>(n, 0));
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u) {
      int s = 0;
      for (int w = 0; w < n; ++w)
        s += y.A[v][w] * x.A[w][u] - x.A[v][w] * y.A[w][u];
      out.A[v][u] = s;
    }
  return out;
}

// x·g = v(g) + g·v(f) − β(x)·g.
Polynomial lie_act(const Section& f, const LinField& x, const Polynomial& g) {
  std::vector<Polynomial> img = x.images();
  Polynomial vg = g.apply_derivation(img);
  Polynomial vf = f.poly.apply_derivation(img);
  return vg + g * vf - g * x.beta();
}

// φ(x_1∧…∧x_p ⊗ g) = g · i_{v_1}(… i_{v_p}(Ω) …), Ω = dx_0∧…∧dx_{n}.
Form phi(int nv, const std::vector<LinField>& xs, const Polynomial& g) {
  Form w = Form::term(nv, (1u << nv) - 1, Monomial::one(nv), Scalar(1));
  for (auto it = xs.rbegin(); it != xs.rend(); ++it)
    w = contract(w, it->images());
  return mul(g, w);
}

bool form_equal(const Form& a, const Form& b) { return a.terms == b.terms; }

}  // namespace

nlohmann::json ChainMapReport::to_json() const {
  return {{"schema", 1},
          {"consistent", consistent},
          {"sign", sign},
          {"samples", samples},
          {"nonzero_samples", nonzero_samples}};
}

ChainMapReport chain_map_check(const Model& m, const Section& f, int p,
                               int samples, std::uint64_t seed) {
  if (m.kind() != ModelKind::Pn)
    throw std::invalid_argument("chain_map_check: P^n models only");
  if (p != 1 && p != 2)
    throw std::invalid_argument("chain_map_check: p must be 1 or 2");
  const int nv = m.nvars();
  if (nv > 20)
    throw std::invalid_argument("chain_map_check: too many variables");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 2);

  auto random_field = [&] {
    LinField x;
    x.A.assign(nv, std::vector<int>(nv, 0));
    for (auto& row : x.A)
      for (int& e : row) e = entry(rng);
    return x;
  };
  auto random_section_elem = [&] {
    Polynomial g(nv);
    for (const Monomial& mo : enumerate_monomials(nv, m.acdegree()))
      g.add_term(mo, Scalar(entry(rng)));
    return g;
  };

  ChainMapReport rep;
  rep.samples = samples;
  int sign = 0;
  bool consistent = true;

  for (int s = 0; s < samples && consistent; ++s) {
    Polynomial g = random_section_elem();
    Form lhs(nv), rhs(nv);
    if (p == 1) {
      LinField x = random_field();
      // d_CE(x ⊗ g) = −(x·g) as a 0-chain; on 0-chains the comparison map
      // multiplies by the volume form (no contractions).
      lhs = phi(nv, {}, -lie_act(f, x, g));
      Form im = phi(nv, {x}, g);
      rhs = d(im) + wedge(d(from_polynomial(f.poly)), im);
    } else {
      LinField x = random_field();
      LinField y = random_field();
      // d_CE(x∧y ⊗ g) = −y ⊗ x·g + x ⊗ y·g − [x,y] ⊗ g.
      lhs = phi(nv, {y}, -lie_act(f, x, g)) +
            phi(nv, {x}, lie_act(f, y, g)) +
            phi(nv, {bracket(x, y)}, g) * Scalar(-1);
      Form im = phi(nv, {x, y}, g);
      rhs = d(im) + wedge(d(from_polynomial(f.poly)), im);
    }
    if (rhs.is_zero()) {
      if (!lhs.is_zero()) consistent = false;
      continue;
    }
    if (lhs.is_zero()) {
      consistent = false;
      continue;
    }
    ++rep.nonzero_samples;
    int s_here = 0;
    if (form_equal(lhs, rhs)) s_here = 1;
    else if (form_equal(lhs, rhs * Scalar(-1))) s_here = -1;
    if (s_here == 0) {
      consistent = false;
      continue;
    }
    if (sign == 0) sign = s_here;
    else if (sign != s_here) consistent = false;
  }

  rep.consistent = consistent && rep.nonzero_samples > 0;
  rep.sign = rep.consistent ? sign : 0;
  return rep;
}

}  // namespace derham
}  // namespace tautrank
