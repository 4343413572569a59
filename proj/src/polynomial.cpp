#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "tautrank/ring.hpp"

namespace tautrank {

Polynomial Polynomial::constant(int nvars, const Scalar& c) {
  Polynomial p(nvars);
  p.add_term(Monomial::one(nvars), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Polynomial p(nvars);
  Monomial m = Monomial::one(nvars);
  m.e.at(i) = 1;
  p.add_term(m, Scalar(1));
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Scalar& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms) {
    if (d < 0)
      d = m.degree();
    else if (m.degree() != d)
      return false;
  }
  return true;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c == 0) return;
  if (m.nvars() != nv) throw std::invalid_argument("term variable mismatch");
  auto [it, inserted] = terms.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(*this);
  for (const auto& [m, c] : o.terms) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r(*this);
  for (const auto& [m, c] : o.terms) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(nv);
  for (const auto& [m1, c1] : terms)
    for (const auto& [m2, c2] : o.terms) r.add_term(m1.times(m2), c1 * c2);
  return r;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
  Polynomial r(nv);
  if (c == 0) return r;
  for (const auto& [m, v] : terms) r.terms.emplace(m, v * c);
  return r;
}

Polynomial Polynomial::operator-() const { return *this * Scalar(-1); }

Polynomial Polynomial::derive(int i) const {
  Polynomial r(nv);
  for (const auto& [m, c] : terms) {
    if (m.e.at(i) == 0) continue;
    Monomial d = m;
    d.e[i] -= 1;
    r.add_term(d, c * m.e[i]);
  }
  return r;
}

Polynomial Polynomial::euler() const {
  Polynomial r(nv);
  for (const auto& [m, c] : terms) r.add_term(m, c * m.degree());
  return r;
}

Polynomial Polynomial::apply_derivation(
    const std::vector<Polynomial>& var_images) const {
  if (static_cast<int>(var_images.size()) != nv)
    throw std::invalid_argument("derivation image count mismatch");
  Polynomial r(nv);
  for (int i = 0; i < nv; ++i) {
    if (var_images[i].is_zero()) continue;
    r = r + derive(i) * var_images[i];
  }
  return r;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms) {
    bool neg = c < 0;
    Scalar a = neg ? Scalar(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string ms = m.str(names);
    if (a == 1 && ms != "1") {
      out += ms;
    } else if (ms == "1") {
      out += to_string(a);
    } else {
      out += to_string(a) + "*" + ms;
    }
  }
  return out;
}

// --------------------------------------------------------------------------
// Parser: terms separated by +/-, each term a '*'-product of an optional
// rational coefficient and name[^power] factors.

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
};

std::optional<Scalar> parse_number(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    ++c.i;
  if (c.i == start) return std::nullopt;
  std::string num = c.s.substr(start, c.i - start);
  c.skip_ws();
  if (c.i < c.s.size() && c.s[c.i] == '/') {
    ++c.i;
    c.skip_ws();
    std::size_t dstart = c.i;
    while (c.i < c.s.size() &&
           std::isdigit(static_cast<unsigned char>(c.s[c.i])))
      ++c.i;
    if (c.i == dstart)
      throw std::invalid_argument("expected denominator after '/'");
    num += "/" + c.s.substr(dstart, c.i - dstart);
  }
  return scalar_from_string(num);
}

int parse_int(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    ++c.i;
  if (c.i == start) throw std::invalid_argument("expected integer exponent");
  return std::stoi(c.s.substr(start, c.i - start));
}

/// Greedy longest-name match at the cursor; -1 when nothing matches.
int match_name(Cursor& c, const std::vector<std::string>& names) {
  c.skip_ws();
  int best = -1;
  std::size_t best_len = 0;
  for (std::size_t k = 0; k < names.size(); ++k) {
    const auto& nm = names[k];
    if (nm.size() > best_len && c.s.compare(c.i, nm.size(), nm) == 0) {
      best = static_cast<int>(k);
      best_len = nm.size();
    }
  }
  if (best >= 0) c.i += best_len;
  return best;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& names) {
  Polynomial out(static_cast<int>(names.size()));
  Cursor c{text};
  if (c.done()) throw std::invalid_argument("empty polynomial");
  bool first = true;
  while (!c.done()) {
    Scalar sign(1);
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      if (ch == '-') sign = -1;
      ++c.i;
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' between terms");
    }
    first = false;

    Scalar coeff = sign;
    Monomial mono = Monomial::one(static_cast<int>(names.size()));
    bool have_factor = false;
    for (;;) {
      if (auto num = parse_number(c)) {
        coeff *= *num;
        have_factor = true;
      } else {
        int var = match_name(c, names);
        if (var < 0) break;
        int pow = 1;
        if (c.peek() == '^') {
          ++c.i;
          pow = parse_int(c);
        }
        mono.e[var] += pow;
        have_factor = true;
      }
      if (c.peek() == '*') {
        ++c.i;
        continue;
      }
      break;
    }
    if (!have_factor)
      throw std::invalid_argument("malformed term near position " +
                                  std::to_string(c.i));
    out.add_term(mono, coeff);
  }
  return out;
}

// --------------------------------------------------------------------------

int GradedPiece::index_of(const Monomial& m) const {
  auto it = index.find(m);
  return it == index.end() ? -1 : it->second;
}

SparseVec GradedPiece::coords(const Polynomial& p) const {
  SparseVec v;
  for (const auto& [m, c] : p.terms) {
    int i = index_of(m);
    if (i < 0)
      throw std::invalid_argument("polynomial leaves the graded piece");
    v.push_back({i, c});
  }
  normalize(v);
  return v;
}

GradedPiece graded_piece(int nvars, int degree) {
  GradedPiece g;
  g.degree = degree;
  g.basis = enumerate_monomials(nvars, degree);
  for (std::size_t i = 0; i < g.basis.size(); ++i)
    g.index.emplace(g.basis[i], static_cast<int>(i));
  return g;
}

}  // namespace tautrank
