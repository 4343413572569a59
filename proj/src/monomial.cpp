#include <algorithm>
#include <stdexcept>

#include "tautrank/ring.hpp"

namespace tautrank {

int Monomial::degree() const {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

Monomial Monomial::times(const Monomial& other) const {
  if (e.size() != other.e.size())
    throw std::invalid_argument("monomial variable count mismatch");
  Monomial m(*this);
  for (std::size_t i = 0; i < e.size(); ++i) m.e[i] += other.e[i];
  return m;
}

bool Monomial::operator<(const Monomial& o) const {
  int da = degree(), db = o.degree();
  if (da != db) return da < db;
  // Within a degree: exponent tuple lex descending, so x0^d comes first.
  return e > o.e;
}

std::string Monomial::str(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names.at(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

void enumerate_rec(int nvars, int pos, int remaining, std::vector<int>& cur,
                   std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    cur[pos] = remaining;
    out.push_back(Monomial(cur));
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur[pos] = k;
    enumerate_rec(nvars, pos + 1, remaining - k, cur, out);
  }
}

}  // namespace

std::vector<Monomial> enumerate_monomials(int nvars, int degree) {
  if (nvars <= 0) throw std::invalid_argument("need at least one variable");
  if (degree < 0) return {};
  std::vector<Monomial> out;
  std::vector<int> cur(nvars, 0);
  enumerate_rec(nvars, 0, degree, cur, out);
  return out;
}

}  // namespace tautrank
