#include <bit>
#include <sstream>

#include "tautrank/derham.hpp"

namespace tautrank {
namespace derham {

namespace {

// (−1)^{#bits of mask below v}, or 0 when v is already present: the sign of
// inserting dx_v in front of dx_mask and sorting it into place.
int insert_sign(std::uint32_t mask, int v) {
  if (mask & (1u << v)) return 0;
  int below = std::popcount(mask & ((1u << v) - 1));
  return (below & 1) ? -1 : 1;
}

// Sign of sorting the concatenation dx_a ∧ dx_b (disjoint masks).
int merge_sign(std::uint32_t a, std::uint32_t b) {
  int inversions = 0;
  std::uint32_t rest = a;
  while (rest) {
    int s = std::countr_zero(rest);
    rest &= rest - 1;
    inversions += std::popcount(b & ((1u << s) - 1));
  }
  return (inversions & 1) ? -1 : 1;
}

}  // namespace

Form Form::term(int nv, std::uint32_t mask, const Monomial& m,
                const Scalar& c) {
  Form out(nv);
  out.add(mask, m, c);
  return out;
}

void Form::add(std::uint32_t mask, const Monomial& m, const Scalar& c) {
  if (c == 0) return;
  FormKey key{mask, m};
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

Form Form::operator+(const Form& o) const {
  Form out = *this;
  for (const auto& [k, c] : o.terms) out.add(k.mask, k.mono, c);
  return out;
}

Form Form::operator-(const Form& o) const {
  Form out = *this;
  for (const auto& [k, c] : o.terms) out.add(k.mask, k.mono, -c);
  return out;
}

Form Form::operator*(const Scalar& c) const {
  Form out(nvars);
  if (c == 0) return out;
  for (const auto& [k, w] : terms) out.terms.emplace(k, w * c);
  return out;
}

std::string Form::str(const std::vector<std::string>& names) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")*" << k.mono.str(names);
    std::uint32_t rest = k.mask;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      os << "*d" << names[v];
    }
  }
  return os.str();
}

Form from_polynomial(const Polynomial& p) {
  Form out(p.nv);
  for (const auto& [m, c] : p.terms) out.add(0, m, c);
  return out;
}

Form wedge(const Form& a, const Form& b) {
  Form out(a.nvars);
  for (const auto& [ka, ca] : a.terms) {
    for (const auto& [kb, cb] : b.terms) {
      if (ka.mask & kb.mask) continue;
      int s = merge_sign(ka.mask, kb.mask);
      out.add(ka.mask | kb.mask, ka.mono.times(kb.mono),
              ca * cb * Scalar(s));
    }
  }
  return out;
}

Form mul(const Polynomial& p, const Form& a) {
  Form out(a.nvars);
  for (const auto& [m, c] : p.terms)
    for (const auto& [k, w] : a.terms)
      out.add(k.mask, k.mono.times(m), w * c);
  return out;
}

Form d(const Form& a) {
  Form out(a.nvars);
  for (const auto& [k, c] : a.terms) {
    for (int v = 0; v < a.nvars; ++v) {
      int e = k.mono.e[v];
      if (e == 0) continue;
      int s = insert_sign(k.mask, v);
      if (s == 0) continue;
      Monomial m = k.mono;
      --m.e[v];
      out.add(k.mask | (1u << v), m, c * Scalar(e * s));
    }
  }
  return out;
}

Form contract(const Form& a, const std::vector<Polynomial>& field) {
  Form out(a.nvars);
  for (const auto& [k, c] : a.terms) {
    int pos = 0;
    std::uint32_t rest = k.mask;
    while (rest) {
      int s = std::countr_zero(rest);
      rest &= rest - 1;
      Scalar sign((pos & 1) ? -1 : 1);
      ++pos;
      for (const auto& [fm, fc] : field[s].terms)
        out.add(k.mask & ~(1u << s), k.mono.times(fm), c * fc * sign);
    }
  }
  return out;
}

Form euler_contract(const Form& a) {
  Form out(a.nvars);
  for (const auto& [k, c] : a.terms) {
    int pos = 0;
    std::uint32_t rest = k.mask;
    while (rest) {
      int s = std::countr_zero(rest);
      rest &= rest - 1;
      Scalar sign((pos & 1) ? -1 : 1);
      ++pos;
      Monomial m = k.mono;
      ++m.e[s];
      out.add(k.mask & ~(1u << s), m, c * sign);
    }
  }
  return out;
}

}  // namespace derham
}  // namespace tautrank
