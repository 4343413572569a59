#include <stdexcept>

#include "tautrank/ring.hpp"

namespace tautrank {

QuotientPiece::QuotientPiece(int nvars, const std::vector<Polynomial>& gens,
                             int degree)
    : ambient_(graded_piece(nvars, degree)), elim_(ambient_.dim()) {
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous())
      throw std::invalid_argument("ideal generators must be homogeneous");
    int dg = g.degree();
    if (dg > degree) continue;
    for (const auto& mult : enumerate_monomials(nvars, degree - dg)) {
      SparseVec col;
      for (const auto& [m, c] : g.terms)
        col.push_back({ambient_.index_of(m.times(mult)), c});
      elim_.add_column(std::move(col));
    }
  }
  row_to_quot_.assign(ambient_.dim(), -1);
  for (int row : elim_.non_pivot_rows()) {
    row_to_quot_[row] = static_cast<int>(basis_.size());
    basis_.push_back(ambient_.basis[row]);
  }
}

SparseVec QuotientPiece::reduce(const Polynomial& p) const {
  if (p.is_zero()) return {};
  if (!p.is_homogeneous() || p.degree() != ambient_.degree)
    throw std::invalid_argument("polynomial degree does not match the piece");
  SparseVec residue = elim_.reduce(ambient_.coords(p));
  SparseVec out;
  out.reserve(residue.size());
  for (const auto& e : residue) {
    int q = row_to_quot_[e.index];
    if (q < 0)
      throw std::logic_error("reduction left a pivot-row coordinate");
    out.push_back({q, e.value});
  }
  normalize(out);
  return out;
}

}  // namespace tautrank
