#include <algorithm>

#include "coinv_internal.hpp"
#include "tautrank/coinv.hpp"

namespace tautrank {

MembershipResult membership(const Model& m, const Section& f,
                            const Polynomial& class1, int r1,
                            const Polynomial& class2, int r2, int D,
                            bool weight_zero) {
  if (D < std::max(r1, r2) + 1)
    throw std::invalid_argument("membership truncation D too small");
  detail::Assembly a = detail::make_assembly(m, f, D, weight_zero);
  Eliminator elim(a.total_rows);
  for (int r = 0; r < D; ++r)
    for (SparseVec& v : a.columns_for_degree(r)) elim.add_column(std::move(v));

  SparseVec v1 = elim.reduce(a.coords(m.normal_form(class1), r1));
  SparseVec v2 = elim.reduce(a.coords(m.normal_form(class2), r2));

  MembershipResult res;
  if (v1.empty()) {
    res.member = true;
    // class1 is already in the span; the scalar is unique (namely 0) only
    // when class2 is not.
    if (!v2.empty()) res.c = Scalar(0);
    return res;
  }
  if (v2.empty()) return res;  // class1 outside the span, class2 inside
  // Residues on the non-pivot rows are unique, so membership holds iff the
  // residues are proportional.
  if (v1.size() != v2.size()) return res;
  Scalar c = v1[0].value / v2[0].value;
  for (std::size_t k = 0; k < v1.size(); ++k) {
    if (v1[k].index != v2[k].index || v1[k].value != c * v2[k].value)
      return res;
  }
  res.member = true;
  res.c = c;
  return res;
}

bool verify_relation(const Model& m, const Section& f,
                     const std::vector<RelationTerm>& terms, int D,
                     bool weight_zero) {
  detail::Assembly a = detail::make_assembly(m, f, D, weight_zero);
  SparseVec v;
  for (const RelationTerm& t : terms) {
    if (t.r > D) throw std::invalid_argument("relation term above truncation");
    axpy(v, t.coeff, a.coords(m.normal_form(t.value), t.r));
  }
  if (v.empty()) return true;
  Eliminator elim(a.total_rows);
  for (int r = 0; r < D; ++r)
    for (SparseVec& col : a.columns_for_degree(r))
      elim.add_column(std::move(col));
  return elim.reduce(v).empty();
}

}  // namespace tautrank
