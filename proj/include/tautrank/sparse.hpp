// Sparse vectors and matrices over exact rationals.
//
// Vectors are index-sorted entry lists with no explicit zeros; matrices are
// column-major.  All the rank/cokernel/span machinery lives in
// eliminator.hpp; this header is only the container layer.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tautrank/scalar.hpp"

namespace tautrank {

struct Entry {
  int index = 0;
  Scalar value;
};

/// Sorted-by-index list of nonzero entries.
using SparseVec = std::vector<Entry>;

/// Sort by index and merge duplicates, dropping zeros.
void normalize(SparseVec& v);

/// u += c * v  (both inputs normalized; result normalized).
void axpy(SparseVec& u, const Scalar& c, const SparseVec& v);

/// Divide by the gcd of numerators times 1/lcm of denominators, so the
/// result has integer entries with content 1.  Returns the factor removed
/// (original = factor * result); zero vector returns factor 1.
Scalar make_primitive(SparseVec& v);

const Scalar* find_entry(const SparseVec& v, int index);

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const;

  void set(int r, int c, const Scalar& v);
  void add(int r, int c, const Scalar& v);
  void set_column(int c, SparseVec v);
  const SparseVec& column(int c) const { return data_[c]; }

  /// Append a column (grows cols() by one), returns its index.
  int push_column(SparseVec v);

  SparseMatrix transpose() const;

  /// Compact JSON: {"rows":R,"cols":C,"entries":[[r,c,"a/b"],...]}.
  std::string to_json() const;
  static SparseMatrix from_json(const std::string& text);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseVec> data_;
};

}  // namespace tautrank
