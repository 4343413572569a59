// Incremental Gauss–Jordan elimination over Q and over Z/p, plus the
// rank / cokernel_basis / in_span entry points built on top of it.
//
// The exact eliminator keeps pivot columns as primitive integer vectors that
// are mutually reduced (each pivot column is zero at every other pivot row),
// so reducing an incoming column is a single pass.  Pivot rows are chosen by
// smallest bit-size entry with lowest-index tie-break, which keeps entry
// growth in check and makes every result deterministic.
//
// The modular eliminator mirrors the structure with word-size arithmetic.
// rank mod p can only undercount the rational rank, so the modular rank mode
// reports the maximum over a prime set and flags the result as probabilistic
// unless enough primes agree.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tautrank/sparse.hpp"

namespace tautrank {

class Eliminator {
 public:
  explicit Eliminator(int nrows, bool track_combos = false)
      : nrows_(nrows), track_(track_combos) {}

  /// Feed one column; returns true when it enlarged the span.
  /// `tag` labels the column in tracked combinations (defaults to the
  /// number of columns seen so far).
  bool add_column(SparseVec v, int tag = -1);

  int rank() const { return static_cast<int>(pivots_.size()); }
  int rows() const { return nrows_; }
  int columns_seen() const { return seen_; }

  /// Pivot rows in ascending order.
  std::vector<int> pivot_rows() const;

  /// Row indices not used as pivots, ascending: standard basis vectors at
  /// these rows span a complement of the column span.
  std::vector<int> non_pivot_rows() const;

  /// Residue of v modulo the current column span.
  SparseVec reduce(SparseVec v) const;

  /// If v lies in the span, the coefficients (by column tag) expressing it;
  /// requires track_combos.
  std::optional<SparseVec> express(SparseVec v) const;

 private:
  struct Pivot {
    int row;
    SparseVec col;    // primitive integer entries, zero at other pivot rows
    SparseVec combo;  // only when tracking: col = sum combo[tag] * input[tag]
  };

  // Reduce v in place against all pivots; when tracking, accumulate the
  // pivot combination used into *used.
  void reduce_inplace(SparseVec& v, SparseVec* used) const;

  int nrows_;
  bool track_;
  int seen_ = 0;
  std::vector<Pivot> pivots_;
  std::unordered_map<int, int> by_row_;  // pivot row -> index into pivots_
};

class ModEliminator {
 public:
  ModEliminator(int nrows, std::uint64_t p) : nrows_(nrows), p_(p) {}

  bool add_column(const SparseVec& v);
  bool add_column_mod(std::vector<std::pair<int, std::uint64_t>> v);

  int rank() const { return static_cast<int>(pivots_.size()); }
  std::uint64_t prime() const { return p_; }

 private:
  using ModVec = std::vector<std::pair<int, std::uint64_t>>;

  int nrows_;
  std::uint64_t p_;
  std::vector<std::pair<int, ModVec>> pivots_;  // (row, column with col[row]=1)
  std::unordered_map<int, int> by_row_;
};

enum class RankMode { Auto, Exact, Modular };

struct ModularConfig {
  std::vector<std::uint64_t> primes;  // empty = first `count` primes > 2^20
  int count = 3;
  int agreement_count = 2;
  std::vector<std::uint64_t> resolved() const;
};

struct RankResult {
  long long value = 0;
  bool probabilistic = false;  // true when too few primes agreed
  std::string mode;            // "exact" or "modular"
  std::vector<std::uint64_t> primes_used;
};

/// Matrix dimension above which Auto switches from exact to modular.
constexpr int kAutoModularThreshold = 2000;

RankResult rank(const SparseMatrix& m, RankMode mode = RankMode::Auto,
                const ModularConfig& cfg = {});

/// Indices of standard target-space basis vectors spanning a complement of
/// the column span; size = rows − rank.  Exact and deterministic.
std::vector<int> cokernel_basis(const SparseMatrix& m);

/// Coefficients c with m·c = v, if any (exact; c is dense over columns).
std::optional<std::vector<Scalar>> in_span(const SparseMatrix& m,
                                           const SparseVec& v);

}  // namespace tautrank
