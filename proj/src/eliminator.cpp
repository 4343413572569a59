#include "tautrank/eliminator.hpp"

#include <algorithm>
#include <stdexcept>

#include "tautrank/parallel.hpp"

namespace tautrank {

void Eliminator::reduce_inplace(SparseVec& v, SparseVec* used) const {
  // Collect the pivot-row entries of v first: pivot columns are zero at
  // every other pivot row, so the eliminations do not interact.
  std::vector<std::pair<int, Scalar>> hits;  // (pivot slot, coefficient)
  for (const auto& e : v) {
    auto it = by_row_.find(e.index);
    if (it != by_row_.end()) hits.emplace_back(it->second, e.value);
  }
  for (const auto& [slot, val] : hits) {
    const Pivot& p = pivots_[slot];
    const Scalar* lead = find_entry(p.col, p.row);
    Scalar c = -val / *lead;
    axpy(v, c, p.col);
    if (used) axpy(*used, c, p.combo);
  }
}

bool Eliminator::add_column(SparseVec v, int tag) {
  if (tag < 0) tag = seen_;
  ++seen_;
  normalize(v);
  SparseVec combo;
  if (track_) combo.push_back({tag, Scalar(1)});
  // combo tracks the expression of the *current* v, so scale it along.
  SparseVec used;
  reduce_inplace(v, track_ ? &used : nullptr);
  if (track_) axpy(combo, Scalar(1), used);
  if (v.empty()) return false;

  Scalar factor = make_primitive(v);
  if (track_) {
    Scalar inv = 1 / factor;
    for (auto& e : combo) e.value *= inv;
  }

  // Pivot: smallest bit-size entry, lowest row index on ties.
  int pivot_row = v.front().index;
  std::size_t best_bits = bit_size(v.front().value);
  for (const auto& e : v) {
    std::size_t b = bit_size(e.value);
    if (b < best_bits) {
      best_bits = b;
      pivot_row = e.index;
    }
  }

  // Restore mutual reduction: clear the new pivot row from older columns.
  const Scalar* lead = find_entry(v, pivot_row);
  for (auto& p : pivots_) {
    const Scalar* at = find_entry(p.col, pivot_row);
    if (!at) continue;
    Scalar c = -*at / *lead;
    axpy(p.col, c, v);
    if (track_) axpy(p.combo, c, combo);
    Scalar f = make_primitive(p.col);
    if (track_) {
      Scalar inv = 1 / f;
      for (auto& e : p.combo) e.value *= inv;
    }
  }

  by_row_[pivot_row] = static_cast<int>(pivots_.size());
  pivots_.push_back({pivot_row, std::move(v), std::move(combo)});
  return true;
}

std::vector<int> Eliminator::pivot_rows() const {
  std::vector<int> rows;
  rows.reserve(pivots_.size());
  for (const auto& p : pivots_) rows.push_back(p.row);
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::vector<int> Eliminator::non_pivot_rows() const {
  std::vector<int> rows;
  rows.reserve(nrows_ - pivots_.size());
  auto piv = pivot_rows();
  std::size_t j = 0;
  for (int r = 0; r < nrows_; ++r) {
    if (j < piv.size() && piv[j] == r) {
      ++j;
    } else {
      rows.push_back(r);
    }
  }
  return rows;
}

SparseVec Eliminator::reduce(SparseVec v) const {
  normalize(v);
  reduce_inplace(v, nullptr);
  return v;
}

std::optional<SparseVec> Eliminator::express(SparseVec v) const {
  if (!track_) throw std::logic_error("Eliminator built without tracking");
  normalize(v);
  SparseVec used;
  reduce_inplace(v, &used);
  if (!v.empty()) return std::nullopt;
  // v - sum used = 0, i.e. v = sum (-used) over the original columns.
  for (auto& e : used) e.value = -e.value;
  return used;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  return powmod(a, p - 2, p);  // p prime
}

std::uint64_t scalar_mod(const Scalar& s, std::uint64_t p) {
  Int num = s.get_num() % Int(static_cast<unsigned long>(p));
  Int den = s.get_den() % Int(static_cast<unsigned long>(p));
  std::uint64_t n = mpz_get_ui(num.get_mpz_t());
  if (num < 0) n = p - n;
  std::uint64_t d = mpz_get_ui(den.get_mpz_t());
  if (d == 0) throw std::domain_error("denominator divisible by prime");
  return mulmod(n % p, invmod(d % p, p), p);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 4) return n > 1;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

bool ModEliminator::add_column(const SparseVec& v) {
  ModVec mv;
  mv.reserve(v.size());
  for (const auto& e : v) {
    std::uint64_t x = scalar_mod(e.value, p_);
    if (x) mv.emplace_back(e.index, x);
  }
  return add_column_mod(std::move(mv));
}

bool ModEliminator::add_column_mod(ModVec v) {
  std::sort(v.begin(), v.end());
  std::vector<std::pair<int, std::uint64_t>> hits;
  for (const auto& [row, val] : v) {
    auto it = by_row_.find(row);
    if (it != by_row_.end()) hits.emplace_back(it->second, val);
  }
  for (const auto& [slot, val] : hits) {
    // v -= val * pivcol  (pivot columns have leading value 1)
    const ModVec& pc = pivots_[slot].second;
    ModVec out;
    out.reserve(v.size() + pc.size());
    std::size_t i = 0, j = 0;
    std::uint64_t c = p_ - val;
    while (i < v.size() || j < pc.size()) {
      if (j == pc.size() || (i < v.size() && v[i].first < pc[j].first)) {
        out.push_back(v[i++]);
      } else if (i == v.size() || pc[j].first < v[i].first) {
        out.emplace_back(pc[j].first, mulmod(c, pc[j].second, p_));
        ++j;
      } else {
        std::uint64_t s = (v[i].second + mulmod(c, pc[j].second, p_)) % p_;
        if (s) out.emplace_back(v[i].first, s);
        ++i;
        ++j;
      }
    }
    v = std::move(out);
  }
  if (v.empty()) return false;

  int pivot_row = v.front().first;  // lowest row index
  std::uint64_t inv = invmod(
      std::find_if(v.begin(), v.end(),
                   [&](const auto& e) { return e.first == pivot_row; })
          ->second,
      p_);
  for (auto& e : v) e.second = mulmod(e.second, inv, p_);

  for (auto& [row, col] : pivots_) {
    auto at = std::lower_bound(
        col.begin(), col.end(), std::make_pair(pivot_row, std::uint64_t{0}),
        [](const auto& a, const auto& b) { return a.first < b.first; });
    if (at == col.end() || at->first != pivot_row) continue;
    std::uint64_t c = p_ - at->second;
    ModVec out;
    out.reserve(col.size() + v.size());
    std::size_t i = 0, j = 0;
    while (i < col.size() || j < v.size()) {
      if (j == v.size() || (i < col.size() && col[i].first < v[j].first)) {
        out.push_back(col[i++]);
      } else if (i == col.size() || v[j].first < col[i].first) {
        out.emplace_back(v[j].first, mulmod(c, v[j].second, p_));
        ++j;
      } else {
        std::uint64_t s = (col[i].second + mulmod(c, v[j].second, p_)) % p_;
        if (s) out.emplace_back(col[i].first, s);
        ++i;
        ++j;
      }
    }
    col = std::move(out);
  }

  by_row_[pivot_row] = static_cast<int>(pivots_.size());
  pivots_.emplace_back(pivot_row, std::move(v));
  return true;
}

std::vector<std::uint64_t> ModularConfig::resolved() const {
  if (!primes.empty()) {
    for (auto p : primes) {
      if (p <= (1ull << 20))
        throw std::invalid_argument("modular primes must exceed 2^20");
      if (!is_prime_u64(p))
        throw std::invalid_argument("modular prime set contains a composite");
    }
    return primes;
  }
  std::vector<std::uint64_t> out;
  std::uint64_t candidate = (1ull << 20) + 1;
  while (static_cast<int>(out.size()) < count) {
    if (is_prime_u64(candidate)) out.push_back(candidate);
    candidate += 2;
  }
  return out;
}

RankResult rank(const SparseMatrix& m, RankMode mode,
                const ModularConfig& cfg) {
  bool use_exact;
  switch (mode) {
    case RankMode::Exact:
      use_exact = true;
      break;
    case RankMode::Modular:
      use_exact = false;
      break;
    default:
      use_exact = std::max(m.rows(), m.cols()) <= kAutoModularThreshold;
  }

  RankResult res;
  if (use_exact) {
    Eliminator e(m.rows());
    for (int c = 0; c < m.cols(); ++c) e.add_column(m.column(c));
    res.value = e.rank();
    res.mode = "exact";
    res.probabilistic = false;
    return res;
  }

  auto primes = cfg.resolved();
  std::vector<long long> ranks(primes.size());
  parallel_for(primes.size(), [&](std::size_t i) {
    ModEliminator e(m.rows(), primes[i]);
    for (int c = 0; c < m.cols(); ++c) e.add_column(m.column(c));
    ranks[i] = e.rank();
  });
  long long best = 0;
  for (auto r : ranks) best = std::max(best, r);
  int agree = 0;
  for (auto r : ranks)
    if (r == best) ++agree;
  res.value = best;
  res.mode = "modular";
  res.primes_used = primes;
  res.probabilistic = agree < cfg.agreement_count;
  return res;
}

std::vector<int> cokernel_basis(const SparseMatrix& m) {
  Eliminator e(m.rows());
  for (int c = 0; c < m.cols(); ++c) e.add_column(m.column(c));
  return e.non_pivot_rows();
}

std::optional<std::vector<Scalar>> in_span(const SparseMatrix& m,
                                           const SparseVec& v) {
  Eliminator e(m.rows(), /*track_combos=*/true);
  for (int c = 0; c < m.cols(); ++c) e.add_column(m.column(c), c);
  auto combo = e.express(v);
  if (!combo) return std::nullopt;
  std::vector<Scalar> coeffs(m.cols(), Scalar(0));
  for (const auto& e2 : *combo) coeffs.at(e2.index) = e2.value;
  return coeffs;
}

}  // namespace tautrank
