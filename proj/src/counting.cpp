#include "tautrank/oracle.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tautrank {
namespace oracle {

Int nu(int n) {
  if (n < 1) throw std::invalid_argument("nu requires n >= 1");
  Int base = 1;
  for (int i = 0; i < n; ++i) base *= n;  // n^n
  Int sign = (n % 2 == 0) ? 1 : -1;       // (-1)^n
  Int num = Int(n) * (base - sign);
  if (num % (n + 1) != 0)
    throw std::logic_error("nu numerator not divisible by n+1");
  return num / (n + 1);
}

Int count_a(int n, int s) {
  if (n < 1) throw std::invalid_argument("count_a requires n >= 1");
  if (s < 0) return 0;
  // DP over the n+1 slots, each contributing 0..n-1.
  std::vector<Int> dp(s + 1, 0);
  dp[0] = 1;
  for (int slot = 0; slot < n + 1; ++slot) {
    std::vector<Int> next(s + 1, 0);
    for (int t = 0; t <= s; ++t) {
      if (dp[t] == 0) continue;
      for (int k = 0; k <= n - 1 && t + k <= s; ++k) next[t + k] += dp[t];
    }
    dp = std::move(next);
  }
  return dp[s];
}

Int count_a_total(int n) {
  Int total = 0;
  int max_s = (n + 1) * (n - 1);  // all slots at the cap
  for (int s = 0; s <= max_s; s += n + 1) total += count_a(n, s);
  return total;
}

long long grassmann_betti(int N, int two_k) {
  if (N < 2) throw std::invalid_argument("grassmann_betti requires N >= 2");
  if (two_k < 0 || two_k > 4 * (N - 2)) return 0;
  if (two_k % 2 != 0) return 0;  // odd cohomology vanishes
  int k = two_k / 2;
  long long count = 0;
  for (int l2 = 0; 2 * l2 <= k; ++l2) {
    int l1 = k - l2;
    if (l1 <= N - 2 && l2 <= l1) ++count;
  }
  return count;
}

long long primitive_middle(int N) {
  int half = 2 * (N - 2);  // complex dimension of the Grassmannian
  return grassmann_betti(N, half) - grassmann_betti(N, half - 2);
}

namespace {

// Chords of the N-gon (1-based endpoints i<j), in lexicographic order.
std::vector<std::pair<int, int>> all_chords(int N) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) out.emplace_back(i, j);
  return out;
}

bool chords_cross(std::pair<int, int> a, std::pair<int, int> b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

// Number of pairwise-noncrossing chord subsets of each size, by backtracking
// over the chord list with a compatibility table.
void count_supports(const std::vector<std::pair<int, int>>& chords,
                    const std::vector<std::vector<bool>>& compat,
                    std::size_t from, std::vector<int>& chosen,
                    std::vector<long long>& by_size, int max_size) {
  by_size[chosen.size()] += 1;
  if (static_cast<int>(chosen.size()) == max_size) return;
  for (std::size_t c = from; c < chords.size(); ++c) {
    bool ok = true;
    for (int ch : chosen)
      if (!compat[ch][c]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(static_cast<int>(c));
    count_supports(chords, compat, c + 1, chosen, by_size, max_size);
    chosen.pop_back();
  }
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

long long hilbert_g2n(int N, int d) {
  if (N < 4) throw std::invalid_argument("hilbert_g2n requires N >= 4");
  if (d < 0) return 0;
  if (d == 0) return 1;
  auto chords = all_chords(N);
  std::vector<std::vector<bool>> compat(chords.size(),
                                        std::vector<bool>(chords.size()));
  for (std::size_t a = 0; a < chords.size(); ++a)
    for (std::size_t b = 0; b < chords.size(); ++b)
      compat[a][b] = !chords_cross(chords[a], chords[b]);

  std::vector<long long> by_size(chords.size() + 1, 0);
  std::vector<int> chosen;
  count_supports(chords, compat, 0, chosen, by_size,
                 std::min<int>(d, static_cast<int>(chords.size())));

  // A multigraph with support of size k and d edges total distributes the
  // remaining multiplicity freely: C(d-1, k-1) ways per support.
  long long total = 0;
  for (int k = 1; k <= d && k <= static_cast<int>(chords.size()); ++k)
    total += by_size[k] * binom(d - 1, k - 1);
  return total;
}

bool is_complete(const Model& m) {
  if (m.kind() == ModelKind::Pn) return true;
  return primitive_middle(m.param()) == 0;
}

RankPrediction predict(const Model& m) {
  RankPrediction out;
  out.model = m.id();
  out.complete = is_complete(m);
  if (m.kind() == ModelKind::Pn) {
    Int v = nu(m.param());
    out.period_rank = v;
    out.solution_rank = v;
  }
  return out;
}

}  // namespace oracle
}  // namespace tautrank
