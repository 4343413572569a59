#include <stdexcept>

#include "tautrank/coinv.hpp"

namespace tautrank {

long long jacobian_oracle(int n, const Section& f) {
  if (n < 1) throw std::invalid_argument("jacobian_oracle needs n >= 1");
  const int nvars = n + 1;
  if (f.poly.nv != nvars || f.poly.degree() != n + 1 ||
      !f.poly.is_homogeneous())
    throw std::invalid_argument(
        "jacobian_oracle expects a degree-(n+1) section on pn:" +
        std::to_string(n));

  std::vector<Polynomial> jac;
  for (int i = 0; i < nvars; ++i) jac.push_back(f.poly.derive(i));

  // The quotient by a zero-dimensional ideal vanishes from one degree
  // onward; for a smooth section that happens just past the socle degree
  // (n-1)(n+1).  A nonzero piece there means a singular section.
  const int socle = (n - 1) * (n + 1);
  if (QuotientPiece(nvars, jac, socle + 1).dim() != 0)
    throw std::runtime_error(
        "oracle inapplicable: Jacobian ideal is not zero-dimensional");

  long long total = 0;
  for (int d = 0; d <= n * (n + 1); d += n + 1)
    total += QuotientPiece(nvars, jac, d).dim();
  return total;
}

}  // namespace tautrank
