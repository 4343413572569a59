#include "tautrank/scalar.hpp"

#include <stdexcept>

namespace tautrank {

std::size_t bit_size(const Scalar& s) {
  std::size_t num = mpz_sizeinbase(s.get_num().get_mpz_t(), 2);
  std::size_t den = mpz_sizeinbase(s.get_den().get_mpz_t(), 2);
  return num > den ? num : den;
}

Scalar scalar_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty scalar literal");
  Scalar s;
  if (s.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed scalar literal: " + text);
  s.canonicalize();
  return s;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

std::size_t hash_scalar(const Scalar& s) {
  // Hash the canonical decimal form; scalars are always canonicalized.
  std::size_t h = 1469598103934665603ull;
  for (char c : s.get_str()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace tautrank
