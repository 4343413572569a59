#include "tautrank/sparse.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace tautrank {

void normalize(SparseVec& v) {
  std::sort(v.begin(), v.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVec out;
  out.reserve(v.size());
  for (auto& e : v) {
    if (!out.empty() && out.back().index == e.index) {
      out.back().value += e.value;
    } else {
      out.push_back(std::move(e));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Entry& e) { return e.value == 0; }),
            out.end());
  v = std::move(out);
}

void axpy(SparseVec& u, const Scalar& c, const SparseVec& v) {
  if (c == 0 || v.empty()) return;
  SparseVec out;
  out.reserve(u.size() + v.size());
  std::size_t i = 0, j = 0;
  while (i < u.size() || j < v.size()) {
    if (j == v.size() || (i < u.size() && u[i].index < v[j].index)) {
      out.push_back(std::move(u[i++]));
    } else if (i == u.size() || v[j].index < u[i].index) {
      out.push_back({v[j].index, c * v[j].value});
      ++j;
    } else {
      Scalar s = u[i].value + c * v[j].value;
      if (s != 0) out.push_back({u[i].index, std::move(s)});
      ++i;
      ++j;
    }
  }
  u = std::move(out);
}

Scalar make_primitive(SparseVec& v) {
  if (v.empty()) return Scalar(1);
  Int den_lcm = 1;
  for (const auto& e : v)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            e.value.get_den().get_mpz_t());
  Int num_gcd = 0;
  for (const auto& e : v) {
    Int scaled = e.value.get_num() * (den_lcm / e.value.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  // factor = num_gcd / den_lcm, so that v / factor is primitive integer.
  Scalar factor(num_gcd, den_lcm);
  factor.canonicalize();
  Scalar inv = 1 / factor;
  for (auto& e : v) e.value *= inv;
  return factor;
}

const Scalar* find_entry(const SparseVec& v, int index) {
  auto it = std::lower_bound(
      v.begin(), v.end(), index,
      [](const Entry& e, int idx) { return e.index < idx; });
  if (it != v.end() && it->index == index) return &it->value;
  return nullptr;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : data_) n += c.size();
  return n;
}

void SparseMatrix::set(int r, int c, const Scalar& v) {
  auto& col = data_.at(c);
  auto it = std::lower_bound(
      col.begin(), col.end(), r,
      [](const Entry& e, int idx) { return e.index < idx; });
  if (it != col.end() && it->index == r) {
    if (v == 0)
      col.erase(it);
    else
      it->value = v;
  } else if (v != 0) {
    col.insert(it, {r, v});
  }
}

void SparseMatrix::add(int r, int c, const Scalar& v) {
  auto& col = data_.at(c);
  auto it = std::lower_bound(
      col.begin(), col.end(), r,
      [](const Entry& e, int idx) { return e.index < idx; });
  if (it != col.end() && it->index == r) {
    it->value += v;
    if (it->value == 0) col.erase(it);
  } else if (v != 0) {
    col.insert(it, {r, v});
  }
}

void SparseMatrix::set_column(int c, SparseVec v) {
  normalize(v);
  data_.at(c) = std::move(v);
}

int SparseMatrix::push_column(SparseVec v) {
  normalize(v);
  data_.push_back(std::move(v));
  return cols_++;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (int c = 0; c < cols_; ++c)
    for (const auto& e : data_[c]) t.data_[e.index].push_back({c, e.value});
  return t;
}

std::string SparseMatrix::to_json() const {
  nlohmann::json j;
  j["rows"] = rows_;
  j["cols"] = cols_;
  auto& entries = j["entries"] = nlohmann::json::array();
  for (int c = 0; c < cols_; ++c)
    for (const auto& e : data_[c])
      entries.push_back({e.index, c, to_string(e.value)});
  return j.dump();
}

SparseMatrix SparseMatrix::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  SparseMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
  for (const auto& e : j.at("entries"))
    m.add(e.at(0).get<int>(), e.at(1).get<int>(),
          scalar_from_string(e.at(2).get<std::string>()));
  return m;
}

}  // namespace tautrank
