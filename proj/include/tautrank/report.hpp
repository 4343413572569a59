// Cross-route comparison report: one RouteResult per way of computing the
// rank (coinvariants, weight-zero coinvariants, de Rham, Jacobian oracle,
// closed form), with agreement defined as every stabilized route giving the
// same integer — never claimed with fewer than two stabilized routes.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace tautrank {

struct RouteResult {
  std::string route;        // coinv | coinv-wz | derham | jacobian | nu
  bool available = false;   // attempted and produced a value
  bool stabilized = false;  // the value is a final claim, not a truncation
  long long value = -1;
  std::string note;

  nlohmann::json to_json() const;
  static RouteResult from_json(const nlohmann::json& j);
};

struct CompareReport {
  std::string model;
  std::string section;
  std::vector<RouteResult> routes;
  int stabilized_count = 0;
  bool agree = false;

  nlohmann::json to_json() const;
  static CompareReport from_json(const nlohmann::json& j);
};

}  // namespace tautrank
