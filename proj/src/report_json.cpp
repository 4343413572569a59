#include "tautrank/coinv.hpp"
#include "tautrank/derham.hpp"
#include "tautrank/report.hpp"

namespace tautrank {

nlohmann::json CoinvariantReport::to_json() const {
  return {{"schema", 1},
          {"model", model},
          {"section", section},
          {"dims", dims},
          {"stabilized", stabilized},
          {"rank", rank},
          {"arithmetic_mode", arithmetic_mode},
          {"weight_zero", weight_zero},
          {"probabilistic", probabilistic},
          {"primes_used", primes_used}};
}

CoinvariantReport CoinvariantReport::from_json(const nlohmann::json& j) {
  CoinvariantReport r;
  r.model = j.at("model").get<std::string>();
  r.section = j.at("section").get<std::string>();
  r.dims = j.at("dims").get<std::vector<long long>>();
  r.stabilized = j.at("stabilized").get<bool>();
  r.rank = j.at("rank").get<long long>();
  r.arithmetic_mode = j.at("arithmetic_mode").get<std::string>();
  r.weight_zero = j.at("weight_zero").get<bool>();
  r.probabilistic = j.at("probabilistic").get<bool>();
  r.primes_used = j.at("primes_used").get<std::vector<std::uint64_t>>();
  return r;
}

namespace derham {

nlohmann::json DerhamReport::to_json() const {
  return {{"schema", 1},
          {"model", model},
          {"section", section},
          {"k", k},
          {"tmax", tmax},
          {"t_dims", t_dims},
          {"dim", dim},
          {"stabilized", stabilized}};
}

DerhamReport DerhamReport::from_json(const nlohmann::json& j) {
  DerhamReport r;
  r.model = j.at("model").get<std::string>();
  r.section = j.at("section").get<std::string>();
  r.k = j.at("k").get<int>();
  r.tmax = j.at("tmax").get<int>();
  r.t_dims = j.at("t_dims").get<std::vector<long long>>();
  r.dim = j.at("dim").get<long long>();
  r.stabilized = j.at("stabilized").get<bool>();
  return r;
}

}  // namespace derham

nlohmann::json RouteResult::to_json() const {
  return {{"route", route},
          {"available", available},
          {"stabilized", stabilized},
          {"value", value},
          {"note", note}};
}

RouteResult RouteResult::from_json(const nlohmann::json& j) {
  RouteResult r;
  r.route = j.at("route").get<std::string>();
  r.available = j.at("available").get<bool>();
  r.stabilized = j.at("stabilized").get<bool>();
  r.value = j.at("value").get<long long>();
  r.note = j.at("note").get<std::string>();
  return r;
}

nlohmann::json CompareReport::to_json() const {
  nlohmann::json routes_json = nlohmann::json::array();
  for (const auto& r : routes) routes_json.push_back(r.to_json());
  return {{"schema", 1},
          {"model", model},
          {"section", section},
          {"routes", std::move(routes_json)},
          {"stabilized_count", stabilized_count},
          {"agree", agree}};
}

CompareReport CompareReport::from_json(const nlohmann::json& j) {
  CompareReport r;
  r.model = j.at("model").get<std::string>();
  r.section = j.at("section").get<std::string>();
  for (const auto& rj : j.at("routes")) r.routes.push_back(RouteResult::from_json(rj));
  r.stabilized_count = j.at("stabilized_count").get<int>();
  r.agree = j.at("agree").get<bool>();
  return r;
}

}  // namespace tautrank
