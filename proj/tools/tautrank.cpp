// Command-line driver: rank, derham, straighten, rank1, nu, hilbert,
// compare.  Exit codes: 0 success/stabilized, 2 unstabilized or routes
// disagree, 3 capability (route not available for the model), 1 error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tautrank/coinv.hpp"
#include "tautrank/derham.hpp"
#include "tautrank/models.hpp"
#include "tautrank/oracle.hpp"
#include "tautrank/rank1.hpp"
#include "tautrank/report.hpp"

namespace {

using namespace tautrank;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnstable = 2;
constexpr int kExitCapability = 3;

void emit(const nlohmann::json& j, const std::string& out_path) {
  std::string text = j.dump(2);
  std::cout << text << "\n";
  if (!out_path.empty()) {
    std::ofstream of(out_path);
    if (!of) throw std::runtime_error("cannot write " + out_path);
    of << text << "\n";
  }
}

std::string pretty_sum(const graphcalc::GraphSum& s) {
  if (s.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : s.terms) {
    Scalar a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (a != 1) out += to_string(a) + "*";
    out += g.str();
  }
  return out;
}

RankMode parse_mode(const std::string& mode) {
  if (mode == "auto") return RankMode::Auto;
  if (mode == "exact") return RankMode::Exact;
  if (mode == "modular") return RankMode::Modular;
  throw std::invalid_argument("unknown arithmetic mode '" + mode +
                              "' (auto|exact|modular)");
}

int default_tmax(const Model& m) {
  return m.kind() == ModelKind::Pn ? m.param() + 3 : 3;
}

struct CommonOpts {
  std::string model_spec;
  std::string section = "fermat";
  std::string out;
};

int run_rank(const CommonOpts& c, int Dmax, int stab_window, bool weight_zero,
             bool full_sweep, const std::string& mode) {
  Model m = Model::parse(c.model_spec);
  Section f = parse_section(m, c.section);
  CoinvOptions opt;
  opt.Dmax = Dmax;
  opt.stab_window = stab_window;
  opt.full_sweep = full_sweep;
  opt.mode = parse_mode(mode);
  CoinvariantReport rep =
      weight_zero ? weight_zero_rank(m, f, opt) : coinvariant_rank(m, f, opt);
  emit(rep.to_json(), c.out);
  return rep.stabilized ? kExitOk : kExitUnstable;
}

int run_derham(const CommonOpts& c, int k, int tmax, bool experimental,
               bool with_rescale) {
  Model m = Model::parse(c.model_spec);
  if (m.kind() == ModelKind::G2N && !experimental) {
    std::cerr << "derham on Grassmannian models is experimental; pass "
                 "--experimental to run it\n";
    return kExitCapability;
  }
  Section f = parse_section(m, c.section);
  if (k < 0) k = m.dimension();
  if (tmax < 0) tmax = default_tmax(m);
  derham::DerhamReport rep = derham::twisted_cohomology_dim(m, f, k, tmax);
  nlohmann::json j = rep.to_json();
  if (with_rescale) j["rescale_check"] = derham::rescale_check(m, f, k, tmax);
  emit(j, c.out);
  return rep.stabilized ? kExitOk : kExitUnstable;
}

int run_straighten(int N, const std::string& graph_text,
                   const std::string& out) {
  graphcalc::PluckerGraph g = graphcalc::parse_graph(N, graph_text);
  graphcalc::StraightenStats stats;
  graphcalc::GraphSum s = graphcalc::straighten(g, &stats);
  std::cout << pretty_sum(s) << "\n";
  if (!out.empty()) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [h, c] : s.terms)
      terms.push_back({{"graph", h.str()}, {"coeff", to_string(c)}});
    emit(nlohmann::json{{"schema", 1},
                        {"N", N},
                        {"input", g.str()},
                        {"operations", stats.operations},
                        {"result", terms}},
         out);
  }
  return kExitOk;
}

int run_rank1(int N, const std::string& graph_text, long long budget,
              bool verify, const std::string& out) {
  graphcalc::PluckerGraph g = graphcalc::parse_graph(N, graph_text);
  graphcalc::ReductionTrace trace = graphcalc::rank1_reduce(g, budget);
  nlohmann::json j = trace.to_json();
  if (verify) {
    Model m = Model::g2n(N);
    Section f = cyclic_section(m);
    graphcalc::TraceVerification v = graphcalc::verify_trace(m, f, trace);
    j["verification"] = {{"steps_checked", v.steps_checked},
                         {"steps_failed", v.steps_failed},
                         {"constant_consistent", v.constant_consistent}};
    emit(j, out);
    return trace.success && v.ok() ? kExitOk : kExitUnstable;
  }
  emit(j, out);
  return trace.success ? kExitOk : kExitUnstable;
}

int run_nu(int n) {
  std::cout << oracle::nu(n).get_str() << "\n";
  return kExitOk;
}

int run_hilbert(int N, int d) {
  std::cout << oracle::hilbert_g2n(N, d) << "\n";
  return kExitOk;
}

int run_compare(const CommonOpts& c, int Dmax, int tmax, bool experimental) {
  Model m = Model::parse(c.model_spec);
  Section f = parse_section(m, c.section);
  CompareReport rep;
  rep.model = m.id();
  rep.section = f.text;

  bool jacobian_ok = false;

  {  // coinvariants (weight-zero block for torus-invariant G2N sections)
    RouteResult r;
    bool wz = m.kind() == ModelKind::G2N && f.torus_invariant;
    r.route = wz ? "coinv-wz" : "coinv";
    try {
      CoinvOptions opt;
      opt.Dmax = Dmax;
      CoinvariantReport cr =
          wz ? weight_zero_rank(m, f, opt) : coinvariant_rank(m, f, opt);
      r.available = true;
      r.stabilized = cr.stabilized;
      r.value = cr.stabilized ? cr.rank : cr.dims.back();
      r.note = cr.arithmetic_mode + (cr.probabilistic ? ", probabilistic" : "");
    } catch (const std::exception& e) {
      r.note = e.what();
    }
    rep.routes.push_back(r);
  }
  {  // twisted de Rham
    RouteResult r;
    r.route = "derham";
    if (m.kind() == ModelKind::G2N && !experimental) {
      r.note = "experimental route disabled; pass --experimental";
    } else {
      try {
        int k = m.dimension();
        int tm = tmax > 0 ? tmax : default_tmax(m);
        derham::DerhamReport dr = derham::twisted_cohomology_dim(m, f, k, tm);
        r.available = true;
        r.stabilized = dr.stabilized;
        r.value = dr.dim;
        if (m.kind() == ModelKind::G2N) r.note = "experimental";
      } catch (const std::exception& e) {
        r.note = e.what();
      }
    }
    rep.routes.push_back(r);
  }
  if (m.kind() == ModelKind::Pn) {  // Jacobian ring oracle
    RouteResult r;
    r.route = "jacobian";
    try {
      r.value = jacobian_oracle(m.param(), f);
      r.available = true;
      r.stabilized = true;
      jacobian_ok = true;
    } catch (const std::exception& e) {
      r.note = e.what();
    }
    rep.routes.push_back(r);
  }
  if (m.kind() == ModelKind::Pn) {  // closed form, valid at smooth sections
    RouteResult r;
    r.route = "nu";
    r.available = true;
    r.value = oracle::nu(m.param()).get_si();
    r.stabilized = jacobian_ok;  // smoothness witnessed by the Jacobian route
    r.note = jacobian_ok ? "generic smooth prediction"
                         : "generic prediction; smoothness not witnessed";
    rep.routes.push_back(r);
  }

  long long first = -1;
  bool all_equal = true;
  rep.stabilized_count = 0;
  for (const auto& r : rep.routes) {
    if (!r.available || !r.stabilized) continue;
    if (rep.stabilized_count == 0)
      first = r.value;
    else if (r.value != first)
      all_equal = false;
    ++rep.stabilized_count;
  }
  rep.agree = rep.stabilized_count >= 2 && all_equal;
  emit(rep.to_json(), c.out);
  return rep.agree ? kExitOk : kExitUnstable;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holonomic rank toolkit for tautological systems"};
  app.require_subcommand(1);

  CommonOpts copts;
  int Dmax = -1, stab_window = 2, k = -1, tmax = -1, n = 0, N = 4, d = 0;
  long long budget = 200000;
  bool weight_zero = false, full_sweep = false, experimental = false;
  bool verify = false, with_rescale = false;
  std::string mode = "auto", graph_text;

  auto add_model = [&](CLI::App* cmd) {
    cmd->add_option("--model", copts.model_spec, "pn:<n> or g2n:<N>")
        ->required();
    cmd->add_option("--section", copts.section,
                    "fermat | cyclic | @file | inline polynomial");
    cmd->add_option("--out", copts.out, "also write the JSON report here");
  };

  CLI::App* rank = app.add_subcommand("rank", "coinvariant solution rank");
  add_model(rank);
  rank->add_option("--Dmax", Dmax, "truncation bound (default per model)");
  rank->add_option("--stab-window", stab_window,
                   "equal trailing dims needed to declare stabilization");
  rank->add_flag("--weight-zero", weight_zero,
                 "restrict to the torus-weight-zero subcomplex");
  rank->add_flag("--full-sweep", full_sweep, "do not stop at stabilization");
  rank->add_option("--mode", mode, "auto | exact | modular");

  CLI::App* derham_cmd =
      app.add_subcommand("derham", "twisted de Rham cohomology dimension");
  add_model(derham_cmd);
  derham_cmd->add_option("--k", k, "cohomological degree (default: dim X)");
  derham_cmd->add_option("--tmax", tmax, "level truncation");
  derham_cmd->add_flag("--experimental", experimental,
                       "enable the Grassmannian cone complex");
  derham_cmd->add_flag("--rescale-check", with_rescale,
                       "also verify the level-rescaling conjugation");

  CLI::App* straighten_cmd =
      app.add_subcommand("straighten", "straighten a Plücker graph");
  straighten_cmd->add_option("--n", N, "number of vertices")->required();
  straighten_cmd->add_option("--graph", graph_text, "e.g. \"1-3,2-4\"")
      ->required();
  straighten_cmd->add_option("--out", copts.out, "JSON report path");

  CLI::App* rank1_cmd = app.add_subcommand(
      "rank1", "rank-1 reduction certificate for a torus-invariant graph");
  rank1_cmd->add_option("--n", N, "number of vertices")->required();
  rank1_cmd->add_option("--graph", graph_text, "e.g. \"1-2,1-2,3-4,3-4\"")
      ->required();
  rank1_cmd->add_option("--budget", budget, "rewrite operation budget");
  rank1_cmd->add_flag("--verify", verify,
                      "verify every trace relation by membership");
  rank1_cmd->add_option("--out", copts.out, "JSON report path");

  CLI::App* nu_cmd = app.add_subcommand("nu", "closed-form generic rank");
  nu_cmd->add_option("--n", n, "projective dimension")->required();

  CLI::App* hilbert_cmd =
      app.add_subcommand("hilbert", "Plücker ring Hilbert function");
  hilbert_cmd->add_option("--n", N, "ambient N of G(2,N)")->required();
  hilbert_cmd->add_option("--d", d, "degree")->required();

  CLI::App* compare_cmd =
      app.add_subcommand("compare", "run all applicable routes and compare");
  add_model(compare_cmd);
  compare_cmd->add_option("--Dmax", Dmax, "coinvariant truncation bound");
  compare_cmd->add_option("--tmax", tmax, "de Rham level truncation");
  compare_cmd->add_flag("--experimental", experimental,
                        "include the Grassmannian de Rham route");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rank->parsed())
      return run_rank(copts, Dmax, stab_window, weight_zero, full_sweep, mode);
    if (derham_cmd->parsed())
      return run_derham(copts, k, tmax, experimental, with_rescale);
    if (straighten_cmd->parsed())
      return run_straighten(N, graph_text, copts.out);
    if (rank1_cmd->parsed())
      return run_rank1(N, graph_text, budget, verify, copts.out);
    if (nu_cmd->parsed()) return run_nu(n);
    if (hilbert_cmd->parsed()) return run_hilbert(N, d);
    if (compare_cmd->parsed())
      return run_compare(copts, Dmax, tmax, experimental);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
