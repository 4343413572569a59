#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "tautrank/models.hpp"

namespace tautrank {

Section fermat_section(const Model& m) {
  if (m.kind() != ModelKind::Pn)
    throw std::invalid_argument("'fermat' is only defined on pn models");
  Section s;
  s.text = "fermat";
  s.poly = Polynomial::constant(m.nvars(), Scalar(0));
  for (int i = 0; i < m.nvars(); ++i) {
    Monomial mono = Monomial::one(m.nvars());
    mono.e[static_cast<std::size_t>(i)] = m.acdegree();
    s.poly.add_term(mono, Scalar(1));
  }
  s.torus_invariant = false;
  return s;
}

Section cyclic_section(const Model& m) {
  if (m.kind() != ModelKind::G2N)
    throw std::invalid_argument("'cyclic' is only defined on g2n models");
  Section s;
  s.text = "cyclic";
  s.graphs = graphcalc::GraphSum::single(graphcalc::cyclic_graph(m.param()));
  s.poly = m.to_polynomial(s.graphs);
  s.torus_invariant = true;
  return s;
}

Section parse_section(const Model& m, const std::string& text) {
  if (text == "fermat") return fermat_section(m);
  if (text == "cyclic") return cyclic_section(m);

  std::string body = text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw std::invalid_argument("cannot open section file '" +
                                         text.substr(1) + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    body = buf.str();
  }

  Section s;
  s.text = text;
  Polynomial raw = parse_polynomial(body, m.var_names());
  if (raw.is_zero()) throw std::invalid_argument("section is zero");
  if (!raw.is_homogeneous() || raw.degree() != m.acdegree())
    throw std::invalid_argument(
        "section must be homogeneous of ambient degree " +
        std::to_string(m.acdegree()));
  s.poly = m.normal_form(raw);
  if (s.poly.is_zero())
    throw std::invalid_argument("section reduces to zero modulo the ideal");
  if (m.kind() == ModelKind::G2N) s.graphs = m.to_graphs(s.poly);

  // Torus invariance: a single weight whose traceless projection vanishes.
  std::optional<std::vector<int>> w;
  bool single_weight = true;
  for (const auto& [mono, c] : s.poly.terms) {
    std::vector<int> mw = m.torus_weight(mono);
    if (!w) {
      w = mw;
    } else if (*w != mw) {
      single_weight = false;
      break;
    }
  }
  s.torus_invariant = single_weight && w && Model::weight_is_zero(*w);
  return s;
}

SectionAction precompute_action(const Model& m, const Section& f) {
  SectionAction a;
  for (const auto& g : m.generators()) {
    Polynomial xf = m.act(g, f.poly);
    a.poly.push_back(xf);
    if (m.kind() == ModelKind::G2N) a.graphs.push_back(m.to_graphs(xf));
  }
  return a;
}

}  // namespace tautrank
