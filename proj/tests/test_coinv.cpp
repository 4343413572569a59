#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "tautrank/coinv.hpp"
#include "tautrank/models.hpp"

using namespace tautrank;

TEST_CASE("rank 1 for the projective line") {
  Model m = Model::pn(1);
  Section f = parse_section(m, "fermat");
  CoinvariantReport rep = coinvariant_rank(m, f);
  CHECK(rep.stabilized);
  CHECK(rep.rank == 1);
  CHECK(rep.arithmetic_mode == "exact");
  REQUIRE(rep.dims.size() >= 3);
  CHECK(rep.dims[0] == 1);
  CHECK(rep.dims[1] == 1);
  CHECK(rep.dims[2] == 1);
}

TEST_CASE("rank 2 for the plane cubic") {
  Model m = Model::pn(2);
  Section f = parse_section(m, "fermat");
  CoinvariantReport rep = coinvariant_rank(m, f);
  CHECK(rep.stabilized);
  CHECK(rep.rank == 2);
  REQUIRE(rep.dims.size() >= 3);
  CHECK(rep.dims[0] == 1);
  CHECK(rep.dims[1] == 2);
  CHECK(rep.dims[2] == 2);
}

TEST_CASE("rank 21 for the quartic surface family, modular arithmetic") {
  Model m = Model::pn(3);
  Section f = parse_section(m, "fermat");
  CoinvOptions opt;
  opt.mode = RankMode::Modular;
  CoinvariantReport rep = coinvariant_rank(m, f, opt);
  CHECK(rep.stabilized);
  CHECK(rep.rank == 21);
  CHECK(rep.arithmetic_mode == "modular");
  CHECK_FALSE(rep.probabilistic);  // enough primes agreed
  REQUIRE(rep.dims.size() >= 3);
  CHECK(rep.dims[0] == 1);
  CHECK(rep.dims[1] == 20);
  CHECK(rep.dims[2] == 21);
}

TEST_CASE("G(2,4) cyclic section has rank 1 in weight-zero mode") {
  Model m = Model::g2n(4);
  Section f = parse_section(m, "cyclic");
  CoinvOptions opt;
  opt.Dmax = 4;
  CoinvariantReport rep = weight_zero_rank(m, f, opt);
  CHECK(rep.stabilized);
  CHECK(rep.rank == 1);
  CHECK(rep.weight_zero);
  REQUIRE(rep.dims.size() >= 3);
  CHECK(rep.dims[0] == 1);
  CHECK(rep.dims[1] == 1);
  CHECK(rep.dims[2] == 1);
}

TEST_CASE("full and weight-zero coinvariants agree on G(2,4)") {
  Model m = Model::g2n(4);
  Section f = parse_section(m, "cyclic");
  CoinvOptions opt;
  opt.Dmax = 2;
  opt.full_sweep = true;
  CoinvariantReport full = coinvariant_rank(m, f, opt);
  CHECK(full.stabilized);
  CHECK(full.rank == 1);
  CoinvariantReport wz = weight_zero_rank(m, f, opt);
  CHECK(wz.stabilized);
  CHECK(wz.rank == full.rank);
}

TEST_CASE("weight-zero mode requires a torus-invariant section") {
  Model m = Model::pn(2);
  auto names = m.var_names();
  Section f = parse_section(m, "x0^3 + x1^3 + x2^3 + x0*x1*x2 + x0^2*x1");
  CHECK_FALSE(f.torus_invariant);
  CHECK_THROWS_AS(weight_zero_rank(m, f), std::invalid_argument);
}

TEST_CASE("a full sweep reproduces the early-stop answer") {
  Model m = Model::pn(2);
  Section f = parse_section(m, "fermat");
  CoinvOptions opt;
  opt.full_sweep = true;
  opt.Dmax = 4;
  CoinvariantReport sweep = coinvariant_rank(m, f, opt);
  CHECK(sweep.stabilized);
  CHECK(sweep.rank == 2);
  CHECK(sweep.dims.size() == 5);  // no early stop: D = 0..4
  for (std::size_t i = 1; i < sweep.dims.size(); ++i)
    CHECK(sweep.dims[i] == 2);
}

TEST_CASE("jacobian oracle matches the coinvariant rank on smooth fermat") {
  for (int n = 1; n <= 2; ++n) {
    Model m = Model::pn(n);
    Section f = parse_section(m, "fermat");
    CoinvariantReport rep = coinvariant_rank(m, f);
    CHECK(jacobian_oracle(n, f) == rep.rank);
  }
  // frozen n = 3 value without rerunning the rank
  Section f3 = parse_section(Model::pn(3), "fermat");
  CHECK(jacobian_oracle(3, f3) == 21);
}

TEST_CASE("jacobian oracle rejects singular sections") {
  Model m = Model::pn(2);
  // x0^3 has a positive-dimensional singular locus.
  Section f = parse_section(m, "x0^3");
  CHECK_THROWS_WITH_AS(jacobian_oracle(2, f),
                       doctest::Contains("inapplicable"), std::runtime_error);
}

TEST_CASE("membership: the section class is congruent to -1") {
  // f e^f = (center relation at m=0) ... the class of f in R_1 reduces to
  // -1 times the class of 1 in R_0.
  Model m = Model::g2n(4);
  Section f = parse_section(m, "cyclic");
  Polynomial one = Polynomial::constant(m.nvars(), Scalar(1));
  MembershipResult r = membership(m, f, f.poly, 1, one, 0, 2, false);
  CHECK(r.member);
  REQUIRE(r.c.has_value());
  CHECK(*r.c == Scalar(-1));
  // same conclusion inside the weight-zero subcomplex
  MembershipResult rwz = membership(m, f, f.poly, 1, one, 0, 2, true);
  CHECK(rwz.member);
  REQUIRE(rwz.c.has_value());
  CHECK(*rwz.c == Scalar(-1));
}

TEST_CASE("membership: an off-weight class dies with constant zero") {
  Model m = Model::g2n(4);
  Section f = parse_section(m, "cyclic");
  auto names = m.var_names();
  Polynomial cls = parse_polynomial("p12^4", names);
  Polynomial one = Polynomial::constant(m.nvars(), Scalar(1));
  MembershipResult r = membership(m, f, cls, 1, one, 0, 2, false);
  CHECK(r.member);
  REQUIRE(r.c.has_value());
  CHECK(*r.c == Scalar(0));
}

TEST_CASE("membership refuses a truncation too small to pose the question") {
  Model m = Model::g2n(4);
  Section f = parse_section(m, "cyclic");
  Polynomial one = Polynomial::constant(m.nvars(), Scalar(1));
  auto names = m.var_names();
  Polynomial cls = parse_polynomial("p12^2*p34^2", names);
  // The class lives in R_1, so D must be at least 2 for the window to
  // contain it; asking at D = 1 is an error, not a "not a member".
  CHECK_THROWS_AS(membership(m, f, cls, 1, one, 0, 1, false),
                  std::invalid_argument);
  MembershipResult r = membership(m, f, cls, 1, one, 0, 2, false);
  CHECK(r.member);
  REQUIRE(r.c.has_value());
  CHECK(*r.c == Scalar(0));
}

TEST_CASE("verify_relation accepts a real relation and rejects a fake one") {
  Model m = Model::g2n(4);
  Section f = parse_section(m, "cyclic");
  // Center applied to 1: f + 1 == 0 in the coinvariants (m = 0 strip).
  std::vector<RelationTerm> good;
  good.push_back({f.poly, 1, Scalar(1)});
  good.push_back({Polynomial::constant(m.nvars(), Scalar(1)), 0, Scalar(1)});
  CHECK(verify_relation(m, f, good, 2, false));
  CHECK(verify_relation(m, f, good, 2, true));

  std::vector<RelationTerm> bad;
  bad.push_back({f.poly, 1, Scalar(1)});
  bad.push_back({Polynomial::constant(m.nvars(), Scalar(2)), 0, Scalar(1)});
  CHECK_FALSE(verify_relation(m, f, bad, 2, false));
}

TEST_CASE("default truncation bounds are sane") {
  CHECK(default_Dmax(Model::pn(1)) >= 2);
  CHECK(default_Dmax(Model::pn(3)) >= 3);
  CHECK(default_Dmax(Model::g2n(4)) >= 3);
}

TEST_CASE("coinvariant report JSON round-trip") {
  Model m = Model::pn(1);
  Section f = parse_section(m, "fermat");
  CoinvariantReport rep = coinvariant_rank(m, f);
  CoinvariantReport back = CoinvariantReport::from_json(rep.to_json());
  CHECK(back.model == rep.model);
  CHECK(back.section == rep.section);
  CHECK(back.dims == rep.dims);
  CHECK(back.stabilized == rep.stabilized);
  CHECK(back.rank == rep.rank);
  CHECK(back.arithmetic_mode == rep.arithmetic_mode);
  CHECK(back.weight_zero == rep.weight_zero);
  CHECK(back.probabilistic == rep.probabilistic);
  CHECK(back.primes_used == rep.primes_used);
}
