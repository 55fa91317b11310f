#include <doctest.h>

#include "support.hpp"
#include "uconf/fibre_algebra.hpp"

using namespace uconf;
using test::el;

TEST_CASE("scalars") {
  CHECK(parse_scalar("-4/6") == Scalar(-2, 3));
  CHECK(parse_scalar("7") == 7);
  CHECK(to_string(parse_scalar("3/6")) == "1/2");
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
}

TEST_CASE("generators") {
  const auto base = test::pqrs();
  const auto g = embed_generator(base, "p", 0);
  REQUIRE(g.terms().size() == 1);
  CHECK(g.terms().begin()->second == 1);
  CHECK(g.terms().begin()->first.find("p")->multiplicity(0) == 1);
  CHECK(embed_generator(base, "s", 1).terms().begin()->first.find("s")->multiplicity(1) == 1);
  CHECK_THROWS_AS(embed_generator(base, "s", 3), BasisOutOfRange);
  CHECK_THROWS_AS(embed_generator(base, "z", 0), UnknownPoint);
}

TEST_CASE("units") {
  CHECK(unit_hadamard({}).terms().begin()->first.size() == 0);
  const auto u = unit_hadamard({"p", "q"});
  REQUIRE(u.terms().size() == 1);
  CHECK(u.terms().begin()->first.degree() == 0);
  CHECK(u == cauchy_mul(unit_hadamard({"p"}), unit_hadamard({"q"})));
}

TEST_CASE("Hadamard product") {
  const auto base = test::pqrs();
  const auto a = el("3 * e[p,0] # e[s,1] + e[p,0] # 1[s]", base);
  CHECK(hadamard_mul(unit_hadamard({"p", "s"}), a) == a);
  const auto sq = hadamard_mul(el("e[p,0]", base), el("e[p,0]", base));
  CHECK(sq.terms().begin()->first.find("p")->multiplicity(0) == 2);
  CHECK(hadamard_mul(el("e[p,0] # 1[q]", base), el("1[p] # e[q,0]", base)) ==
        el("e[p,0] # e[q,0]", base));
  CHECK_THROWS_AS(hadamard_mul(el("e[p,0]", base), el("e[q,0]", base)), ConfigMismatch);
}

TEST_CASE("Cauchy product") {
  const auto base = test::pqrs();
  const auto a = el("2 * e[p,0] . e[p,0]", base);
  CHECK(cauchy_mul(unit_hadamard({}), a) == a);
  const auto pq = cauchy_mul(el("e[p,0]", base), el("e[q,0]", base));
  CHECK(pq.config() == Configuration{"p", "q"});
  CHECK(pq.terms().size() == 1);
  CHECK_THROWS_AS(cauchy_mul(el("e[p,0]", base), el("e[p,0]", base)), OverlappingConfigurations);
}

TEST_CASE("elements over a fixed configuration") {
  const auto base = test::pqrs();
  FibreElement z({"p"});
  CHECK(z.is_zero());
  CHECK_THROWS_AS(z.add_term(CauchyMonomial::unit({"q"}), 1), ConfigMismatch);
  auto a = el("e[p,0]", base);
  a -= el("e[p,0]", base);
  CHECK(a.is_zero());
  CHECK(a == FibreElement({"p"}));
  CHECK_FALSE(FibreElement({"p"}) == FibreElement({"q"}));
}

TEST_CASE("monomial surgery") {
  const auto base = test::pqrs();
  const auto m = el("e[p,0] . e[p,0] # e[s,1]", base).terms().begin()->first;
  CHECK(m.degree() == 3);
  CHECK(m.lowered("p", 0).find("p")->multiplicity(0) == 1);
  CHECK(m.lowered("s", 1).find("s")->is_unit());
  CHECK(m.raised("s", 0).degree() == 4);
  CHECK(m.restricted({"s"}).config() == Configuration{"s"});
  CHECK_THROWS_AS(m.lowered("s", 0), InvalidArgument);
  CHECK_THROWS_AS(m.lowered("q", 0), ConfigMismatch);
  CHECK_THROWS_AS(CauchyMonomial({PointFactor{"p", {}}, PointFactor{"p", {}}}),
                  OverlappingConfigurations);
}

TEST_CASE("degrees") {
  const auto base = test::pqrs();
  auto d = degrees(unit_hadamard({}));
  CHECK(d.config.empty());
  CHECK(d.hadamard_degrees == std::vector<std::uint32_t>{0});
  d = degrees(el("e[p,0]", base));
  CHECK(d.hadamard_degrees == std::vector<std::uint32_t>{1});
  d = degrees(el("e[p,0] . e[p,0] # e[q,0]", base));
  CHECK(d.config == Configuration{"p", "q"});
  CHECK(d.hadamard_degrees == std::vector<std::uint32_t>{3});
}

TEST_CASE("truncated fibre dimension matches enumeration") {
  const auto base = test::pqrs();
  // a point of rank r carries C(r+d, d) monomials of degree <= d
  CHECK(truncated_fibre_dim(base, {"s"}, 2) == 6);
  CHECK(truncated_fibre_dim(base, {"p", "s"}, 2) == 18);
  for (std::uint32_t d = 0; d <= 3; ++d)
    for (std::size_t k = 0; k <= 3; ++k)
      for (const auto& x : base.configurations(k))
        CHECK(enumerate_monomials(base, x, d).size() == truncated_fibre_dim(base, x, d));
  CHECK(enumerate_linear_monomials(base, {"p", "s"}).size() == 2);
}
