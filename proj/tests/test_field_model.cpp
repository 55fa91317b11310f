#include <doctest.h>

#include "support.hpp"
#include "uconf/field_model.hpp"

using namespace uconf;
using test::el;

namespace {

PolyFunctional phi(const char* p, std::uint32_t i = 0) { return PolyFunctional::variable({p, i}); }

BaseSpace weighted() {
  BaseSpace b;
  b.add_point("p", 1, Scalar(1, 2));
  b.add_point("q", 2, 3);
  return b;
}

Section delta(const FibreElement& v) {
  Section s(2);
  s.add(v);
  return s;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const auto f = phi("p") * phi("p") + Scalar(3) * phi("q", 1);
  CHECK(f.degree() == 2);
  CHECK(f.derivative({"p", 0}) == Scalar(2) * phi("p"));
  CHECK(f.derivative({"q", 1}) == PolyFunctional::constant(3));
  CHECK(f.derivative({"q", 0}).is_zero());
  CHECK((f - f).is_zero());
  CHECK(render(PolyFunctional::constant(Scalar(-1, 2))) == "-1/2");
  CHECK(render(PolyFunctional()) == "0");
}

TEST_CASE("to_functional") {
  const auto base = weighted();
  CHECK(to_functional(unit_section(2), base) == PolyFunctional::constant(1));
  const auto fp = to_functional(delta(el("e[p,0]", base)), base);
  CHECK(render(fp) == "1/2*nu[p]*phi[p,0]");
  const auto fpq = to_functional(delta(el("e[p,0] . e[p,0] # e[q,1]", base)), base);
  CHECK(render(fpq) == "3/2*nu[p,q]*phi[p,0]^2*phi[q,1]");
}

TEST_CASE("evaluation") {
  const auto base = weighted();
  Field f;
  f.set("p", {2});
  f.set("q", {Scalar(1, 3), -1});
  f.validate(base);
  CHECK(evaluate(PolyFunctional::constant(1), f) == 1);
  CHECK(evaluate(to_functional(delta(el("e[p,0]", base)), base), f) == 1);
  CHECK(evaluate(to_functional(unit_section(2), base), f) == 1);
  CHECK_THROWS_AS(f.at({"q", 2}), BasisOutOfRange);
  CHECK_THROWS_AS(f.at({"z", 0}), UnknownPoint);

  Field missing;
  missing.set("p", {1});
  CHECK_THROWS_AS(missing.validate(base), InvalidArgument);
}

TEST_CASE("product of functionals matches convolution for disjoint deltas") {
  const auto base = weighted();
  const auto s = delta(el("e[p,0]", base));
  const auto t = delta(el("e[q,0] + 2 * e[q,1]", base));
  Field f;
  f.set("p", {3});
  f.set("q", {Scalar(1, 2), 5});
  CHECK(evaluate(to_functional(convolve(s, t), base), f) ==
        evaluate(to_functional(s, base) * to_functional(t, base), f));
  // a point never pairs with itself
  CHECK((to_functional(s, base) * to_functional(s, base)).is_zero());
}

TEST_CASE("Peierls bracket") {
  BaseSpace base;
  base.add_point("p", 1);
  base.add_point("q", 1);
  const Scalar c(5, 7);
  Kernel k;
  k.set({"p", 0}, {"q", 0}, c);
  CHECK(peierls_bracket(PolyFunctional::constant(3), phi("q"), k, base).is_zero());
  CHECK(peierls_bracket(phi("p"), phi("q"), k, base) == PolyFunctional::constant(c));
  CHECK(peierls_bracket(phi("p") * phi("p"), phi("q"), k, base) == (2 * c) * phi("p"));
  CHECK(peierls_bracket(phi("q"), phi("p"), k, base) == PolyFunctional::constant(-c));
}

TEST_CASE("oracle on weighted deltas") {
  BaseSpace base;
  base.add_point("p", 1, Scalar(2, 3));
  base.add_point("q", 1, 5);
  const Scalar c(-4);
  Kernel k;
  k.set({"p", 0}, {"q", 0}, c);
  const auto s = delta(el("e[p,0]", base));
  const auto t = delta(el("e[q,0]", base));
  const auto check = peierls_check(s, t, k, base);
  CHECK(check.equal);
  Field any;
  any.set("p", {11});
  any.set("q", {13});
  CHECK(evaluate(check.symbolic, any) == c * Scalar(2, 3) * 5);
  CHECK(oracle_check(s, s, k, base));
}

TEST_CASE("difference quotients") {
  BaseSpace base;
  base.add_point("p", 1);
  Field f;
  f.set("p", {3});
  const auto sq = phi("p") * phi("p");
  // ((3+h)² − 9)/h = 6 + h
  CHECK(difference_quotient(sq, f, {"p", 0}, Scalar(1, 4)) == Scalar(25, 4));
  CHECK(difference_quotient(phi("p"), f, {"p", 0}, Scalar(1, 8)) == 1);
  CHECK_THROWS_AS(difference_quotient(sq, f, {"p", 0}, 0), InvalidArgument);
}
