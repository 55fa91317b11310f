#include <doctest.h>

#include "support.hpp"
#include "uconf/poisson.hpp"

using namespace uconf;
using test::el;

namespace {

BaseSpace three() {
  BaseSpace b;
  b.add_point("p", 1);
  b.add_point("q", 1);
  b.add_point("r", 1);
  return b;
}

}  // namespace

TEST_CASE("kernel storage") {
  Kernel k;
  k.set({"p", 0}, {"q", 0}, 1);
  CHECK(kernel_eval(k, {"p", 0}, {"q", 0}) == 1);
  CHECK(kernel_eval(k, {"q", 0}, {"p", 0}) == -1);
  CHECK(kernel_eval(k, {"p", 0}, {"r", 0}) == 0);
  k.set({"r", 0}, {"p", 0}, 5);
  CHECK(k({"p", 0}, {"r", 0}) == -5);
  CHECK(k.entries().count({Generator{"p", 0}, Generator{"r", 0}}) == 1);
  CHECK_THROWS_AS(k.set({"p", 0}, {"p", 0}, 1), SamePoint);
  CHECK_THROWS_AS(k({"p", 0}, {"p", 0}), SamePoint);
}

TEST_CASE("bracket on units and generators") {
  const auto base = three();
  Kernel k;
  const Scalar c(7, 3);
  k.set({"p", 0}, {"q", 0}, c);
  const auto b = el("e[q,0] . e[q,0]", base);
  CHECK(bracket_fibre(unit_hadamard({"p"}), b, k).is_zero());
  CHECK(bracket_fibre(unit_hadamard({}), b, k).is_zero());
  CHECK(bracket_fibre(el("e[p,0]", base), el("e[q,0]", base), k) == c * el("1[p,q]", base));
  CHECK_THROWS_AS(bracket_fibre(el("e[p,0]", base), el("e[p,0]", base), k),
                  OverlappingConfigurations);
}

TEST_CASE("bracket of a square with a generator") {
  const auto base = three();
  Kernel k;
  const Scalar c(-3, 2);
  k.set({"p", 0}, {"q", 0}, c);
  const auto a = el("e[p,0] . e[p,0]", base);
  const auto b = el("e[q,0]", base);
  // {e², f} = 2 e {e, f}
  const auto expected = 2 * c * el("e[p,0] # 1[q]", base);
  CHECK(bracket_fibre(a, b, k) == expected);
  CHECK(bracket_fibre_recursive(a, b, k, PeelOrder::Front) == expected);
  CHECK(bracket_fibre_recursive(a, b, k, PeelOrder::Back) == expected);
}

TEST_CASE("bracket of a Cauchy product with a generator") {
  const auto base = three();
  Kernel k;
  k.set({"q", 0}, {"r", 0}, 0);
  k.set({"p", 0}, {"r", 0}, 2);
  const auto a = el("e[p,0] # e[q,0]", base);
  const auto b = el("e[r,0]", base);
  // {e_p ⊡ e_q, e_r} = {e_p, e_r} ⊡ e_q + e_p ⊡ {e_q, e_r} = 2·1_p⊡e_q⊡1_r
  const auto expected = el("2 * 1[p] # e[q,0] # 1[r]", base);
  CHECK(bracket_fibre(a, b, k) == expected);
  CHECK(bracket_fibre_recursive(a, b, k, PeelOrder::Front) == expected);
  CHECK(bracket_fibre_recursive(a, b, k, PeelOrder::Back) == expected);
}

TEST_CASE("nested brackets of generators vanish") {
  const auto base = three();
  Kernel k;
  k.set({"p", 0}, {"q", 0}, 1);
  k.set({"p", 0}, {"r", 0}, 2);
  k.set({"q", 0}, {"r", 0}, 3);
  const auto inner = bracket_fibre(el("e[p,0]", base), el("e[q,0]", base), k);
  CHECK(inner == el("1[p,q]", base));
  CHECK(bracket_fibre(inner, el("e[r,0]", base), k).is_zero());
}

TEST_CASE("mixed-rank bracket") {
  BaseSpace base;
  base.add_point("p", 2);
  base.add_point("q", 2);
  Kernel k;
  k.set({"p", 0}, {"q", 1}, 3);
  k.set({"p", 1}, {"q", 1}, 5);
  const auto a = el("e[p,0] . e[p,1]", base);
  const auto b = el("e[q,1] . e[q,1]", base);
  // ∂_{p0}a = e_{p1}, ∂_{p1}a = e_{p0}, ∂_{q1}b = 2 e_{q1}
  const auto expected =
      el("6 * e[p,1] # e[q,1] + 10 * e[p,0] # e[q,1]", base);
  CHECK(bracket_fibre(a, b, k) == expected);
  CHECK(bracket_fibre_recursive(a, b, k, PeelOrder::Front) == expected);
  CHECK(bracket_fibre_recursive(a, b, k, PeelOrder::Back) == expected);
}

TEST_CASE("bracket with densities") {
  const auto base = three();
  Kernel k;
  k.set({"p", 0}, {"q", 0}, 4);
  const auto a = el("e[p,0]", base);
  const auto b = el("e[q,0]", base);
  auto r = bracket_with_density(a, {1}, b, {1}, k);
  CHECK(r.element == bracket_fibre(a, b, k));
  CHECK(r.density.value == 1);
  r = bracket_with_density(a, {Scalar(1, 2)}, b, {3}, k);
  CHECK(r.density.value == Scalar(3, 2));
  CHECK_THROWS_AS(bracket_with_density(a, {0}, b, {1}, k), InvalidArgument);
}
