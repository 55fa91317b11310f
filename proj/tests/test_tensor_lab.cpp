#include <doctest.h>

#include "support.hpp"
#include "uconf/tensor_lab.hpp"

using namespace uconf;
using test::el;

namespace {

Word word(std::initializer_list<Letter> letters) { return Word(std::vector<Letter>(letters)); }

}  // namespace

TEST_CASE("words") {
  const auto w = word({{"q", 0}, {"p", 1}});
  CHECK(w.config() == Configuration{"p", "q"});
  CHECK(w.restricted({"p"}) == word({{"p", 1}}));
  CHECK(w.permuted({1, 0}) == word({{"p", 1}, {"q", 0}}));
  CHECK_THROWS(word({{"p", 0}, {"p", 1}}));
  CHECK_THROWS_AS(concat(w, word({{"p", 0}})), OverlappingConfigurations);
}

TEST_CASE("concatenation") {
  const auto w = TensorElement(word({{"p", 0}}));
  CHECK(concat(TensorElement(Word{}), w) == w);
  CHECK(concat(TensorElement(word({{"p", 0}})), TensorElement(word({{"q", 0}}))) ==
        TensorElement(word({{"p", 0}, {"q", 0}})));
  const auto a = TensorElement(word({{"p", 0}}));
  const auto b = TensorElement(word({{"q", 0}}));
  CHECK_FALSE(concat(a, b) == concat(b, a));
  CHECK(symmetrize(concat(a, b)) == symmetrize(concat(b, a)));
}

TEST_CASE("symmetrization") {
  const auto base = test::pqrs();
  const auto pq = word({{"p", 0}, {"q", 0}});
  const auto qp = word({{"q", 0}, {"p", 0}});
  CHECK(symmetrize(TensorElement(pq)) == el("e[p,0] # e[q,0]", base));
  CHECK(symmetrize(TensorElement(qp)) == el("e[p,0] # e[q,0]", base));
  CHECK(symmetrize(TensorElement(pq) + Scalar(-1) * TensorElement(qp)).is_zero());
  CHECK(symmetrize(TensorElement(Word{})) == unit_hadamard({}));
}

TEST_CASE("alternation") {
  const auto pq = word({{"p", 0}, {"q", 0}});
  const auto qp = word({{"q", 0}, {"p", 0}});
  CHECK(alternate(TensorElement(pq)) == TensorElement(pq));
  CHECK(alternate(TensorElement(qp)) == TensorElement(pq, -1));
  CHECK(alternate(TensorElement(pq) + TensorElement(qp)).is_zero());
  const auto rqp = word({{"r", 0}, {"q", 0}, {"p", 0}});
  CHECK(alternate(TensorElement(rqp)) == TensorElement(word({{"p", 0}, {"q", 0}, {"r", 0}}), -1));
}

TEST_CASE("Cauchy deconcatenation") {
  auto d = deconcat_cauchy(Word{});
  CHECK(d.terms.size() == 1);
  CHECK(d.terms.count({Word{}, Word{}}) == 1);

  const auto w = word({{"p", 0}});
  d = deconcat_cauchy(w);
  SplitPairElement expected;
  expected.add(w, Word{}, 1);
  expected.add(Word{}, w, 1);
  CHECK(d == expected);

  const auto v = word({{"q", 0}, {"p", 0}});
  d = deconcat_cauchy(v);
  CHECK(d.terms.size() == 4);
  CHECK(d.terms.count({word({{"q", 0}}), word({{"p", 0}})}) == 1);
  CHECK(d.terms.count({word({{"p", 0}}), word({{"q", 0}})}) == 1);
}

TEST_CASE("Hadamard deconcatenation") {
  const auto base = test::pqrs();
  const auto m = el("e[p,0]", base).terms().begin()->first;
  CHECK(deconcat_hadamard(HadamardWord({"p"}, {})).terms.size() == 1);
  const HadamardWord one({"p"}, {m});
  const auto d = deconcat_hadamard(one);
  CHECK(d.terms.size() == 2);
  CHECK(d.terms.count({one, HadamardWord({"p"}, {})}) == 1);
  CHECK(deconcat_hadamard(HadamardWord({"p"}, {m, m})).terms.size() == 3);
  CHECK_THROWS_AS(HadamardWord({"q"}, {m}), ConfigMismatch);
  CHECK(counit_hadamard(HadamardWord({"p"}, {})) == 1);
  CHECK(counit_hadamard(one) == 0);
}

TEST_CASE("symmetric tensors") {
  const auto pq = word({{"p", 0}, {"q", 0}});
  const auto qp = word({{"q", 0}, {"p", 0}});
  CHECK(is_symmetric(TensorElement(pq) + TensorElement(qp)));
  CHECK_FALSE(is_symmetric(TensorElement(pq)));
  CHECK(is_symmetric(TensorElement(Word{})));
  CHECK(is_symmetric(deconcat_cauchy(TensorElement(pq) + TensorElement(qp))));
}

TEST_CASE("shuffle map") {
  BoxOfTensors t;
  t.add(QuadWord{}, 1);
  auto s = shuffle_map(t);
  CHECK(s.terms.size() == 1);
  CHECK(s.terms.begin()->first == QuadWord{});

  const auto a = word({{"p", 0}});
  const auto c = word({{"q", 0}});
  BoxOfTensors u;
  u.add(QuadWord{a, Word{}, c, Word{}}, 1);
  TensorOfBoxes expected;
  expected.add(QuadWord{a, c, Word{}, Word{}}, 1);
  CHECK(shuffle_map(u) == expected);

  BoxOfTensors bad;
  bad.add(QuadWord{a, Word{}, a, Word{}}, 1);
  CHECK_THROWS_AS(shuffle_map(bad), OverlappingConfigurations);
}

TEST_CASE("tensor dimensions") {
  BaseSpace base;
  for (const char* p : {"a", "b", "c"}) base.add_point(p, 1);
  CHECK(dim_T_fibre(base, {}) == 1);
  CHECK(dim_TboxT_fibre(base, {}) == 1);
  CHECK(dim_T_fibre(base, {"a", "b"}) == 2);
  CHECK(dim_TboxT_fibre(base, {"a", "b"}) == 6);
  CHECK(dim_T_fibre(base, {"a", "b", "c"}) == 6);
  CHECK(dim_TboxT_fibre(base, {"a", "b", "c"}) == 24);
  // 2 + 1 + 1 + 2 words over the four splits of a two-point configuration
  const auto e = enumerate_TboxT_basis(base, {"a", "b"});
  CHECK(e.pairs == 6);
  CHECK(e.min_copies == 3);
  CHECK(e.max_copies == 3);
  CHECK(enumerate_T_basis(base, {"a", "b", "c"}).size() == 6);
  CHECK(split_permutation_sum(3) == 24);
}

TEST_CASE("external comparison") {
  const auto base = test::pqrs();
  auto c = compare_external(base, {"s"});
  CHECK(c.bijective());
  CHECK(c.table.size() == 2);

  c = compare_external(base, {"p", "q"});
  CHECK(c.table.size() == 1);
  const auto reversed = compare_external(base, {"q", "p"});
  CHECK(reversed.table.front().second == c.table.front().second);

  c = compare_external(base, {"s", "p"});
  CHECK(c.table.size() == 2);
  CHECK(c.bijective());
  CHECK_THROWS(compare_external(base, {"p", "p"}));
  CHECK_THROWS_AS(compare_external(base, {"z"}), UnknownPoint);
}

TEST_CASE("strong monoidality on a small example") {
  BaseSpace v, w;
  v.add_point("p", 2);
  v.add_point("q", 1);
  w.add_point("p", 2);
  w.add_point("q", 2);
  const auto c = compare_strong_monoidal(v, w, {"p", "q"});
  CHECK(c.bijective);
  CHECK(c.product_bundle_dim == 8);
  CHECK(c.tensor_of_dims == 8);
}
