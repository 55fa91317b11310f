#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "uconf/configspace.hpp"

using namespace uconf;

TEST_CASE("configurations are sorted sets") {
  const Configuration x{"q", "p"};
  CHECK(x.to_string() == "[p,q]");
  CHECK(x.contains("p"));
  CHECK_FALSE(x.contains("r"));
  CHECK(Configuration{}.to_string() == "[]");
  CHECK_THROWS_AS(Configuration({"p", "p"}), InvalidArgument);
}

TEST_CASE("set operations") {
  const Configuration a{"p", "q"}, b{"r"}, c{"q", "r"};
  CHECK_FALSE(intersects(a, b));
  CHECK(intersects(a, c));
  CHECK(disjoint_union(a, b) == Configuration{"p", "q", "r"});
  CHECK_THROWS_AS(disjoint_union(a, c), OverlappingConfigurations);
  CHECK(set_union(a, c) == Configuration{"p", "q", "r"});
  CHECK(set_difference(a, c) == Configuration{"p"});
}

TEST_CASE("base space validation") {
  BaseSpace base;
  base.add_point("p", 2, Scalar(1, 2));
  CHECK(base.rank("p") == 2);
  CHECK(base.weight("p") == Scalar(1, 2));
  CHECK_THROWS_AS(base.add_point("p", 1), InvalidArgument);
  CHECK_THROWS_AS(base.add_point("q", 0), InvalidArgument);
  CHECK_THROWS_AS(base.add_point("q", 1, 0), InvalidArgument);
  CHECK_THROWS_AS(base.add_point("q", 1, -1), InvalidArgument);
  CHECK_THROWS_AS(base.rank("z"), UnknownPoint);
  CHECK_THROWS_AS(base.check(Configuration{"p", "z"}), UnknownPoint);
}

TEST_CASE("k-point configurations") {
  BaseSpace base;
  for (const char* p : {"a", "b", "c", "d"}) base.add_point(p, 1);
  CHECK(base.configurations(0) == std::vector<Configuration>{Configuration{}});
  CHECK(base.configurations(2).size() == 6);
  CHECK(base.configurations(2).front() == Configuration{"a", "b"});
  CHECK(base.configurations(5).empty());
}

TEST_CASE("two-way splits") {
  CHECK(splits2({}) == std::vector<Split2>{{{}, {}}});
  CHECK(splits2({"p"}) == std::vector<Split2>{{{}, {"p"}}, {{"p"}, {}}});
  const auto s = splits2({"p", "q"});
  const std::set<Split2> expected{
      {{}, {"p", "q"}}, {{"p"}, {"q"}}, {{"q"}, {"p"}}, {{"p", "q"}, {}}};
  CHECK(s.size() == 4);
  CHECK(std::set<Split2>(s.begin(), s.end()) == expected);
}

TEST_CASE("three-way splits match both nestings of two-way splits") {
  CHECK(splits3({}).size() == 1);
  CHECK(splits3({"p"}).size() == 3);
  for (const Configuration x : {Configuration{"p", "q"}, Configuration{"p", "q", "r"}}) {
    std::multiset<Split3> direct, left, right;
    for (const auto& s : splits3(x)) direct.insert(s);
    for (const auto& [ab, c] : splits2(x))
      for (const auto& [a, b] : splits2(ab)) left.insert({a, b, c});
    for (const auto& [a, bc] : splits2(x))
      for (const auto& [b, c] : splits2(bc)) right.insert({a, b, c});
    CHECK(direct == left);
    CHECK(direct == right);
  }
  CHECK(splits3({"p", "q"}).size() == 9);
}

namespace {

// Every permutation of 1..n keeping 1..i and i+1..n in order, by filtering S_n.
std::set<std::vector<std::uint32_t>> brute_shuffles(std::uint32_t i, std::uint32_t j) {
  std::vector<std::uint32_t> perm(i + j);
  std::iota(perm.begin(), perm.end(), 1u);
  std::set<std::vector<std::uint32_t>> out;
  do {
    // σ is a shuffle when σ(1) < ... < σ(i) and σ(i+1) < ... < σ(i+j)
    if (std::is_sorted(perm.begin(), perm.begin() + i) &&
        std::is_sorted(perm.begin() + i, perm.end()))
      out.insert(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("shuffles") {
  CHECK(shuffles(0, 3) == std::vector<std::vector<std::uint32_t>>{{1, 2, 3}});
  CHECK(shuffles(1, 1).size() == 2);
  CHECK(shuffles(2, 1).size() == 3);
  for (std::uint32_t i = 0; i <= 4; ++i)
    for (std::uint32_t j = 0; i + j <= 6; ++j) {
      const auto s = shuffles(i, j);
      CHECK(std::set<std::vector<std::uint32_t>>(s.begin(), s.end()) == brute_shuffles(i, j));
      CHECK(std::is_sorted(s.begin(), s.end()));
    }
}

TEST_CASE("binomial and factorial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
}
