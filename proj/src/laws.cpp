#include "uconf/laws.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "uconf/expr_parser.hpp"
#include "uconf/field_model.hpp"
#include "uconf/random.hpp"
#include "uconf/tensor_lab.hpp"

namespace uconf {

namespace {

using Failure = std::optional<std::string>;
using Body = std::function<Failure(Rng&)>;

Failure expect(bool ok, const char* what) {
  if (ok) return std::nullopt;
  return std::string(what);
}

struct Disjoint3 {
  Configuration x, y, z;
};

Disjoint3 disjoint_parts(Rng& rng, const BaseSpace& base, std::size_t max_points) {
  const auto all = random_configuration(rng, base, max_points);
  std::vector<PointId> parts[3];
  for (const auto& p : all) parts[rng.below(3)].push_back(p);
  return {Configuration::from_sorted(parts[0]), Configuration::from_sorted(parts[1]),
          Configuration::from_sorted(parts[2])};
}

TensorElement random_tensor(Rng& rng, const BaseSpace& base, const Configuration& x) {
  TensorElement t(x);
  const auto n = rng.between(1, 3);
  for (std::int64_t i = 0; i < n; ++i) t.add_term(random_word(rng, base, x), rng.nonzero_scalar());
  return t;
}

TensorElement symmetric_orbit(const Word& w) {
  std::vector<std::size_t> perm(w.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  TensorElement out(w.config());
  do out.add_term(w.permuted(perm), 1);
  while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

FibreElement symmetrize_word(const Word& w) { return symmetrize(TensorElement(w)); }

std::size_t ipow3(std::size_t k) {
  std::size_t r = 1;
  while (k--) r *= 3;
  return r;
}

Scalar extrapolate_to_zero(const std::vector<Scalar>& nodes, const std::vector<Scalar>& values) {
  Scalar total = 0;
  for (std::size_t m = 0; m < nodes.size(); ++m) {
    Scalar basis = 1;
    for (std::size_t l = 0; l < nodes.size(); ++l)
      if (l != m) basis *= -nodes[l] / (nodes[m] - nodes[l]);
    total += values[m] * basis;
  }
  return total;
}

class Runner {
 public:
  Runner(const Model& model, const LawOptions& options) : model_(model), options_(options) {}

  void run(const std::string& name, std::size_t cases, const Body& body) {
    // each law has its own stream so adding a law never perturbs another
    Rng rng(options_.seed * 0x9E3779B97F4A7C15ULL + results_.size() + 1);
    LawResult r;
    r.name = name;
    for (std::size_t c = 0; c < cases; ++c) {
      Failure f;
      try {
        f = body(rng);
      } catch (const std::exception& e) {
        f = std::string("exception: ") + e.what();
      }
      ++r.cases;
      if (f) {
        if (r.failures == 0) r.first_failure = "case " + std::to_string(c) + ": " + *f;
        ++r.failures;
      }
    }
    results_.push_back(std::move(r));
  }

  std::vector<LawResult> take() { return std::move(results_); }

 private:
  const Model& model_;
  const LawOptions& options_;
  std::vector<LawResult> results_;
};

}  // namespace

std::vector<LawResult> run_laws(const Model& model, const LawOptions& options) {
  Runner runner(model, options);
  const BaseSpace& base = model.base;
  const std::size_t n = options.cases;
  const std::size_t kmax = std::min(options.max_points, base.size());
  const std::uint32_t deg = options.max_degree;

  // Alternate between the model's kernel and a random one on the same base.
  auto kernel_for = [&](Rng& rng) { return rng.coin() ? model.kernel : random_kernel(rng, base); };

  // ---- configspace --------------------------------------------------------
  runner.run("configspace.splits2", n, [&](Rng& rng) -> Failure {
    const auto x = random_configuration(rng, base, kmax);
    const auto s = splits2(x);
    if (s.size() != (std::size_t{1} << x.size())) return "wrong split count";
    std::set<Split2> seen(s.begin(), s.end());
    for (const auto& [l, r] : s) {
      if (intersects(l, r) || set_union(l, r) != x) return "split is not a partition";
      if (!seen.count({r, l})) return "split without its mirror";
    }
    return std::nullopt;
  });

  runner.run("configspace.splits3_nesting", n, [&](Rng& rng) -> Failure {
    const auto x = random_configuration(rng, base, kmax);
    std::multiset<Split3> direct, left, right;
    for (const auto& s : splits3(x)) direct.insert(s);
    for (const auto& [ab, c] : splits2(x))
      for (const auto& [a, b] : splits2(ab)) left.insert({a, b, c});
    for (const auto& [a, bc] : splits2(x))
      for (const auto& [b, c] : splits2(bc)) right.insert({a, b, c});
    return expect(direct.size() == ipow3(x.size()) && direct == left &&
                      direct == right,
                  "three-way splits disagree with nested two-way splits");
  });

  runner.run("configspace.shuffles", 1, [&](Rng&) -> Failure {
    for (std::uint32_t i = 0; i <= 8; ++i)
      for (std::uint32_t j = 0; i + j <= 8; ++j) {
        const auto sh = shuffles(i, j);
        if (sh.size() != binomial(i + j, i)) return "shuffle count differs from C(i+j,i)";
        for (const auto& s : sh)
          if (!std::is_sorted(s.begin(), s.begin() + i) || !std::is_sorted(s.begin() + i, s.end()))
            return "not a shuffle";
      }
    return std::nullopt;
  });

  // ---- fibre algebra ------------------------------------------------------
  runner.run("fibre.hadamard_monoid", n, [&](Rng& rng) -> Failure {
    const auto x = random_configuration(rng, base, kmax);
    const auto a = random_element(rng, base, x, deg);
    const auto b = random_element(rng, base, x, deg);
    const auto c = random_element(rng, base, x, deg);
    if (hadamard_mul(a, b) != hadamard_mul(b, a)) return "not commutative";
    if (hadamard_mul(hadamard_mul(a, b), c) != hadamard_mul(a, hadamard_mul(b, c)))
      return "not associative";
    return expect(hadamard_mul(unit_hadamard(x), a) == a, "1_X is not a unit");
  });

  runner.run("fibre.cauchy_monoid", n, [&](Rng& rng) -> Failure {
    const auto [x, y, z] = disjoint_parts(rng, base, kmax);
    const auto a = random_element(rng, base, x, deg);
    const auto b = random_element(rng, base, y, deg);
    const auto c = random_element(rng, base, z, deg);
    if (cauchy_mul(a, b) != cauchy_mul(b, a)) return "not commutative";
    if (cauchy_mul(cauchy_mul(a, b), c) != cauchy_mul(a, cauchy_mul(b, c)))
      return "not associative";
    return expect(cauchy_mul(unit_hadamard({}), a) == a, "1_∅ is not a unit");
  });

  runner.run("fibre.interchange", n, [&](Rng& rng) -> Failure {
    const auto [x, y, unused] = disjoint_parts(rng, base, kmax);
    const auto a = random_element(rng, base, x, deg);
    const auto b = random_element(rng, base, x, deg);
    const auto c = random_element(rng, base, y, deg);
    const auto d = random_element(rng, base, y, deg);
    return expect(hadamard_mul(cauchy_mul(a, c), cauchy_mul(b, d)) ==
                      cauchy_mul(hadamard_mul(a, b), hadamard_mul(c, d)),
                  "(a⊡c)⊙(b⊡d) != (a⊙b)⊡(c⊙d)");
  });

  runner.run("fibre.truncated_dimension", n, [&](Rng& rng) -> Failure {
    const auto x = random_configuration(rng, base, kmax);
    const auto d = static_cast<std::uint32_t>(rng.between(0, deg));
    return expect(enumerate_monomials(base, x, d).size() == truncated_fibre_dim(base, x, d),
                  "monomial count differs from Π C(rank+d, d)");
  });

  // ---- tensor lab ---------------------------------------------------------
  runner.run("tensor.concat_associative", n, [&](Rng& rng) -> Failure {
    const auto [x, y, z] = disjoint_parts(rng, base, kmax);
    const auto a = random_tensor(rng, base, x);
    const auto b = random_tensor(rng, base, y);
    const auto c = random_tensor(rng, base, z);
    if (concat(concat(a, b), c) != concat(a, concat(b, c))) return "not associative";
    return expect(concat(TensorElement(Word{}), a) == a, "empty word is not a unit");
  });

  runner.run("tensor.symmetrize_is_algebra_map", n, [&](Rng& rng) -> Failure {
    const auto [x, y, unused] = disjoint_parts(rng, base, kmax);
    const auto a = random_tensor(rng, base, x);
    const auto b = random_tensor(rng, base, y);
    if (symmetrize(concat(a, b)) != cauchy_mul(symmetrize(a), symmetrize(b)))
      return "symmetrize(a·b) != symmetrize(a) ⊡ symmetrize(b)";
    return expect(symmetrize(concat(a, b)) == symmetrize(concat(b, a)),
                  "symmetrization does not identify orders");
  });

  const std::size_t word_max = std::min<std::size_t>(4, base.size());
  runner.run("tensor.cauchy_coassociative", n, [&](Rng& rng) -> Failure {
    const auto w = random_word(rng, base, random_configuration(rng, base, word_max));
    const auto delta = deconcat_cauchy(w);
    auto single = [](const Word& v) { return deconcat_cauchy(v); };
    if (coproduct_on_left(delta, single) != coproduct_on_right(delta, single))
      return "(Δ⊗id)Δ != (id⊗Δ)Δ";
    Scalar left_sum = 0, right_sum = 0;
    for (const auto& [key, c] : delta.terms) {
      if (key.second == w) left_sum += c * counit_cauchy(key.first);
      if (key.first == w) right_sum += c * counit_cauchy(key.second);
    }
    return expect(left_sum == 1 && right_sum == 1, "counit law fails");
  });

  runner.run("tensor.hadamard_coassociative", n, [&](Rng& rng) -> Failure {
    const auto x = random_configuration(rng, base, kmax);
    std::vector<CauchyMonomial> letters;
    const auto len = rng.below(5);
    for (std::uint64_t i = 0; i < len; ++i) letters.push_back(random_monomial(rng, base, x, deg));
    const HadamardWord w(x, letters);
    const auto delta = deconcat_hadamard(w);
    auto single = [](const HadamardWord& v) { return deconcat_hadamard(v); };
    if (delta.terms.size() != w.size() + 1) return "wrong number of deconcatenation terms";
    return expect(coproduct_on_left(delta, single) == coproduct_on_right(delta, single),
                  "(Δ⊗id)Δ != (id⊗Δ)Δ");
  });

  runner.run("tensor.symmetric_subcoalgebra", n, [&](Rng& rng) -> Failure {
    const auto w = random_word(rng, base, random_configuration(rng, base, word_max));
    const auto sym = symmetric_orbit(w);
    if (!is_symmetric(sym)) return "orbit sum is not symmetric";
    if (w.size() >= 2 && is_symmetric(TensorElement(w))) return "single word reported symmetric";
    return expect(is_symmetric(deconcat_cauchy(sym)), "coproduct leaves the symmetric tensors");
  });

  runner.run("tensor.alternation_kills_symmetric", n, [&](Rng& rng) -> Failure {
    const auto x = random_configuration(rng, base, word_max);
    if (x.size() < 2) return std::nullopt;
    const auto w = random_word(rng, base, x);
    std::vector<std::size_t> perm(w.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    const auto i = rng.below(perm.size());
    auto j = rng.below(perm.size() - 1);
    if (j >= i) ++j;
    std::swap(perm[i], perm[j]);
    const auto t = TensorElement(w) + TensorElement(w.permuted(perm));
    return expect(alternate(t).is_zero(), "alternate(w + τw) != 0");
  });

  runner.run("tensor.dimension_identity", 1, [&](Rng&) -> Failure {
    for (std::uint64_t k = 0; k <= 6; ++k)
      if (split_permutation_sum(k) != (k + 1) * factorial(k)) return "Σ C(k,i) i!(k-i)! != (k+1)k!";
    for (std::size_t k = 0; k <= kmax; ++k)
      for (const auto& x : base.configurations(k)) {
        if (enumerate_T_basis(base, x).size() != dim_T_fibre(base, x)) return "dim T mismatch";
        const auto e = enumerate_TboxT_basis(base, x);
        if (e.pairs != dim_TboxT_fibre(base, x)) return "dim T⊠T mismatch";
        if (e.min_copies != k + 1 || e.max_copies != k + 1) return "T⊠T is not k+1 copies of T";
      }
    return std::nullopt;
  });

  runner.run("tensor.compare_external", n, [&](Rng& rng) -> Failure {
    auto pts = random_configuration(rng, base, word_max).members();
    for (std::size_t i = pts.size(); i > 1; --i) std::swap(pts[i - 1], pts[rng.below(i)]);
    const auto cmp = compare_external(base, pts);
    return expect(cmp.bijective(), "external product basis is not in bijection with S^⊠k");
  });

  runner.run("tensor.strong_monoidal", n, [&](Rng& rng) -> Failure {
    const auto x = random_configuration(rng, base, std::min<std::size_t>(kmax, 3));
    BaseSpace w, unit;
    for (const auto& p : base.points()) {
      w.add_point(p, static_cast<std::uint32_t>(rng.between(1, 2)));
      unit.add_point(p, 1);
    }
    const auto cmp = compare_strong_monoidal(base, w, x);
    if (!cmp.bijective || cmp.product_bundle_dim != cmp.tensor_of_dims)
      return "S^⊠(V⊗W) is not S^⊠V ⊗ S^⊠W";
    return expect(enumerate_linear_monomials(unit, x).size() == 1, "S^⊠(I) is not I");
  });

  runner.run("tensor.shuffle_interchange", n, [&](Rng& rng) -> Failure {
    const auto [x, y, unused] = disjoint_parts(rng, base, kmax);
    const QuadWord q{random_word(rng, base, x), random_word(rng, base, x),
                     random_word(rng, base, y), random_word(rng, base, y)};
    BoxOfTensors t;
    t.add(q, rng.nonzero_scalar());
    const auto coeff = t.terms.begin()->second;
    const auto shuffled = shuffle_map(t);
    if (shuffled.terms.size() != 1) return "shuffle is not injective on a basis term";
    const auto& [s, c] = *shuffled.terms.begin();
    // shuffle, then ⊡ inside each slot, then ⊙
    const auto via_shuffle = c * hadamard_mul(cauchy_mul(symmetrize_word(s.first), symmetrize_word(s.second)),
                                              cauchy_mul(symmetrize_word(s.third), symmetrize_word(s.fourth)));
    // ⊙ inside each slot, then ⊡
    const auto direct = coeff * cauchy_mul(hadamard_mul(symmetrize_word(q.first), symmetrize_word(q.second)),
                                           hadamard_mul(symmetrize_word(q.third), symmetrize_word(q.fourth)));
    return expect(via_shuffle == direct, "shuffle does not intertwine the two products");
  });

  // ---- poisson ------------------------------------------------------------
  runner.run("poisson.units", n, [&](Rng& rng) -> Failure {
    const auto k = kernel_for(rng);
    const auto [x, y, unused] = disjoint_parts(rng, base, kmax);
    const auto b = random_element(rng, base, y, deg);
    return expect(bracket_fibre(unit_hadamard(x), b, k).is_zero() &&
                      bracket_fibre(b, unit_hadamard(x), k).is_zero(),
                  "bracket with a unit is nonzero");
  });

  runner.run("poisson.antisymmetry", n, [&](Rng& rng) -> Failure {
    const auto k = kernel_for(rng);
    const auto [x, y, unused] = disjoint_parts(rng, base, kmax);
    const auto a = random_element(rng, base, x, deg);
    const auto b = random_element(rng, base, y, deg);
    return expect(bracket_fibre(a, b, k) == -bracket_fibre(b, a, k), "{a,b} != -{b,a}");
  });

  runner.run("poisson.jacobi", n, [&](Rng& rng) -> Failure {
    const auto k = kernel_for(rng);
    const auto [x, y, z] = disjoint_parts(rng, base, kmax);
    const auto a = random_element(rng, base, x, deg);
    const auto b = random_element(rng, base, y, deg);
    const auto c = random_element(rng, base, z, deg);
    const auto jac = bracket_fibre(bracket_fibre(a, b, k), c, k) +
                     bracket_fibre(bracket_fibre(b, c, k), a, k) +
                     bracket_fibre(bracket_fibre(c, a, k), b, k);
    return expect(jac.is_zero(), "Jacobiator is nonzero");
  });

  runner.run("poisson.cauchy_leibniz", n, [&](Rng& rng) -> Failure {
    const auto k = kernel_for(rng);
    const auto [x, y, z] = disjoint_parts(rng, base, kmax);
    const auto a = random_element(rng, base, x, deg);
    const auto b = random_element(rng, base, y, deg);
    const auto c = random_element(rng, base, z, deg);
    if (bracket_fibre(a, cauchy_mul(b, c), k) !=
        cauchy_mul(bracket_fibre(a, b, k), c) + cauchy_mul(b, bracket_fibre(a, c, k)))
      return "{a, b⊡c} != {a,b}⊡c + b⊡{a,c}";
    return expect(bracket_fibre(cauchy_mul(a, b), c, k) ==
                      cauchy_mul(bracket_fibre(a, c, k), b) + cauchy_mul(a, bracket_fibre(b, c, k)),
                  "{a⊡b, c} != {a,c}⊡b + a⊡{b,c}");
  });

  runner.run("poisson.hadamard_leibniz", n, [&](Rng& rng) -> Failure {
    const auto k = kernel_for(rng);
    const auto [x, y, unused] = disjoint_parts(rng, base, kmax);
    const auto a = random_element(rng, base, x, deg);
    const auto b = random_element(rng, base, y, deg);
    const auto c = random_element(rng, base, y, deg);
    const auto ux = unit_hadamard(x);
    const auto uy = unit_hadamard(y);
    if (bracket_fibre(a, hadamard_mul(b, c), k) !=
        hadamard_mul(bracket_fibre(a, b, k), cauchy_mul(ux, c)) +
            hadamard_mul(cauchy_mul(ux, b), bracket_fibre(a, c, k)))
      return "{a, b⊙c} != {a,b}⊙(1_X⊡c) + (1_X⊡b)⊙{a,c}";
    return expect(bracket_fibre(hadamard_mul(b, c), a, k) ==
                      hadamard_mul(bracket_fibre(b, a, k), cauchy_mul(c, ux)) +
                          hadamard_mul(cauchy_mul(b, ux), bracket_fibre(c, a, k)),
                  "{b⊙c, a} != {b,a}⊙(c⊡1_X) + (b⊡1_X)⊙{c,a}");
  });

  runner.run("poisson.recursion_agrees", n, [&](Rng& rng) -> Failure {
    const auto k = kernel_for(rng);
    const auto [x, y, unused] = disjoint_parts(rng, base, kmax);
    const auto a = random_element(rng, base, x, deg);
    const auto b = random_element(rng, base, y, deg);
    const auto closed = bracket_fibre(a, b, k);
    if (closed != bracket_fibre_recursive(a, b, k, PeelOrder::Front))
      return "closed form != recursion (front peeling)";
    return expect(closed == bracket_fibre_recursive(a, b, k, PeelOrder::Back),
                  "closed form != recursion (back peeling)");
  });

  runner.run("poisson.grading", n, [&](Rng& rng) -> Failure {
    const auto k = kernel_for(rng);
    const auto [x, y, unused] = disjoint_parts(rng, base, kmax);
    if (x.empty() || y.empty()) return std::nullopt;
    const auto ma = random_monomial(rng, base, x, deg);
    const auto mb = random_monomial(rng, base, y, deg);
    if (ma.degree() == 0 || mb.degree() == 0) return std::nullopt;
    for (auto d : degrees(bracket_fibre(FibreElement(ma, 1), FibreElement(mb, 1), k)).hadamard_degrees)
      if (d + 2 != ma.degree() + mb.degree()) return "bracket term has the wrong degree";
    return std::nullopt;
  });

  runner.run("poisson.density", n, [&](Rng& rng) -> Failure {
    const auto k = kernel_for(rng);
    const auto [x, y, unused] = disjoint_parts(rng, base, kmax);
    const auto a = random_element(rng, base, x, deg);
    const auto b = random_element(rng, base, y, deg);
    Scalar alpha = rng.nonzero_scalar(), beta = rng.nonzero_scalar();
    if (alpha < 0) alpha = -alpha;
    if (beta < 0) beta = -beta;
    const auto r = bracket_with_density(a, DensityValue{alpha}, b, DensityValue{beta}, k);
    return expect(r.element == bracket_fibre(a, b, k) && r.density.value == alpha * beta,
                  "densities do not multiply");
  });

  // ---- sections -----------------------------------------------------------
  const std::size_t bound = base.size();
  auto section = [&](Rng& rng) { return random_section(rng, base, kmax, bound, 3, deg); };

  runner.run("sections.convolution_algebra", n, [&](Rng& rng) -> Failure {
    const auto a = section(rng), b = section(rng), c = section(rng);
    if (convolve(a, b) != convolve(b, a)) return "not commutative";
    if (convolve(convolve(a, b), c) != convolve(a, convolve(b, c))) return "not associative";
    return expect(convolve(unit_section(bound), a) == a, "unit section is not a unit");
  });

  runner.run("sections.bracket_laws", n, [&](Rng& rng) -> Failure {
    const auto k = kernel_for(rng);
    const auto a = section(rng), b = section(rng), c = section(rng);
    if (section_bracket(a, b, k) != -section_bracket(b, a, k)) return "not antisymmetric";
    if (!jacobiator(a, b, c, k).is_zero()) return "jacobiator is nonzero";
    return expect(section_bracket(a, convolve(b, c), k) ==
                      convolve(section_bracket(a, b, k), c) + convolve(b, section_bracket(a, c, k)),
                  "Leibniz rule over • fails");
  });

  runner.run("sections.support", n, [&](Rng& rng) -> Failure {
    const auto a = section(rng), b = section(rng);
    const auto product = convolve(a, b);
    for (const auto& [x, v] : product.support()) {
      bool found = false;
      for (const auto& [xa, va] : a.support())
        for (const auto& [xb, vb] : b.support())
          if (!intersects(xa, xb) && set_union(xa, xb) == x) found = true;
      if (!found) return "product supported outside supp(a) ⊔ supp(b)";
    }
    return std::nullopt;
  });

  runner.run("sections.truncation", n, [&](Rng& rng) -> Failure {
    const auto a = section(rng), b = section(rng);
    const auto cut = static_cast<std::size_t>(rng.below(bound + 1));
    if (truncate(truncate(a, cut), cut) != truncate(a, cut)) return "truncate is not idempotent";
    return expect(truncate(convolve(a, b), cut) ==
                      truncate(convolve(truncate(a, cut), truncate(b, cut)), cut),
                  "truncation does not commute with convolution");
  });

  // ---- field model --------------------------------------------------------
  runner.run("field.peierls_oracle", n, [&](Rng& rng) -> Failure {
    const auto k = kernel_for(rng);
    const auto s = random_section(rng, base, kmax, bound, 2, deg);
    const auto t = random_section(rng, base, kmax, bound, 2, deg);
    return expect(oracle_check(s, t, k, base), "symbolic bracket differs from Peierls bracket");
  });

  runner.run("field.peierls_leibniz", n, [&](Rng& rng) -> Failure {
    const auto k = kernel_for(rng);
    const auto f = to_functional(section(rng), base);
    const auto g = to_functional(section(rng), base);
    const auto h = to_functional(section(rng), base);
    return expect(peierls_bracket(f, g * h, k, base) ==
                      peierls_bracket(f, g, k, base) * h + g * peierls_bracket(f, h, k, base),
                  "{F, GH} != {F,G}H + G{F,H}");
  });

  runner.run("field.derivative_vs_difference", n, [&](Rng& rng) -> Failure {
    const auto f = to_functional(section(rng), base);
    Field phi;
    for (const auto& p : base.points()) {
      std::vector<Scalar> v;
      for (std::uint32_t i = 0; i < base.rank(p); ++i) v.push_back(rng.nonzero_scalar());
      phi.set(p, v);
    }
    const auto pts = base.points();
    const auto& p = pts[rng.below(pts.size())];
    const Variable v{p, static_cast<std::uint32_t>(rng.below(base.rank(p)))};
    // the difference quotient is a polynomial of degree < deg F in h, so
    // deg F samples at h = 1/2^m pin down its value at h = 0 exactly
    std::vector<Scalar> nodes, values;
    Scalar h = 1;
    for (std::uint32_t m = 0; m < std::max<std::uint32_t>(f.degree(), 1); ++m) {
      h /= 2;
      nodes.push_back(h);
      values.push_back(difference_quotient(f, phi, v, h));
    }
    return expect(extrapolate_to_zero(nodes, values) == evaluate(f.derivative(v), phi),
                  "difference quotient does not converge to the derivative");
  });

  // ---- parser -------------------------------------------------------------
  runner.run("parser.round_trip", n, [&](Rng& rng) -> Failure {
    const auto x = random_configuration(rng, base, kmax);
    auto e = random_element(rng, base, x, deg);
    if (rng.below(8) == 0) e = FibreElement(x);
    const auto text = render(e);
    const auto back = parse_element(text, base);
    if (back != e) return "parse(render(e)) != e";
    return expect(render(back) == text, "render is not stable under a round trip");
  });

  return runner.take();
}

}  // namespace uconf
