#include "uconf/random.hpp"

#include <algorithm>

namespace uconf {

std::uint64_t Rng::below(std::uint64_t n) {
  // rejection sampling keeps the draw exactly uniform
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t v;
  do v = engine_();
  while (v >= limit);
  return v % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Scalar Rng::nonzero_scalar() {
  std::int64_t n = between(1, 5);
  if (coin()) n = -n;
  Scalar q(static_cast<long>(n), static_cast<unsigned long>(between(1, 4)));
  q.canonicalize();
  return q;
}

Configuration Rng::subset(const Configuration& x) {
  std::vector<PointId> out;
  for (const auto& p : x)
    if (coin()) out.push_back(p);
  return Configuration::from_sorted(std::move(out));
}

BaseSpace random_base(Rng& rng, std::size_t points, std::uint32_t max_rank, bool weighted) {
  static const char* const kWeights[] = {"1", "2", "1/2", "3", "2/3"};
  BaseSpace base;
  for (std::size_t i = 0; i < points; ++i) {
    std::string label(1, static_cast<char>('a' + i));
    const auto rank = static_cast<std::uint32_t>(rng.between(1, max_rank));
    Scalar w = weighted ? parse_scalar(kWeights[rng.below(5)]) : Scalar(1);
    base.add_point(label, rank, w);
  }
  return base;
}

Kernel random_kernel(Rng& rng, const BaseSpace& base, unsigned density_percent) {
  Kernel k;
  const auto pts = base.points();
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      for (std::uint32_t i = 0; i < base.rank(pts[a]); ++i)
        for (std::uint32_t j = 0; j < base.rank(pts[b]); ++j)
          if (rng.below(100) < density_percent)
            k.set({pts[a], i}, {pts[b], j}, rng.nonzero_scalar());
  return k;
}

CauchyMonomial random_monomial(Rng& rng, const BaseSpace& base, const Configuration& x,
                               std::uint32_t max_degree) {
  CauchyMonomial m = CauchyMonomial::unit(x);
  if (x.empty()) return m;
  const auto degree = static_cast<std::uint32_t>(rng.between(0, max_degree));
  for (std::uint32_t d = 0; d < degree; ++d) {
    const auto& p = x.members()[rng.below(x.size())];
    m = m.raised(p, static_cast<std::uint32_t>(rng.below(base.rank(p))));
  }
  return m;
}

FibreElement random_element(Rng& rng, const BaseSpace& base, const Configuration& x,
                            std::uint32_t max_degree, std::size_t max_terms) {
  FibreElement e(x);
  const auto terms = rng.between(1, static_cast<std::int64_t>(max_terms));
  for (std::int64_t t = 0; t < terms; ++t)
    e.add_term(random_monomial(rng, base, x, max_degree), rng.nonzero_scalar());
  return e;
}

Configuration random_configuration(Rng& rng, const BaseSpace& base, std::size_t max_points) {
  const std::size_t k = rng.below(std::min(max_points, base.size()) + 1);
  const auto all = base.configurations(k);
  return all[rng.below(all.size())];
}

Section random_section(Rng& rng, const BaseSpace& base, std::size_t support_points,
                       std::size_t max_points, std::size_t configs, std::uint32_t max_degree) {
  Section s(max_points);
  const auto n = rng.between(1, static_cast<std::int64_t>(configs));
  for (std::int64_t c = 0; c < n; ++c) {
    const auto x = random_configuration(rng, base, std::min(support_points, max_points));
    s.add(random_element(rng, base, x, max_degree, 2));
  }
  return s;
}

Word random_word(Rng& rng, const BaseSpace& base, const Configuration& x) {
  std::vector<PointId> order = x.members();
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  std::vector<Letter> letters;
  for (const auto& p : order)
    letters.push_back(Letter{p, static_cast<std::uint32_t>(rng.below(base.rank(p)))});
  return Word(std::move(letters));
}

}  // namespace uconf
