#ifndef UCONF_RANDOM_HPP
#define UCONF_RANDOM_HPP

// Seeded generators for property runs. Only raw 64-bit engine output is used
// (no std distributions), so a seed reproduces the same instances on every
// standard library.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "uconf/configspace.hpp"
#include "uconf/fibre_algebra.hpp"
#include "uconf/poisson.hpp"
#include "uconf/sections.hpp"
#include "uconf/tensor_lab.hpp"

namespace uconf {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool coin() { return below(2) == 1; }
  /// Small nonzero rational n/d with |n| <= 5, 1 <= d <= 4.
  Scalar nonzero_scalar();
  /// Random subset of `x` (each member kept with probability 1/2).
  Configuration subset(const Configuration& x);

 private:
  std::mt19937_64 engine_;
};

/// `points` points named a, b, c, ... with ranks in [1, max_rank] and, when
/// `weighted`, weights drawn from {1, 2, 1/2, 3, 2/3}.
BaseSpace random_base(Rng& rng, std::size_t points, std::uint32_t max_rank, bool weighted);

/// Each admissible generator pair gets a nonzero entry with probability
/// `density_percent`/100.
Kernel random_kernel(Rng& rng, const BaseSpace& base, unsigned density_percent = 60);

/// Monomial over x of total degree <= max_degree.
CauchyMonomial random_monomial(Rng& rng, const BaseSpace& base, const Configuration& x,
                               std::uint32_t max_degree);
/// Up to max_terms monomials over x with nonzero rational coefficients.
FibreElement random_element(Rng& rng, const BaseSpace& base, const Configuration& x,
                            std::uint32_t max_degree, std::size_t max_terms = 3);

/// Uniformly chosen configuration of at most max_points points.
Configuration random_configuration(Rng& rng, const BaseSpace& base, std::size_t max_points);

/// Section with up to `configs` supported configurations of at most
/// `support_points` points; the section bound is max_points.
Section random_section(Rng& rng, const BaseSpace& base, std::size_t support_points,
                       std::size_t max_points, std::size_t configs, std::uint32_t max_degree);

/// Word visiting every point of x in random order with random letters.
Word random_word(Rng& rng, const BaseSpace& base, const Configuration& x);

}  // namespace uconf

#endif  // UCONF_RANDOM_HPP
