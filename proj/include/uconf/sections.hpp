#ifndef UCONF_SECTIONS_HPP
#define UCONF_SECTIONS_HPP

// Finitely supported sections of the Poisson-Cauchy bundle over UConf(M).
//
// Products of sections sum fibre products over every ordered split of a
// configuration:
//   (φ1 • φ2)(X)  = Σ_{X=X'⊔X''} φ1(X') ⊡ φ2(X'')
//   {φ1, φ2}(X)   = Σ_{X=X'⊔X''} {φ1(X'), φ2(X'')}_k
// Density coefficients are folded into the scalars relative to the basis
// density of each configuration.

#include <cstddef>
#include <map>
#include <vector>

#include "uconf/configspace.hpp"
#include "uconf/fibre_algebra.hpp"
#include "uconf/poisson.hpp"

namespace uconf {

class Section {
 public:
  using Support = std::map<Configuration, FibreElement>;

  explicit Section(std::size_t max_points = 0) : max_points_(max_points) {}

  std::size_t max_points() const { return max_points_; }
  const Support& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }

  /// Value at x; the zero of the fibre over x when x is outside the support.
  FibreElement at(const Configuration& x) const;

  /// Adds `value` at its own configuration. Throws InvalidArgument when the
  /// configuration has more than max_points members.
  void add(const FibreElement& value);

  Section& operator+=(const Section& other);
  Section& operator-=(const Section& other);
  friend Section operator+(Section a, const Section& b) { return a += b; }
  friend Section operator-(Section a, const Section& b) { return a -= b; }
  Section operator-() const;
  friend Section operator*(const Scalar& s, const Section& a);

  bool operator==(const Section& other) const { return support_ == other.support_; }

 private:
  std::size_t max_points_;
  Support support_;
};

/// Configurations whose values were dropped because they exceeded the
/// result's max_points.
struct Truncation {
  std::vector<Configuration> dropped;
  bool empty() const { return dropped.empty(); }
};

/// 1 at the vacuum, zero elsewhere.
Section unit_section(std::size_t max_points = 0);

/// Result bound is the larger of the two input bounds.
Section convolve(const Section& a, const Section& b, Truncation* report = nullptr);
Section section_bracket(const Section& a, const Section& b, const Kernel& k,
                        Truncation* report = nullptr);

/// {φ1,{φ2,φ3}} + {φ2,{φ3,φ1}} + {φ3,{φ1,φ2}}.
Section jacobiator(const Section& a, const Section& b, const Section& c, const Kernel& k);

/// Keeps configurations with at most `max_points` members.
Section truncate(const Section& s, std::size_t max_points);

}  // namespace uconf

#endif  // UCONF_SECTIONS_HPP
