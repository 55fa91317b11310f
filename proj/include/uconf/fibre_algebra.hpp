#ifndef UCONF_FIBRE_ALGEBRA_HPP
#define UCONF_FIBRE_ALGEBRA_HPP

// Fibres of the Cauchy–Hadamard bundle S^⊠ S^⊗(V) over a finite base.
//
// A CauchyMonomial is a ⊡-product of one polynomial factor per point of its
// configuration. Factors of degree zero (1_x) are stored explicitly so the
// supporting configuration is always part of the monomial: 1_p ⊡ e[q,0] and
// e[q,0] are different monomials over different fibres.
//
// Two commutative products act on fibre elements:
//   hadamard_mul (⊙)  same configuration, multiplies the factors pointwise;
//   cauchy_mul   (⊡)  disjoint configurations, juxtaposes the factors.

#include <cstdint>
#include <map>
#include <vector>

#include "uconf/configspace.hpp"
#include "uconf/scalar.hpp"

namespace uconf {

/// Element of the basis of S^⊗(V_x): a monomial in the basis vectors e_i of
/// V_x. An empty exponent map is 1_x.
struct PointFactor {
  PointId point;
  std::map<std::uint32_t, std::uint32_t> exponents;  // basis index -> multiplicity > 0

  std::uint32_t degree() const;
  bool is_unit() const { return exponents.empty(); }
  std::uint32_t multiplicity(std::uint32_t index) const;

  auto operator<=>(const PointFactor&) const = default;
};

class CauchyMonomial {
 public:
  /// The empty monomial 1_∅.
  CauchyMonomial() = default;
  /// Factors may come in any order; points must be distinct.
  explicit CauchyMonomial(std::vector<PointFactor> factors);

  /// 1_{x_1} ⊡ ... ⊡ 1_{x_k}.
  static CauchyMonomial unit(const Configuration& x);

  const std::vector<PointFactor>& factors() const { return factors_; }
  Configuration config() const;
  std::size_t size() const { return factors_.size(); }
  /// Total ⊗-degree (sum of all multiplicities).
  std::uint32_t degree() const;
  const PointFactor* find(const PointId& p) const;

  /// Removes one copy of e_index at point p. Caller guarantees it is there.
  CauchyMonomial lowered(const PointId& p, std::uint32_t index) const;
  /// Adds one copy of e_index at point p, which must be in the configuration.
  CauchyMonomial raised(const PointId& p, std::uint32_t index) const;
  /// The ⊡-factor supported on the sub-configuration `part`.
  CauchyMonomial restricted(const Configuration& part) const;

  auto operator<=>(const CauchyMonomial&) const = default;

 private:
  std::vector<PointFactor> factors_;  // sorted by point
};

/// Pointwise exponent addition; both monomials over the same configuration.
CauchyMonomial hadamard(const CauchyMonomial& a, const CauchyMonomial& b);
/// Factor juxtaposition; configurations must be disjoint.
CauchyMonomial cauchy(const CauchyMonomial& a, const CauchyMonomial& b);

/// Exact linear combination of monomials over one configuration.
class FibreElement {
 public:
  using Terms = std::map<CauchyMonomial, Scalar>;

  /// The zero element of the fibre over `config`.
  explicit FibreElement(Configuration config = {});
  FibreElement(const CauchyMonomial& m, const Scalar& coeff);

  const Configuration& config() const { return config_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coeff·m; m must live over this element's configuration.
  void add_term(const CauchyMonomial& m, const Scalar& coeff);

  FibreElement& operator+=(const FibreElement& other);
  FibreElement& operator-=(const FibreElement& other);
  FibreElement& operator*=(const Scalar& s);

  friend FibreElement operator+(FibreElement a, const FibreElement& b) { return a += b; }
  friend FibreElement operator-(FibreElement a, const FibreElement& b) { return a -= b; }
  friend FibreElement operator*(const Scalar& s, FibreElement a) { return a *= s; }
  FibreElement operator-() const;

  bool operator==(const FibreElement& other) const;

 private:
  Configuration config_;
  Terms terms_;
};

/// e_i at x over the one-point configuration {x}.
FibreElement embed_generator(const BaseSpace& base, const PointId& x, std::uint32_t index);
/// 1_X, the unit of ⊙ over X. unit_hadamard({}) is 1_∅, the unit of ⊡.
FibreElement unit_hadamard(const Configuration& x);

FibreElement hadamard_mul(const FibreElement& a, const FibreElement& b);
FibreElement cauchy_mul(const FibreElement& a, const FibreElement& b);

struct Degrees {
  Configuration config;
  std::vector<std::uint32_t> hadamard_degrees;  // one entry per term, sorted
};

Degrees degrees(const FibreElement& a);

/// Every monomial over X whose factor at each point has degree <= max_degree.
std::vector<CauchyMonomial> enumerate_monomials(const BaseSpace& base, const Configuration& x,
                                                std::uint32_t max_degree);
/// Basis of S^⊠k(V)_X: monomials of degree exactly one at every point.
std::vector<CauchyMonomial> enumerate_linear_monomials(const BaseSpace& base,
                                                       const Configuration& x);
/// Π_{x∈X} C(rank(x)+d, d).
std::uint64_t truncated_fibre_dim(const BaseSpace& base, const Configuration& x, std::uint32_t d);

}  // namespace uconf

#endif  // UCONF_FIBRE_ALGEBRA_HPP
