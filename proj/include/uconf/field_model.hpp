#ifndef UCONF_FIELD_MODEL_HPP
#define UCONF_FIELD_MODEL_HPP

// Sections read as exact polynomial functionals of a discrete field, and a
// Peierls-style bracket on those functionals built directly from partial
// derivatives.
//
// Each monomial of a functional carries the configuration it is supported on,
// a product of per-point site densities ν(x) with ν(x)² = 0. Multiplying two
// terms supported on overlapping configurations gives zero, which is the
// discrete counterpart of the diagonal having measure zero in UConf(M). The
// tag is invisible to evaluation (every ν(x) reads as 1); the numeric density
// weights live in the coefficients.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "uconf/configspace.hpp"
#include "uconf/poisson.hpp"
#include "uconf/scalar.hpp"
#include "uconf/sections.hpp"

namespace uconf {

/// The coordinate φ_index(point).
struct Variable {
  PointId point;
  std::uint32_t index = 0;
  auto operator<=>(const Variable&) const = default;
};

struct FunctionalMonomial {
  Configuration support;
  std::map<Variable, std::uint32_t> powers;  // exponents > 0
  auto operator<=>(const FunctionalMonomial&) const = default;
};

class PolyFunctional {
 public:
  using Terms = std::map<FunctionalMonomial, Scalar>;

  PolyFunctional() = default;

  static PolyFunctional constant(const Scalar& c);
  static PolyFunctional variable(const Variable& v);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::uint32_t degree() const;

  void add_term(const FunctionalMonomial& m, const Scalar& c);

  PolyFunctional& operator+=(const PolyFunctional& other);
  PolyFunctional& operator-=(const PolyFunctional& other);
  friend PolyFunctional operator+(PolyFunctional a, const PolyFunctional& b) { return a += b; }
  friend PolyFunctional operator-(PolyFunctional a, const PolyFunctional& b) { return a -= b; }
  friend PolyFunctional operator*(const PolyFunctional& a, const PolyFunctional& b);
  friend PolyFunctional operator*(const Scalar& s, const PolyFunctional& a);

  /// Exact partial derivative with respect to v.
  PolyFunctional derivative(const Variable& v) const;
  /// Every variable appearing with positive exponent.
  std::vector<Variable> variables() const;

  bool operator==(const PolyFunctional&) const = default;

 private:
  Terms terms_;
};

/// Canonical text, e.g. "3/2*nu[p,q]*phi[p,0]^2*phi[q,0] + 1".
std::string render(const PolyFunctional& f);

/// Field values φ_i(x), one vector of length rank(x) per point.
class Field {
 public:
  Field() = default;
  void set(const PointId& x, std::vector<Scalar> values);
  const std::map<PointId, std::vector<Scalar>>& values() const { return values_; }
  /// Throws UnknownPoint / BasisOutOfRange if v is not covered.
  const Scalar& at(const Variable& v) const;
  /// Throws InvalidArgument unless every point of `base` has rank(x) values
  /// and no other point appears.
  void validate(const BaseSpace& base) const;
  /// φ + h·δ_v.
  Field shifted(const Variable& v, const Scalar& h) const;

 private:
  std::map<PointId, std::vector<Scalar>> values_;
};

/// F_s = Σ_X (Π_{x∈X} weight(x)) · poly(s(X)), poly sending e_i at x to φ_i(x).
PolyFunctional to_functional(const Section& s, const BaseSpace& base);

Scalar evaluate(const PolyFunctional& f, const Field& phi);

/// {F,G} = Σ_{x≠y} Σ_{i,j} k((x,i),(y,j)) ∂F/∂φ_i(x) ∂G/∂φ_j(y).
/// Throws UnknownPoint if F or G mentions a point outside `base`.
PolyFunctional peierls_bracket(const PolyFunctional& f, const PolyFunctional& g, const Kernel& k,
                               const BaseSpace& base);

struct PeierlsCheck {
  PolyFunctional symbolic;  // to_functional({s,t})
  PolyFunctional oracle;    // {F_s, F_t} by derivatives
  bool equal = false;
};

/// Throws InvalidArgument if the section bracket had to drop configurations.
PeierlsCheck peierls_check(const Section& s, const Section& t, const Kernel& k,
                           const BaseSpace& base);
bool oracle_check(const Section& s, const Section& t, const Kernel& k, const BaseSpace& base);

/// (F(φ + h·δ_v) − F(φ)) / h, exactly.
Scalar difference_quotient(const PolyFunctional& f, const Field& phi, const Variable& v,
                           const Scalar& h);

}  // namespace uconf

#endif  // UCONF_FIELD_MODEL_HPP
