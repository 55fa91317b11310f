#ifndef UCONF_POISSON_HPP
#define UCONF_POISSON_HPP

// Kernel-generated Poisson 2-algebra bracket on S^⊠ S^⊗(V).
//
// The bracket of a over X and b over Y (X, Y disjoint) is the biderivation
// fixed by {u_x, v_y} = k(u_x, v_y) 1_x ⊡ 1_y and by vanishing on units:
//
//   {a, b} = Σ_{x∈X, y∈Y} Σ_{i,j} k((x,i),(y,j)) · ∂a/∂e_i(x) ⊡ ∂b/∂e_j(y)
//
// where the derivative drops one e_i from the factor at x (leaving 1_x when
// the factor was linear) and keeps every other factor. The literal recursion
// through the four Leibniz rules is kept alongside as an oracle.

#include <cstdint>
#include <map>
#include <utility>

#include "uconf/configspace.hpp"
#include "uconf/fibre_algebra.hpp"
#include "uconf/scalar.hpp"

namespace uconf {

/// A basis vector e_index of V at a point.
struct Generator {
  PointId point;
  std::uint32_t index = 0;
  auto operator<=>(const Generator&) const = default;
};

/// Antisymmetric pairing of generators over distinct points. Only the
/// orientation with the first point below the second is stored; the other
/// orientation reads back negated and missing pairs read as zero.
class Kernel {
 public:
  using Entries = std::map<std::pair<Generator, Generator>, Scalar>;

  /// Sets k(u,v) = value (and so k(v,u) = -value). Throws SamePoint.
  void set(const Generator& u, const Generator& v, const Scalar& value);
  Scalar operator()(const Generator& u, const Generator& v) const;

  /// Stored entries, each with key.first.point < key.second.point.
  const Entries& entries() const { return entries_; }

 private:
  Entries entries_;
};

/// k(u,v). Throws SamePoint when u and v sit at the same point.
Scalar kernel_eval(const Kernel& k, const Generator& u, const Generator& v);

/// Closed biderivation form. Throws OverlappingConfigurations.
FibreElement bracket_fibre(const FibreElement& a, const FibreElement& b, const Kernel& k);

/// Which factor the recursion peels off first: the lowest point / basis
/// index, or the highest.
enum class PeelOrder { Front, Back };

/// Literal recursion: units bracket to zero, generators through the kernel,
/// everything else by the ⊡- and ⊙-Leibniz rules one factor at a time.
/// Extended bilinearly over the terms of a and b.
FibreElement bracket_fibre_recursive(const FibreElement& a, const FibreElement& b,
                                     const Kernel& k, PeelOrder order = PeelOrder::Front);

/// Coefficient of a density relative to the basis density of its
/// configuration, the product of the per-point weights.
struct DensityValue {
  Scalar value = 1;
};

struct DensityBracket {
  FibreElement element;
  DensityValue density;
};

/// Bracket on P ⊗ Dens: ({a,b}_k, α ⊡ β). Throws InvalidArgument on a
/// non-positive density.
DensityBracket bracket_with_density(const FibreElement& a, const DensityValue& alpha,
                                    const FibreElement& b, const DensityValue& beta,
                                    const Kernel& k);

}  // namespace uconf

#endif  // UCONF_POISSON_HPP
