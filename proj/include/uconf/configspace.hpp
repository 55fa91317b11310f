#ifndef UCONF_CONFIGSPACE_HPP
#define UCONF_CONFIGSPACE_HPP

// Finite model of a base space M and of its unordered configuration space.
//
// A Configuration is a canonical (sorted, duplicate-free) sequence of point
// labels; the empty configuration is the vacuum. Every product and coproduct
// in the library is indexed by the ordered splits enumerated here.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uconf/errors.hpp"
#include "uconf/scalar.hpp"

namespace uconf {

/// Label of a point of M. Ordered lexicographically.
struct PointId {
  std::string label;

  PointId() = default;
  PointId(std::string l) : label(std::move(l)) {}  // NOLINT: implicit by intent
  PointId(const char* l) : label(l) {}              // NOLINT

  auto operator<=>(const PointId&) const = default;
};

class Configuration {
 public:
  Configuration() = default;
  Configuration(std::initializer_list<PointId> points);
  explicit Configuration(std::vector<PointId> points);

  /// Members are already sorted and distinct; only checked in debug builds.
  static Configuration from_sorted(std::vector<PointId> points);

  const std::vector<PointId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const PointId& p) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::string to_string() const;

  auto operator<=>(const Configuration&) const = default;

 private:
  std::vector<PointId> members_;
};

bool intersects(const Configuration& a, const Configuration& b);
/// Disjoint union; throws OverlappingConfigurations when a and b meet.
Configuration disjoint_union(const Configuration& a, const Configuration& b);
Configuration set_union(const Configuration& a, const Configuration& b);
Configuration set_difference(const Configuration& a, const Configuration& b);

struct PointData {
  std::uint32_t rank = 1;
  Scalar weight = 1;
};

/// The finite model of M: labeled points carrying a fibre rank of V and a
/// positive density weight.
class BaseSpace {
 public:
  BaseSpace() = default;

  void add_point(const PointId& id, std::uint32_t rank, Scalar weight = 1);

  bool contains(const PointId& p) const { return data_.count(p) != 0; }
  std::uint32_t rank(const PointId& p) const;
  const Scalar& weight(const PointId& p) const;
  std::size_t size() const { return data_.size(); }

  /// All points in canonical order.
  std::vector<PointId> points() const;
  Configuration all_points() const;

  /// All configurations with exactly k points, in lexicographic order.
  std::vector<Configuration> configurations(std::size_t k) const;

  /// Throws UnknownPoint if some member is not a point of this space.
  void check(const Configuration& x) const;

 private:
  std::map<PointId, PointData> data_;
};

using Split2 = std::pair<Configuration, Configuration>;

struct Split3 {
  Configuration first, second, third;
  auto operator<=>(const Split3&) const = default;
};

/// All 2^|X| ordered splits X = X' ⊔ X''. Split number m puts member i into
/// X' exactly when bit i of m is set, so (∅, X) comes first and (X, ∅) last.
std::vector<Split2> splits2(const Configuration& x);

/// All 3^|X| ordered splits into three parts, by base-3 digit of the index.
std::vector<Split3> splits3(const Configuration& x);

/// (i,j)-shuffles as 1-based images [σ(1), ..., σ(i+j)], lexicographic.
std::vector<std::vector<std::uint32_t>> shuffles(std::uint32_t i, std::uint32_t j);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
std::uint64_t factorial(std::uint64_t n);

}  // namespace uconf

#endif  // UCONF_CONFIGSPACE_HPP
