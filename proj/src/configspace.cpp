#include "uconf/configspace.hpp"

#include <algorithm>
#include <cassert>
#include <iterator>

namespace uconf {

Configuration::Configuration(std::initializer_list<PointId> points)
    : Configuration(std::vector<PointId>(points)) {}

Configuration::Configuration(std::vector<PointId> points) : members_(std::move(points)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw InvalidArgument("configuration has a repeated point");
}

Configuration Configuration::from_sorted(std::vector<PointId> points) {
  assert(std::is_sorted(points.begin(), points.end()));
  assert(std::adjacent_find(points.begin(), points.end()) == points.end());
  Configuration c;
  c.members_ = std::move(points);
  return c;
}

bool Configuration::contains(const PointId& p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

std::string Configuration::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ',';
    out += members_[i].label;
  }
  return out + "]";
}

bool intersects(const Configuration& a, const Configuration& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

Configuration set_union(const Configuration& a, const Configuration& b) {
  std::vector<PointId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Configuration::from_sorted(std::move(out));
}

Configuration disjoint_union(const Configuration& a, const Configuration& b) {
  if (intersects(a, b))
    throw OverlappingConfigurations("configurations " + a.to_string() + " and " + b.to_string() +
                                    " overlap");
  return set_union(a, b);
}

Configuration set_difference(const Configuration& a, const Configuration& b) {
  std::vector<PointId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Configuration::from_sorted(std::move(out));
}

void BaseSpace::add_point(const PointId& id, std::uint32_t rank, Scalar weight) {
  if (id.label.empty()) throw InvalidArgument("empty point label");
  if (contains(id)) throw InvalidArgument("duplicate point '" + id.label + "'");
  if (rank == 0) throw InvalidArgument("point '" + id.label + "' has rank 0");
  if (weight <= 0) throw InvalidArgument("point '" + id.label + "' has non-positive weight");
  data_.emplace(id, PointData{rank, std::move(weight)});
}

std::uint32_t BaseSpace::rank(const PointId& p) const {
  auto it = data_.find(p);
  if (it == data_.end()) throw UnknownPoint("unknown point '" + p.label + "'");
  return it->second.rank;
}

const Scalar& BaseSpace::weight(const PointId& p) const {
  auto it = data_.find(p);
  if (it == data_.end()) throw UnknownPoint("unknown point '" + p.label + "'");
  return it->second.weight;
}

std::vector<PointId> BaseSpace::points() const {
  std::vector<PointId> out;
  out.reserve(data_.size());
  for (const auto& [id, _] : data_) out.push_back(id);
  return out;
}

Configuration BaseSpace::all_points() const { return Configuration::from_sorted(points()); }

std::vector<Configuration> BaseSpace::configurations(std::size_t k) const {
  const auto pts = points();
  std::vector<Configuration> out;
  if (k > pts.size()) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    std::vector<PointId> members;
    members.reserve(k);
    for (auto i : idx) members.push_back(pts[i]);
    out.push_back(Configuration::from_sorted(std::move(members)));
    // advance to the next k-combination in lexicographic order
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == pts.size() - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

void BaseSpace::check(const Configuration& x) const {
  for (const auto& p : x)
    if (!contains(p)) throw UnknownPoint("unknown point '" + p.label + "'");
}

std::vector<Split2> splits2(const Configuration& x) {
  const auto& m = x.members();
  const std::size_t n = m.size();
  std::vector<Split2> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<PointId> left, right;
    for (std::size_t i = 0; i < n; ++i)
      ((mask >> i) & 1U ? left : right).push_back(m[i]);
    out.emplace_back(Configuration::from_sorted(std::move(left)),
                     Configuration::from_sorted(std::move(right)));
  }
  return out;
}

std::vector<Split3> splits3(const Configuration& x) {
  const auto& m = x.members();
  const std::size_t n = m.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  std::vector<Split3> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<PointId> parts[3];
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 3) parts[c % 3].push_back(m[i]);
    out.push_back({Configuration::from_sorted(std::move(parts[0])),
                   Configuration::from_sorted(std::move(parts[1])),
                   Configuration::from_sorted(std::move(parts[2]))});
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> shuffles(std::uint32_t i, std::uint32_t j) {
  const std::uint32_t n = i + j;
  std::vector<std::vector<std::uint32_t>> out;
  // σ is fixed by the set {σ(1),...,σ(i)}; walk i-subsets of {1..n} in
  // lexicographic order, which is also the lexicographic order of σ.
  std::vector<std::uint32_t> head(i);
  for (std::uint32_t t = 0; t < i; ++t) head[t] = t + 1;
  for (;;) {
    std::vector<std::uint32_t> sigma = head;
    for (std::uint32_t v = 1; v <= n; ++v)
      if (!std::binary_search(head.begin(), head.end(), v)) sigma.push_back(v);
    out.push_back(std::move(sigma));
    std::uint32_t pos = i;
    while (pos > 0 && head[pos - 1] == n - i + pos) --pos;
    if (pos == 0) break;
    ++head[pos - 1];
    for (std::uint32_t t = pos; t < i; ++t) head[t] = head[t - 1] + 1;
  }
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t t = 2; t <= n; ++t) r *= t;
  return r;
}

}  // namespace uconf
