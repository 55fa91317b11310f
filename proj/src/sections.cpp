#include "uconf/sections.hpp"

#include <algorithm>

namespace uconf {

FibreElement Section::at(const Configuration& x) const {
  auto it = support_.find(x);
  return it == support_.end() ? FibreElement(x) : it->second;
}

void Section::add(const FibreElement& value) {
  if (value.config().size() > max_points_)
    throw InvalidArgument("value over " + value.config().to_string() + " exceeds the " +
                          std::to_string(max_points_) + "-point bound of the section");
  if (value.is_zero()) return;
  auto [it, inserted] = support_.try_emplace(value.config(), value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) support_.erase(it);
  }
}

Section& Section::operator+=(const Section& other) {
  max_points_ = std::max(max_points_, other.max_points_);
  for (const auto& [_, v] : other.support_) add(v);
  return *this;
}

Section& Section::operator-=(const Section& other) { return *this += -other; }

Section Section::operator-() const {
  Section out(max_points_);
  for (const auto& [_, v] : support_) out.add(-v);
  return out;
}

Section operator*(const Scalar& s, const Section& a) {
  Section out(a.max_points());
  for (const auto& [_, v] : a.support()) out.add(s * v);
  return out;
}

Section unit_section(std::size_t max_points) {
  Section s(max_points);
  s.add(unit_hadamard(Configuration{}));
  return s;
}

namespace {

// Σ over pairs of supported configurations meeting in no point; each such
// pair is exactly one ordered split of its union.
template <class Product>
Section split_sum(const Section& a, const Section& b, Truncation* report, Product product) {
  Section out(std::max(a.max_points(), b.max_points()));
  std::map<Configuration, FibreElement> dropped;
  for (const auto& [x, va] : a.support()) {
    for (const auto& [y, vb] : b.support()) {
      if (intersects(x, y)) continue;
      FibreElement value = product(va, vb);
      if (value.is_zero()) continue;
      if (value.config().size() > out.max_points()) {
        auto [it, inserted] = dropped.try_emplace(value.config(), value);
        if (!inserted) it->second += value;
        continue;
      }
      out.add(value);
    }
  }
  if (report) {
    report->dropped.clear();
    for (const auto& [x, v] : dropped)
      if (!v.is_zero()) report->dropped.push_back(x);
  }
  return out;
}

}  // namespace

Section convolve(const Section& a, const Section& b, Truncation* report) {
  return split_sum(a, b, report, [](const FibreElement& u, const FibreElement& v) {
    return cauchy_mul(u, v);
  });
}

Section section_bracket(const Section& a, const Section& b, const Kernel& k, Truncation* report) {
  return split_sum(a, b, report, [&k](const FibreElement& u, const FibreElement& v) {
    return bracket_fibre(u, v, k);
  });
}

Section jacobiator(const Section& a, const Section& b, const Section& c, const Kernel& k) {
  return section_bracket(a, section_bracket(b, c, k), k) +
         section_bracket(b, section_bracket(c, a, k), k) +
         section_bracket(c, section_bracket(a, b, k), k);
}

Section truncate(const Section& s, std::size_t max_points) {
  Section out(std::min(s.max_points(), max_points));
  for (const auto& [x, v] : s.support())
    if (x.size() <= max_points) out.add(v);
  return out;
}

}  // namespace uconf
