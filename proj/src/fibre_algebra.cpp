#include "uconf/fibre_algebra.hpp"

#include <algorithm>
#include <functional>

namespace uconf {

std::uint32_t PointFactor::degree() const {
  std::uint32_t d = 0;
  for (const auto& [_, m] : exponents) d += m;
  return d;
}

std::uint32_t PointFactor::multiplicity(std::uint32_t index) const {
  auto it = exponents.find(index);
  return it == exponents.end() ? 0 : it->second;
}

CauchyMonomial::CauchyMonomial(std::vector<PointFactor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const PointFactor& a, const PointFactor& b) { return a.point < b.point; });
  for (std::size_t i = 1; i < factors_.size(); ++i)
    if (factors_[i - 1].point == factors_[i].point)
      throw OverlappingConfigurations("monomial has two factors at '" + factors_[i].point.label + "'");
  for (const auto& f : factors_)
    for (const auto& [_, m] : f.exponents)
      if (m == 0) throw InvalidArgument("zero multiplicity stored in a point factor");
}

CauchyMonomial CauchyMonomial::unit(const Configuration& x) {
  CauchyMonomial m;
  m.factors_.reserve(x.size());
  for (const auto& p : x) m.factors_.push_back(PointFactor{p, {}});
  return m;
}

Configuration CauchyMonomial::config() const {
  std::vector<PointId> pts;
  pts.reserve(factors_.size());
  for (const auto& f : factors_) pts.push_back(f.point);
  return Configuration::from_sorted(std::move(pts));
}

std::uint32_t CauchyMonomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.degree();
  return d;
}

const PointFactor* CauchyMonomial::find(const PointId& p) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                             [](const PointFactor& f, const PointId& q) { return f.point < q; });
  return it != factors_.end() && it->point == p ? &*it : nullptr;
}

CauchyMonomial CauchyMonomial::lowered(const PointId& p, std::uint32_t index) const {
  CauchyMonomial out = *this;
  for (auto& f : out.factors_) {
    if (f.point != p) continue;
    auto it = f.exponents.find(index);
    if (it == f.exponents.end())
      throw InvalidArgument("no factor e_" + std::to_string(index) + " at '" + p.label + "'");
    if (--it->second == 0) f.exponents.erase(it);
    return out;
  }
  throw ConfigMismatch("point '" + p.label + "' is not in the monomial's configuration");
}

CauchyMonomial CauchyMonomial::raised(const PointId& p, std::uint32_t index) const {
  CauchyMonomial out = *this;
  for (auto& f : out.factors_) {
    if (f.point == p) {
      ++f.exponents[index];
      return out;
    }
  }
  throw ConfigMismatch("point '" + p.label + "' is not in the monomial's configuration");
}

CauchyMonomial CauchyMonomial::restricted(const Configuration& part) const {
  CauchyMonomial out;
  for (const auto& f : factors_)
    if (part.contains(f.point)) out.factors_.push_back(f);
  return out;
}

CauchyMonomial hadamard(const CauchyMonomial& a, const CauchyMonomial& b) {
  if (a.size() != b.size())
    throw ConfigMismatch("hadamard product over different configurations");
  std::vector<PointFactor> out = a.factors();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& g = b.factors()[i];
    if (out[i].point != g.point)
      throw ConfigMismatch("hadamard product over different configurations");
    for (const auto& [idx, m] : g.exponents) out[i].exponents[idx] += m;
  }
  return CauchyMonomial(std::move(out));
}

CauchyMonomial cauchy(const CauchyMonomial& a, const CauchyMonomial& b) {
  std::vector<PointFactor> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.factors().begin(), a.factors().end());
  out.insert(out.end(), b.factors().begin(), b.factors().end());
  return CauchyMonomial(std::move(out));
}

FibreElement::FibreElement(Configuration config) : config_(std::move(config)) {}

FibreElement::FibreElement(const CauchyMonomial& m, const Scalar& coeff) : config_(m.config()) {
  if (coeff != 0) terms_.emplace(m, coeff);
}

void FibreElement::add_term(const CauchyMonomial& m, const Scalar& coeff) {
  if (coeff == 0) return;
  if (m.size() != config_.size())
    throw ConfigMismatch("term over " + m.config().to_string() + " added to fibre over " +
                         config_.to_string());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m.factors()[i].point != config_.members()[i])
      throw ConfigMismatch("term over " + m.config().to_string() + " added to fibre over " +
                           config_.to_string());
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

FibreElement& FibreElement::operator+=(const FibreElement& other) {
  if (other.config_ != config_)
    throw ConfigMismatch("sum of elements over " + config_.to_string() + " and " +
                         other.config_.to_string());
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

FibreElement& FibreElement::operator-=(const FibreElement& other) { return *this += -other; }

FibreElement& FibreElement::operator*=(const Scalar& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, c] : terms_) c *= s;
  return *this;
}

FibreElement FibreElement::operator-() const {
  FibreElement out = *this;
  for (auto& [_, c] : out.terms_) c = -c;
  return out;
}

bool FibreElement::operator==(const FibreElement& other) const {
  return config_ == other.config_ && terms_ == other.terms_;
}

FibreElement embed_generator(const BaseSpace& base, const PointId& x, std::uint32_t index) {
  const auto rank = base.rank(x);
  if (index >= rank)
    throw BasisOutOfRange("basis index " + std::to_string(index) + " out of range for point '" +
                          x.label + "' of rank " + std::to_string(rank));
  return FibreElement(CauchyMonomial({PointFactor{x, {{index, 1}}}}), 1);
}

FibreElement unit_hadamard(const Configuration& x) { return FibreElement(CauchyMonomial::unit(x), 1); }

FibreElement hadamard_mul(const FibreElement& a, const FibreElement& b) {
  if (a.config() != b.config())
    throw ConfigMismatch("hadamard product of elements over " + a.config().to_string() + " and " +
                         b.config().to_string());
  FibreElement out(a.config());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(hadamard(ma, mb), ca * cb);
  return out;
}

FibreElement cauchy_mul(const FibreElement& a, const FibreElement& b) {
  FibreElement out(disjoint_union(a.config(), b.config()));
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(cauchy(ma, mb), ca * cb);
  return out;
}

Degrees degrees(const FibreElement& a) {
  Degrees d{a.config(), {}};
  for (const auto& [m, _] : a.terms()) d.hadamard_degrees.push_back(m.degree());
  std::sort(d.hadamard_degrees.begin(), d.hadamard_degrees.end());
  return d;
}

namespace {

// All exponent maps on `rank` variables with total degree <= max_degree
// (or exactly `max_degree` when exact is set).
std::vector<std::map<std::uint32_t, std::uint32_t>> point_exponents(std::uint32_t rank,
                                                                    std::uint32_t max_degree,
                                                                    bool exact) {
  std::vector<std::map<std::uint32_t, std::uint32_t>> out;
  std::map<std::uint32_t, std::uint32_t> current;
  std::function<void(std::uint32_t, std::uint32_t)> walk = [&](std::uint32_t var,
                                                               std::uint32_t left) {
    if (var == rank) {
      if (!exact || left == 0) out.push_back(current);
      return;
    }
    for (std::uint32_t m = 0; m <= left; ++m) {
      if (m) current[var] = m;
      walk(var + 1, left - m);
    }
    current.erase(var);
  };
  walk(0, max_degree);
  return out;
}

std::vector<CauchyMonomial> product_basis(const BaseSpace& base, const Configuration& x,
                                          std::uint32_t degree, bool exact) {
  std::vector<std::vector<PointFactor>> partial{{}};
  for (const auto& p : x) {
    std::vector<std::vector<PointFactor>> next;
    for (const auto& exps : point_exponents(base.rank(p), degree, exact))
      for (const auto& prefix : partial) {
        auto extended = prefix;
        extended.push_back(PointFactor{p, exps});
        next.push_back(std::move(extended));
      }
    partial = std::move(next);
  }
  std::vector<CauchyMonomial> out;
  out.reserve(partial.size());
  for (auto& fs : partial) out.emplace_back(std::move(fs));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<CauchyMonomial> enumerate_monomials(const BaseSpace& base, const Configuration& x,
                                                std::uint32_t max_degree) {
  return product_basis(base, x, max_degree, false);
}

std::vector<CauchyMonomial> enumerate_linear_monomials(const BaseSpace& base,
                                                       const Configuration& x) {
  return product_basis(base, x, 1, true);
}

std::uint64_t truncated_fibre_dim(const BaseSpace& base, const Configuration& x, std::uint32_t d) {
  std::uint64_t dim = 1;
  for (const auto& p : x) dim *= binomial(base.rank(p) + d, d);
  return dim;
}

}  // namespace uconf
