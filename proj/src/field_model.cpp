#include "uconf/field_model.hpp"

#include <set>

namespace uconf {

PolyFunctional PolyFunctional::constant(const Scalar& c) {
  PolyFunctional f;
  f.add_term(FunctionalMonomial{}, c);
  return f;
}

PolyFunctional PolyFunctional::variable(const Variable& v) {
  PolyFunctional f;
  f.add_term(FunctionalMonomial{{}, {{v, 1}}}, 1);
  return f;
}

std::uint32_t PolyFunctional::degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, _] : terms_) {
    std::uint32_t t = 0;
    for (const auto& [v, e] : m.powers) t += e;
    d = std::max(d, t);
  }
  return d;
}

void PolyFunctional::add_term(const FunctionalMonomial& m, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

PolyFunctional& PolyFunctional::operator+=(const PolyFunctional& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

PolyFunctional& PolyFunctional::operator-=(const PolyFunctional& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

PolyFunctional operator*(const PolyFunctional& a, const PolyFunctional& b) {
  PolyFunctional out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (intersects(ma.support, mb.support)) continue;  // ν(x)² = 0
      FunctionalMonomial m{set_union(ma.support, mb.support), ma.powers};
      for (const auto& [v, e] : mb.powers) m.powers[v] += e;
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

PolyFunctional operator*(const Scalar& s, const PolyFunctional& a) {
  PolyFunctional out;
  for (const auto& [m, c] : a.terms_) out.add_term(m, s * c);
  return out;
}

PolyFunctional PolyFunctional::derivative(const Variable& v) const {
  PolyFunctional out;
  for (const auto& [m, c] : terms_) {
    auto it = m.powers.find(v);
    if (it == m.powers.end()) continue;
    FunctionalMonomial d = m;
    const std::uint32_t e = it->second;
    if (e == 1) d.powers.erase(v); else d.powers[v] = e - 1;
    out.add_term(d, c * e);
  }
  return out;
}

std::vector<Variable> PolyFunctional::variables() const {
  std::set<Variable> vars;
  for (const auto& [m, _] : terms_)
    for (const auto& [v, e] : m.powers) vars.insert(v);
  return {vars.begin(), vars.end()};
}

std::string render(const PolyFunctional& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first_term = true;
  for (const auto& [m, c] : f.terms()) {
    if (!first_term) out += " + ";
    first_term = false;
    std::vector<std::string> parts;
    if (!m.support.empty()) {
      std::string nu = "nu[";
      bool first = true;
      for (const auto& p : m.support) {
        if (!first) nu += ',';
        first = false;
        nu += p.label;
      }
      parts.push_back(nu + "]");
    }
    for (const auto& [v, e] : m.powers) {
      std::string s = "phi[" + v.point.label + "," + std::to_string(v.index) + "]";
      if (e > 1) s += "^" + std::to_string(e);
      parts.push_back(s);
    }
    std::string term;
    if (c != 1 || parts.empty()) term = to_string(c);
    for (const auto& p : parts) {
      if (!term.empty()) term += '*';
      term += p;
    }
    out += term;
  }
  return out;
}

void Field::set(const PointId& x, std::vector<Scalar> values) { values_[x] = std::move(values); }

const Scalar& Field::at(const Variable& v) const {
  auto it = values_.find(v.point);
  if (it == values_.end()) throw UnknownPoint("field has no value at '" + v.point.label + "'");
  if (v.index >= it->second.size())
    throw BasisOutOfRange("field at '" + v.point.label + "' has no component " +
                          std::to_string(v.index));
  return it->second[v.index];
}

void Field::validate(const BaseSpace& base) const {
  for (const auto& p : base.points()) {
    auto it = values_.find(p);
    if (it == values_.end()) throw InvalidArgument("field misses point '" + p.label + "'");
    if (it->second.size() != base.rank(p))
      throw InvalidArgument("field at '" + p.label + "' has " + std::to_string(it->second.size()) +
                            " components, rank is " + std::to_string(base.rank(p)));
  }
  for (const auto& [p, _] : values_)
    if (!base.contains(p)) throw InvalidArgument("field names unknown point '" + p.label + "'");
}

Field Field::shifted(const Variable& v, const Scalar& h) const {
  Field out = *this;
  (void)at(v);
  out.values_[v.point][v.index] += h;
  return out;
}

PolyFunctional to_functional(const Section& s, const BaseSpace& base) {
  PolyFunctional out;
  for (const auto& [x, value] : s.support()) {
    Scalar weight = 1;
    for (const auto& p : x) weight *= base.weight(p);
    for (const auto& [mono, c] : value.terms()) {
      FunctionalMonomial m{x, {}};
      for (const auto& f : mono.factors())
        for (const auto& [i, e] : f.exponents) m.powers[Variable{f.point, i}] = e;
      out.add_term(m, weight * c);
    }
  }
  return out;
}

Scalar evaluate(const PolyFunctional& f, const Field& phi) {
  Scalar total = 0;
  for (const auto& [m, c] : f.terms()) {
    Scalar term = c;
    for (const auto& [v, e] : m.powers) {
      const Scalar& value = phi.at(v);
      for (std::uint32_t t = 0; t < e; ++t) term *= value;
    }
    total += term;
  }
  return total;
}

PolyFunctional peierls_bracket(const PolyFunctional& f, const PolyFunctional& g, const Kernel& k,
                               const BaseSpace& base) {
  const auto fv = f.variables();
  const auto gv = g.variables();
  for (const auto* vars : {&fv, &gv})
    for (const auto& v : *vars)
      if (!base.contains(v.point)) throw UnknownPoint("unknown point '" + v.point.label + "'");

  PolyFunctional out;
  for (const auto& u : fv) {
    const auto df = f.derivative(u);
    for (const auto& v : gv) {
      if (u.point == v.point) continue;
      const Scalar kv = k(Generator{u.point, u.index}, Generator{v.point, v.index});
      if (kv == 0) continue;
      out += kv * (df * g.derivative(v));
    }
  }
  return out;
}

PeierlsCheck peierls_check(const Section& s, const Section& t, const Kernel& k,
                           const BaseSpace& base) {
  Truncation dropped;
  const Section bracket = section_bracket(s, t, k, &dropped);
  if (!dropped.empty())
    throw InvalidArgument("section bracket exceeds the point bound at " +
                          dropped.dropped.front().to_string());
  PeierlsCheck out;
  out.symbolic = to_functional(bracket, base);
  out.oracle = peierls_bracket(to_functional(s, base), to_functional(t, base), k, base);
  out.equal = out.symbolic == out.oracle;
  return out;
}

bool oracle_check(const Section& s, const Section& t, const Kernel& k, const BaseSpace& base) {
  return peierls_check(s, t, k, base).equal;
}

Scalar difference_quotient(const PolyFunctional& f, const Field& phi, const Variable& v,
                           const Scalar& h) {
  if (h == 0) throw InvalidArgument("zero step");
  return (evaluate(f, phi.shifted(v, h)) - evaluate(f, phi)) / h;
}

}  // namespace uconf
