#include "uconf/poisson.hpp"

namespace uconf {

void Kernel::set(const Generator& u, const Generator& v, const Scalar& value) {
  if (u.point == v.point)
    throw SamePoint("kernel entry pairs point '" + u.point.label + "' with itself");
  if (u.point < v.point) {
    entries_[{u, v}] = value;
  } else {
    entries_[{v, u}] = -value;
  }
}

Scalar Kernel::operator()(const Generator& u, const Generator& v) const {
  if (u.point == v.point)
    throw SamePoint("kernel queried on two generators at '" + u.point.label + "'");
  const bool forward = u.point < v.point;
  auto it = forward ? entries_.find({u, v}) : entries_.find({v, u});
  if (it == entries_.end()) return 0;
  return forward ? it->second : Scalar(-it->second);
}

Scalar kernel_eval(const Kernel& k, const Generator& u, const Generator& v) { return k(u, v); }

namespace {

void bracket_monomials(const CauchyMonomial& a, const CauchyMonomial& b, const Scalar& coeff,
                       const Kernel& k, FibreElement& out) {
  for (const auto& fa : a.factors()) {
    for (const auto& [i, mi] : fa.exponents) {
      const Generator u{fa.point, i};
      const auto da = a.lowered(fa.point, i);
      for (const auto& fb : b.factors()) {
        for (const auto& [j, mj] : fb.exponents) {
          const Scalar kv = k(u, Generator{fb.point, j});
          if (kv == 0) continue;
          out.add_term(cauchy(da, b.lowered(fb.point, j)), coeff * kv * mi * mj);
        }
      }
    }
  }
}

// ---- recursion ---------------------------------------------------------

FibreElement from(const CauchyMonomial& m) { return FibreElement(m, 1); }

FibreElement recurse(const CauchyMonomial& a, const CauchyMonomial& b, const Kernel& k,
                     PeelOrder order) {
  const Configuration target = disjoint_union(a.config(), b.config());
  // item 1: units bracket to zero
  if (a.degree() == 0 || b.degree() == 0) return FibreElement(target);

  // ⊡-Leibniz in the first slot: {a1 ⊡ rest, b} = {a1,b} ⊡ rest + a1 ⊡ {rest,b}
  if (a.size() > 1) {
    const auto& f = order == PeelOrder::Front ? a.factors().front() : a.factors().back();
    const Configuration single{f.point};
    const auto a1 = a.restricted(single);
    const auto rest = a.restricted(set_difference(a.config(), single));
    return cauchy_mul(recurse(a1, b, k, order), from(rest)) +
           cauchy_mul(from(a1), recurse(rest, b, k, order));
  }
  // ⊡-Leibniz in the second slot: {a, b1 ⊡ rest} = {a,b1} ⊡ rest + b1 ⊡ {a,rest}
  if (b.size() > 1) {
    const auto& f = order == PeelOrder::Front ? b.factors().front() : b.factors().back();
    const Configuration single{f.point};
    const auto b1 = b.restricted(single);
    const auto rest = b.restricted(set_difference(b.config(), single));
    return cauchy_mul(recurse(a, b1, k, order), from(rest)) +
           cauchy_mul(from(b1), recurse(a, rest, k, order));
  }

  const auto& fa = a.factors().front();
  const auto& fb = b.factors().front();
  const Configuration x{fa.point};
  const Configuration y{fb.point};
  const auto pick = [order](const PointFactor& f) {
    return order == PeelOrder::Front ? f.exponents.begin()->first : f.exponents.rbegin()->first;
  };

  // ⊙-Leibniz in the first slot:
  // {e_i ⊙ a', c} = {e_i, c} ⊙ (a' ⊡ 1_Y) + (e_i ⊡ 1_Y) ⊙ {a', c}
  if (a.degree() > 1) {
    const auto i = pick(fa);
    const CauchyMonomial ei({PointFactor{fa.point, {{i, 1}}}});
    const auto rest = a.lowered(fa.point, i);
    const auto unit_y = CauchyMonomial::unit(y);
    return hadamard_mul(recurse(ei, b, k, order), from(cauchy(rest, unit_y))) +
           hadamard_mul(from(cauchy(ei, unit_y)), recurse(rest, b, k, order));
  }
  // ⊙-Leibniz in the second slot:
  // {a, e_j ⊙ b'} = {a, e_j} ⊙ (1_X ⊡ b') + (1_X ⊡ e_j) ⊙ {a, b'}
  if (b.degree() > 1) {
    const auto j = pick(fb);
    const CauchyMonomial ej({PointFactor{fb.point, {{j, 1}}}});
    const auto rest = b.lowered(fb.point, j);
    const auto unit_x = CauchyMonomial::unit(x);
    return hadamard_mul(recurse(a, ej, k, order), from(cauchy(unit_x, rest))) +
           hadamard_mul(from(cauchy(unit_x, ej)), recurse(a, rest, k, order));
  }

  // item 2: generators
  const Generator u{fa.point, fa.exponents.begin()->first};
  const Generator v{fb.point, fb.exponents.begin()->first};
  return k(u, v) * unit_hadamard(target);
}

}  // namespace

FibreElement bracket_fibre(const FibreElement& a, const FibreElement& b, const Kernel& k) {
  FibreElement out(disjoint_union(a.config(), b.config()));
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) bracket_monomials(ma, mb, ca * cb, k, out);
  return out;
}

FibreElement bracket_fibre_recursive(const FibreElement& a, const FibreElement& b,
                                     const Kernel& k, PeelOrder order) {
  FibreElement out(disjoint_union(a.config(), b.config()));
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out += (ca * cb) * recurse(ma, mb, k, order);
  return out;
}

DensityBracket bracket_with_density(const FibreElement& a, const DensityValue& alpha,
                                    const FibreElement& b, const DensityValue& beta,
                                    const Kernel& k) {
  if (alpha.value <= 0 || beta.value <= 0)
    throw InvalidArgument("density coefficients must be positive");
  return {bracket_fibre(a, b, k), DensityValue{alpha.value * beta.value}};
}

}  // namespace uconf
