#include "uconf/tensor_lab.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace uconf {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  std::vector<PointId> pts;
  pts.reserve(letters_.size());
  for (const auto& l : letters_) pts.push_back(l.point);
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
    throw InvalidArgument("word visits a point twice");
}

Configuration Word::config() const {
  std::vector<PointId> pts;
  pts.reserve(letters_.size());
  for (const auto& l : letters_) pts.push_back(l.point);
  std::sort(pts.begin(), pts.end());
  return Configuration::from_sorted(std::move(pts));
}

Word Word::restricted(const Configuration& part) const {
  Word out;
  for (const auto& l : letters_)
    if (part.contains(l.point)) out.letters_.push_back(l);
  return out;
}

Word Word::permuted(const std::vector<std::size_t>& perm) const {
  Word out;
  out.letters_.reserve(perm.size());
  for (auto i : perm) out.letters_.push_back(letters_.at(i));
  return out;
}

Word concat(const Word& a, const Word& b) {
  if (intersects(a.config(), b.config()))
    throw OverlappingConfigurations("concatenated words share a point");
  std::vector<Letter> out = a.letters();
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(out));
}

TensorElement::TensorElement(Configuration config) : config_(std::move(config)) {}

TensorElement::TensorElement(const Word& w, const Scalar& coeff) : config_(w.config()) {
  add_term(w, coeff);
}

Scalar TensorElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void TensorElement::add_term(const Word& w, const Scalar& coeff) {
  if (coeff == 0) return;
  if (w.config() != config_)
    throw ConfigMismatch("word over " + w.config().to_string() + " added to tensor over " +
                         config_.to_string());
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  if (other.config_ != config_)
    throw ConfigMismatch("sum of tensors over " + config_.to_string() + " and " +
                         other.config_.to_string());
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

TensorElement operator*(const Scalar& s, const TensorElement& a) {
  TensorElement out(a.config());
  for (const auto& [w, c] : a.terms()) out.add_term(w, s * c);
  return out;
}

TensorElement concat(const TensorElement& a, const TensorElement& b) {
  TensorElement out(disjoint_union(a.config(), b.config()));
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add_term(concat(wa, wb), ca * cb);
  return out;
}

FibreElement symmetrize(const TensorElement& a) {
  FibreElement out(a.config());
  for (const auto& [w, c] : a.terms()) {
    std::vector<PointFactor> factors;
    factors.reserve(w.size());
    for (const auto& l : w.letters()) factors.push_back(PointFactor{l.point, {{l.basis, 1}}});
    out.add_term(CauchyMonomial(std::move(factors)), c);
  }
  return out;
}

TensorElement alternate(const TensorElement& a) {
  TensorElement out(a.config());
  for (const auto& [w, c] : a.terms()) {
    std::vector<Letter> letters = w.letters();
    // bubble sort by point, counting transpositions for the sign
    bool odd = false;
    for (std::size_t i = 0; i < letters.size(); ++i)
      for (std::size_t j = 0; j + 1 < letters.size() - i; ++j)
        if (letters[j + 1].point < letters[j].point) {
          std::swap(letters[j], letters[j + 1]);
          odd = !odd;
        }
    out.add_term(Word(std::move(letters)), odd ? Scalar(-c) : c);
  }
  return out;
}

SplitPairElement deconcat_cauchy(const Word& w) {
  SplitPairElement out;
  for (const auto& [left, right] : splits2(w.config()))
    out.add(w.restricted(left), w.restricted(right), 1);
  return out;
}

SplitPairElement deconcat_cauchy(const TensorElement& a) {
  SplitPairElement out;
  for (const auto& [w, c] : a.terms())
    for (const auto& [key, d] : deconcat_cauchy(w).terms) out.add(key.first, key.second, c * d);
  return out;
}

namespace {

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

bool is_symmetric(const TensorElement& a) {
  for (const auto& [w, c] : a.terms())
    for (const auto& perm : all_permutations(w.size()))
      if (a.coefficient(w.permuted(perm)) != c) return false;
  return true;
}

bool is_symmetric(const SplitPairElement& a) {
  auto coefficient = [&](const Word& l, const Word& r) {
    auto it = a.terms.find({l, r});
    return it == a.terms.end() ? Scalar(0) : it->second;
  };
  for (const auto& [key, c] : a.terms)
    for (const auto& pl : all_permutations(key.first.size()))
      for (const auto& pr : all_permutations(key.second.size()))
        if (coefficient(key.first.permuted(pl), key.second.permuted(pr)) != c) return false;
  return true;
}

HadamardWord::HadamardWord(Configuration cfg, std::vector<CauchyMonomial> ls)
    : config(std::move(cfg)), letters(std::move(ls)) {
  for (const auto& m : letters)
    if (m.config() != config)
      throw ConfigMismatch("hadamard word letter over " + m.config().to_string() +
                           " in a word over " + config.to_string());
}

PairElement<HadamardWord> deconcat_hadamard(const HadamardWord& w) {
  PairElement<HadamardWord> out;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    HadamardWord head(w.config, {w.letters.begin(), w.letters.begin() + static_cast<long>(i)});
    HadamardWord tail(w.config, {w.letters.begin() + static_cast<long>(i), w.letters.end()});
    out.add(head, tail, 1);
  }
  return out;
}

Scalar counit_hadamard(const HadamardWord& w) { return w.letters.empty() ? 1 : 0; }
Scalar counit_cauchy(const Word& w) { return w.empty() ? 1 : 0; }

void BoxOfTensors::add(const QuadWord& q, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(q, c);
  if (!inserted && (it->second += c) == 0) terms.erase(it);
}

void TensorOfBoxes::add(const QuadWord& q, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(q, c);
  if (!inserted && (it->second += c) == 0) terms.erase(it);
}

TensorOfBoxes shuffle_map(const BoxOfTensors& t) {
  TensorOfBoxes out;
  for (const auto& [q, c] : t.terms) {
    const auto left = set_union(q.first.config(), q.second.config());
    const auto right = set_union(q.third.config(), q.fourth.config());
    if (intersects(left, right))
      throw OverlappingConfigurations("shuffle term over " + left.to_string() + " and " +
                                      right.to_string() + " is not a split");
    out.add(QuadWord{q.first, q.third, q.second, q.fourth}, c);
  }
  return out;
}

std::uint64_t dim_T_fibre(const BaseSpace& base, const Configuration& x) {
  std::uint64_t d = factorial(x.size());
  for (const auto& p : x) d *= base.rank(p);
  return d;
}

std::uint64_t dim_TboxT_fibre(const BaseSpace& base, const Configuration& x) {
  return (x.size() + 1) * dim_T_fibre(base, x);
}

std::vector<Word> enumerate_T_basis(const BaseSpace& base, const Configuration& x) {
  std::vector<Word> out;
  std::vector<PointId> order = x.members();
  do {
    std::vector<std::vector<Letter>> partial{{}};
    for (const auto& p : order) {
      std::vector<std::vector<Letter>> next;
      for (const auto& prefix : partial)
        for (std::uint32_t i = 0; i < base.rank(p); ++i) {
          auto w = prefix;
          w.push_back(Letter{p, i});
          next.push_back(std::move(w));
        }
      partial = std::move(next);
    }
    for (auto& letters : partial) out.emplace_back(std::move(letters));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

TboxTEnumeration enumerate_TboxT_basis(const BaseSpace& base, const Configuration& x) {
  TboxTEnumeration out;
  std::map<Word, std::uint64_t> copies;
  for (const auto& w : enumerate_T_basis(base, x)) copies[w] = 0;
  for (const auto& [left, right] : splits2(x)) {
    const auto lb = enumerate_T_basis(base, left);
    const auto rb = enumerate_T_basis(base, right);
    for (const auto& l : lb)
      for (const auto& r : rb) {
        ++out.pairs;
        ++copies.at(concat(l, r));
      }
  }
  out.min_copies = copies.empty() ? 0 : copies.begin()->second;
  for (const auto& [_, n] : copies) {
    out.min_copies = std::min(out.min_copies, n);
    out.max_copies = std::max(out.max_copies, n);
  }
  return out;
}

std::uint64_t split_permutation_sum(std::uint64_t k) {
  std::uint64_t s = 0;
  for (std::uint64_t i = 0; i <= k; ++i) s += binomial(k, i) * factorial(i) * factorial(k - i);
  return s;
}

ExternalComparison compare_external(const BaseSpace& base, const std::vector<PointId>& tuple) {
  const Configuration x(tuple);  // throws on a repeated point
  base.check(x);

  ExternalComparison cmp;
  std::vector<std::vector<std::uint32_t>> indices{{}};
  for (const auto& p : tuple) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& prefix : indices)
      for (std::uint32_t i = 0; i < base.rank(p); ++i) {
        auto t = prefix;
        t.push_back(i);
        next.push_back(std::move(t));
      }
    indices = std::move(next);
  }
  cmp.external_dim = indices.size();

  std::set<CauchyMonomial> image;
  for (const auto& idx : indices) {
    std::vector<PointFactor> factors;
    for (std::size_t m = 0; m < tuple.size(); ++m)
      factors.push_back(PointFactor{tuple[m], {{idx[m], 1}}});
    CauchyMonomial mono(std::move(factors));
    image.insert(mono);
    cmp.table.emplace_back(idx, std::move(mono));
  }
  const auto basis = enumerate_linear_monomials(base, x);
  cmp.cauchy_dim = basis.size();
  cmp.injective = image.size() == indices.size();
  cmp.surjective = std::set<CauchyMonomial>(basis.begin(), basis.end()) == image;
  return cmp;
}

StrongMonoidalComparison compare_strong_monoidal(const BaseSpace& v, const BaseSpace& w,
                                                 const Configuration& x) {
  v.check(x);
  w.check(x);
  BaseSpace vw;
  for (const auto& p : x) vw.add_point(p, v.rank(p) * w.rank(p));

  StrongMonoidalComparison cmp;
  std::set<std::pair<CauchyMonomial, CauchyMonomial>> image;
  const auto domain = enumerate_linear_monomials(vw, x);
  for (const auto& m : domain) {
    std::vector<PointFactor> fv, fw;
    for (const auto& f : m.factors()) {
      const std::uint32_t idx = f.exponents.begin()->first;
      const std::uint32_t rw = w.rank(f.point);
      fv.push_back(PointFactor{f.point, {{idx / rw, 1}}});
      fw.push_back(PointFactor{f.point, {{idx % rw, 1}}});
    }
    image.emplace(CauchyMonomial(std::move(fv)), CauchyMonomial(std::move(fw)));
  }
  std::set<std::pair<CauchyMonomial, CauchyMonomial>> target;
  for (const auto& a : enumerate_linear_monomials(v, x))
    for (const auto& b : enumerate_linear_monomials(w, x)) target.emplace(a, b);

  cmp.product_bundle_dim = domain.size();
  cmp.tensor_of_dims = target.size();
  cmp.bijective = image.size() == domain.size() && image == target;
  return cmp;
}

}  // namespace uconf
