#ifndef UCONF_TENSOR_LAB_HPP
#define UCONF_TENSOR_LAB_HPP

// Ordered tensor words and the 2-monoidal bookkeeping around them.
//
// A Word is a basis tensor of the Cauchy tensor bundle T^⊠(V): one letter per
// point of its configuration, in some order. A HadamardWord is a basis tensor
// of the Hadamard tensor algebra T^⊗ of a single fibre: a sequence of fibre
// monomials, all over the same configuration. The two are kept apart since
// their letter disciplines differ.

#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "uconf/configspace.hpp"
#include "uconf/fibre_algebra.hpp"
#include "uconf/scalar.hpp"

namespace uconf {

struct Letter {
  PointId point;
  std::uint32_t basis = 0;
  auto operator<=>(const Letter&) const = default;
};

class Word {
 public:
  Word() = default;
  /// Throws InvalidArgument if two letters share a point.
  explicit Word(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Configuration config() const;

  /// The letters lying over `part`, in their original order.
  Word restricted(const Configuration& part) const;
  /// Word with letters permuted: result[i] = letters[perm[i]].
  Word permuted(const std::vector<std::size_t>& perm) const;

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Throws OverlappingConfigurations if the words share a point.
Word concat(const Word& a, const Word& b);

class TensorElement {
 public:
  using Terms = std::map<Word, Scalar>;

  explicit TensorElement(Configuration config = {});
  explicit TensorElement(const Word& w, const Scalar& coeff = 1);

  const Configuration& config() const { return config_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Word& w) const;

  void add_term(const Word& w, const Scalar& coeff);
  TensorElement& operator+=(const TensorElement& other);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator*(const Scalar& s, const TensorElement& a);

  bool operator==(const TensorElement&) const = default;

 private:
  Configuration config_;
  Terms terms_;
};

/// Sum of tensors over a split configuration: terms (left, right).
template <class W>
struct PairElement {
  std::map<std::pair<W, W>, Scalar> terms;

  void add(const W& left, const W& right, const Scalar& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms.try_emplace({left, right}, coeff);
    if (!inserted && (it->second += coeff) == 0) terms.erase(it);
  }
  bool operator==(const PairElement&) const = default;
};

template <class W>
struct TripleElement {
  std::map<std::tuple<W, W, W>, Scalar> terms;

  void add(const W& a, const W& b, const W& c, const Scalar& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms.try_emplace({a, b, c}, coeff);
    if (!inserted && (it->second += coeff) == 0) terms.erase(it);
  }
  bool operator==(const TripleElement&) const = default;
};

using SplitPairElement = PairElement<Word>;

/// (Δ ⊗ id) applied to a pair element, for a coproduct Δ on single words.
template <class W, class Coproduct>
TripleElement<W> coproduct_on_left(const PairElement<W>& p, Coproduct delta) {
  TripleElement<W> out;
  for (const auto& [key, c] : p.terms)
    for (const auto& [inner, d] : delta(key.first).terms)
      out.add(inner.first, inner.second, key.second, c * d);
  return out;
}

/// (id ⊗ Δ) applied to a pair element.
template <class W, class Coproduct>
TripleElement<W> coproduct_on_right(const PairElement<W>& p, Coproduct delta) {
  TripleElement<W> out;
  for (const auto& [key, c] : p.terms)
    for (const auto& [inner, d] : delta(key.second).terms)
      out.add(key.first, inner.first, inner.second, c * d);
  return out;
}

/// Bilinear concatenation (the free ⊠-algebra product on T^⊠).
TensorElement concat(const TensorElement& a, const TensorElement& b);

/// Quotient T^⊠ → S^⊠ by the symmetric group: each word becomes the monomial
/// carrying its letter at each point.
FibreElement symmetrize(const TensorElement& a);

/// sign(π)·(point-sorted word), π the permutation sorting the letters.
TensorElement alternate(const TensorElement& a);

/// Cauchy deconcatenation Δ(v) = Σ_{X = X'⊔X''} v|X' ⊗ v|X''.
SplitPairElement deconcat_cauchy(const Word& w);
SplitPairElement deconcat_cauchy(const TensorElement& a);

/// Invariance under every permutation of the letters.
bool is_symmetric(const TensorElement& a);
/// Invariance under permutations of each slot separately.
bool is_symmetric(const SplitPairElement& a);

struct HadamardWord {
  Configuration config;
  std::vector<CauchyMonomial> letters;  // every letter lives over config

  HadamardWord() = default;
  /// Throws ConfigMismatch if a letter does not live over `config`.
  HadamardWord(Configuration config, std::vector<CauchyMonomial> letters);

  std::size_t size() const { return letters.size(); }
  auto operator<=>(const HadamardWord&) const = default;
};

/// Δ(v_1⊗...⊗v_n) = Σ_{i=0}^{n} (v_1⊗...⊗v_i) ⊗ (v_{i+1}⊗...⊗v_n).
PairElement<HadamardWord> deconcat_hadamard(const HadamardWord& w);

/// Counit: 1 on the empty word, 0 otherwise.
Scalar counit_hadamard(const HadamardWord& w);
Scalar counit_cauchy(const Word& w);

/// Basis term of a 2-fold product with four word slots.
struct QuadWord {
  Word first, second, third, fourth;
  auto operator<=>(const QuadWord&) const = default;
};

/// Element of (A⊗B)⊠(C⊗D): term (a,b,c,d) is (a⊗b) over X' times (c⊗d) over
/// X'', with X' = pts(a)∪pts(b) disjoint from X'' = pts(c)∪pts(d).
struct BoxOfTensors {
  std::map<QuadWord, Scalar> terms;
  void add(const QuadWord& q, const Scalar& c);
};

/// Element of (A⊠C)⊗(B⊠D): term (a,c,b,d) is (a⊠c)⊗(b⊠d).
struct TensorOfBoxes {
  std::map<QuadWord, Scalar> terms;
  void add(const QuadWord& q, const Scalar& c);
  bool operator==(const TensorOfBoxes&) const = default;
};

/// The shuffle inclusion (a⊗b)⊠(c⊗d) ↦ (a⊠c)⊗(b⊠d), extended linearly.
TensorOfBoxes shuffle_map(const BoxOfTensors& t);

/// Closed forms: k!·Π rank and (k+1)·k!·Π rank.
std::uint64_t dim_T_fibre(const BaseSpace& base, const Configuration& x);
std::uint64_t dim_TboxT_fibre(const BaseSpace& base, const Configuration& x);

/// Explicit basis of T^⊠(V)_X: every ordering of X times every letter choice.
std::vector<Word> enumerate_T_basis(const BaseSpace& base, const Configuration& x);

struct TboxTEnumeration {
  std::uint64_t pairs = 0;  // basis size of (T^⊠ ⊠ T^⊠)_X
  // How often each basis word of T^⊠(V)_X arises as a concatenation of a
  // basis pair. Both equal k+1 when the fibre is k+1 copies of T^⊠(V)_X.
  std::uint64_t min_copies = 0;
  std::uint64_t max_copies = 0;
};

/// Walks every split of X and every pair of basis words over it.
TboxTEnumeration enumerate_TboxT_basis(const BaseSpace& base, const Configuration& x);

/// Σ_{i=0}^{k} C(k,i)·i!·(k−i)!.
std::uint64_t split_permutation_sum(std::uint64_t k);

/// Basis comparison between the ordered external product V_{x1}⊗...⊗V_{xk}
/// over a point of OConf_k(M) and S^⊠k(V) over its image in UConf_k(M).
struct ExternalComparison {
  std::vector<std::pair<std::vector<std::uint32_t>, CauchyMonomial>> table;
  std::uint64_t external_dim = 0;
  std::uint64_t cauchy_dim = 0;
  bool injective = false;
  bool surjective = false;

  bool bijective() const { return injective && surjective && external_dim == cauchy_dim; }
};

/// Throws InvalidArgument on a repeated point and UnknownPoint on a foreign one.
ExternalComparison compare_external(const BaseSpace& base, const std::vector<PointId>& tuple);

/// Basis comparison S^⊠(V⊗W)_X ≅ S^⊠(V)_X ⊗ S^⊠(W)_X. V and W are given as
/// base spaces on the same points; the basis index of V⊗W at x is
/// i·rank_W(x) + j.
struct StrongMonoidalComparison {
  std::uint64_t product_bundle_dim = 0;   // dim S^⊠(V⊗W)_X
  std::uint64_t tensor_of_dims = 0;       // dim S^⊠(V)_X · dim S^⊠(W)_X
  bool bijective = false;
};

StrongMonoidalComparison compare_strong_monoidal(const BaseSpace& v, const BaseSpace& w,
                                                 const Configuration& x);

}  // namespace uconf

#endif  // UCONF_TENSOR_LAB_HPP
