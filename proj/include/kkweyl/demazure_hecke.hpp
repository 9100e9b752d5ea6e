#pragma once

#include "kkweyl/char_ring.hpp"
#include "kkweyl/report.hpp"

#include <map>

namespace kkweyl {

/// Demazure operator Pi_i:
///   e(phi) |-> (e(phi) - e(-alpha_i) e(s_i phi)) / (1 - e(-alpha_i)),
/// evaluated by its closed form in k = <phi, alpha_i^vee>.
Character demazure(const RootSystem& rs, int i, const Character& chi);

/// Divided difference (f - s_i f) / (1 - e(-alpha_i)), closed form.
Character divided_difference(const RootSystem& rs, int i, const Character& chi);

/// The same two operators computed as literal quotients through
/// divide_exact. Slower; kept as an internal cross-check.
Character demazure_by_division(const RootSystem& rs, int i, const Character& chi);
Character divided_difference_by_division(const RootSystem& rs, int i, const Character& chi);

/// chi (x) Pi_{a1} (x) ... (x) Pi_{an}: Pi_{a1} is applied first.
Character demazure_word(const RootSystem& rs, const Word& word, const Character& chi);

/// demazure_word along the canonical reduced word of w0 applied to e(psi).
/// Throws InputError if psi is not dominant.
Character demazure_character(const WeylGroup& W, const Weight& psi);

/// 0-Hecke products: u * s_i is u s_i if the length goes up, u otherwise.
int hecke_right(const WeylGroup& W, int u, int i);
int hecke_left(const WeylGroup& W, int i, int u);
int hecke_product(const WeylGroup& W, int u, int v);

/// Element sum_w [f_w] (x) Pi_w of the operator algebra, coefficients on the
/// left. Pi_identity is Id. The group must outlive the expression.
class DemazureExpression {
 public:
  using Terms = std::map<int, Character>;

  explicit DemazureExpression(const WeylGroup& W) : group_(&W) {}

  static DemazureExpression identity(const WeylGroup& W) { return basis(W, 0); }
  /// Pi_w.
  static DemazureExpression basis(const WeylGroup& W, int w);
  /// [f] (x) Id: multiplication by f.
  static DemazureExpression multiplication(const WeylGroup& W, const Character& f);
  /// [f] (x) Pi_w.
  static DemazureExpression term(const WeylGroup& W, const Character& f, int w);

  const WeylGroup& group() const { return *group_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Character coefficient(int w) const;

  void add(int w, const Character& f);

  DemazureExpression& operator+=(const DemazureExpression& o);
  DemazureExpression& operator-=(const DemazureExpression& o);
  friend DemazureExpression operator+(DemazureExpression a, const DemazureExpression& b) {
    return a += b;
  }
  friend DemazureExpression operator-(DemazureExpression a, const DemazureExpression& b) {
    return a -= b;
  }
  bool operator==(const DemazureExpression& o) const {
    return group_ == o.group_ && terms_ == o.terms_;
  }

 private:
  const WeylGroup* group_;
  Terms terms_;
};

/// Reduces a word in the 0-Hecke monoid and returns Pi_w.
DemazureExpression nf_from_word(const WeylGroup& W, const Word& word);

/// Kasparov product a (x) b (apply a, then b) in normal form.
DemazureExpression nf_mul(const DemazureExpression& a, const DemazureExpression& b);

/// chi (x) a = sum_w demazure_word(word(w), f_w chi).
Character nf_apply(const DemazureExpression& a, const Character& chi);

/// I_{s_i} = Pi_i (x) [1 - e(-alpha_i)] - Id, and I_w as the product of
/// these along the canonical reduced word of w.
DemazureExpression nf_intertwiner(const WeylGroup& W, int w);

/// Normal-form and probe checks of the braid relations for every pair of
/// simple roots. Probes: every e(psi) with coords in [-3, 3] for rank <= 2,
/// otherwise `probes` seeded random ones.
WeylReport verify_braid(const WeylGroup& W, std::size_t probes = 100, std::uint64_t seed = 0);

/// The two identities behind the right-ideal lemma, in normal form, for all
/// prefixes of up to `word_limit` reduced words of w0 and every simple root.
WeylReport verify_ideal_lemma(const WeylGroup& W, std::size_t word_limit = 64,
                              std::uint64_t seed = 0);

/// demazure_word(word, e(psi)) = gamma(e(psi)) for up to `word_limit` reduced
/// words of w0 and every dominant psi with coords <= max_coord.
WeylReport verify_demazure_weyl(const WeylGroup& W, std::size_t word_limit = 64,
                                std::uint64_t seed = 0, int max_coord = 2);

/// All sampled reduced words of each element give the same normal form and
/// the same action on probes.
WeylReport verify_word_independence(const WeylGroup& W, std::size_t trials = 100,
                                    std::uint64_t seed = 0);

/// Algebra checks for the normal-form product: idempotency, Pi_{w0}
/// absorption, associativity on random triples, action compatibility,
/// Pi_alpha (x) [1 - e(-alpha)] = Id + I_{s_alpha}, the divided-difference
/// commutation rule, the intertwiner homomorphism, closed-form versus
/// long-division operators, and (rank <= 2) probe separation of normal forms.
WeylReport verify_hecke(const WeylGroup& W, std::size_t trials = 100, std::uint64_t seed = 0);

}  // namespace kkweyl
