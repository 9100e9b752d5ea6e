#pragma once

#include "kkweyl/root_system.hpp"
#include "kkweyl/weight.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kkweyl {

/// Element of R(T) = Z[weight lattice]: a finitely supported map from weights
/// to coefficients. Zero coefficients are never stored, so structural
/// equality is equality in the ring. Iteration is lexicographic in the
/// weight coordinates.
template <typename Scalar>
class BasicCharacter {
 public:
  using Terms = std::map<Weight, Scalar, WeightLess>;
  using const_iterator = typename Terms::const_iterator;

  explicit BasicCharacter(int rank = 0) : rank_(rank) {}

  static BasicCharacter zero(int rank) { return BasicCharacter(rank); }
  static BasicCharacter one(int rank) { return exponential(zero_weight(rank)); }
  /// e(psi).
  static BasicCharacter exponential(const Weight& psi, Scalar coeff = Scalar(1)) {
    BasicCharacter c(static_cast<int>(psi.size()));
    c.add_term(psi, std::move(coeff));
    return c;
  }

  int rank() const { return rank_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  Scalar coefficient(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
  }
  Scalar constant_term() const { return coefficient(zero_weight(rank_)); }

  /// Sum of the coefficients (the virtual dimension).
  Scalar dimension() const {
    Scalar s(0);
    for (const auto& [w, c] : terms_) s += c;
    return s;
  }

  void add_term(const Weight& w, const Scalar& coeff) {
    if (w.size() != rank_) throw std::invalid_argument("character term has wrong rank");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BasicCharacter& operator+=(const BasicCharacter& o) {
    check_rank(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  BasicCharacter& operator-=(const BasicCharacter& o) {
    check_rank(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  BasicCharacter& operator*=(const Scalar& n) {
    if (n == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= n;
    return *this;
  }

  friend BasicCharacter operator+(BasicCharacter a, const BasicCharacter& b) { return a += b; }
  friend BasicCharacter operator-(BasicCharacter a, const BasicCharacter& b) { return a -= b; }
  friend BasicCharacter operator-(BasicCharacter a) { return a *= Scalar(-1); }
  friend BasicCharacter operator*(BasicCharacter a, const Scalar& n) { return a *= n; }
  friend BasicCharacter operator*(const Scalar& n, BasicCharacter a) { return a *= n; }

  /// Convolution product.
  friend BasicCharacter operator*(const BasicCharacter& a, const BasicCharacter& b) {
    a.check_rank(b);
    BasicCharacter out(a.rank_);
    for (const auto& [wa, ca] : a.terms_) {
      for (const auto& [wb, cb] : b.terms_) out.add_term(wa + wb, ca * cb);
    }
    return out;
  }

  bool operator==(const BasicCharacter& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
  }

  /// Relabels every weight by f; coefficients of colliding weights add.
  template <typename F>
  BasicCharacter map_weights(F&& f) const {
    BasicCharacter out(rank_);
    for (const auto& [w, c] : terms_) out.add_term(f(w), c);
    return out;
  }

 private:
  void check_rank(const BasicCharacter& o) const {
    if (o.rank_ != rank_) throw std::invalid_argument("characters of different rank");
  }

  int rank_;
  Terms terms_;
};

/// Arbitrary-precision characters; the library's working type.
using Character = BasicCharacter<BigInt>;

template <typename Scalar>
BasicCharacter<Scalar> scale(BasicCharacter<Scalar> a, const Scalar& n) {
  return a *= n;
}

/// Weight negation.
template <typename Scalar>
BasicCharacter<Scalar> bar(const BasicCharacter<Scalar>& chi) {
  return chi.map_weights([](const Weight& w) -> Weight { return -w; });
}

/// Constant term of a * bar(b), i.e. sum over mu of a(mu) b(mu).
template <typename Scalar>
Scalar inner_T(const BasicCharacter<Scalar>& a, const BasicCharacter<Scalar>& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("characters of different rank");
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  Scalar s(0);
  for (const auto& [w, c] : small) {
    auto it = large.terms().find(w);
    if (it != large.end()) s += c * it->second;
  }
  return s;
}

/// 1 - e(-alpha).
template <typename Scalar = BigInt>
BasicCharacter<Scalar> one_minus_exp_neg(const Root& alpha) {
  auto c = BasicCharacter<Scalar>::one(static_cast<int>(alpha.weight.size()));
  c.add_term(-alpha.weight, Scalar(-1));
  return c;
}

/// Raised when a quotient by (1 - e(-alpha)) leaves a remainder.
class DivisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact quotient chi / (1 - e(-alpha)) by long division in the term order
/// <mu, alpha^vee> descending, ties broken lexicographically.
///
/// The divisor's leading term is 1, so the division runs independently along
/// each alpha-string {nu + k alpha}: the quotient at a string point is the sum
/// of chi over that point and everything above it, and the remainder is the
/// total of chi over the string. Throws DivisionError if any string total is
/// nonzero.
template <typename Scalar>
BasicCharacter<Scalar> divide_exact(const BasicCharacter<Scalar>& chi, const RootSystem& rs,
                                    const Root& alpha) {
  struct Entry {
    Weight base;   // string representative, <base, alpha^vee> in {0, 1}
    int level;     // mu = base + level * alpha
    const Scalar* coeff;
  };
  std::vector<Entry> entries;
  entries.reserve(chi.size());
  for (const auto& [mu, c] : chi) {
    const int k = rs.pair(mu, alpha);
    const int level = k >= 0 ? k / 2 : -((-k + 1) / 2);
    entries.push_back({mu - level * alpha.weight, level, &c});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (!same_weight(a.base, b.base)) return WeightLess{}(a.base, b.base);
    return a.level > b.level;
  });

  BasicCharacter<Scalar> q(chi.rank());
  std::size_t i = 0;
  while (i < entries.size()) {
    std::size_t j = i;
    Scalar running(0);
    int level = entries[i].level;
    while (true) {
      if (j < entries.size() && same_weight(entries[j].base, entries[i].base) &&
          entries[j].level == level) {
        running += *entries[j].coeff;
        ++j;
      }
      const bool string_continues = j < entries.size() && same_weight(entries[j].base, entries[i].base);
      if (!string_continues) break;
      if (running != 0) q.add_term(entries[i].base + level * alpha.weight, running);
      --level;
    }
    if (running != 0) {
      throw DivisionError("nonzero remainder dividing by 1 - e(-alpha) for alpha = " +
                          format_weight(alpha.weight));
    }
    i = j;
  }
  return q;
}

}  // namespace kkweyl
