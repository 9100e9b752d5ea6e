#pragma once

#include "kkweyl/root_system.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace kkweyl {

/// Word in the simple reflections; entries are 0-based simple indices.
using Word = std::vector<int>;

inline constexpr unsigned long long kDefaultMaxWeylOrder = 1'000'000ULL;

struct WeylGroupElement {
  int id = 0;
  Word reduced_word;   ///< BFS-canonical reduced word
  int length = 0;
  Weight rho_image;    ///< w(rho); identifies the element

  int sign() const { return length % 2 == 0 ? 1 : -1; }
};

/// psi - psi_i * alpha_i.
Weight simple_reflection(const RootSystem& rs, int i, const Weight& psi);

/// The finite Weyl group with element tables for left/right multiplication by
/// simple reflections. Immutable once enumerated.
class WeylGroup {
 public:
  /// Breadth-first enumeration from the identity by right multiplication with
  /// simple reflections (ascending index). Throws InputError if the predicted
  /// order exceeds max_order.
  static WeylGroup enumerate(const RootSystem& rs,
                             unsigned long long max_order = kDefaultMaxWeylOrder);

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }
  std::size_t size() const { return elements_.size(); }

  const std::vector<WeylGroupElement>& elements() const { return elements_; }
  const WeylGroupElement& element(int id) const { return elements_[static_cast<std::size_t>(id)]; }
  const WeylGroupElement& identity() const { return elements_.front(); }
  const WeylGroupElement& longest() const { return element(longest_); }
  int simple(int i) const { return right_[0][static_cast<std::size_t>(i)]; }

  /// Element with the given rho-image, or -1.
  int find(const Weight& rho_image) const;

  int right_multiply(int w, int i) const { return right_[static_cast<std::size_t>(w)][static_cast<std::size_t>(i)]; }
  int left_multiply(int i, int w) const { return left_[static_cast<std::size_t>(w)][static_cast<std::size_t>(i)]; }
  int multiply(int w, int v) const;
  int inverse(int w) const { return inverse_[static_cast<std::size_t>(w)]; }
  /// Evaluates an arbitrary (not necessarily reduced) word.
  int evaluate(const Word& word) const;
  bool is_reduced(const Word& word) const;

  /// Linear action, w = s_{i1}...s_{ik} acting as s_{i1} o ... o s_{ik}.
  Weight act(int w, const Weight& psi) const;
  /// w(psi + rho) - rho.
  Weight dot_act(int w, const Weight& psi) const;

  /// Distinct reduced words of w reachable by braid moves from its canonical
  /// word, at most `limit` of them. Exhaustive breadth-first closure for
  /// rank <= 3; seeded random braid walks above that.
  std::vector<Word> reduced_words(int w, std::size_t limit, std::uint64_t seed = 0) const;

 private:
  RootSystem rs_;
  std::vector<WeylGroupElement> elements_;
  std::unordered_map<Weight, int, WeightHash, WeightEqual> index_;
  std::vector<std::vector<int>> right_;
  std::vector<std::vector<int>> left_;
  std::vector<int> inverse_;
  int longest_ = 0;
};

WeylGroup enumerate(const RootSystem& rs, unsigned long long max_order = kDefaultMaxWeylOrder);

/// "1,2,1" (1-based) for the word {0,1,0}.
std::string format_word(const Word& word);
/// Parses a comma-separated 1-based word; throws InputError for malformed
/// text or an index outside [1, rank].
Word parse_word(std::string_view text, int rank);

}  // namespace kkweyl
