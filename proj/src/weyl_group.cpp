#include "kkweyl/weyl_group.hpp"

#include <deque>
#include <random>
#include <set>

namespace kkweyl {

Weight simple_reflection(const RootSystem& rs, int i, const Weight& psi) {
  return psi - psi[i] * rs.cartan().col(i);
}

WeylGroup WeylGroup::enumerate(const RootSystem& rs, unsigned long long max_order) {
  const unsigned long long predicted = rs.predicted_weyl_order();
  if (predicted > max_order) {
    throw InputError("Weyl group of " + rs.label().str() + " has order " +
                     std::to_string(predicted) + ", above the guard " +
                     std::to_string(max_order) + " (raise --max-weyl-order to override)");
  }
  WeylGroup g;
  g.rs_ = rs;
  const int n = rs.rank();
  g.elements_.reserve(static_cast<std::size_t>(predicted));

  WeylGroupElement e;
  e.id = 0;
  e.rho_image = rs.rho();
  g.index_.emplace(e.rho_image, 0);
  g.elements_.push_back(e);
  g.right_.push_back(std::vector<int>(static_cast<std::size_t>(n), -1));

  // Elements are appended in discovery order, so the vector doubles as the queue.
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      const int w = static_cast<int>(head);
      const Weight image = g.act(w, simple_reflection(rs, i, rs.rho()));
      auto it = g.index_.find(image);
      int id;
      if (it == g.index_.end()) {
        WeylGroupElement next;
        next.id = static_cast<int>(g.elements_.size());
        next.reduced_word = g.elements_[head].reduced_word;
        next.reduced_word.push_back(i);
        next.length = g.elements_[head].length + 1;
        next.rho_image = image;
        id = next.id;
        g.index_.emplace(image, id);
        g.elements_.push_back(std::move(next));
        g.right_.push_back(std::vector<int>(static_cast<std::size_t>(n), -1));
      } else {
        id = it->second;
      }
      g.right_[head][static_cast<std::size_t>(i)] = id;
    }
  }
  if (g.elements_.size() != predicted) {
    throw std::logic_error("Weyl group enumeration produced " + std::to_string(g.elements_.size()) +
                           " elements, expected " + std::to_string(predicted));
  }

  g.left_.assign(g.size(), std::vector<int>(static_cast<std::size_t>(n)));
  g.inverse_.assign(g.size(), 0);
  int max_length = -1;
  for (const auto& el : g.elements_) {
    for (int i = 0; i < n; ++i) {
      g.left_[static_cast<std::size_t>(el.id)][static_cast<std::size_t>(i)] =
          g.find(simple_reflection(rs, i, el.rho_image));
    }
    Word rev(el.reduced_word.rbegin(), el.reduced_word.rend());
    g.inverse_[static_cast<std::size_t>(el.id)] = g.evaluate(rev);
    if (el.length > max_length) {
      max_length = el.length;
      g.longest_ = el.id;
    }
  }
  return g;
}

WeylGroup enumerate(const RootSystem& rs, unsigned long long max_order) {
  return WeylGroup::enumerate(rs, max_order);
}

int WeylGroup::find(const Weight& rho_image) const {
  auto it = index_.find(rho_image);
  return it == index_.end() ? -1 : it->second;
}

int WeylGroup::multiply(int w, int v) const {
  int out = w;
  for (int i : element(v).reduced_word) out = right_multiply(out, i);
  return out;
}

int WeylGroup::evaluate(const Word& word) const {
  int out = 0;
  for (int i : word) {
    if (i < 0 || i >= rank()) throw InputError("simple index out of range");
    out = right_multiply(out, i);
  }
  return out;
}

bool WeylGroup::is_reduced(const Word& word) const {
  return element(evaluate(word)).length == static_cast<int>(word.size());
}

Weight WeylGroup::act(int w, const Weight& psi) const {
  const Word& word = element(w).reduced_word;
  Weight out = psi;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = simple_reflection(rs_, *it, out);
  return out;
}

Weight WeylGroup::dot_act(int w, const Weight& psi) const {
  return act(w, psi + rs_.rho()) - rs_.rho();
}

namespace {

// Positions p at which a braid move applies, with the replacement.
void braid_neighbours(const RootSystem& rs, const Word& word, std::vector<Word>& out) {
  out.clear();
  const int len = static_cast<int>(word.size());
  for (int p = 0; p + 1 < len; ++p) {
    const int i = word[p];
    const int j = word[p + 1];
    if (i == j) continue;
    const int m = rs.braid_order(i, j);
    if (p + m > len) continue;
    bool alternating = true;
    for (int k = 0; k < m && alternating; ++k) alternating = word[p + k] == (k % 2 == 0 ? i : j);
    if (!alternating) continue;
    Word next = word;
    for (int k = 0; k < m; ++k) next[p + k] = (k % 2 == 0 ? j : i);
    out.push_back(std::move(next));
  }
}

}  // namespace

std::vector<Word> WeylGroup::reduced_words(int w, std::size_t limit, std::uint64_t seed) const {
  std::vector<Word> found;
  if (limit == 0) return found;
  std::set<Word> seen;
  const Word& start = element(w).reduced_word;
  seen.insert(start);
  found.push_back(start);
  std::vector<Word> nbrs;

  if (rank() <= 3) {
    std::deque<Word> queue{start};
    while (!queue.empty() && found.size() < limit) {
      const Word cur = queue.front();
      queue.pop_front();
      braid_neighbours(rs_, cur, nbrs);
      for (auto& nb : nbrs) {
        if (found.size() >= limit) break;
        if (seen.insert(nb).second) {
          found.push_back(nb);
          queue.push_back(std::move(nb));
        }
      }
    }
    return found;
  }

  std::mt19937_64 rng(seed);
  Word cur = start;
  const std::size_t budget = 200 * limit + 1000;
  for (std::size_t step = 0; step < budget && found.size() < limit; ++step) {
    braid_neighbours(rs_, cur, nbrs);
    if (nbrs.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, nbrs.size() - 1);
    cur = nbrs[pick(rng)];
    if (seen.insert(cur).second) found.push_back(cur);
  }
  return found;
}

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(word[k] + 1);
  }
  return out;
}

Word parse_word(std::string_view text, int rank) {
  const auto items = parse_int_list(text);
  if (!items) throw InputError("malformed word '" + std::string(text) + "'");
  Word word;
  for (int v : *items) {
    if (v < 1 || v > rank) {
      throw InputError("word entry " + std::to_string(v) + " is not a simple index in 1.." +
                       std::to_string(rank));
    }
    word.push_back(v - 1);
  }
  return word;
}

}  // namespace kkweyl
