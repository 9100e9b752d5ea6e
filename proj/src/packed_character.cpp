#include "packed_character.hpp"

#include <algorithm>
#include <deque>

namespace kkweyl::detail {

Packing::Packing(int rank) : rank_(rank), bits_(std::min(64 / std::max(rank, 1), 31)) {
  lo_ = -(1LL << (bits_ - 1));
  hi_ = (1LL << (bits_ - 1)) - 1;
}

std::uint64_t Packing::key(const Weight& w) const {
  std::uint64_t k = 0;
  for (int i = 0; i < rank_; ++i) k = (k << bits_) | static_cast<std::uint64_t>(w[i] - lo_);
  return k;
}

Weight Packing::weight(std::uint64_t key) const {
  const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
  Weight w(rank_);
  for (int i = rank_ - 1; i >= 0; --i) {
    w[i] = static_cast<int>(static_cast<long long>(key & mask) + lo_);
    key >>= bits_;
  }
  return w;
}

std::uint64_t Packing::delta(const Weight& shift) const {
  // Two's-complement wraparound makes negative components subtract.
  std::uint64_t d = 0;
  for (int i = 0; i < rank_; ++i) {
    d += static_cast<std::uint64_t>(static_cast<long long>(shift[i])) << (bits_ * (rank_ - 1 - i));
  }
  return d;
}

namespace {

struct Extent {
  std::vector<long long> lo, hi;
  int min_pair = 0, max_pair = 0;
};

Extent extent(const PackedCharacter& chi, const Root& alpha) {
  const int n = chi.packing.rank();
  Extent e{std::vector<long long>(static_cast<std::size_t>(n), 0),
           std::vector<long long>(static_cast<std::size_t>(n), 0)};
  bool first = true;
  for (const auto& [k, c] : chi.terms) {
    const Weight w = chi.packing.weight(k);
    const int p = alpha.coroot.dot(w);
    for (int i = 0; i < n; ++i) {
      const auto u = static_cast<std::size_t>(i);
      e.lo[u] = first ? w[i] : std::min<long long>(e.lo[u], w[i]);
      e.hi[u] = first ? w[i] : std::max<long long>(e.hi[u], w[i]);
    }
    e.min_pair = first ? p : std::min(e.min_pair, p);
    e.max_pair = first ? p : std::max(e.max_pair, p);
    first = false;
  }
  return e;
}

/// Whether the extent, moved by up to `steps` multiples of -alpha, still fits.
bool fits_after(const PackedCharacter& chi, const Extent& e, const Root& alpha, long long steps) {
  for (int i = 0; i < chi.packing.rank(); ++i) {
    const auto u = static_cast<std::size_t>(i);
    const long long move = steps * alpha.weight[i];
    if (!chi.packing.fits(e.lo[u] - std::max(move, 0LL)) ||
        !chi.packing.fits(e.hi[u] - std::min(move, 0LL))) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::optional<PackedCharacter> pack(const Character& chi) {
  PackedCharacter p{Packing(chi.rank()), {}};
  p.terms.reserve(chi.size());
  for (const auto& [w, c] : chi) {
    for (int i = 0; i < w.size(); ++i) {
      if (!p.packing.fits(w[i])) return std::nullopt;
    }
    p.terms.emplace_back(p.packing.key(w), c);
  }
  // Character iteration is lexicographic, which is key order.
  return p;
}

Character unpack(const PackedCharacter& p) {
  Character out(p.packing.rank());
  for (const auto& [k, c] : p.terms) out.add_term(p.packing.weight(k), c);
  return out;
}

std::optional<PackedCharacter> times_one_minus_exp_neg(const PackedCharacter& chi,
                                                       const Root& alpha) {
  if (!fits_after(chi, extent(chi, alpha), alpha, 1)) return std::nullopt;
  const std::uint64_t down = chi.packing.delta(-alpha.weight);
  PackedCharacter out{chi.packing, {}};
  out.terms.reserve(chi.terms.size() * 2);
  // chi - chi e(-alpha): merge chi with its translate, both ascending.
  std::size_t i = 0, j = 0;
  const std::size_t n = chi.terms.size();
  while (i < n || j < n) {
    const bool has_i = i < n;
    const bool has_j = j < n;
    const std::uint64_t ki = has_i ? chi.terms[i].first : 0;
    const std::uint64_t kj = has_j ? chi.terms[j].first + down : 0;
    if (has_i && (!has_j || ki < kj)) {
      out.terms.push_back(chi.terms[i++]);
    } else if (has_j && (!has_i || kj < ki)) {
      out.terms.emplace_back(kj, -chi.terms[j++].second);
    } else {
      BigInt c = chi.terms[i++].second - chi.terms[j++].second;
      if (c != 0) out.terms.emplace_back(ki, std::move(c));
    }
  }
  return out;
}

std::optional<PackedCharacter> divide_one_minus_exp_neg(const PackedCharacter& chi,
                                                        const Root& alpha) {
  if (chi.terms.empty()) return chi;
  const Extent e = extent(chi, alpha);
  // A nonzero string total is carried below the lowest pairing before it is
  // reported, at most this many steps past the support.
  const long long steps = (e.max_pair - e.min_pair) / 2 + 2;
  if (!fits_after(chi, e, alpha, steps)) return std::nullopt;

  // q(nu) = chi(nu) + q(nu + alpha), swept so that nu + alpha comes first;
  // carries to nu - alpha stay in sweep order, so a FIFO suffices.
  const std::uint64_t up = chi.packing.delta(alpha.weight);
  const bool descending = static_cast<std::int64_t>(up) > 0;
  auto before = [descending](std::uint64_t a, std::uint64_t b) {
    return descending ? a > b : a < b;
  };
  struct Carry {
    std::uint64_t key;
    int pair;
    BigInt value;
  };
  std::deque<Carry> carries;
  const std::size_t n = chi.terms.size();
  auto source = [&](std::size_t t) -> const std::pair<std::uint64_t, BigInt>& {
    return chi.terms[descending ? n - 1 - t : t];
  };

  PackedCharacter out{chi.packing, {}};
  out.terms.reserve(n);
  std::size_t t = 0;
  while (t < n || !carries.empty()) {
    const bool from_source =
        t < n && (carries.empty() || !before(carries.front().key, source(t).first));
    const bool from_carry =
        !carries.empty() && (t >= n || !before(source(t).first, carries.front().key));
    std::uint64_t key = 0;
    int pair = 0;
    BigInt value(0);
    if (from_source) {
      key = source(t).first;
      value = source(t).second;
      pair = alpha.coroot.dot(chi.packing.weight(key));
      ++t;
    }
    if (from_carry) {
      key = carries.front().key;
      pair = carries.front().pair;
      value += carries.front().value;
      carries.pop_front();
    }
    if (value == 0) continue;
    if (pair - 2 < e.min_pair) {
      throw DivisionError("nonzero remainder dividing by 1 - e(-alpha) for alpha = " +
                          format_weight(alpha.weight));
    }
    carries.push_back({key - up, pair - 2, value});
    out.terms.emplace_back(key, std::move(value));
  }
  if (descending) std::reverse(out.terms.begin(), out.terms.end());
  return out;
}

}  // namespace kkweyl::detail
