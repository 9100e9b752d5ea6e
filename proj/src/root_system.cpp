#include "kkweyl/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>

namespace kkweyl {

namespace {

int max_rank_for(char family) {
  switch (family) {
    case 'E': return 8;
    case 'F': return 4;
    case 'G': return 2;
    default: return kMaxRank;
  }
}

int min_rank_for(char family) {
  switch (family) {
    case 'A': return 1;
    case 'B':
    case 'C': return 2;
    case 'D': return 3;
    case 'E': return 6;
    case 'F': return 4;
    case 'G': return 2;
    default: return 0;
  }
}

void link(IntMatrix& a, int i, int j, int aij, int aji) {
  a(i, j) = aij;
  a(j, i) = aji;
}

IntMatrix cartan_matrix(const CartanLabel& label, IntVector& d) {
  const int n = label.rank;
  IntMatrix a = IntMatrix::Zero(n, n);
  d = IntVector::Ones(n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;

  switch (label.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1, -1, -1);
      break;
    case 'B':
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1, -1, -1);
      link(a, n - 2, n - 1, -1, -2);
      d.setConstant(2);
      d[n - 1] = 1;
      break;
    case 'C':
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1, -1, -1);
      link(a, n - 2, n - 1, -2, -1);
      d[n - 1] = 2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1, -1, -1);
      link(a, n - 3, n - 1, -1, -1);
      break;
    case 'E': {
      // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
      const int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
      for (const auto& e : edges) {
        if (e[0] < n && e[1] < n) link(a, e[0], e[1], -1, -1);
      }
      break;
    }
    case 'F':
      link(a, 0, 1, -1, -1);
      link(a, 1, 2, -1, -2);
      link(a, 2, 3, -1, -1);
      d << 2, 2, 1, 1;
      break;
    case 'G':
      link(a, 0, 1, -3, -1);
      d << 1, 3;
      break;
    default:
      throw InputError("unknown Cartan family");
  }
  return a;
}

// Exact inverse by Gauss-Jordan over the rationals; returns det.
Rational invert(const IntMatrix& a, std::vector<std::vector<Rational>>& inv) {
  const int n = static_cast<int>(a.rows());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n + i] = 1;
  }
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular Cartan matrix");
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    const Rational p = m[col][col];
    det *= p;
    for (auto& x : m[col]) x /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  inv.assign(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return det;
}

// Sylvester's criterion with exact leading principal minors.
bool positive_definite(const IntMatrix& b) {
  for (int k = 1; k <= b.rows(); ++k) {
    std::vector<std::vector<Rational>> unused;
    const Rational minor = invert(b.topLeftCorner(k, k), unused);
    if (minor <= 0) return false;
  }
  return true;
}

}  // namespace

bool is_valid_label(const CartanLabel& label) {
  const int lo = min_rank_for(label.family);
  return lo > 0 && label.rank >= lo && label.rank <= max_rank_for(label.family);
}

CartanLabel parse_cartan_label(std::string_view text) {
  if (text.size() < 2) throw InputError("malformed Cartan type '" + std::string(text) + "'");
  CartanLabel label;
  label.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  const auto digits = text.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), label.rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || !std::isdigit(digits[0])) {
    throw InputError("malformed Cartan type '" + std::string(text) + "'");
  }
  if (min_rank_for(label.family) == 0) {
    throw InputError("unknown Cartan type '" + std::string(text) + "'");
  }
  if (!is_valid_label(label)) {
    throw InputError("rank out of range for Cartan type '" + std::string(text) + "'");
  }
  return label;
}

RootSystem RootSystem::build(const CartanLabel& label) {
  if (!is_valid_label(label)) throw InputError("invalid Cartan type " + label.str());
  RootSystem rs;
  rs.label_ = label;
  const int n = label.rank;
  rs.cartan_ = cartan_matrix(label, rs.symmetrizer_);

  const IntMatrix sym = rs.symmetrized();
  if (sym != sym.transpose() || !positive_definite(sym)) {
    throw std::logic_error("symmetrized Cartan matrix is not symmetric positive definite");
  }

  std::vector<std::vector<Rational>> inv;
  const Rational det = invert(rs.cartan_, inv);
  if (denominator(det) != 1) throw std::logic_error("non-integral Cartan determinant");
  rs.det_ = static_cast<int>(numerator(det));
  rs.adjugate_ = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational v = inv[i][j] * det;
      if (denominator(v) != 1) throw std::logic_error("non-integral adjugate");
      rs.adjugate_(i, j) = static_cast<int>(numerator(v));
    }
  }
  rs.weight_gram_.assign(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.weight_gram_[i][j] = inv[j][i] * rs.symmetrizer_[j];

  // Positive roots: closure of the simple roots under simple reflections,
  // keeping those with nonnegative simple coordinates.
  std::set<IntVector, WeightLess> seen;
  std::deque<IntVector> queue;
  for (int i = 0; i < n; ++i) {
    IntVector e = IntVector::Zero(n);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const IntVector beta = queue.front();
    queue.pop_front();
    const IntVector wt = rs.cartan_ * beta;
    for (int i = 0; i < n; ++i) {
      IntVector next = beta;
      next[i] -= wt[i];
      if ((next.array() < 0).any() || next.isZero()) continue;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }

  for (const IntVector& c : seen) {
    Root r;
    r.simple = c;
    r.weight = rs.cartan_ * c;
    r.height = c.sum();
    r.norm2 = c.dot(sym * c);
    r.coroot = IntVector::Zero(n);
    for (int j = 0; j < n; ++j) {
      const int num = 2 * c[j] * rs.symmetrizer_[j];
      if (num % r.norm2 != 0) throw std::logic_error("non-integral coroot coefficient");
      r.coroot[j] = num / r.norm2;
    }
    rs.positive_roots_.push_back(r);
  }
  std::sort(rs.positive_roots_.begin(), rs.positive_roots_.end(),
            [](const Root& a, const Root& b) {
              if (a.height != b.height) return a.height < b.height;
              return WeightLess{}(b.simple, a.simple);
            });
  rs.rho_ = Weight::Ones(n);
  return rs;
}

IntMatrix RootSystem::symmetrized() const {
  IntMatrix b = cartan_;
  for (int i = 0; i < rank(); ++i) b.row(i) *= symmetrizer_[i];
  return b;
}

int RootSystem::braid_order(int i, int j) const {
  if (i == j) return 1;
  switch (cartan_(i, j) * cartan_(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw std::logic_error("invalid Cartan entry product");
  }
}

int RootSystem::pair(const Weight& psi, const Root& root) const {
  require_rank(*this, psi);
  return root.coroot.dot(psi);
}

int RootSystem::inner_with_root(const Weight& psi, const Root& root) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += root.simple[j] * symmetrizer_[j] * psi[j];
  return s;
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (b[j] != 0) s += weight_gram_[i][j] * (a[i] * b[j]);
    }
  }
  return s;
}

std::optional<IntVector> RootSystem::simple_coords(const Weight& psi) const {
  const IntVector scaled = adjugate_ * psi;
  IntVector out(rank());
  for (int i = 0; i < rank(); ++i) {
    if (scaled[i] % det_ != 0) return std::nullopt;
    out[i] = scaled[i] / det_;
  }
  return out;
}

long long RootSystem::scaled_height(const Weight& psi) const {
  long long h = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) h += static_cast<long long>(adjugate_(i, j)) * psi[j];
  return h;
}

unsigned long long RootSystem::predicted_weyl_order() const {
  auto factorial = [](int k) {
    unsigned long long f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<unsigned long long>(i);
    return f;
  };
  const int n = rank();
  switch (label_.family) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (1ULL << n) * factorial(n);
    case 'D': return (1ULL << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case 'F': return 1152;
    case 'G': return 12;
    default: return 0;
  }
}

bool is_dominant(const RootSystem& rs, const Weight& psi) {
  require_rank(rs, psi);
  return (psi.array() >= 0).all();
}

void require_rank(const RootSystem& rs, const Weight& psi) {
  if (psi.size() != rs.rank()) {
    throw InputError("weight " + format_weight(psi) + " does not have rank " +
                     std::to_string(rs.rank()));
  }
}

}  // namespace kkweyl
