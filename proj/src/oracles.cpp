#include "kkweyl/oracles.hpp"

#include "kkweyl/sampling.hpp"
#include "kkweyl/serialize.hpp"
#include "kkweyl/weyl_formula.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace kkweyl {

using nlohmann::json;

namespace {

Weight dominant_representative(const RootSystem& rs, Weight mu) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (mu[i] < 0) {
        mu = simple_reflection(rs, i, mu);
        changed = true;
      }
    }
  }
  return mu;
}

// psi - mu in the nonnegative span of simple roots.
std::optional<IntVector> below(const RootSystem& rs, const Weight& psi, const Weight& mu) {
  auto c = rs.simple_coords(psi - mu);
  if (!c || ((*c).array() < 0).any()) return std::nullopt;
  return c;
}

void require_dominant(const RootSystem& rs, const Weight& psi, const char* who) {
  if (!is_dominant(rs, psi)) {
    throw InputError(std::string(who) + " requires a dominant weight, got " + format_weight(psi));
  }
}

}  // namespace

Character freudenthal(const RootSystem& rs, const Weight& psi) {
  require_dominant(rs, psi, "freudenthal");
  const int n = rs.rank();

  // Weights of V_psi: reachable from psi by subtracting simple roots while the
  // dominant conjugate stays below psi.
  struct Node {
    Weight mu;
    int height;
  };
  std::vector<Node> nodes{{psi, 0}};
  std::unordered_map<Weight, std::size_t, WeightHash, WeightEqual> index{{psi, 0}};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      const Weight next = nodes[head].mu - rs.cartan().col(i);
      if (index.count(next)) continue;
      if (!below(rs, psi, dominant_representative(rs, next))) continue;
      index.emplace(next, nodes.size());
      nodes.push_back({next, nodes[head].height + 1});
    }
  }
  // Breadth-first order is already nondecreasing in height.

  const Weight shifted_top = psi + rs.rho();
  const Rational top_norm = rs.inner(shifted_top, shifted_top);
  std::vector<BigInt> mult(nodes.size());
  mult[0] = 1;
  for (std::size_t k = 1; k < nodes.size(); ++k) {
    const Weight& mu = nodes[k].mu;
    BigInt sum = 0;
    for (const Root& alpha : rs.positive_roots()) {
      Weight up = mu + alpha.weight;
      for (auto it = index.find(up); it != index.end(); it = index.find(up)) {
        const BigInt& m = mult[it->second];
        if (m != 0) sum += m * rs.inner_with_root(up, alpha);
        up += alpha.weight;
      }
    }
    const Weight shifted = mu + rs.rho();
    const Rational denom = top_norm - rs.inner(shifted, shifted);
    if (denom == 0) throw std::logic_error("Freudenthal denominator vanished at " + format_weight(mu));
    const Rational m = Rational(2 * sum) / denom;
    if (denominator(m) != 1) {
      throw std::logic_error("non-integral Freudenthal multiplicity at " + format_weight(mu));
    }
    mult[k] = numerator(m);
  }

  Character out(n);
  for (std::size_t k = 0; k < nodes.size(); ++k) out.add_term(nodes[k].mu, mult[k]);
  return out;
}

BigInt weyl_dim(const RootSystem& rs, const Weight& psi) {
  require_dominant(rs, psi, "weyl_dim");
  const Weight shifted = psi + rs.rho();
  Rational d = 1;
  for (const Root& alpha : rs.positive_roots()) {
    d *= Rational(rs.pair(shifted, alpha), rs.pair(rs.rho(), alpha));
  }
  if (denominator(d) != 1) throw std::logic_error("non-integral Weyl dimension");
  return numerator(d);
}

BigInt kostant_partition(const RootSystem& rs, const Weight& mu) {
  require_rank(rs, mu);
  const auto target = rs.simple_coords(mu);
  if (!target || ((*target).array() < 0).any()) return 0;
  const int n = rs.rank();

  // ways[v] over the box 0 <= v <= target, mixed-radix index.
  std::vector<long long> stride(static_cast<std::size_t>(n));
  long long size = 1;
  for (int i = 0; i < n; ++i) {
    stride[static_cast<std::size_t>(i)] = size;
    size *= (*target)[i] + 1;
  }
  std::vector<BigInt> ways(static_cast<std::size_t>(size), BigInt(0));
  ways[0] = 1;
  for (const Root& beta : rs.positive_roots()) {
    if (((*target) - beta.simple).minCoeff() < 0) continue;
    long long offset = 0;
    for (int i = 0; i < n; ++i) offset += beta.simple[i] * stride[static_cast<std::size_t>(i)];
    IntVector v = IntVector::Zero(n);
    for (long long idx = 0; idx < size; ++idx) {
      if ((v - beta.simple).minCoeff() >= 0) ways[static_cast<std::size_t>(idx)] += ways[static_cast<std::size_t>(idx - offset)];
      for (int i = 0; i < n; ++i) {
        if (++v[i] <= (*target)[i]) break;
        v[i] = 0;
      }
    }
  }
  return ways.back();
}

BigInt kostant_multiplicity(const WeylGroup& W, const Weight& psi, const Weight& mu) {
  const RootSystem& rs = W.root_system();
  require_dominant(rs, psi, "kostant_multiplicity");
  require_rank(rs, mu);
  const Weight shifted_psi = psi + rs.rho();
  const Weight shifted_mu = mu + rs.rho();
  BigInt total = 0;
  for (const auto& w : W.elements()) {
    const BigInt p = kostant_partition(rs, W.act(w.id, shifted_psi) - shifted_mu);
    if (p != 0) total += w.sign() > 0 ? p : BigInt(-p);
  }
  return total;
}

Decomposition tensor_decompose(const WeylGroup& W, const Weight& psi1, const Weight& psi2) {
  const RootSystem& rs = W.root_system();
  require_dominant(rs, psi1, "tensor_decompose");
  require_dominant(rs, psi2, "tensor_decompose");
  Character rest = gamma(W, psi1) * gamma(W, psi2);
  Decomposition out;
  while (!rest.is_zero()) {
    const Weight* top = nullptr;
    long long best = 0;
    for (const auto& [mu, c] : rest) {
      const long long h = rs.scaled_height(mu);
      if (!top || h > best || (h == best && WeightLess{}(*top, mu))) {
        top = &mu;
        best = h;
      }
    }
    const Weight phi = *top;
    const BigInt n = rest.coefficient(phi);
    if (!is_dominant(rs, phi) || n < 0) {
      throw std::logic_error("tensor stripping failed at " + format_weight(phi));
    }
    out[phi] = n;
    rest -= gamma(W, phi) * n;
  }
  return out;
}

WeylReport verify_oracles(const WeylGroup& W, std::size_t trials, std::uint64_t seed,
                          int max_coord) {
  const RootSystem& rs = W.root_system();
  const int n = rs.rank();
  WeylReport report;
  report.type = rs.label().str();
  report.suite = "oracle";
  report.trials = trials;
  report.seed = seed;
  Sampler sampler(seed);
  auto dump_char = [&](const Character& c) { return character_json(rs, c); };
  auto dump_int = [](const BigInt& v) { return json(v.str()); };

  Weight psi = Weight::Zero(n);
  while (true) {
    const json input{{"psi", weight_json(psi)}};
    const Character g = gamma(W, psi);
    const Character f = freudenthal(rs, psi);
    report.expect_equal("gamma(e(psi)) = Freudenthal", input, g, f, dump_char);
    report.expect_equal("dimension = weyl_dim", input, g.dimension(), weyl_dim(rs, psi), dump_int);
    report.expect_equal("highest weight multiplicity 1", input, g.coefficient(psi), BigInt(1),
                        dump_int);
    ++report.checks;
    if (!is_w_invariant(W, f)) {
      report.fail("Freudenthal character is W-invariant", input, dump_char(f), json("not invariant"));
    }
    int k = 0;
    while (k < n && psi[k] == max_coord) psi[k++] = 0;
    if (k == n) break;
    ++psi[k];
  }

  for (std::size_t t = 0; t < trials; ++t) {
    const Weight top = sampler.dominant(n, 1);
    const Character f = freudenthal(rs, top);
    // A weight of the module, and an arbitrary nearby weight.
    auto it = f.begin();
    std::advance(it, sampler.uniform(0, static_cast<int>(f.size()) - 1));
    for (const Weight& mu : {it->first, Weight(sampler.weight(n, 3))}) {
      report.expect_equal("Kostant multiplicity = Freudenthal",
                          json{{"psi", weight_json(top)}, {"mu", weight_json(mu)}},
                          kostant_multiplicity(W, top, mu), f.coefficient(mu), dump_int);
    }
  }

  for (std::size_t t = 0; t < std::min<std::size_t>(trials, 10); ++t) {
    const Weight a = sampler.dominant(n, 1);
    const Weight b = sampler.dominant(n, 1);
    const Decomposition dec = tensor_decompose(W, a, b);
    const Character product = gamma(W, a) * gamma(W, b);
    BigInt dim_sum = 0;
    for (const auto& [phi, m] : dec) dim_sum += m * weyl_dim(rs, phi);
    const json input{{"left", weight_json(a)}, {"right", weight_json(b)}};
    report.expect_equal("tensor dimension balance", input, dim_sum,
                        weyl_dim(rs, a) * weyl_dim(rs, b), dump_int);
    auto pick = dec.begin();
    std::advance(pick, sampler.uniform(0, static_cast<int>(dec.size()) - 1));
    for (const Weight& phi : {pick->first, Weight(sampler.dominant(n, 2))}) {
      auto found = dec.find(phi);
      const BigInt expected = found == dec.end() ? BigInt(0) : found->second;
      report.expect_equal("tensor multiplicity = inner_G",
                          json{{"left", weight_json(a)}, {"right", weight_json(b)},
                               {"phi", weight_json(phi)}},
                          inner_G(W, product, gamma(W, phi)), expected, dump_int);
    }
  }
  return report;
}

}  // namespace kkweyl
