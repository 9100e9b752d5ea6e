#include "kkweyl/char_ring.hpp"

#include "kkweyl/weyl_formula.hpp"

namespace kkweyl {

Character w_act(const WeylGroup& W, int w, const Character& chi) {
  return chi.map_weights([&](const Weight& mu) { return W.act(w, mu); });
}

Character simple_act(const RootSystem& rs, int i, const Character& chi) {
  return chi.map_weights([&](const Weight& mu) { return simple_reflection(rs, i, mu); });
}

bool is_w_invariant(const WeylGroup& W, const Character& chi) {
  const RootSystem& rs = W.root_system();
  for (int i = 0; i < rs.rank(); ++i) {
    for (const auto& [mu, c] : chi) {
      if (chi.coefficient(simple_reflection(rs, i, mu)) != c) return false;
    }
  }
  return true;
}

BigInt inner_G(const WeylGroup& W, const Character& a, const Character& b) {
  if (!is_w_invariant(W, a) || !is_w_invariant(W, b)) {
    throw NotInvariantError("inner_G requires W-invariant characters");
  }
  const Character lambda = big_lambda(W.root_system());
  // ct(a bar(b) L bar(L)) = ct((aL) bar(bL)).
  const BigInt total = inner_T(a * lambda, b * lambda);
  const BigInt order = BigInt(W.size());
  if (total % order != 0) {
    throw NotInvariantError("Weyl integral is not divisible by |W|");
  }
  return total / order;
}

}  // namespace kkweyl
