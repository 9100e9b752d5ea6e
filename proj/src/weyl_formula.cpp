#include "kkweyl/weyl_formula.hpp"

#include "kkweyl/sampling.hpp"
#include "kkweyl/serialize.hpp"

#include "packed_character.hpp"

namespace kkweyl {

using nlohmann::json;

Character big_lambda(const RootSystem& rs) {
  Character out = Character::one(rs.rank());
  for (const Root& alpha : rs.positive_roots()) out = out * one_minus_exp_neg(alpha);
  return out;
}

Character weyl_numerator(const WeylGroup& W, const Weight& psi) {
  require_rank(W.root_system(), psi);
  Character out(W.rank());
  for (const auto& w : W.elements()) out.add_term(W.dot_act(w.id, psi), BigInt(w.sign()));
  return out;
}

Character weyl_numerator(const WeylGroup& W, const Character& chi) {
  Character out(W.rank());
  for (const auto& [mu, c] : chi) {
    const BigInt neg = -c;
    for (const auto& w : W.elements()) out.add_term(W.dot_act(w.id, mu), w.sign() > 0 ? c : neg);
  }
  return out;
}

Character gamma(const WeylGroup& W, const Character& chi) {
  const Character numerator = weyl_numerator(W, chi);
  const auto& roots = W.root_system().positive_roots();
  if (auto packed = detail::pack(numerator)) {
    bool fits = true;
    for (const Root& alpha : roots) {
      if (packed->terms.empty()) break;
      auto q = detail::divide_one_minus_exp_neg(*packed, alpha);
      if (!q) {
        fits = false;
        break;
      }
      packed = std::move(q);
    }
    if (fits) return detail::unpack(*packed);
  }
  Character q = numerator;
  for (const Root& alpha : roots) {
    if (q.is_zero()) break;
    q = divide_exact(q, W.root_system(), alpha);
  }
  return q;
}

Character gamma(const WeylGroup& W, const Weight& psi) { return gamma(W, exponential(psi)); }

Character lambda_map(const WeylGroup& W, const Character& x) {
  if (!is_w_invariant(W, x)) throw NotInvariantError("lambda_map requires a W-invariant character");
  // One factor of Lambda at a time: the expanded product has |W| terms and
  // almost all of x * Lambda cancels.
  const auto& roots = W.root_system().positive_roots();
  if (auto packed = detail::pack(x)) {
    bool fits = true;
    for (const Root& alpha : roots) {
      auto next = detail::times_one_minus_exp_neg(*packed, alpha);
      if (!next) {
        fits = false;
        break;
      }
      packed = std::move(next);
    }
    if (fits) return detail::unpack(*packed);
  }
  Character out = x;
  for (const Root& alpha : roots) out = out * one_minus_exp_neg(alpha);
  return out;
}

Character intertwiner(const WeylGroup& W, int w, const Character& chi) {
  const int winv = W.inverse(w);
  Character out = chi.map_weights([&](const Weight& mu) { return W.dot_act(winv, mu); });
  if (W.element(w).sign() < 0) out *= BigInt(-1);
  return out;
}

Character intertwiner_sum(const WeylGroup& W, const Character& chi) {
  Character out(W.rank());
  for (const auto& w : W.elements()) out += intertwiner(W, w.id, chi);
  return out;
}

namespace {

WeylReport make_report(const WeylGroup& W, std::string suite, std::size_t trials,
                       std::uint64_t seed) {
  WeylReport r;
  r.type = W.root_system().label().str();
  r.suite = std::move(suite);
  r.trials = trials;
  r.seed = seed;
  return r;
}

}  // namespace

WeylReport check_w_action_lambda(const WeylGroup& W, std::size_t trials, std::uint64_t seed) {
  const RootSystem& rs = W.root_system();
  WeylReport report = make_report(W, "w-lambda", trials, seed);
  const Character lambda = big_lambda(rs);
  auto dump = [&](const Character& c) { return character_json(rs, c); };

  auto check = [&](int w) {
    const auto& el = W.element(w);
    const Character lhs = w_act(W, w, lambda);
    Character rhs = Character::exponential(rs.rho() - el.rho_image, BigInt(el.sign())) * lambda;
    report.expect_equal("w(Lambda) = sign(w) e(rho - w rho) Lambda",
                        json{{"w", word_json(el.reduced_word)}}, lhs, rhs, dump);
  };

  if (W.size() <= 5000) {
    for (const auto& el : W.elements()) check(el.id);
  } else {
    Sampler sampler(seed);
    for (std::size_t t = 0; t < trials; ++t) check(sampler.element(W));
  }
  return report;
}

WeylReport verify_weyl_kk(const WeylGroup& W, std::size_t trials, std::uint64_t seed,
                          int max_coord, std::size_t dominant_trials, int dominant_max) {
  const RootSystem& rs = W.root_system();
  const int n = rs.rank();
  WeylReport report = make_report(W, "weyl-kk", trials, seed);
  auto dump = [&](const Character& c) { return character_json(rs, c); };
  Sampler sampler(seed);

  report.expect_equal("gamma(1) = 1", json::object(), gamma(W, Character::one(n)),
                      Character::one(n), dump);
  report.expect_equal("weyl_numerator(0) = Lambda", json::object(),
                      weyl_numerator(W, zero_weight(n)), big_lambda(rs), dump);

  for (std::size_t t = 0; t < trials; ++t) {
    const Weight psi = sampler.weight(n, max_coord);
    const Character e = exponential(psi);
    const Character g = gamma(W, e);
    const json input{{"psi", weight_json(psi)}};
    ++report.checks;
    if (!is_w_invariant(W, g)) {
      report.fail("gamma(e(psi)) is W-invariant", input, dump(g), json("not invariant"));
      continue;
    }
    report.expect_equal("Lambda(Gamma(e(psi))) = sum_w e(psi) I_w", input, lambda_map(W, g),
                        intertwiner_sum(W, e), dump);
  }

  const BigInt order(W.size());
  for (std::size_t t = 0; t < dominant_trials; ++t) {
    const Weight phi = sampler.dominant(n, dominant_max);
    const Character x = gamma(W, phi);
    report.expect_equal("Gamma(Lambda(x)) = |W| x", json{{"phi", weight_json(phi)}},
                        gamma(W, lambda_map(W, x)), x * order, dump);
  }
  return report;
}

WeylReport check_intertwiner_homomorphism(const WeylGroup& W, std::size_t trials,
                                          std::uint64_t seed) {
  const RootSystem& rs = W.root_system();
  WeylReport report = make_report(W, "intertwiner-homomorphism", trials, seed);
  auto dump = [&](const Character& c) { return character_json(rs, c); };
  Sampler sampler(seed);

  auto check = [&](int w, int v) {
    const Character chi = sampler.character(rs.rank(), 3, 3);
    const json input{{"w", word_json(W.element(w).reduced_word)},
                     {"v", word_json(W.element(v).reduced_word)},
                     {"chi", character_json(rs, chi)}};
    report.expect_equal("I_v (x) I_w = I_{vw}", input, intertwiner(W, w, intertwiner(W, v, chi)),
                        intertwiner(W, W.multiply(v, w), chi), dump);
  };

  if (W.size() <= 12) {
    for (const auto& w : W.elements())
      for (const auto& v : W.elements()) check(w.id, v.id);
  } else {
    for (std::size_t t = 0; t < trials; ++t) {
      const int w = sampler.element(W);
      check(w, sampler.element(W));
    }
  }
  for (int i = 0; i < rs.rank(); ++i) {
    const Character chi = sampler.character(rs.rank(), 3, 3);
    const int s = W.simple(i);
    report.expect_equal("I_s (x) I_s = Id", json{{"i", i + 1}, {"chi", character_json(rs, chi)}},
                        intertwiner(W, s, intertwiner(W, s, chi)), chi, dump);
  }
  return report;
}

WeylReport check_adjointness(const WeylGroup& W, std::size_t trials, std::uint64_t seed,
                             int max_coord) {
  const RootSystem& rs = W.root_system();
  const int n = rs.rank();
  WeylReport report = make_report(W, "adjoint", trials, seed);
  auto dump = [](const BigInt& v) { return json(v.str()); };
  Sampler sampler(seed);

  for (std::size_t t = 0; t < trials; ++t) {
    // x: integer combination of one or two irreducible characters.
    Character x(n);
    json phis = json::array();
    const int parts = sampler.uniform(1, 2);
    for (int p = 0; p < parts; ++p) {
      const Weight phi = sampler.dominant(n, 2);
      phis.push_back(weight_json(phi));
      x += gamma(W, phi) * BigInt(sampler.uniform(1, 3));
    }
    const Character z = sampler.character(n, 2, max_coord);
    const json input{{"x_from", phis}, {"z", character_json(rs, z)}};
    report.expect_equal("<x, Gamma z>_G = <Lambda x, z>_T", input, inner_G(W, x, gamma(W, z)),
                        inner_T(lambda_map(W, x), z), dump);

    const Weight psi = sampler.dominant(n, 2);
    const Character v = gamma(W, psi);
    report.expect_equal("<V_psi, V_psi>_G = 1", json{{"psi", weight_json(psi)}}, inner_G(W, v, v),
                        BigInt(1), dump);
  }
  return report;
}

}  // namespace kkweyl
