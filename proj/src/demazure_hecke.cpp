#include "kkweyl/demazure_hecke.hpp"

#include "kkweyl/sampling.hpp"
#include "kkweyl/serialize.hpp"
#include "kkweyl/weyl_formula.hpp"

namespace kkweyl {

using nlohmann::json;

Character demazure(const RootSystem& rs, int i, const Character& chi) {
  const Weight alpha = rs.cartan().col(i);
  Character out(chi.rank());
  for (const auto& [phi, c] : chi) {
    const int k = phi[i];
    if (k >= 0) {
      for (int j = 0; j <= k; ++j) out.add_term(phi - j * alpha, c);
    } else if (k <= -2) {
      const BigInt neg = -c;
      for (int j = 1; j <= -k - 1; ++j) out.add_term(phi + j * alpha, neg);
    }
  }
  return out;
}

Character divided_difference(const RootSystem& rs, int i, const Character& chi) {
  const Weight alpha = rs.cartan().col(i);
  Character out(chi.rank());
  for (const auto& [psi, c] : chi) {
    const int k = psi[i];
    if (k >= 1) {
      for (int j = 0; j < k; ++j) out.add_term(psi - j * alpha, c);
    } else if (k <= -1) {
      const BigInt neg = -c;
      for (int j = 1; j <= -k; ++j) out.add_term(psi + j * alpha, neg);
    }
  }
  return out;
}

Character demazure_by_division(const RootSystem& rs, int i, const Character& chi) {
  const Root& alpha = rs.simple_root(i);
  const Character shifted = Character::exponential(-alpha.weight) * simple_act(rs, i, chi);
  return divide_exact(chi - shifted, rs, alpha);
}

Character divided_difference_by_division(const RootSystem& rs, int i, const Character& chi) {
  return divide_exact(chi - simple_act(rs, i, chi), rs, rs.simple_root(i));
}

Character demazure_word(const RootSystem& rs, const Word& word, const Character& chi) {
  Character out = chi;
  for (int i : word) out = demazure(rs, i, out);
  return out;
}

Character demazure_character(const WeylGroup& W, const Weight& psi) {
  if (!is_dominant(W.root_system(), psi)) {
    throw InputError("demazure_character requires a dominant weight, got " + format_weight(psi));
  }
  return demazure_word(W.root_system(), W.longest().reduced_word, exponential(psi));
}

int hecke_right(const WeylGroup& W, int u, int i) {
  const int v = W.right_multiply(u, i);
  return W.element(v).length > W.element(u).length ? v : u;
}

int hecke_left(const WeylGroup& W, int i, int u) {
  const int v = W.left_multiply(i, u);
  return W.element(v).length > W.element(u).length ? v : u;
}

int hecke_product(const WeylGroup& W, int u, int v) {
  for (int i : W.element(v).reduced_word) u = hecke_right(W, u, i);
  return u;
}

// ---------------------------------------------------------------------------

DemazureExpression DemazureExpression::basis(const WeylGroup& W, int w) {
  return term(W, Character::one(W.rank()), w);
}

DemazureExpression DemazureExpression::multiplication(const WeylGroup& W, const Character& f) {
  return term(W, f, 0);
}

DemazureExpression DemazureExpression::term(const WeylGroup& W, const Character& f, int w) {
  DemazureExpression e(W);
  e.add(w, f);
  return e;
}

Character DemazureExpression::coefficient(int w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Character(group_->rank()) : it->second;
}

void DemazureExpression::add(int w, const Character& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DemazureExpression& DemazureExpression::operator+=(const DemazureExpression& o) {
  if (group_ != o.group_) throw std::invalid_argument("expressions over different groups");
  for (const auto& [w, f] : o.terms_) add(w, f);
  return *this;
}

DemazureExpression& DemazureExpression::operator-=(const DemazureExpression& o) {
  if (group_ != o.group_) throw std::invalid_argument("expressions over different groups");
  for (const auto& [w, f] : o.terms_) add(w, -f);
  return *this;
}

DemazureExpression nf_from_word(const WeylGroup& W, const Word& word) {
  int w = 0;
  for (int i : word) {
    if (i < 0 || i >= W.rank()) throw InputError("simple index out of range");
    w = hecke_right(W, w, i);
  }
  return DemazureExpression::basis(W, w);
}

namespace {

// Pi_i (x) E for E in normal form, using
//   Pi_i (x) [h] = [s_i h] (x) Pi_i - [(s_i h - h) / (1 - e(-alpha_i))]
// and Pi_i (x) Pi_u = Pi_{s_i * u} in the 0-Hecke monoid.
DemazureExpression push_left(const WeylGroup& W, int i, const DemazureExpression& e) {
  const RootSystem& rs = W.root_system();
  DemazureExpression out(W);
  for (const auto& [u, h] : e.terms()) {
    const Character sh = simple_act(rs, i, h);
    out.add(u, -divided_difference(rs, i, sh));
    out.add(hecke_left(W, i, u), sh);
  }
  return out;
}

}  // namespace

DemazureExpression nf_mul(const DemazureExpression& a, const DemazureExpression& b) {
  const WeylGroup& W = a.group();
  if (&W != &b.group()) throw std::invalid_argument("expressions over different groups");
  DemazureExpression out(W);
  for (const auto& [w, f] : a.terms()) {
    // Move all of b to the left through Pi_w = Pi_{a1} (x) ... (x) Pi_{an}.
    const Word& word = W.element(w).reduced_word;
    DemazureExpression moved = b;
    for (auto it = word.rbegin(); it != word.rend(); ++it) moved = push_left(W, *it, moved);
    for (const auto& [u, h] : moved.terms()) out.add(u, f * h);
  }
  return out;
}

Character nf_apply(const DemazureExpression& a, const Character& chi) {
  const WeylGroup& W = a.group();
  Character out(chi.rank());
  for (const auto& [w, f] : a.terms()) {
    out += demazure_word(W.root_system(), W.element(w).reduced_word, f * chi);
  }
  return out;
}

DemazureExpression nf_intertwiner(const WeylGroup& W, int w) {
  DemazureExpression out = DemazureExpression::identity(W);
  for (int i : W.element(w).reduced_word) {
    const auto factor = DemazureExpression::multiplication(
        W, one_minus_exp_neg(W.root_system().simple_root(i)));
    const DemazureExpression simple =
        nf_mul(DemazureExpression::basis(W, W.simple(i)), factor) - DemazureExpression::identity(W);
    out = nf_mul(out, simple);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification suites

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

std::vector<Weight> probe_weights(const WeylGroup& W, std::size_t count, Sampler& sampler,
                                  int bound = 3) {
  const int n = W.rank();
  std::vector<Weight> probes;
  if (n <= 2) {
    Weight w = Weight::Constant(n, -bound);
    while (true) {
      probes.push_back(w);
      int k = 0;
      while (k < n && w[k] == bound) w[k++] = -bound;
      if (k == n) break;
      ++w[k];
    }
  } else {
    for (std::size_t t = 0; t < count; ++t) probes.push_back(sampler.weight(n, bound));
  }
  return probes;
}

Word alternating(int i, int j, int m) {
  Word w;
  for (int k = 0; k < m; ++k) w.push_back(k % 2 == 0 ? i : j);
  return w;
}

DemazureExpression random_expression(const WeylGroup& W, Sampler& sampler) {
  DemazureExpression e(W);
  const int parts = sampler.uniform(1, 2);
  for (int p = 0; p < parts; ++p) {
    e.add(sampler.element(W), sampler.character(W.rank(), sampler.uniform(1, 2), 2));
  }
  return e;
}

}  // namespace

WeylReport verify_braid(const WeylGroup& W, std::size_t probes, std::uint64_t seed) {
  const RootSystem& rs = W.root_system();
  WeylReport report = make_report(W, "braid", probes, seed);
  Sampler sampler(seed);
  const auto probe_set = probe_weights(W, probes, sampler);
  auto dump_expr = [](const DemazureExpression& e) { return expression_json(e); };
  auto dump_char = [&](const Character& c) { return character_json(rs, c); };

  for (int i = 0; i < rs.rank(); ++i) {
    for (int j = i + 1; j < rs.rank(); ++j) {
      const int m = rs.braid_order(i, j);
      const Word left = alternating(i, j, m);
      const Word right = alternating(j, i, m);
      const json pair{{"i", i + 1}, {"j", j + 1}, {"m", m}};
      report.expect_equal("braid relation in normal form", pair, nf_from_word(W, left),
                          nf_from_word(W, right), dump_expr);
      for (const Weight& psi : probe_set) {
        const Character e = exponential(psi);
        json input = pair;
        input["psi"] = weight_json(psi);
        report.expect_equal("braid relation on probe", input, demazure_word(rs, left, e),
                            demazure_word(rs, right, e), dump_char);
      }
    }
  }
  return report;
}

WeylReport verify_ideal_lemma(const WeylGroup& W, std::size_t word_limit, std::uint64_t seed) {
  const RootSystem& rs = W.root_system();
  WeylReport report = make_report(W, "ideal", word_limit, seed);
  auto dump = [](const DemazureExpression& e) { return expression_json(e); };
  const auto id = DemazureExpression::identity(W);
  const int w0 = W.longest().id;
  const auto pi = DemazureExpression::basis(W, w0);

  for (const Word& word : W.reduced_words(w0, word_limit, seed)) {
    for (std::size_t k = 1; k <= word.size(); ++k) {
      const Word prefix(word.begin(), word.begin() + static_cast<long>(k));
      const Word shorter(word.begin(), word.begin() + static_cast<long>(k - 1));
      const auto last = nf_from_word(W, Word{word[k - 1]});
      const auto lhs = id - nf_from_word(W, prefix);
      const auto rhs = (id - last) + nf_mul(id - nf_from_word(W, shorter), last);
      report.expect_equal("Id - Pi_{a1..ak} = (Id - Pi_ak) + (Id - Pi_{a1..ak-1}) Pi_ak",
                          json{{"word", word_json(word)}, {"k", k}}, lhs, rhs, dump);
    }
  }

  for (int i = 0; i < rs.rank(); ++i) {
    const auto pi_i = DemazureExpression::basis(W, W.simple(i));
    const json input{{"alpha", i + 1}};
    report.expect_equal("Pi (x) Pi_alpha = Pi", input, nf_mul(pi, pi_i), pi, dump);
    report.expect_equal("Id - Pi_alpha = (Id - Pi) - (Id - Pi) Pi_alpha", input, id - pi_i,
                        (id - pi) - nf_mul(id - pi, pi_i), dump);
    // alpha can end a reduced word of w0.
    ++report.checks;
    if (W.element(W.right_multiply(w0, i)).length >= W.longest().length) {
      report.fail("alpha ends some reduced word of w0", input, json(false), json(true));
    }
  }
  return report;
}

WeylReport verify_demazure_weyl(const WeylGroup& W, std::size_t word_limit, std::uint64_t seed,
                                int max_coord) {
  const RootSystem& rs = W.root_system();
  const int n = rs.rank();
  WeylReport report = make_report(W, "demazure", word_limit, seed);
  auto dump = [&](const Character& c) { return character_json(rs, c); };
  const auto words = W.reduced_words(W.longest().id, word_limit, seed);

  Weight psi = Weight::Zero(n);
  while (true) {
    const Character g = gamma(W, psi);
    const Character e = exponential(psi);
    for (const Word& word : words) {
      report.expect_equal("Demazure character = Weyl character",
                          json{{"psi", weight_json(psi)}, {"word", word_json(word)}},
                          demazure_word(rs, word, e), g, dump);
    }
    int k = 0;
    while (k < n && psi[k] == max_coord) psi[k++] = 0;
    if (k == n) break;
    ++psi[k];
  }
  return report;
}

WeylReport verify_word_independence(const WeylGroup& W, std::size_t trials, std::uint64_t seed) {
  const RootSystem& rs = W.root_system();
  WeylReport report = make_report(W, "word-independence", trials, seed);
  Sampler sampler(seed);
  auto dump_expr = [](const DemazureExpression& e) { return expression_json(e); };
  auto dump_char = [&](const Character& c) { return character_json(rs, c); };

  std::vector<int> ids;
  if (W.size() <= 1200) {
    for (const auto& el : W.elements()) ids.push_back(el.id);
  } else {
    for (std::size_t t = 0; t < trials; ++t) ids.push_back(sampler.element(W));
  }
  for (int w : ids) {
    const auto words = W.reduced_words(w, 12, sampler.next_seed());
    const auto expected = DemazureExpression::basis(W, w);
    const Character probe = sampler.character(rs.rank(), 2, 3);
    const Character expected_action = nf_apply(expected, probe);
    for (const Word& word : words) {
      const json input{{"word", word_json(word)}};
      ++report.checks;
      if (W.evaluate(word) != w || !W.is_reduced(word)) {
        report.fail("braid move preserves the element", input, json(W.evaluate(word)), json(w));
      }
      report.expect_equal("Pi_word depends only on w", input, nf_from_word(W, word), expected,
                          dump_expr);
      report.expect_equal("Pi_word action depends only on w",
                          json{{"word", word_json(word)}, {"chi", character_json(rs, probe)}},
                          demazure_word(rs, word, probe), expected_action, dump_char);
    }
  }
  return report;
}

WeylReport verify_hecke(const WeylGroup& W, std::size_t trials, std::uint64_t seed) {
  const RootSystem& rs = W.root_system();
  const int n = rs.rank();
  WeylReport report = make_report(W, "hecke-confluence", trials, seed);
  Sampler sampler(seed);
  auto dump_expr = [](const DemazureExpression& e) { return expression_json(e); };
  auto dump_char = [&](const Character& c) { return character_json(rs, c); };
  const auto id = DemazureExpression::identity(W);
  const int w0 = W.longest().id;
  const auto pi = DemazureExpression::basis(W, w0);

  // Idempotents and Pi_{w0}.
  report.expect_equal("Pi (x) Pi = Pi", json::object(), nf_mul(pi, pi), pi, dump_expr);
  for (int i = 0; i < n; ++i) {
    const auto pi_i = DemazureExpression::basis(W, W.simple(i));
    report.expect_equal("Pi_alpha (x) Pi_alpha = Pi_alpha", json{{"alpha", i + 1}},
                        nf_mul(pi_i, pi_i), pi_i, dump_expr);
    report.expect_equal("Pi (x) Pi_alpha = Pi", json{{"alpha", i + 1}}, nf_mul(pi, pi_i), pi,
                        dump_expr);
  }
  for (std::size_t t = 0; t < std::min<std::size_t>(trials, 20); ++t) {
    const Weight psi = sampler.weight(n, 3);
    const Character image = nf_apply(pi, exponential(psi));
    ++report.checks;
    if (!is_w_invariant(W, image)) {
      report.fail("e(psi) (x) Pi is W-invariant", json{{"psi", weight_json(psi)}}, dump_char(image),
                  json("not invariant"));
    }
  }

  // Pi_alpha (x) [1 - e(-alpha)] = Id + I_{s_alpha}, and the commutation rule
  // [e(phi)] Pi_alpha = [(e(phi) - e(s phi)) / (1 - e(-alpha))] + Pi_alpha [e(s phi)].
  for (int i = 0; i < n; ++i) {
    const Root& alpha = rs.simple_root(i);
    const int s = W.simple(i);
    const auto pi_i = DemazureExpression::basis(W, s);
    const auto lhs = nf_mul(pi_i, DemazureExpression::multiplication(W, one_minus_exp_neg(alpha)));
    // Hand-reduced normal form of I_s: [1 - e(alpha)] Pi_alpha + [e(alpha)].
    Character one_minus_pos = Character::one(n);
    one_minus_pos.add_term(alpha.weight, BigInt(-1));
    const auto expected_is = DemazureExpression::term(W, one_minus_pos, s) +
                             DemazureExpression::multiplication(W, exponential(alpha.weight));
    report.expect_equal("Pi_alpha (x) [1 - e(-alpha)] = Id + I_s (normal form)",
                        json{{"alpha", i + 1}}, lhs, id + expected_is, dump_expr);
    report.expect_equal("nf_intertwiner(s_alpha) normal form", json{{"alpha", i + 1}},
                        nf_intertwiner(W, s), expected_is, dump_expr);

    for (std::size_t t = 0; t < trials; ++t) {
      const Weight psi = sampler.weight(n, 3);
      const Character e = exponential(psi);
      report.expect_equal("Pi_alpha (x) [1 - e(-alpha)] = Id + I_s (probe)",
                          json{{"alpha", i + 1}, {"psi", weight_json(psi)}}, nf_apply(lhs, e),
                          e + intertwiner(W, s, e), dump_char);

      const Weight phi = sampler.weight(n, 3);
      const Character ephi = exponential(phi);
      const Weight sphi = simple_reflection(rs, i, phi);
      const auto commuted =
          DemazureExpression::multiplication(W, divided_difference(rs, i, ephi)) +
          nf_mul(pi_i, DemazureExpression::multiplication(W, exponential(sphi)));
      const auto direct = nf_mul(DemazureExpression::multiplication(W, ephi), pi_i);
      const json input{{"alpha", i + 1}, {"phi", weight_json(phi)}};
      report.expect_equal("[e(phi)] Pi_alpha commutation rule (normal form)", input, direct,
                          commuted, dump_expr);
      report.expect_equal("[e(phi)] Pi_alpha commutation rule (probe)",
                          json{{"alpha", i + 1}, {"phi", weight_json(phi)}, {"psi", weight_json(psi)}},
                          nf_apply(direct, e), nf_apply(commuted, e), dump_char);

      const Character chi = sampler.character(n, 3, 3);
      report.expect_equal("Demazure closed form = quotient",
                          json{{"alpha", i + 1}, {"chi", character_json(rs, chi)}},
                          demazure(rs, i, chi), demazure_by_division(rs, i, chi), dump_char);
      report.expect_equal("divided difference closed form = quotient",
                          json{{"alpha", i + 1}, {"chi", character_json(rs, chi)}},
                          divided_difference(rs, i, chi), divided_difference_by_division(rs, i, chi),
                          dump_char);
      report.expect_equal("Pi_alpha Pi_alpha = Pi_alpha (probe)",
                          json{{"alpha", i + 1}, {"chi", character_json(rs, chi)}},
                          demazure_word(rs, Word{i, i}, chi), demazure(rs, i, chi), dump_char);
    }
  }

  // Associativity and action compatibility on random expressions.
  for (std::size_t t = 0; t < trials; ++t) {
    const auto a = random_expression(W, sampler);
    const auto b = random_expression(W, sampler);
    const auto c = random_expression(W, sampler);
    const json input{{"a", expression_json(a)}, {"b", expression_json(b)}, {"c", expression_json(c)}};
    const auto ab = nf_mul(a, b);
    report.expect_equal("(a b) c = a (b c)", input, nf_mul(ab, c), nf_mul(a, nf_mul(b, c)),
                        dump_expr);
    const Character chi = sampler.character(n, 2, 3);
    report.expect_equal("chi (x) (a b) = (chi (x) a) (x) b",
                        json{{"a", expression_json(a)}, {"b", expression_json(b)},
                             {"chi", character_json(rs, chi)}},
                        nf_apply(ab, chi), nf_apply(b, nf_apply(a, chi)), dump_char);
  }

  // Intertwiner homomorphism in normal form, and agreement with the action formula.
  std::vector<std::pair<int, int>> pairs;
  if (W.size() <= 12) {
    for (const auto& w : W.elements())
      for (const auto& v : W.elements()) pairs.emplace_back(v.id, w.id);
  } else {
    for (std::size_t t = 0; t < std::min<std::size_t>(trials, 30); ++t) {
      const int v = sampler.element(W);
      pairs.emplace_back(v, sampler.element(W));
    }
  }
  std::vector<DemazureExpression> intertwiners;
  intertwiners.reserve(W.size());
  auto cached = [&](int w) -> const DemazureExpression& {
    while (intertwiners.size() <= static_cast<std::size_t>(w)) {
      intertwiners.push_back(nf_intertwiner(W, static_cast<int>(intertwiners.size())));
    }
    return intertwiners[static_cast<std::size_t>(w)];
  };
  for (const auto& [v, w] : pairs) {
    const json input{{"v", word_json(W.element(v).reduced_word)},
                     {"w", word_json(W.element(w).reduced_word)}};
    report.expect_equal("I_v (x) I_w = I_{vw} (normal form)", input, nf_mul(cached(v), cached(w)),
                        cached(W.multiply(v, w)), dump_expr);
    const Character chi = sampler.character(n, 2, 3);
    report.expect_equal("nf_intertwiner action = intertwiner formula",
                        json{{"w", word_json(W.element(w).reduced_word)},
                             {"chi", character_json(rs, chi)}},
                        nf_apply(cached(w), chi), intertwiner(W, w, chi), dump_char);
  }

  // Probe separation of distinct normal forms (freeness witness), rank <= 2.
  if (n <= 2) {
    std::vector<Weight> probes;
    const int bound = W.longest().length;
    Weight psi = Weight::Constant(n, -bound);
    while (true) {
      probes.push_back(psi);
      int k = 0;
      while (k < n && psi[k] == bound) psi[k++] = -bound;
      if (k == n) break;
      ++psi[k];
    }
    auto separated = [&](const DemazureExpression& diff) {
      for (const Weight& p : probes) {
        if (!nf_apply(diff, exponential(p)).is_zero()) return true;
      }
      return false;
    };
    for (const auto& w : W.elements()) {
      for (const auto& v : W.elements()) {
        if (v.id <= w.id) continue;
        auto f = sampler.character(n, 2, 2);
        if (f.is_zero()) f = Character::one(n);
        const auto diff =
            DemazureExpression::term(W, f, w.id) - DemazureExpression::term(W, f, v.id);
        ++report.checks;
        if (diff.is_zero() || !separated(diff)) {
          report.fail("probes separate distinct normal forms",
                      json{{"w", word_json(w.reduced_word)}, {"v", word_json(v.reduced_word)},
                           {"f", character_json(rs, f)}},
                      json("indistinguishable"), json("separated"));
        }
      }
    }
    for (std::size_t t = 0; t < std::min<std::size_t>(trials, 50); ++t) {
      const auto x = random_expression(W, sampler);
      ++report.checks;
      if (!x.is_zero() && !separated(x)) {
        report.fail("nonzero normal form acts nontrivially on probes",
                    json{{"x", expression_json(x)}}, json("zero action"), json("nonzero action"));
      }
    }
  }
  return report;
}

}  // namespace kkweyl
