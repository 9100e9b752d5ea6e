// Acceptance run: one PASS/FAIL line per property, exact equality throughout.
// Exits nonzero if any line is FAIL.

#include "cli.hpp"
#include "reference.hpp"

#include "kkweyl/demazure_hecke.hpp"
#include "kkweyl/oracles.hpp"
#include "kkweyl/sampling.hpp"
#include "kkweyl/weyl_formula.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace kkweyl;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string show(const Weight& w) {
  std::ostringstream s;
  s << '[';
  for (int i = 0; i < w.size(); ++i) s << (i ? "," : "") << w[i];
  return s.str() + ']';
}

std::string show(const Word& word) { return '(' + format_word(word) + ')'; }

struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void require_time(double elapsed, double limit, const std::string& what) {
    std::ostringstream s;
    s << what << " took " << std::fixed << std::setprecision(2) << elapsed << " s (limit "
      << limit << " s)";
    expect(elapsed < limit, s.str());
    notes.push_back(s.str());
  }
};

int g_failed = 0;

void criterion(int number, const std::string& title, const std::function<void(Tally&)>& body) {
  Tally tally;
  const auto t0 = Clock::now();
  try {
    body(tally);
  } catch (const std::exception& e) {
    tally.failures.push_back(std::string("exception: ") + e.what());
  }
  const double elapsed = seconds_since(t0);
  const bool ok = tally.failures.empty() && tally.checks > 0;
  if (!ok) ++g_failed;
  std::cout << (ok ? "PASS" : "FAIL") << "  " << std::setw(2) << number << "  " << title
            << "  [checks=" << tally.checks << ", " << std::fixed << std::setprecision(2)
            << elapsed << " s]\n";
  for (const auto& n : tally.notes) std::cout << "        " << n << '\n';
  if (tally.checks == 0) std::cout << "        no checks ran\n";
  for (std::size_t i = 0; i < tally.failures.size() && i < 5; ++i) {
    std::cout << "        failed: " << tally.failures[i] << '\n';
  }
  if (tally.failures.size() > 5) {
    std::cout << "        ... " << tally.failures.size() - 5 << " more\n";
  }
  std::cout.flush();
}

const std::vector<std::string> kRankUpTo3 = {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D3", "G2"};
const std::vector<std::string> kRank4 = {"A4", "B4", "C4", "D4", "F4"};

std::vector<std::string> rank_up_to_4() {
  auto all = kRankUpTo3;
  all.insert(all.end(), kRank4.begin(), kRank4.end());
  return all;
}

/// Every label whose Weyl group fits under the default enumeration guard.
std::vector<std::string> supported_labels() {
  std::vector<std::string> out;
  for (char family : std::string("ABCDEFG")) {
    for (int n = 1; n <= kMaxRank; ++n) {
      const CartanLabel label{family, n};
      if (!is_valid_label(label)) continue;
      if (ref::weyl_order(family, n) > kDefaultMaxWeylOrder) continue;
      out.push_back(label.str());
    }
  }
  return out;
}

/// Calls f on every weight with coordinates in [lo, hi].
void for_each_box(int rank, int lo, int hi, const std::function<void(const Weight&)>& f) {
  Weight psi = Weight::Constant(rank, lo);
  while (true) {
    f(psi);
    int k = 0;
    while (k < rank && psi[k] == hi) psi[k++] = lo;
    if (k == rank) return;
    ++psi[k];
  }
}

/// Pi_{a1} (x) ... (x) Pi_{ak} as an iterated product of generators.
DemazureExpression product_of_generators(const WeylGroup& W, const Word& word) {
  auto out = DemazureExpression::identity(W);
  for (int i : word) out = nf_mul(out, DemazureExpression::basis(W, W.simple(i)));
  return out;
}

Character e_of(const Weight& psi) { return Character::exponential(psi); }

/// (f - s_i f) / (1 - e(-alpha_i)) by naive long division on plain maps.
Character reference_divided_difference(const RootSystem& rs, int i, const Character& f) {
  const Root& alpha = rs.simple_root(i);
  const ref::Vec a(alpha.weight.data(), alpha.weight.data() + alpha.weight.size());
  const int n = rs.rank();
  auto pairing = [&](const ref::Vec& mu) {
    Weight w(n);
    for (int k = 0; k < n; ++k) w[k] = mu[static_cast<std::size_t>(k)];
    return rs.pair(w, alpha);
  };
  ref::Poly num = ref::from(f);
  for (const auto& [w, c] : f) {
    const Weight sw = simple_reflection(rs, i, w);
    ref::add(num, ref::Vec(sw.data(), sw.data() + sw.size()), -c.convert_to<long long>());
  }
  const auto q = ref::long_divide(num, a, pairing);
  if (!q) throw std::logic_error("reference division left a remainder");
  return ref::to_char(*q, n);
}

}  // namespace

int main() {
  std::cout << "kkweyl acceptance run\n";

  criterion(1, "gamma(e(psi)) = Freudenthal character, dimension = Weyl dimension", [](Tally& t) {
    for (const std::string label : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"}) {
      const auto W = WeylGroup::enumerate(RootSystem::build(label));
      const auto& rs = W.root_system();
      for_each_box(rs.rank(), 0, 2, [&](const Weight& psi) {
        const Character g = gamma(W, psi);
        t.expect(g == freudenthal(rs, psi), label + " psi=" + show(psi) + " character");
        t.expect(g.dimension() == weyl_dim(rs, psi), label + " psi=" + show(psi) + " dimension");
      });
    }
  });

  criterion(2, "Lambda(gamma(e(psi))) = sum_w I_w(e(psi)), 100 random psi per type", [](Tally& t) {
    for (const auto& label : rank_up_to_4()) {
      const auto t0 = Clock::now();
      const auto W = WeylGroup::enumerate(RootSystem::build(label));
      Sampler sampler(1001);
      for (int k = 0; k < 100; ++k) {
        const Weight psi = sampler.weight(W.rank(), 3);
        t.expect(lambda_map(W, gamma(W, psi)) == intertwiner_sum(W, e_of(psi)),
                 label + " psi=" + show(psi));
      }
      t.require_time(seconds_since(t0), 30.0, label);
    }
  });

  criterion(3, "gamma(Lambda(x)) = |W| x, 25 random dominant phi per type", [](Tally& t) {
    for (const auto& label : rank_up_to_4()) {
      const auto W = WeylGroup::enumerate(RootSystem::build(label));
      Sampler sampler(1002);
      for (int k = 0; k < 25; ++k) {
        const Weight phi = sampler.dominant(W.rank(), 2);
        const Character x = gamma(W, phi);
        t.expect(gamma(W, lambda_map(W, x)) == x * BigInt(W.size()), label + " phi=" + show(phi));
      }
    }
  });

  criterion(4, "gamma(1) = 1 and weyl_numerator(0) = Lambda, every type under the guard",
            [](Tally& t) {
              const auto labels = supported_labels();
              for (const auto& label : labels) {
                const auto W = WeylGroup::enumerate(RootSystem::build(label));
                const int n = W.rank();
                t.expect(W.size() == ref::weyl_order(label[0], n), label + " |W|");
                t.expect(gamma(W, Character::one(n)) == Character::one(n), label + " gamma(1)");
                t.expect(weyl_numerator(W, zero_weight(n)) == big_lambda(W.root_system()),
                         label + " denominator identity");
              }
              std::string ranges;
              for (std::size_t a = 0; a < labels.size();) {
                std::size_t b = a;
                while (b + 1 < labels.size() && labels[b + 1][0] == labels[a][0]) ++b;
                ranges += (ranges.empty() ? "" : ", ") + labels[a] + (b > a ? "-" + labels[b] : "");
                a = b + 1;
              }
              t.notes.push_back(std::to_string(labels.size()) + " types: " + ranges +
                                "; E7 and E8 exceed the Weyl-order guard");
            });

  criterion(5, "w(Lambda) = sign(w) e(rho - w(rho)) Lambda", [](Tally& t) {
    auto check = [&](const WeylGroup& W, int w, const std::string& label) {
      const auto& rs = W.root_system();
      const Character lambda = big_lambda(rs);
      const auto& el = W.element(w);
      const Character rhs = e_of(rs.rho() - W.act(w, rs.rho())) * lambda * BigInt(el.sign());
      t.expect(w_act(W, w, lambda) == rhs, label + " w=" + show(el.reduced_word));
    };
    for (const auto& label : kRankUpTo3) {
      const auto W = WeylGroup::enumerate(RootSystem::build(label));
      for (std::size_t w = 0; w < W.size(); ++w) check(W, static_cast<int>(w), label);
    }
    for (const auto& label : kRank4) {
      const auto W = WeylGroup::enumerate(RootSystem::build(label));
      Sampler sampler(1005);
      for (int k = 0; k < 100; ++k) check(W, sampler.element(W), label);
    }
  });

  criterion(6, "Demazure character along reduced words of w0 = gamma(e(psi))", [](Tally& t) {
    // Known counts of reduced words of w0 confirm the enumeration is complete.
    const std::vector<std::pair<std::string, std::size_t>> exhaustive = {
        {"A1", 1}, {"A2", 2}, {"B2", 2}, {"G2", 2}, {"A3", 16}};
    auto run = [&](const std::string& label, const std::vector<Word>& words) {
      const auto W = WeylGroup::enumerate(RootSystem::build(label));
      const auto& rs = W.root_system();
      for (const Word& word : words) {
        t.expect(W.evaluate(word) == W.longest().id && W.is_reduced(word),
                 label + " word " + show(word) + " is a reduced word of w0");
      }
      for_each_box(rs.rank(), 0, 2, [&](const Weight& psi) {
        const Character g = gamma(W, psi);
        for (const Word& word : words) {
          t.expect(demazure_word(rs, word, e_of(psi)) == g,
                   label + " psi=" + show(psi) + " word=" + show(word));
        }
      });
    };
    for (const auto& [label, count] : exhaustive) {
      const auto W = WeylGroup::enumerate(RootSystem::build(label));
      const auto words = W.reduced_words(W.longest().id, 1000000);
      t.expect(words.size() == count, label + " has " + std::to_string(count) + " reduced words");
      run(label, words);
    }
    for (const std::string label : {"B3", "D4"}) {
      const auto W = WeylGroup::enumerate(RootSystem::build(label));
      const auto words = W.reduced_words(W.longest().id, 20, 1006);
      t.expect(words.size() == 20, label + " sampled 20 distinct words");
      run(label, words);
    }
  });

  criterion(7, "braid relations in normal form and on probes", [](Tally& t) {
    for (const std::string label : {"A2", "B2", "G2", "A3", "B3"}) {
      const auto t0 = Clock::now();
      const auto W = WeylGroup::enumerate(RootSystem::build(label));
      const auto& rs = W.root_system();
      const int n = rs.rank();
      std::vector<Weight> probes;
      if (n <= 2) {
        for_each_box(n, -3, 3, [&](const Weight& psi) { probes.push_back(psi); });
      } else {
        Sampler sampler(1007);
        for (int k = 0; k < 100; ++k) probes.push_back(sampler.weight(n, 3));
      }
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const int m = rs.braid_order(i, j);
          Word left, right;
          for (int k = 0; k < m; ++k) {
            left.push_back(k % 2 == 0 ? i : j);
            right.push_back(k % 2 == 0 ? j : i);
          }
          const std::string tag = label + " " + show(left) + " vs " + show(right);
          t.expect(product_of_generators(W, left) == product_of_generators(W, right),
                   tag + " normal form");
          for (const Weight& psi : probes) {
            t.expect(demazure_word(rs, left, e_of(psi)) == demazure_word(rs, right, e_of(psi)),
                     tag + " probe " + show(psi));
          }
        }
      }
      if (label == "G2") t.require_time(seconds_since(t0), 10.0, "G2");
    }
  });

  criterion(8, "Pi_a idempotent, Pi_w0 idempotent and absorbing", [](Tally& t) {
    for (const auto& label : rank_up_to_4()) {
      const auto W = WeylGroup::enumerate(RootSystem::build(label));
      const auto pi0 = DemazureExpression::basis(W, W.longest().id);
      t.expect(nf_mul(pi0, pi0) == pi0, label + " Pi_w0 idempotent");
      t.expect(product_of_generators(W, W.longest().reduced_word) == pi0,
               label + " product along w0 is Pi_w0");
      for (int i = 0; i < W.rank(); ++i) {
        const auto pi = DemazureExpression::basis(W, W.simple(i));
        const std::string tag = label + " alpha" + std::to_string(i + 1);
        t.expect(nf_mul(pi, pi) == pi, tag + " idempotent");
        t.expect(nf_mul(pi0, pi) == pi0, tag + " Pi_w0 (x) Pi_a = Pi_w0");
        t.expect(nf_mul(pi, pi0) == pi0, tag + " Pi_a (x) Pi_w0 = Pi_w0");
      }
    }
  });

  criterion(9, "Pi_a (x) [1 - e(-a)] = Id + I_s and the commutation rule", [](Tally& t) {
    for (const auto& label : kRankUpTo3) {
      const auto W = WeylGroup::enumerate(RootSystem::build(label));
      const auto& rs = W.root_system();
      const int n = rs.rank();
      const auto id = DemazureExpression::identity(W);
      Sampler sampler(1009);
      for (int i = 0; i < n; ++i) {
        const Root& alpha = rs.simple_root(i);
        const int s = W.simple(i);
        const auto pi = DemazureExpression::basis(W, s);
        const std::string tag = label + " alpha" + std::to_string(i + 1);
        const Character one = Character::one(n);

        // Hand-derived normal form: Pi_a (x) [1 - e(-a)] = [1 + e(a)] + [1 - e(a)] (x) Pi_a.
        const auto lhs = nf_mul(pi, DemazureExpression::multiplication(W, one_minus_exp_neg(alpha)));
        auto expected = DemazureExpression::multiplication(W, one + e_of(alpha.weight));
        expected.add(s, one - e_of(alpha.weight));
        t.expect(lhs == expected, tag + " normal form of Pi_a (x) [1 - e(-a)]");
        t.expect(lhs == id + nf_intertwiner(W, s), tag + " equals Id + I_s in normal form");

        // Commutation rule [e(phi)] (x) Pi_a = [D_a e(phi)] + Pi_a (x) [e(s_a phi)].
        for (int k = 0; k < 20; ++k) {
          const Weight phi = sampler.weight(n, 3);
          const Character ephi = e_of(phi);
          const Character sphi = e_of(simple_reflection(rs, i, phi));
          const Character dd = reference_divided_difference(rs, i, ephi);
          const auto left = DemazureExpression::term(W, ephi, s);
          const auto right = DemazureExpression::multiplication(W, dd) +
                             nf_mul(pi, DemazureExpression::multiplication(W, sphi));
          t.expect(left == right, tag + " commutation rule, normal form, phi=" + show(phi));
        }

        // Probes: both identities applied to random e(psi); the right-hand sides
        // use only the closed formulas for I_s and Pi_a.
        for (int k = 0; k < 100; ++k) {
          const Weight psi = sampler.weight(n, 3);
          const Weight phi = sampler.weight(n, 3);
          const Character x = e_of(psi);
          const std::string ptag = tag + " psi=" + show(psi);
          t.expect(nf_apply(lhs, x) == x + intertwiner(W, s, x), ptag + " Id + I_s on probe");
          const Character ephi = e_of(phi);
          const Character probe_left = demazure_by_division(rs, i, ephi * x);
          const Character probe_right =
              reference_divided_difference(rs, i, ephi) * x +
              demazure_by_division(rs, i, x) * e_of(simple_reflection(rs, i, phi));
          t.expect(probe_left == probe_right, ptag + " phi=" + show(phi) + " commutation rule");
          const auto left = DemazureExpression::term(W, ephi, s);
          t.expect(nf_apply(left, x) == probe_left, ptag + " phi=" + show(phi) + " nf action");
        }
      }
    }
  });

  criterion(10, "right-ideal lemma identities on all prefixes of reduced words of w0", [](Tally& t) {
    for (const auto& label : kRankUpTo3) {
      const auto W = WeylGroup::enumerate(RootSystem::build(label));
      const int n = W.rank();
      const int w0 = W.longest().id;
      const auto id = DemazureExpression::identity(W);
      const auto pi0 = DemazureExpression::basis(W, w0);
      const auto words = W.reduced_words(w0, 64, 1010);
      std::vector<bool> seen_last(static_cast<std::size_t>(n), false);
      for (const Word& word : words) {
        seen_last[static_cast<std::size_t>(word.back())] = true;
        auto prev = id;  // Pi_{a1..a(k-1)}
        for (std::size_t k = 1; k <= word.size(); ++k) {
          const auto pk_gen = DemazureExpression::basis(W, W.simple(word[k - 1]));
          const auto pk = nf_mul(prev, pk_gen);
          const std::string tag = label + " word=" + show(word) + " k=" + std::to_string(k);
          t.expect(id - pk == (id - pk_gen) + nf_mul(id - prev, pk_gen), tag + " first identity");
          t.expect(id - pk_gen == (id - pk) - nf_mul(id - pk, pk_gen), tag + " second identity");
          prev = pk;
        }
        t.expect(prev == pi0, label + " word=" + show(word) + " multiplies to Pi_w0");
      }
      // Every simple root ends some sampled word, so the second identity was
      // checked with Pi = Pi_w0 for each of them.
      for (int i = 0; i < n; ++i) {
        t.expect(seen_last[static_cast<std::size_t>(i)],
                 label + " alpha" + std::to_string(i + 1) + " ends a sampled word");
        const auto pi = DemazureExpression::basis(W, W.simple(i));
        t.expect(id - pi == (id - pi0) - nf_mul(id - pi0, pi),
                 label + " alpha" + std::to_string(i + 1) + " with Pi = Pi_w0");
      }
    }
  });

  criterion(11, "inner_G(x, gamma(z)) = inner_T(Lambda(x), z); <V, V> = 1", [](Tally& t) {
    for (const auto& label : kRankUpTo3) {
      const auto W = WeylGroup::enumerate(RootSystem::build(label));
      const int n = W.rank();
      Sampler sampler(1011);
      for (int k = 0; k < 100; ++k) {
        const Character x = gamma(W, sampler.character(n, 2, 2));
        const Character z = sampler.character(n, 3, 3);
        t.expect(inner_G(W, x, gamma(W, z)) == inner_T(lambda_map(W, x), z),
                 label + " trial " + std::to_string(k));
      }
      for (int k = 0; k < 20; ++k) {
        const Weight psi = sampler.dominant(n, 3);
        const Character v = gamma(W, psi);
        t.expect(inner_G(W, v, v) == 1, label + " psi=" + show(psi));
      }
    }
  });

  criterion(12, "intertwiners: I_v (x) I_w = I_{vw} on actions and normal forms", [](Tally& t) {
    for (const auto& label : kRankUpTo3) {
      const auto W = WeylGroup::enumerate(RootSystem::build(label));
      const int n = W.rank();
      Sampler sampler(1012);
      std::vector<std::pair<int, int>> pairs;
      if (n <= 2) {
        for (std::size_t v = 0; v < W.size(); ++v)
          for (std::size_t w = 0; w < W.size(); ++w) pairs.emplace_back(v, w);
      } else {
        for (int k = 0; k < 100; ++k) pairs.emplace_back(sampler.element(W), sampler.element(W));
      }
      std::vector<DemazureExpression> nf;
      for (std::size_t w = 0; w < W.size(); ++w) nf.push_back(nf_intertwiner(W, static_cast<int>(w)));
      for (const auto& [v, w] : pairs) {
        const int vw = W.multiply(v, w);
        const std::string tag = label + " v=" + show(W.element(v).reduced_word) +
                                " w=" + show(W.element(w).reduced_word);
        for (int k = 0; k < 3; ++k) {
          const Character chi = sampler.character(n, 3, 3);
          t.expect(intertwiner(W, w, intertwiner(W, v, chi)) == intertwiner(W, vw, chi),
                   tag + " action");
          t.expect(nf_apply(nf[static_cast<std::size_t>(vw)], chi) == intertwiner(W, vw, chi),
                   tag + " normal form acts by the closed formula");
        }
        t.expect(nf_mul(nf[static_cast<std::size_t>(v)], nf[static_cast<std::size_t>(w)]) ==
                     nf[static_cast<std::size_t>(vw)],
                 tag + " normal form");
      }
    }
  });

  criterion(13, "verify reports are byte-identical; exit codes on malformed input", [](Tally& t) {
    unsetenv(cli::kMaxOrderEnv);
    auto run = [](const std::vector<std::string>& args) {
      std::ostringstream out, err;
      const int code = cli::run(args, out, err);
      return std::pair{code, out.str()};
    };
    for (const std::string label : {"A2", "B2", "G2", "A3"}) {
      for (const std::string format : {"json", "text"}) {
        const std::vector<std::string> args = {"verify", "--type",   label,   "--suite",
                                               "all",    "--seed",   "2024",  "--trials",
                                               "20",     "--format", format};
        const auto first = run(args);
        const auto second = run(args);
        t.expect(first.first == 0, label + " " + format + " exit 0");
        t.expect(!first.second.empty() && first.second == second.second,
                 label + " " + format + " byte-identical");
      }
    }

    const std::vector<std::pair<std::vector<std::string>, int>> matrix = {
        {{"info", "--type", "A2"}, 0},
        {{"char", "--type", "A2", "--weight", "1,1"}, 0},
        {{"--help"}, 0},
        {{}, 2},
        {{"frobnicate"}, 2},
        {{"info"}, 2},
        {{"info", "--type", "H3"}, 2},
        {{"info", "--type", "A0"}, 2},
        {{"info", "--type", "G3"}, 2},
        {{"info", "--type", "E9"}, 2},
        {{"info", "--type", "A"}, 2},
        {{"info", "--type", "E8"}, 2},
        {{"info", "--type", "A3", "--max-weyl-order", "23"}, 2},
        {{"info", "--type", "A2", "--format", "xml"}, 2},
        {{"char", "--type", "A2"}, 2},
        {{"char", "--type", "A2", "--weight", "1"}, 2},
        {{"char", "--type", "A2", "--weight", "1,x"}, 2},
        {{"char", "--type", "A2", "--weight", "1,1,"}, 2},
        {{"char", "--type", "A2", "--weight", "20000,0"}, 2},
        {{"demazure", "--type", "A2", "--word", "1,3", "--weight", "1,0"}, 2},
        {{"demazure", "--type", "A2", "--word", "0", "--weight", "1,0"}, 2},
        {{"tensor", "--type", "A2", "--left", "-1,0", "--right", "1,0"}, 2},
        {{"tensor", "--type", "A2", "--left", "1,0"}, 2},
        {{"verify", "--type", "A2", "--suite", "nope"}, 2},
        {{"verify", "--type", "A2", "--trials", "-3"}, 2},
        {{"verify", "--type", "A2", "--seed", "abc"}, 2},
        {{"verify", "--type", "E7", "--suite", "all"}, 2},
    };
    for (const auto& [args, expected] : matrix) {
      std::string joined;
      for (const auto& a : args) joined += (joined.empty() ? "" : " ") + a;
      const int code = run(args).first;
      t.expect(code == expected, "'" + joined + "' exited " + std::to_string(code) +
                                     ", expected " + std::to_string(expected));
    }
  });

  std::cout << (g_failed == 0 ? "all criteria passed" : std::to_string(g_failed) + " failed")
            << '\n';
  return g_failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
