#include "cli.hpp"

#include "kkweyl/demazure_hecke.hpp"
#include "kkweyl/oracles.hpp"
#include "kkweyl/serialize.hpp"
#include "kkweyl/verify.hpp"
#include "kkweyl/weyl_formula.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <optional>
#include <ostream>

namespace kkweyl::cli {

namespace {

using nlohmann::json;

// Weights beyond this are rejected before any arithmetic can overflow int.
constexpr int kMaxCoordinate = 10000;

struct RunConfig {
  std::string type;
  std::string weight;
  std::string word;
  std::string left;
  std::string right;
  std::string suite = "all";
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  int max_coord = 3;
  std::optional<unsigned long long> max_weyl_order;
  std::string format;  // empty: command default
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned long long resolve_guard(const RunConfig& cfg) {
  if (cfg.max_weyl_order) return *cfg.max_weyl_order;
  const char* env = std::getenv(kMaxOrderEnv);
  if (!env || !*env) return kDefaultMaxWeylOrder;
  std::string_view text(env);
  unsigned long long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError(std::string(kMaxOrderEnv) + " is not a non-negative integer: '" +
                     std::string(text) + "'");
  }
  return value;
}

Weight parse_weight_arg(const RootSystem& rs, const std::string& flag, const std::string& text) {
  const auto items = parse_int_list(text);
  if (!items) throw UsageError("malformed " + flag + " '" + text + "'");
  if (static_cast<int>(items->size()) != rs.rank()) {
    throw UsageError(flag + " needs " + std::to_string(rs.rank()) + " coordinates for " +
                     rs.label().str() + ", got " + std::to_string(items->size()));
  }
  Weight w(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    const int v = (*items)[static_cast<std::size_t>(i)];
    if (v < -kMaxCoordinate || v > kMaxCoordinate) {
      throw UsageError(flag + " coordinate " + std::to_string(v) + " is out of range");
    }
    w[i] = v;
  }
  return w;
}

bool json_format(const RunConfig& cfg, bool default_json) {
  if (cfg.format.empty()) return default_json;
  return cfg.format == "json";
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

int cmd_info(const RunConfig& cfg, std::ostream& out) {
  const RootSystem rs = RootSystem::build(cfg.type);
  const WeylGroup W = enumerate(rs, resolve_guard(cfg));
  const auto& w0 = W.longest();
  if (json_format(cfg, false)) {
    json cartan = json::array();
    for (int i = 0; i < rs.rank(); ++i) {
      json row = json::array();
      for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan()(i, j));
      cartan.push_back(row);
    }
    json roots = json::array();
    for (const Root& a : rs.positive_roots()) roots.push_back(weight_json(a.weight));
    emit(out, {{"command", "info"},
               {"type", rs.label().str()},
               {"rank", rs.rank()},
               {"cartan", cartan},
               {"positive_roots", rs.positive_roots().size()},
               {"roots", roots},
               {"weyl_order", W.size()},
               {"w0_length", w0.length},
               {"w0_word", word_json(w0.reduced_word)},
               {"seed", cfg.seed}});
    return kOk;
  }
  out << "type " << rs.label().str() << "  rank " << rs.rank() << '\n'
      << "positive roots: " << rs.positive_roots().size() << '\n'
      << "|W|=" << W.size() << '\n'
      << "l(w0)=" << w0.length << '\n'
      << "w0 word: " << format_word(w0.reduced_word) << '\n'
      << "seed: " << cfg.seed << '\n';
  return kOk;
}

int cmd_char(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const RootSystem rs = RootSystem::build(cfg.type);
  const Weight psi = parse_weight_arg(rs, "--weight", cfg.weight);
  const WeylGroup W = enumerate(rs, resolve_guard(cfg));
  const bool dominant = is_dominant(rs, psi);
  if (!dominant) {
    err << "warning: " << format_weight(psi)
        << " is not dominant; the result is a virtual character\n";
  }
  const Character g = gamma(W, psi);
  const BigInt dim = g.dimension();
  std::optional<BigInt> expected;
  if (dominant) expected = weyl_dim(rs, psi);
  const bool agrees = !expected || *expected == dim;

  if (json_format(cfg, false)) {
    emit(out, {{"command", "char"},
               {"type", rs.label().str()},
               {"weight", weight_json(psi)},
               {"dominant", dominant},
               {"character", character_json(rs, g)},
               {"dimension", dim.str()},
               {"weyl_dim", expected ? json(expected->str()) : json(nullptr)},
               {"dimension_matches", agrees},
               {"seed", cfg.seed}});
  } else {
    out << "gamma(e(" << format_weight(psi) << ")) = " << format_character(g) << '\n'
        << "terms: " << g.size() << '\n'
        << "dimension: " << dim << '\n';
    if (expected) {
      out << "weyl_dim: " << *expected << (agrees ? " (agrees)" : " (MISMATCH)") << '\n';
    } else {
      out << "weyl_dim: n/a (weight not dominant)\n";
    }
    out << "seed: " << cfg.seed << '\n';
  }
  return agrees ? kOk : kVerificationFailed;
}

int cmd_demazure(const RunConfig& cfg, std::ostream& out) {
  const RootSystem rs = RootSystem::build(cfg.type);
  const Word word = parse_word(cfg.word, rs.rank());
  const Weight psi = parse_weight_arg(rs, "--weight", cfg.weight);
  const WeylGroup W = enumerate(rs, resolve_guard(cfg));

  const Character result = demazure_word(rs, word, exponential(psi));
  const bool reduced = W.is_reduced(word);
  const int hecke = nf_from_word(W, word).terms().begin()->first;
  const Word& hecke_word = W.element(hecke).reduced_word;
  const bool is_w0 = hecke == W.longest().id;
  std::optional<bool> equals_gamma;
  if (is_w0) equals_gamma = result == gamma(W, psi);

  if (json_format(cfg, false)) {
    emit(out, {{"command", "demazure"},
               {"type", rs.label().str()},
               {"weight", weight_json(psi)},
               {"word", word_json(word)},
               {"reduced", reduced},
               {"hecke_word", word_json(hecke_word)},
               {"reduces_to_w0", is_w0},
               {"equals_gamma", equals_gamma ? json(*equals_gamma) : json(nullptr)},
               {"character", character_json(rs, result)},
               {"seed", cfg.seed}});
  } else {
    out << "Pi_{" << format_word(word) << "} e(" << format_weight(psi)
        << ") = " << format_character(result) << '\n'
        << "terms: " << result.size() << '\n'
        << "reduced word: " << (reduced ? "yes" : "no") << '\n';
    if (!reduced) {
      out << "note: Pi_alpha is idempotent, so Pi_{" << format_word(word) << "} = Pi_{"
          << format_word(hecke_word) << "}\n";
    }
    if (equals_gamma) {
      out << "word reduces to w0; equals gamma(e(psi)): " << (*equals_gamma ? "yes" : "NO") << '\n';
    }
    out << "seed: " << cfg.seed << '\n';
  }
  return equals_gamma.value_or(true) ? kOk : kVerificationFailed;
}

int cmd_tensor(const RunConfig& cfg, std::ostream& out) {
  const RootSystem rs = RootSystem::build(cfg.type);
  const Weight left = parse_weight_arg(rs, "--left", cfg.left);
  const Weight right = parse_weight_arg(rs, "--right", cfg.right);
  for (const Weight* w : {&left, &right}) {
    if (!is_dominant(rs, *w)) throw UsageError(format_weight(*w) + " is not dominant");
  }
  const WeylGroup W = enumerate(rs, resolve_guard(cfg));
  const Decomposition dec = tensor_decompose(W, left, right);
  const BigInt dl = weyl_dim(rs, left);
  const BigInt dr = weyl_dim(rs, right);
  BigInt total = 0;
  json components = json::array();
  std::string text = "{";
  std::string sum;
  // Highest components first.
  for (auto it = dec.rbegin(); it != dec.rend(); ++it) {
    const BigInt d = weyl_dim(rs, it->first);
    total += it->second * d;
    components.push_back(
        {{"weight", weight_json(it->first)}, {"mult", it->second.str()}, {"dim", d.str()}});
    if (text.size() > 1) text += ", ";
    text += format_weight(it->first) + ":" + it->second.str();
    if (!sum.empty()) sum += " + ";
    sum += (it->second == 1 ? "" : it->second.str() + "*") + d.str();
  }
  text += "}";
  const bool balanced = total == dl * dr;

  if (json_format(cfg, false)) {
    emit(out, {{"command", "tensor"},
               {"type", rs.label().str()},
               {"left", weight_json(left)},
               {"right", weight_json(right)},
               {"components", components},
               {"left_dim", dl.str()},
               {"right_dim", dr.str()},
               {"sum_dim", total.str()},
               {"balanced", balanced},
               {"seed", cfg.seed}});
  } else {
    out << "V" << format_weight(left) << " (x) V" << format_weight(right) << " = " << text << '\n'
        << "dimension: " << dl << " * " << dr << " = " << dl * dr << " = " << sum
        << (balanced ? "" : "  (MISMATCH)") << '\n'
        << "seed: " << cfg.seed << '\n';
  }
  return balanced ? kOk : kVerificationFailed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (!is_suite_name(cfg.suite)) throw UsageError("unknown suite '" + cfg.suite + "'");
  if (cfg.max_coord < 0 || cfg.max_coord > 10) throw UsageError("--max-coord must be in 0..10");
  const RootSystem rs = RootSystem::build(cfg.type);
  const WeylGroup W = enumerate(rs, resolve_guard(cfg));
  const auto reports = run_suites(W, cfg.suite, {cfg.trials, cfg.seed, cfg.max_coord});

  std::size_t checks = 0;
  json failures = json::array();
  json suites = json::array();
  for (const auto& r : reports) {
    checks += r.checks;
    json doc = to_json(r);
    for (const auto& f : doc["failures"]) {
      json tagged = f;
      tagged["suite"] = r.suite;
      failures.push_back(std::move(tagged));
    }
    doc["passed"] = r.passed();
    suites.push_back(std::move(doc));
  }
  const bool passed = failures.empty();

  if (json_format(cfg, true)) {
    json doc{{"command", "verify"},     {"type", rs.label().str()}, {"suite", cfg.suite},
             {"trials", cfg.trials},    {"seed", cfg.seed},         {"max_coord", cfg.max_coord},
             {"checks", checks},        {"passed", passed},         {"failures", failures},
             {"suites", suites}};
    emit(out, doc);
  } else {
    for (const auto& s : suites) {
      out << (s["passed"].get<bool>() ? "PASS " : "FAIL ") << s["suite"].get<std::string>()
          << "  checks=" << s["checks"].get<std::size_t>()
          << "  failures=" << s["failures"].size() << '\n';
    }
    for (const auto& f : failures) out << "  failed: " << f.dump() << '\n';
    out << (passed ? "all passed" : "FAILED") << "  type=" << rs.label().str()
        << " checks=" << checks << " seed=" << cfg.seed << '\n';
  }
  return passed ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Weyl character calculus on R(T)", "kkweyl"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "Cartan type, e.g. A2, B3, G2")->required();
    sub->add_option("--seed", cfg.seed, "Random seed (echoed in the output)");
    sub->add_option("--max-weyl-order", cfg.max_weyl_order,
                    std::string("Refuse larger Weyl groups (default 1000000, or $") + kMaxOrderEnv +
                        ")");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* info = app.add_subcommand("info", "Rank, roots, |W| and the longest element");
  common(info);
  auto* chr = app.add_subcommand("char", "Irreducible character gamma(e(psi))");
  common(chr);
  chr->add_option("--weight", cfg.weight, "Weight in fundamental coordinates, e.g. 1,0")
      ->required();
  auto* dem = app.add_subcommand("demazure", "Demazure operators along a word");
  common(dem);
  dem->add_option("--word", cfg.word, "Comma-separated 1-based simple indices")->required();
  dem->add_option("--weight", cfg.weight, "Weight in fundamental coordinates")->required();
  auto* ver = app.add_subcommand("verify", "Run verification suites (JSON report)");
  common(ver);
  ver->add_option("--suite", cfg.suite, "Suite name or 'all'");
  ver->add_option("--trials", cfg.trials, "Random trials per property");
  ver->add_option("--max-coord", cfg.max_coord, "Coordinate bound for sampled weights");
  auto* ten = app.add_subcommand("tensor", "Decompose V(left) (x) V(right)");
  common(ten);
  ten->add_option("--left", cfg.left, "Dominant weight")->required();
  ten->add_option("--right", cfg.right, "Dominant weight")->required();

  std::vector<std::string> storage{"kkweyl"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (info->parsed()) return cmd_info(cfg, out);
    if (chr->parsed()) return cmd_char(cfg, out, err);
    if (dem->parsed()) return cmd_demazure(cfg, out);
    if (ten->parsed()) return cmd_tensor(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace kkweyl::cli
