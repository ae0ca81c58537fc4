// khr: command-line front end for finite Krasner (m,n)-hyperrings.
//
// Exit status: 0 when every verdict passes, 1 when some verdict fails,
// 2 on usage or format errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "khr/khr.hpp"

namespace {

using namespace khr;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Common {
  bool allow_weak = false;
  bool no_unit_preservation = false;
  std::size_t max_card = 8;
  std::size_t max_arity = 4;
};

ElementSet parse_list(const std::string& text, const Structure& s) {
  ElementSet out;
  std::string cleaned;
  for (char c : text) cleaned += (c == '{' || c == '}') ? ' ' : c;
  std::stringstream in(cleaned);
  for (std::string tok; std::getline(in, tok, ',');) {
    const auto words = detail::split_ws(tok);
    if (words.empty()) continue;
    const auto v = detail::to_uint(words.size() == 1 ? words[0] : "");
    if (!v) throw usage_error("bad element '" + tok + "' in list '" + text + "'");
    if (*v >= s.card()) throw usage_error("element " + std::to_string(*v) + " out of range");
    out.insert(static_cast<Element>(*v));
  }
  if (out.empty()) throw usage_error("empty element list '" + text + "'");
  return out;
}

MapTable parse_map(const std::string& text, const Structure& a, const Structure& b) {
  MapTable k{a.name(), b.name(), std::vector<Element>(a.card())};
  std::vector<bool> seen(a.card());
  std::stringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw usage_error("map entry '" + tok + "' is not src:dst");
    auto index = [&](const std::string& words, std::size_t limit) {
      const auto w = detail::split_ws(words);
      const auto v = w.size() == 1 ? detail::to_uint(w[0]) : std::nullopt;
      if (!v || *v >= limit) throw usage_error("bad map entry '" + tok + "'");
      return *v;
    };
    const std::size_t x = index(tok.substr(0, colon), a.card());
    const std::size_t y = index(tok.substr(colon + 1), b.card());
    if (seen[x]) throw usage_error("element " + std::to_string(x) + " mapped twice");
    seen[x] = true;
    k.image[x] = static_cast<Element>(y);
  }
  for (Element x = 0; x < a.card(); ++x) {
    if (!seen[x]) throw usage_error("map is missing element " + std::to_string(x));
  }
  return k;
}

Structure load(const std::string& path, const Common& c) {
  Structure s;
  try {
    s = parse_structure(read_file(path));
  } catch (const format_error& e) {
    throw format_error(path + ": " + e.what());
  }
  if (s.card() > c.max_card || s.m() > c.max_arity || s.n() > c.max_arity) {
    throw usage_error(s.name() + " exceeds the caps card<=" + std::to_string(c.max_card) + " m,n<=" +
                      std::to_string(c.max_arity) + "; raise them with --max-card / --max-arity");
  }
  return s;
}

// Refuses structures that fail strict validation unless --allow-weak lets a
// weakly distributive one through.
DistributivityMode require_valid(const Structure& s, const Common& c) {
  const ValidationReport strict = validate_structure(s);
  if (strict.ok()) return DistributivityMode::strict;
  if (c.allow_weak && validate_structure(s, DistributivityMode::weak).ok()) {
    std::cerr << "warning: " << s.name() << " is only weakly distributive; continuing under --allow-weak\n";
    return DistributivityMode::weak;
  }
  std::cerr << strict.render();
  throw usage_error(s.name() + " is not a Krasner hyperring (strict); see the report above");
}

void write_out(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw usage_error("cannot write " + path);
  out << text;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_validate(const std::string& file, bool weak, const Common& c) {
  const Structure s = load(file, c);
  const ValidationReport r = validate_structure(s, weak ? DistributivityMode::weak : DistributivityMode::strict);
  std::cout << r.render();
  return r.ok() ? kPass : kFail;
}

int cmd_ideals(const std::string& file, const Common& c) {
  const Structure s = load(file, c);
  require_valid(s, c);
  for (ElementSet i : enumerate_hyperideals(s)) {
    std::cout << "ideal " << i.to_string();
    if (i != s.carrier()) {
      if (is_prime(s, i)) std::cout << " prime";
      if (is_primary(s, i)) std::cout << " primary";
      if (is_two_absorbing(s, i)) std::cout << " 2-absorbing";
      if (is_maximal(s, i)) std::cout << " maximal";
    } else {
      std::cout << " whole";
    }
    std::cout << " radical " << radical(s, i).to_string() << '\n';
  }
  return kPass;
}

int cmd_classify(const std::string& file, const std::string& list, const Common& c) {
  const Structure s = load(file, c);
  require_valid(s, c);
  const ElementSet i = parse_list(list, s);
  const bool ideal = is_hyperideal(s, i);
  std::cout << "set " << i.to_string() << '\n' << "hyperideal " << yes_no(ideal) << '\n';
  if (!ideal) return kFail;
  const bool proper = i != s.carrier();
  std::cout << "proper " << yes_no(proper) << '\n';
  if (proper) {
    std::cout << "prime " << yes_no(is_prime(s, i)) << '\n'
              << "primary " << yes_no(is_primary(s, i)) << '\n'
              << "primary-existential " << yes_no(is_primary(s, i, PrimaryReading::existential)) << '\n'
              << "2-absorbing " << yes_no(is_two_absorbing(s, i)) << '\n'
              << "maximal " << yes_no(is_maximal(s, i)) << '\n';
  }
  std::cout << "radical " << radical(s, i).to_string() << '\n';
  return kPass;
}

int cmd_radical(const std::string& file, const std::string& list, const Common& c) {
  const Structure s = load(file, c);
  require_valid(s, c);
  std::cout << radical(s, parse_list(list, s)).to_string() << '\n';
  return kPass;
}

int cmd_localize(const std::string& file, const std::string& subset, const std::string& prime, bool display,
                 const std::string& out, const Common& c) {
  const Structure s = load(file, c);
  const DistributivityMode mode = require_valid(s, c);
  ElementSet set;
  if (!prime.empty()) {
    const ElementSet p = parse_list(prime, s);
    if (!is_hyperideal(s, p) || p == s.carrier() || !is_prime(s, p)) {
      throw usage_error(p.to_string() + " is not a prime hyperideal");
    }
    set = s.carrier() - p;
  } else {
    set = parse_list(subset, s);
  }
  LocalizeOptions opts{display ? RelationForm::display : RelationForm::negated, mode};
  const EquivalenceReport laws = check_equivalence_laws(s, set, opts.relation);
  std::cout << "subset " << set.to_string() << '\n'
            << "reflexive " << yes_no(laws.reflexive) << '\n'
            << "symmetric " << yes_no(laws.symmetric) << '\n'
            << "transitive " << yes_no(laws.transitive) << '\n';
  if (!laws.ok()) {
    std::cout << "relation is not an equivalence: " << laws.detail << '\n';
    return kFail;
  }
  const Localization loc = build_localization(s, set, opts);
  std::cout << "classes " << loc.size() << '\n' << loc.render_class_map() << loc.report().render();
  const auto checks = check_fraction_identities(loc);
  for (const auto& ch : checks) {
    std::cout << (ch.pass ? "pass " : "FAIL ") << ch.id << (ch.detail.empty() ? "" : ": " + ch.detail) << '\n';
  }
  if (!out.empty()) write_out(out, serialize(loc));
  return loc.report().ok() && all_pass(checks) ? kPass : kFail;
}

int cmd_quotient(const std::string& file, const std::string& list, const std::string& out, const Common& c) {
  const Structure s = load(file, c);
  const DistributivityMode mode = require_valid(s, c);
  const Quotient q = build_quotient(s, parse_list(list, s), mode);
  std::cout << "cosets " << q.size() << '\n' << q.render_coset_map() << q.report().render();
  if (!out.empty()) write_out(out, serialize(q));
  return q.report().ok() ? kPass : kFail;
}

int cmd_iso(const std::string& a_file, const std::string& b_file, const Common& c) {
  const Structure a = load(a_file, c);
  const Structure b = load(b_file, c);
  HomomorphismOptions hom{!c.no_unit_preservation};
  if (a.arity() != b.arity()) {
    std::cout << "no isomorphism: arities differ\n";
    return kFail;
  }
  const auto iso = find_isomorphism(a, b, hom);
  if (!iso) {
    std::cout << "no isomorphism\n";
    return kFail;
  }
  std::cout << "isomorphism\n" << iso->render();
  return kPass;
}

int cmd_universal(const std::string& file, const std::string& subset, const std::string& target,
                  const std::string& map, const Common& c) {
  const Structure s = load(file, c);
  const DistributivityMode mode = require_valid(s, c);
  const Structure b = load(target, c);
  require_valid(b, c);
  UniversalOptions opts;
  opts.localize.mode = mode;
  opts.hom.preserve_units = !c.no_unit_preservation;
  const UniversalResult res = check_universal_property(s, parse_list(subset, s), b, parse_map(map, s, b), opts);
  std::cout << res.verdict.theorem << ' ' << to_string(res.verdict.status) << ' ' << res.verdict.instance << '\n';
  if (!res.verdict.detail.empty()) std::cout << res.verdict.detail << '\n';
  if (res.h) std::cout << res.h->render();
  return res.verdict.passed() ? kPass : kFail;
}

int cmd_suite(const std::string& corpus_path, const std::string& json_path, std::optional<std::size_t> max_card,
              bool display, const Common& c) {
  const CorpusSpec corpus = load_corpus(corpus_path);
  SuiteOptions opts;
  opts.allow_weak = c.allow_weak;
  opts.universal.hom.preserve_units = !c.no_unit_preservation;
  opts.universal.localize.relation = display ? RelationForm::display : RelationForm::negated;
  if (max_card) {
    SuiteCaps caps = corpus.caps;
    caps.max_card = *max_card;
    if (*max_card > SuiteCaps{}.max_card) {
      std::cerr << "warning: suite card cap raised to " << *max_card << "; runs may be slow\n";
    }
    opts.caps = caps;
  }
  const nlohmann::json report = run_theorem_suite(corpus, opts);
  for (const auto& s : report["structures"]) {
    for (const auto& v : s["verdicts"]) {
      const std::string status = v["status"].get<std::string>();
      if (status == "pass" || status == "info") continue;
      std::cout << status << ' ' << s["name"].get<std::string>() << ' ' << v["theorem"].get<std::string>() << ' '
                << v["instance"].get<std::string>() << ": " << v["detail"].get<std::string>() << '\n';
    }
  }
  const auto& sum = report["summary"];
  std::cout << "structures " << report["structures"].size() << " pass " << sum["pass"] << " fail " << sum["fail"]
            << " skip " << sum["skip"] << " info " << sum["info"] << " adjudicate " << sum["adjudicate"] << '\n';
  if (!json_path.empty()) {
    const std::string body = report.dump(2) + "\n";
    if (json_path == "-") {
      std::cout << body;
    } else {
      write_out(json_path, body);
    }
  }
  return suite_passed(report) ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Krasner (m,n)-hyperrings: validation, hyperideals, fractions, quotients"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--allow-weak", common.allow_weak, "accept structures that are only weakly distributive");
  app.add_flag("--no-unit-preservation", common.no_unit_preservation,
               "do not require homomorphisms to fix zero and one");
  app.add_option("--max-arity", common.max_arity, "cap on m and n for single-structure commands");

  std::string file, file_b, list, subset, prime, out, target, map, json;
  bool weak = false, display = false;
  std::optional<std::size_t> suite_max_card;
  std::size_t max_card = common.max_card;

  auto with_cap = [&](CLI::App* sub) {
    sub->add_option("--max-card", max_card, "carrier cap for this command");
    return sub;
  };

  auto* validate = with_cap(app.add_subcommand("validate", "check every axiom"));
  validate->add_option("FILE", file)->required();
  validate->add_flag("--weak", weak, "check distributivity as containment only");

  auto* ideals = with_cap(app.add_subcommand("ideals", "list hyperideals with their classification"));
  ideals->add_option("FILE", file)->required();

  auto* classify = with_cap(app.add_subcommand("classify", "classify one subset"));
  classify->add_option("FILE", file)->required();
  classify->add_option("--ideal", list, "comma-separated elements")->required();

  auto* rad = with_cap(app.add_subcommand("radical", "radical of a hyperideal"));
  rad->add_option("FILE", file)->required();
  rad->add_option("--ideal", list)->required();

  auto* localize = with_cap(app.add_subcommand("localize", "hyperring of fractions"));
  localize->add_option("FILE", file)->required();
  auto* sub_opt = localize->add_option("--subset", subset, "multiplicative subset");
  auto* prime_opt = localize->add_option("--at-prime", prime, "localize at the complement of a prime");
  sub_opt->excludes(prime_opt);
  localize->add_option("--out", out, "write the result with its class map");
  localize->add_flag("--display-relation", display, "use the relation without the negated term");

  auto* quotient = with_cap(app.add_subcommand("quotient", "quotient by a hyperideal"));
  quotient->add_option("FILE", file)->required();
  quotient->add_option("--ideal", list)->required();
  quotient->add_option("--out", out, "write the result with its coset map");

  auto* iso = with_cap(app.add_subcommand("iso", "search for an isomorphism"));
  iso->add_option("FILE_A", file)->required();
  iso->add_option("FILE_B", file_b)->required();

  auto* universal = with_cap(app.add_subcommand("universal", "check the universal property for one map"));
  universal->add_option("FILE", file)->required();
  universal->add_option("--subset", subset)->required();
  universal->add_option("--target", target)->required();
  universal->add_option("--map", map, "src:dst pairs, comma separated")->required();

  auto* suite = app.add_subcommand("suite", "run every theorem check over a corpus");
  suite->add_option("CORPUSFILE", file)->required();
  suite->add_option("--json", json, "write the JSON report here ('-' for stdout)");
  suite->add_option("--max-card", suite_max_card, "carrier cap for the suite");
  suite->add_flag("--display-relation", display, "use the relation without the negated term");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    common.max_card = max_card;
    if (max_card > 8) std::cerr << "warning: carrier cap raised to " << max_card << "\n";
    if (*validate) return cmd_validate(file, weak, common);
    if (*ideals) return cmd_ideals(file, common);
    if (*classify) return cmd_classify(file, list, common);
    if (*rad) return cmd_radical(file, list, common);
    if (*localize) {
      if (subset.empty() && prime.empty()) throw usage_error("localize needs --subset or --at-prime");
      return cmd_localize(file, subset, prime, display, out, common);
    }
    if (*quotient) return cmd_quotient(file, list, out, common);
    if (*iso) return cmd_iso(file, file_b, common);
    if (*universal) return cmd_universal(file, subset, target, map, common);
    if (*suite) return cmd_suite(file, json, suite_max_card, display, common);
  } catch (const format_error& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return kUsage;
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const construction_error& e) {
    std::cerr << "construction failed: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
