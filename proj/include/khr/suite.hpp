#pragma once

// Corpus files and the theorem-suite driver.
//
// A corpus lists one structure per line, either a generator directive or
// `file <path>` relative to the corpus, optionally followed by
// `expect: adjudicate`. `max-card`, `max-m` and `max-n` lines set caps.

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "khr/format.hpp"
#include "khr/fractions.hpp"
#include "khr/ideals.hpp"
#include "khr/morphisms.hpp"
#include "khr/quotients.hpp"
#include "khr/transport.hpp"
#include "khr/universal.hpp"
#include "khr/validate.hpp"
#include "khr/verdict.hpp"

namespace khr {

struct SuiteCaps {
  std::size_t max_card = 6;
  std::size_t max_m = 4;
  std::size_t max_n = 4;
};

struct CorpusEntry {
  std::size_t line = 0;
  std::string source;  // directive text, or the resolved file path
  bool is_file = false;
  bool adjudicate = false;
};

struct CorpusSpec {
  std::vector<CorpusEntry> entries;
  SuiteCaps caps;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline CorpusSpec parse_corpus(std::string_view text, const std::filesystem::path& base_dir = {}) {
  CorpusSpec spec;
  std::istringstream in{std::string(text)};
  std::size_t number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    auto tok = detail::split_ws(raw);
    if (tok.empty()) continue;
    bool adjudicate = false;
    if (tok.size() >= 2 && tok[tok.size() - 2] == "expect:") {
      if (tok.back() != "adjudicate") throw format_error(number, "unknown expectation '" + tok.back() + "'");
      adjudicate = true;
      tok.resize(tok.size() - 2);
      if (tok.empty()) throw format_error(number, "expectation without an entry");
    }
    if (tok[0] == "max-card" || tok[0] == "max-m" || tok[0] == "max-n") {
      if (tok.size() != 2) throw format_error(number, tok[0] + " takes one value");
      const std::size_t v = detail::expect_uint(number, tok[1], tok[0]);
      (tok[0] == "max-card" ? spec.caps.max_card : tok[0] == "max-m" ? spec.caps.max_m : spec.caps.max_n) = v;
      continue;
    }
    CorpusEntry e{number, {}, false, adjudicate};
    if (tok[0] == "file") {
      if (tok.size() != 2) throw format_error(number, "file takes one path");
      e.is_file = true;
      e.source = (base_dir / tok[1]).lexically_normal().string();
    } else if (detail::is_generator_line(tok)) {
      for (const auto& t : tok) e.source += (e.source.empty() ? "" : " ") + t;
    } else {
      throw format_error(number, "unknown corpus entry '" + tok[0] + "'");
    }
    spec.entries.push_back(std::move(e));
  }
  return spec;
}

inline CorpusSpec load_corpus(const std::filesystem::path& path) {
  return parse_corpus(read_file(path), path.parent_path());
}

inline Structure load_entry(const CorpusEntry& e) {
  if (!e.is_file) return parse_structure(e.source);
  try {
    return parse_structure(read_file(e.source));
  } catch (const format_error& err) {
    throw format_error(e.source + ": " + err.what());
  }
}

struct SuiteOptions {
  std::optional<SuiteCaps> caps;  // overrides the corpus caps
  bool allow_weak = false;        // run the suite on structures only weakly distributive
  UniversalOptions universal;
};

inline nlohmann::json to_json(const TheoremVerdict& v) {
  return {{"theorem", v.theorem}, {"instance", v.instance}, {"status", to_string(v.status)}, {"detail", v.detail}};
}

inline nlohmann::json to_json(const ValidationReport& r) {
  nlohmann::json axioms = nlohmann::json::array();
  for (const auto& a : r.verdicts) {
    nlohmann::json j = {{"axiom", a.id}, {"pass", a.pass}};
    if (!a.pass) {
      j["counterexample"] = tuple_to_string(a.counterexample);
      j["detail"] = a.detail;
    }
    axioms.push_back(std::move(j));
  }
  return {{"mode", to_string(r.mode)}, {"valid", r.ok()}, {"axioms", std::move(axioms)}};
}

namespace detail {

// Collects verdicts for one structure, turning refused hypotheses into skips
// and construction failures into failures.
class VerdictLog {
 public:
  explicit VerdictLog(std::string structure) : structure_(std::move(structure)) {}

  void add(TheoremVerdict v) { verdicts_.push_back(std::move(v)); }
  void add(std::string theorem, std::string instance, Status status, std::string detail = {}) {
    verdicts_.push_back({std::move(theorem), structure_, std::move(instance), status, std::move(detail)});
  }

  template <typename Fn>
  void guarded(const std::string& theorem, const std::string& instance, Fn&& fn) {
    try {
      fn();
    } catch (const usage_error& e) {
      add(theorem, instance, Status::skip, e.what());
    } catch (const construction_error& e) {
      add(theorem, instance, Status::fail, e.what());
    }
  }

  const std::vector<TheoremVerdict>& verdicts() const { return verdicts_; }

 private:
  std::string structure_;
  std::vector<TheoremVerdict> verdicts_;
};

inline bool within_cap(double base, std::size_t exp, double cap) {
  double total = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    total *= base;
    if (total > cap) return false;
  }
  return true;
}

inline nlohmann::json ideal_table(const Structure& s) {
  nlohmann::json out = nlohmann::json::array();
  for (ElementSet i : enumerate_hyperideals(s)) {
    nlohmann::json j = {{"ideal", i.to_string()}};
    const bool proper = i != s.carrier();
    j["proper"] = proper;
    if (proper) {
      j["prime"] = is_prime(s, i);
      j["primary"] = is_primary(s, i);
      j["two_absorbing"] = is_two_absorbing(s, i);
      j["maximal"] = is_maximal(s, i);
    }
    j["radical"] = radical(s, i).to_string();
    out.push_back(std::move(j));
  }
  return out;
}

struct SuiteTarget {
  std::string name;
  Structure structure;
};

inline void run_localization_checks(const Structure& r, ElementSet subset, const std::vector<ElementSet>& ideals,
                                    const std::vector<SuiteTarget>& targets, const SuiteOptions& opts,
                                    VerdictLog& log) {
  const std::string inst = "S=" + subset.to_string();
  const UniversalOptions& uopts = opts.universal;

  const EquivalenceReport laws = check_equivalence_laws(r, subset, uopts.localize.relation);
  log.add("equivalence-laws", inst, laws.ok() ? Status::pass : Status::fail, laws.detail);
  if (!laws.ok()) return;

  const RelationForm other =
      uopts.localize.relation == RelationForm::negated ? RelationForm::display : RelationForm::negated;
  const EquivalenceReport other_laws = check_equivalence_laws(r, subset, other);
  const std::string other_name = other == RelationForm::display ? "display" : "negated";
  if (!other_laws.ok()) {
    log.add("relation-" + other_name, inst, Status::info, "not an equivalence: " + other_laws.detail);
  }

  Localization loc;
  try {
    loc = build_localization(r, subset, uopts.localize);
  } catch (const construction_error& e) {
    log.add("localization", inst, Status::fail, e.what());
    return;
  }
  if (other_laws.ok()) {
    LocalizeOptions lo = uopts.localize;
    lo.relation = other;
    try {
      const Localization alt = build_localization(r, subset, lo);
      if (alt.size() != loc.size()) {
        log.add("relation-" + other_name, inst, Status::info,
                std::to_string(alt.size()) + " classes against " + std::to_string(loc.size()));
      }
    } catch (const construction_error& e) {
      log.add("relation-" + other_name, inst, Status::info, e.what());
    }
  }

  const ValidationReport& rep = loc.report();
  log.add("localization-valid", inst, rep.ok() ? Status::pass : Status::fail,
          rep.ok() ? std::string{} : rep.first_failure()->id + " at " +
                                         tuple_to_string(rep.first_failure()->counterexample));
  log.add(verdict_from("fraction-identities", r.name(), inst, check_fraction_identities(loc)));
  {
    const auto defect = homomorphism_defect(r, loc.ring(), loc.natural_map(), uopts.hom);
    log.add("phi-homomorphism", inst, defect ? Status::fail : Status::pass, defect.value_or(""));
  }
  if (is_hyperintegral_domain(r)) {
    log.add("domain-preserved", inst, is_hyperintegral_domain(loc.ring()) ? Status::pass : Status::fail);
  }

  for (ElementSet i : ideals) {
    const std::string ii = inst + " I=" + i.to_string();
    log.guarded("unit-criterion", ii, [&] { log.add(check_unit_criterion(loc, i)); });
    log.guarded("radical-commutes", ii, [&] { log.add(check_radical_commutes(loc, i)); });
    log.guarded("contract-extend", ii, [&] {
      const ElementSet back = contract_ideal(loc, extend_ideal(loc, i));
      log.add("contract-extend", ii, i.subset_of(back) ? Status::pass : Status::fail,
              i.subset_of(back) ? "" : "contraction " + back.to_string() + " misses part of I");
    });
    if (i == r.carrier() || i.intersects(subset)) continue;
    for (IdealKind kind : {IdealKind::prime, IdealKind::primary, IdealKind::two_absorbing}) {
      if (!has_kind(r, i, kind)) continue;
      log.guarded(std::string(to_string(kind)) + "-preserved", ii, [&] { log.add(check_preserved(loc, i, kind)); });
    }
    log.guarded("quotient-fraction-iso", ii, [&] {
      log.add(check_quotient_fraction_iso(r, subset, i, uopts));
    });
  }
  log.guarded("extended-ideals", inst, [&] { log.add(check_all_extended(loc)); });

  // Universal property: B = L with k = phi, then every corpus target and every
  // homomorphism R -> B sending S to units.
  auto universal = [&](const Structure& b, const MapTable& k, const std::string& label) {
    const std::string ui = inst + " B=" + label + " k=" + tuple_to_string(k.image);
    if (!within_cap(static_cast<double>(b.card()), loc.size(), uopts.search_cap)) {
      log.add("universal-property", ui, Status::skip, "uniqueness search exceeds the cap");
      return;
    }
    log.guarded("universal-property", ui, [&] {
      UniversalResult res = check_universal_property(loc, b, k, uopts);
      res.verdict.instance = ui;
      log.add(std::move(res.verdict));
    });
  };
  universal(loc.ring(), loc.natural_map(), "L");
  for (const auto& t : targets) {
    if (t.structure.arity() != r.arity()) continue;
    if (!within_cap(static_cast<double>(t.structure.card()), r.card(), uopts.search_cap)) {
      log.add("universal-property", inst + " B=" + t.name, Status::skip, "homomorphism search exceeds the cap");
      continue;
    }
    for (const MapTable& k : enumerate_homomorphisms(r, t.structure, uopts.hom, uopts.search_cap)) {
      bool units = true;
      subset.for_each([&](Element s) { units = units && is_invertible(t.structure, k(s)).has_value(); });
      if (units) universal(t.structure, k, t.name);
    }
  }
}

inline nlohmann::json run_structure(const Structure& r, const CorpusEntry& entry, const SuiteCaps& caps,
                                    const std::vector<SuiteTarget>& targets, const SuiteOptions& opts) {
  nlohmann::json out = {{"name", r.name()}, {"m", r.m()}, {"n", r.n()}, {"card", r.card()},
                        {"source", entry.is_file ? std::filesystem::path(entry.source).filename().string()
                                                 : entry.source}};
  VerdictLog log(r.name());
  auto finish = [&] {
    nlohmann::json verdicts = nlohmann::json::array();
    for (const auto& v : log.verdicts()) verdicts.push_back(to_json(v));
    out["verdicts"] = std::move(verdicts);
    return out;
  };

  if (r.card() > caps.max_card || r.m() > caps.max_m || r.n() > caps.max_n) {
    log.add("suite", "", Status::skip,
            "exceeds caps card<=" + std::to_string(caps.max_card) + " m<=" + std::to_string(caps.max_m) +
                " n<=" + std::to_string(caps.max_n));
    return finish();
  }

  const ValidationReport strict = validate_structure(r, DistributivityMode::strict);
  out["validation"] = to_json(strict);
  DistributivityMode mode = DistributivityMode::strict;
  if (strict.ok()) {
    log.add("validation", "strict", Status::pass);
  } else {
    const AxiomVerdict& first = *strict.first_failure();
    const std::string where = first.id + " at " + tuple_to_string(first.counterexample) +
                              (first.detail.empty() ? "" : ": " + first.detail);
    log.add("validation", "strict", entry.adjudicate ? Status::adjudicate : Status::fail, where);
    const ValidationReport weak = validate_structure(r, DistributivityMode::weak);
    out["validation_weak"] = to_json(weak);
    log.add("validation", "weak", Status::info, weak.ok() ? "valid" : "invalid: " + weak.first_failure()->id);
    if (!(opts.allow_weak && weak.ok())) {
      // multiplicative subsets are still reported; they need no axioms
      nlohmann::json subsets = nlohmann::json::array();
      for (ElementSet s : enumerate_multiplicative_subsets(r)) subsets.push_back(s.to_string());
      out["multiplicative_subsets"] = std::move(subsets);
      return finish();
    }
    mode = DistributivityMode::weak;
  }

  SuiteOptions local = opts;
  local.universal.localize.mode = mode;
  const auto ideals = enumerate_hyperideals(r);
  out["ideals"] = ideal_table(r);
  const auto subsets = enumerate_multiplicative_subsets(r);
  {
    nlohmann::json js = nlohmann::json::array();
    for (ElementSet s : subsets) js.push_back(s.to_string());
    out["multiplicative_subsets"] = std::move(js);
  }

  for (ElementSet i : ideals) {
    const std::string ii = "I=" + i.to_string();
    const ElementSet rad = radical(r, i);
    std::vector<Check> inv;
    inv.push_back({"radical-ideal", is_hyperideal(r, rad) && i.subset_of(rad), rad.to_string()});
    inv.push_back({"radical-idempotent", radical(r, rad) == rad, ""});
    if (i != r.carrier() && is_prime(r, i)) {
      inv.push_back({"prime-radical", rad == i, rad.to_string()});
      inv.push_back({"prime-primary", is_primary(r, i), ""});
      inv.push_back({"prime-two-absorbing", is_two_absorbing(r, i), ""});
    }
    log.add(verdict_from("ideal-invariants", r.name(), ii, inv));
    if (i == r.carrier()) continue;
    const bool elementwise = is_prime(r, i);
    const bool by_ideals = is_prime_by_ideals(r, i);
    if (elementwise && !by_ideals) {
      log.add("prime-forms", ii, Status::fail, "elementwise prime but not prime for hyperideal products");
    } else if (elementwise != by_ideals) {
      log.add("prime-forms", ii, Status::info, "prime for hyperideal products only");
    } else {
      log.add("prime-forms", ii, Status::pass);
    }
    if (is_primary(r, i, PrimaryReading::universal) != is_primary(r, i, PrimaryReading::existential)) {
      log.add("primary-reading", "I=" + i.to_string(), Status::info,
              std::string("universal reading ") + (is_primary(r, i) ? "holds" : "fails") + ", existential " +
                  (is_primary(r, i, PrimaryReading::existential) ? "holds" : "fails"));
    }
  }
  for (ElementSet i : ideals) {
    log.guarded("quotient-valid", "I=" + i.to_string(), [&] {
      const Quotient q = build_quotient(r, i, mode);
      log.add("quotient-valid", "I=" + i.to_string(), q.report().ok() ? Status::pass : Status::fail,
              q.report().ok() ? "" : q.report().first_failure()->id);
      const auto defect = homomorphism_defect(r, q.ring(), q.projection(), local.universal.hom);
      log.add("projection-homomorphism", "I=" + i.to_string(), defect ? Status::fail : Status::pass,
              defect.value_or(""));
    });
  }

  if (!r.commutative() || r.n() < r.m()) {
    log.add("fractions", "", Status::skip,
            !r.commutative() ? "structure is not commutative" : "fractions require n >= m");
    return finish();
  }

  for (ElementSet s : subsets) run_localization_checks(r, s, ideals, targets, local, log);

  for (ElementSet p : ideals) {
    if (p == r.carrier() || !is_prime(r, p)) continue;
    log.guarded("local-maximal", "P=" + p.to_string(),
                [&] { log.add(check_local_maximal(r, p, local.universal.localize)); });
  }
  if (is_hyperintegral_domain(r)) {
    log.guarded("field-of-fractions", "", [&] {
      log.add(check_field_of_fractions(r, local.universal.localize));
    });
  }
  return finish();
}

}  // namespace detail

// One record per structure, each with its verdict list; `summary` counts
// statuses. The output carries no timestamps or paths beyond file names.
inline nlohmann::json run_theorem_suite(const CorpusSpec& corpus, const SuiteOptions& opts = {}) {
  const SuiteCaps caps = opts.caps.value_or(corpus.caps);
  std::vector<Structure> loaded;
  loaded.reserve(corpus.entries.size());
  for (const auto& e : corpus.entries) loaded.push_back(load_entry(e));

  std::vector<detail::SuiteTarget> targets;
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    const Structure& s = loaded[i];
    if (corpus.entries[i].adjudicate || s.card() > caps.max_card) continue;
    if (!validate_structure(s).ok()) continue;
    targets.push_back({s.name(), s});
  }

  nlohmann::json structures = nlohmann::json::array();
  std::map<std::string, std::size_t> counts;
  for (const char* st : {"pass", "fail", "skip", "info", "adjudicate"}) counts[st] = 0;
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    nlohmann::json rec = detail::run_structure(loaded[i], corpus.entries[i], caps, targets, opts);
    for (const auto& v : rec["verdicts"]) ++counts[v["status"].get<std::string>()];
    structures.push_back(std::move(rec));
  }
  return {{"caps", {{"max_card", caps.max_card}, {"max_m", caps.max_m}, {"max_n", caps.max_n}}},
          {"options",
           {{"relation", opts.universal.localize.relation == RelationForm::negated ? "negated" : "display"},
            {"preserve_units", opts.universal.hom.preserve_units},
            {"allow_weak", opts.allow_weak}}},
          {"structures", std::move(structures)},
          {"summary", counts}};
}

// True when no verdict failed; adjudicate, info and skip records do not fail a run.
inline bool suite_passed(const nlohmann::json& report) {
  return report.at("summary").at("fail").get<std::size_t>() == 0;
}

}  // namespace khr
