#pragma once

// The hyperring of fractions S^-1 R.
//
// Pairs (r, s) with s in S are related when some t in S gives
//   zero in g(t, f(g(r, s', 1...), -g(r', s, 1...), zero...), 1...).
// Classes are the connected components of that relation; construction is
// refused unless the relation is itself an equivalence. F and G are evaluated
// on every representative tuple and must agree.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "khr/element_set.hpp"
#include "khr/errors.hpp"
#include "khr/ideals.hpp"
#include "khr/morphisms.hpp"
#include "khr/structure.hpp"
#include "khr/validate.hpp"
#include "khr/verdict.hpp"

namespace khr {

struct FractionPair {
  Element r = 0;
  Element s = 0;
  friend auto operator<=>(const FractionPair&, const FractionPair&) = default;
  std::string to_string() const { return std::to_string(r) + "/" + std::to_string(s); }
};

// `negated` follows the transitivity proof (second term negated); `display`
// is the relation exactly as first stated, without the negation.
enum class RelationForm { negated, display };

// Least witness t in S relating the two pairs, or nullopt.
inline std::optional<Element> fraction_equivalent(const Structure& ring, ElementSet subset, FractionPair a,
                                                  FractionPair b, RelationForm form = RelationForm::negated) {
  if (!subset.contains(a.s) || !subset.contains(b.s)) {
    throw usage_error("denominator outside the multiplicative subset: " + a.to_string() + ", " + b.to_string());
  }
  const Element left = ring.g_padded({a.r, b.s});
  Element right = ring.g_padded({b.r, a.s});
  if (form == RelationForm::negated) right = ring.neg(right);
  const ElementSet inner = ring.f_padded({ElementSet::single(left), ElementSet::single(right)});
  std::optional<Element> witness;
  subset.for_each([&](Element t) {
    if (witness) return;
    bool hit = false;
    inner.for_each([&](Element z) { hit = hit || ring.g_padded({t, z}) == ring.zero(); });
    if (hit) witness = t;
  });
  return witness;
}

// All pairs of R x S in lexicographic (r, s) order.
inline std::vector<FractionPair> fraction_pairs(const Structure& ring, ElementSet subset) {
  std::vector<FractionPair> out;
  for (Element r = 0; r < ring.card(); ++r) {
    subset.for_each([&](Element s) { out.push_back({r, s}); });
  }
  return out;
}

struct EquivalenceReport {
  bool reflexive = true;
  bool symmetric = true;
  bool transitive = true;
  std::vector<FractionPair> counterexample;  // one pair, two pairs or a triple
  std::string detail;

  bool ok() const { return reflexive && symmetric && transitive; }
};

namespace detail {

class RelationMatrix {
 public:
  RelationMatrix(const Structure& ring, ElementSet subset, RelationForm form)
      : pairs_(fraction_pairs(ring, subset)), rel_(pairs_.size() * pairs_.size(), 0) {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      for (std::size_t j = 0; j < pairs_.size(); ++j) {
        rel_[i * pairs_.size() + j] = fraction_equivalent(ring, subset, pairs_[i], pairs_[j], form).has_value();
      }
    }
  }
  std::size_t size() const { return pairs_.size(); }
  const std::vector<FractionPair>& pairs() const { return pairs_; }
  bool operator()(std::size_t i, std::size_t j) const { return rel_[i * pairs_.size() + j] != 0; }

 private:
  std::vector<FractionPair> pairs_;
  std::vector<char> rel_;
};

inline EquivalenceReport equivalence_laws(const RelationMatrix& rel) {
  EquivalenceReport rep;
  const std::size_t p = rel.size();
  const auto& pairs = rel.pairs();
  for (std::size_t i = 0; i < p && rep.ok(); ++i) {
    if (!rel(i, i)) {
      rep.reflexive = false;
      rep.counterexample = {pairs[i]};
      rep.detail = pairs[i].to_string() + " is not related to itself";
    }
  }
  for (std::size_t i = 0; i < p && rep.ok(); ++i) {
    for (std::size_t j = 0; j < p && rep.ok(); ++j) {
      if (rel(i, j) && !rel(j, i)) {
        rep.symmetric = false;
        rep.counterexample = {pairs[i], pairs[j]};
        rep.detail = pairs[i].to_string() + " ~ " + pairs[j].to_string() + " but not conversely";
      }
    }
  }
  for (std::size_t i = 0; i < p && rep.ok(); ++i) {
    for (std::size_t j = 0; j < p && rep.ok(); ++j) {
      if (!rel(i, j)) continue;
      for (std::size_t k = 0; k < p; ++k) {
        if (rel(j, k) && !rel(i, k)) {
          rep.transitive = false;
          rep.counterexample = {pairs[i], pairs[j], pairs[k]};
          rep.detail = pairs[i].to_string() + " ~ " + pairs[j].to_string() + " ~ " + pairs[k].to_string() +
                       " but " + pairs[i].to_string() + " !~ " + pairs[k].to_string();
          break;
        }
      }
    }
  }
  return rep;
}

inline void require_localizable(const Structure& ring, ElementSet subset) {
  if (!ring.commutative()) throw usage_error("fractions require a commutative structure");
  if (ring.n() < ring.m()) {
    throw usage_error("fractions require n >= m (got m=" + std::to_string(ring.m()) +
                      ", n=" + std::to_string(ring.n()) + ")");
  }
  if (!is_multiplicative(ring, subset)) {
    throw usage_error(subset.to_string() + " is not a multiplicative subset containing one");
  }
}

}  // namespace detail

inline EquivalenceReport check_equivalence_laws(const Structure& ring, ElementSet subset,
                                                RelationForm form = RelationForm::negated) {
  detail::require_localizable(ring, subset);
  return detail::equivalence_laws(detail::RelationMatrix(ring, subset, form));
}

struct FractionClass {
  std::vector<FractionPair> members;  // ascending; front() is canonical
  FractionPair canonical() const { return members.front(); }
};

struct LocalizeOptions {
  RelationForm relation = RelationForm::negated;
  DistributivityMode mode = DistributivityMode::strict;
};

class Localization {
 public:
  static constexpr Element kNoClass = ~Element{0};

  const Structure& base() const { return base_; }
  ElementSet subset() const { return subset_; }
  const Structure& ring() const { return ring_; }
  const std::vector<FractionClass>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  Element zero_class() const { return ring_.zero(); }
  Element one_class() const { return ring_.one(); }
  const ValidationReport& report() const { return report_; }
  const LocalizeOptions& options() const { return options_; }

  Element class_of(Element r, Element s) const {
    if (r >= base_.card() || s >= base_.card() || !subset_.contains(s)) {
      throw usage_error("no fraction class for " + FractionPair{r, s}.to_string());
    }
    return class_of_[r * base_.card() + s];
  }
  Element class_of(FractionPair p) const { return class_of(p.r, p.s); }

  // r -> r/1
  MapTable natural_map() const {
    MapTable phi{base_.name(), ring_.name(), std::vector<Element>(base_.card())};
    for (Element r = 0; r < base_.card(); ++r) phi.image[r] = class_of(r, base_.one());
    return phi;
  }

  // Sidecar listing: `class <id> : r/s r/s ...`.
  std::string render_class_map() const {
    std::ostringstream out;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      out << "class " << c << " :";
      for (const auto& p : classes_[c].members) out << ' ' << p.to_string();
      out << '\n';
    }
    return out.str();
  }

  friend Localization build_localization(const Structure&, ElementSet, LocalizeOptions);

 private:
  Structure base_;
  ElementSet subset_;
  LocalizeOptions options_;
  std::vector<FractionClass> classes_;
  std::vector<Element> class_of_;
  Structure ring_;
  ValidationReport report_;
};

inline std::string localization_name(const Structure& ring, ElementSet subset) {
  return "loc(" + ring.name() + "," + subset.to_string() + ")";
}

inline Localization build_localization(const Structure& ring, ElementSet subset, LocalizeOptions opts = {}) {
  detail::require_localizable(ring, subset);
  const detail::RelationMatrix rel(ring, subset, opts.relation);
  const EquivalenceReport laws = detail::equivalence_laws(rel);
  if (!laws.ok()) throw construction_error("fraction relation is not an equivalence: " + laws.detail);

  Localization loc;
  loc.base_ = ring;
  loc.subset_ = subset;
  loc.options_ = opts;
  const auto& pairs = rel.pairs();
  const std::size_t card = ring.card();
  loc.class_of_.assign(card * card, Localization::kNoClass);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (loc.class_of_[pairs[i].r * card + pairs[i].s] != Localization::kNoClass) continue;
    const auto id = static_cast<Element>(loc.classes_.size());
    FractionClass cls;
    for (std::size_t j = i; j < pairs.size(); ++j) {
      if (rel(i, j)) {
        cls.members.push_back(pairs[j]);
        loc.class_of_[pairs[j].r * card + pairs[j].s] = id;
      }
    }
    loc.classes_.push_back(std::move(cls));
  }
  const std::size_t k = loc.classes_.size();
  if (k > kMaxCard) throw construction_error("localization has " + std::to_string(k) + " classes, above the limit");

  const std::size_t m = ring.m();
  const std::size_t n = ring.n();
  std::vector<std::vector<Element>> choices;
  auto member_indices = [&](std::span<const Element> cls_tuple) {
    choices.assign(cls_tuple.size(), {});
    for (std::size_t i = 0; i < cls_tuple.size(); ++i) {
      const auto& members = loc.classes_[cls_tuple[i]].members;
      for (std::size_t j = 0; j < members.size(); ++j) choices[i].push_back(static_cast<Element>(j));
    }
  };
  auto describe = [&](std::span<const Element> cls_tuple, std::span<const Element> reps) {
    std::string out = "(";
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (i) out += ',';
      out += loc.classes_[cls_tuple[i]].members[reps[i]].to_string();
    }
    return out + ")";
  };

  // F: numerator f(g(r1,s2..sm,1..), g(s1,r2,s3..sm,1..), ..., g(s1..s_{m-1},rm,1..)),
  //    denominator g(s1..sm,1..).
  std::vector<ElementSet> f_table;
  f_table.reserve(checked_power(k, m));
  std::vector<Element> num_args(m);
  std::vector<ElementSet> num_sets(m);
  for_each_tuple(k, m, [&](std::span<const Element> ct) {
    member_indices(ct);
    std::optional<ElementSet> first;
    std::vector<Element> first_reps;
    for_each_product(std::span<const std::vector<Element>>(choices), [&](std::span<const Element> reps) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          const FractionPair& p = loc.classes_[ct[j]].members[reps[j]];
          num_args[j] = (i == j) ? p.r : p.s;
        }
        num_sets[i] = ElementSet::single(ring.g_padded(num_args));
      }
      for (std::size_t j = 0; j < m; ++j) num_args[j] = loc.classes_[ct[j]].members[reps[j]].s;
      const Element den = ring.g_padded(num_args);
      ElementSet out;
      ring.f_sets(num_sets).for_each([&](Element r) { out.insert(loc.class_of(r, den)); });
      if (!first) {
        first = out;
        first_reps.assign(reps.begin(), reps.end());
      } else if (out != *first) {
        throw construction_error("F depends on representatives: F" + describe(ct, first_reps) + " = " +
                                 first->to_string() + " but F" + describe(ct, reps) + " = " + out.to_string());
      }
      return true;
    });
    f_table.push_back(*first);
    return true;
  });

  // G: g(r1..rn) / g(s1..sn)
  std::vector<Element> g_table;
  g_table.reserve(checked_power(k, n));
  std::vector<Element> rs(n);
  std::vector<Element> ss(n);
  for_each_tuple(k, n, [&](std::span<const Element> ct) {
    member_indices(ct);
    std::optional<Element> first;
    std::vector<Element> first_reps;
    for_each_product(std::span<const std::vector<Element>>(choices), [&](std::span<const Element> reps) {
      for (std::size_t j = 0; j < n; ++j) {
        const FractionPair& p = loc.classes_[ct[j]].members[reps[j]];
        rs[j] = p.r;
        ss[j] = p.s;
      }
      const Element out = loc.class_of(ring.g(rs), ring.g(ss));
      if (!first) {
        first = out;
        first_reps.assign(reps.begin(), reps.end());
      } else if (out != *first) {
        throw construction_error("G depends on representatives: G" + describe(ct, first_reps) + " = " +
                                 std::to_string(*first) + " but G" + describe(ct, reps) + " = " +
                                 std::to_string(out));
      }
      return true;
    });
    g_table.push_back(*first);
    return true;
  });

  loc.ring_ = Structure(localization_name(ring, subset), ring.arity(), k, loc.class_of(ring.zero(), ring.one()),
                        loc.class_of(ring.one(), ring.one()), true, std::move(f_table), std::move(g_table));
  loc.report_ = validate_structure(loc.ring_, opts.mode);
  return loc;
}

// Least y with g(x, y, 1...) = one.
inline std::optional<Element> is_invertible(const Structure& ring, Element x) {
  if (x >= ring.card()) throw usage_error("element out of range");
  std::optional<Element> inverse;
  for (Element y = 0; y < ring.card(); ++y) {
    if (ring.g_padded({x, y}) != ring.one()) continue;
    if (inverse) {
      throw usage_error("element " + std::to_string(x) + " has two inverses " + std::to_string(*inverse) +
                        " and " + std::to_string(y) + "; the structure is not a valid hyperring");
    }
    inverse = y;
  }
  return inverse;
}

// The basic identities of fractions, each checked exhaustively.
inline std::vector<Check> check_fraction_identities(const Localization& loc) {
  const Structure& r = loc.base();
  const Structure& l = loc.ring();
  const ElementSet subset = loc.subset();
  const MapTable phi = loc.natural_map();
  std::vector<Check> out;

  Check zero_over_s{"zero-over-s"};
  subset.for_each([&](Element s) {
    if (zero_over_s.pass && loc.class_of(r.zero(), s) != loc.zero_class()) {
      zero_over_s.pass = false;
      zero_over_s.detail = "0/" + std::to_string(s) + " is not the zero class";
    }
  });
  out.push_back(zero_over_s);

  Check zero_criterion{"zero-criterion"};
  for (Element x = 0; x < r.card() && zero_criterion.pass; ++x) {
    bool killed = false;
    subset.for_each([&](Element t) { killed = killed || r.g_padded({t, x}) == r.zero(); });
    subset.for_each([&](Element s) {
      if (zero_criterion.pass && (loc.class_of(x, s) == loc.zero_class()) != killed) {
        zero_criterion.pass = false;
        zero_criterion.detail = FractionPair{x, s}.to_string() + (killed ? " is nonzero although some t kills "
                                                                          : " is zero although no t kills ") +
                                std::to_string(x);
      }
    });
  }
  out.push_back(zero_criterion);

  Check s_over_s{"s-over-s"};
  subset.for_each([&](Element s) {
    if (s_over_s.pass && loc.class_of(s, s) != loc.one_class()) {
      s_over_s.pass = false;
      s_over_s.detail = std::to_string(s) + "/" + std::to_string(s) + " is not the one class";
    }
  });
  out.push_back(s_over_s);

  // g(r, s^(m-1), 1^(n-m)) / g(s', s^(m-1), 1^(n-m)) = r / s', and
  // F(r/s', zero^(m-1)) = {r/s'}.
  Check scaling{"scaling"};
  std::vector<Element> top(r.m());
  std::vector<Element> bottom(r.m());
  std::vector<Element> f_args(l.m(), loc.zero_class());
  for (Element x = 0; x < r.card() && scaling.pass; ++x) {
    subset.for_each([&](Element s) {
      subset.for_each([&](Element s2) {
        if (!scaling.pass) return;
        std::fill(top.begin(), top.end(), s);
        std::fill(bottom.begin(), bottom.end(), s);
        top[0] = x;
        bottom[0] = s2;
        const Element scaled = loc.class_of(r.g_padded(top), r.g_padded(bottom));
        f_args[0] = loc.class_of(x, s2);
        if (scaled != loc.class_of(x, s2) || l.f(f_args) != ElementSet::single(f_args[0])) {
          scaling.pass = false;
          scaling.detail = "scaling " + FractionPair{x, s2}.to_string() + " by " + std::to_string(s) +
                           " changes its class";
        }
      });
    });
  }
  out.push_back(scaling);

  Check units{"phi-s-invertible"};
  subset.for_each([&](Element s) {
    if (!units.pass) return;
    const Element inv = loc.class_of(r.one(), s);
    if (l.g_padded({phi(s), inv}) != loc.one_class()) {
      units.pass = false;
      units.detail = "phi(" + std::to_string(s) + ") * 1/" + std::to_string(s) + " is not one";
    }
  });
  out.push_back(units);

  Check decomposition{"class-decomposition"};
  for (const auto& cls : loc.classes()) {
    for (const auto& p : cls.members) {
      if (decomposition.pass && l.g_padded({phi(p.r), loc.class_of(r.one(), p.s)}) != loc.class_of(p)) {
        decomposition.pass = false;
        decomposition.detail = p.to_string() + " != G(phi(r), phi(s)^-1, 1...)";
      }
    }
  }
  out.push_back(decomposition);
  return out;
}

// Localizes a hyperintegral domain at R \ {zero}: the result must be a domain
// in which every nonzero class is invertible.
inline TheoremVerdict check_field_of_fractions(const Structure& ring, LocalizeOptions opts = {}) {
  TheoremVerdict v{"field-of-fractions", ring.name(), "S=R\\{0}"};
  if (ring.card() == 1) {
    v.detail = "no nonzero element";
    return v;
  }
  if (!is_hyperintegral_domain(ring)) throw usage_error(ring.name() + " is not a hyperintegral domain");
  ElementSet subset = ring.carrier();
  subset.erase(ring.zero());
  if (!is_multiplicative(ring, subset)) {
    throw usage_error("R\\{0} is not multiplicative in " + ring.name() + "; it has zero divisors");
  }
  v.instance = "S=" + subset.to_string();
  const Localization loc = build_localization(ring, subset, opts);
  std::vector<Check> checks;
  checks.push_back({"valid", loc.report().ok(), loc.report().ok() ? "" : loc.report().first_failure()->id});
  checks.push_back({"domain", is_hyperintegral_domain(loc.ring()), ""});
  Check units{"nonzero-invertible"};
  for (Element c = 0; c < loc.size(); ++c) {
    if (c != loc.zero_class() && !is_invertible(loc.ring(), c)) {
      units.pass = false;
      units.detail = "class " + std::to_string(c) + " has no inverse";
      break;
    }
  }
  checks.push_back(units);
  TheoremVerdict out = verdict_from(v.theorem, v.structure, v.instance, checks);
  return out;
}

}  // namespace khr
