#pragma once

// Quotient hyperrings R/I built from the cosets f(r, I, 0...), and the
// comparison of fractions of a quotient with the quotient of fractions.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "khr/fractions.hpp"
#include "khr/ideals.hpp"
#include "khr/morphisms.hpp"
#include "khr/transport.hpp"
#include "khr/universal.hpp"
#include "khr/validate.hpp"
#include "khr/verdict.hpp"

namespace khr {

class Quotient {
 public:
  const Structure& base() const { return base_; }
  ElementSet ideal() const { return ideal_; }
  const Structure& ring() const { return ring_; }
  // Cosets ordered by least element; coset i is represented by cosets()[i].min().
  const std::vector<ElementSet>& cosets() const { return cosets_; }
  std::size_t size() const { return cosets_.size(); }
  Element coset_of(Element r) const { return coset_of_.at(r); }
  Element zero_coset() const { return ring_.zero(); }
  Element one_coset() const { return ring_.one(); }
  const ValidationReport& report() const { return report_; }

  MapTable projection() const {
    return MapTable{base_.name(), ring_.name(), coset_of_};
  }

  // Sidecar listing: `coset <id> : e e ...`.
  std::string render_coset_map() const {
    std::ostringstream out;
    for (std::size_t c = 0; c < cosets_.size(); ++c) {
      out << "coset " << c << " :";
      cosets_[c].for_each([&](Element x) { out << ' ' << x; });
      out << '\n';
    }
    return out.str();
  }

  friend Quotient build_quotient(const Structure&, ElementSet, DistributivityMode);

 private:
  Structure base_;
  ElementSet ideal_;
  std::vector<ElementSet> cosets_;
  std::vector<Element> coset_of_;
  Structure ring_;
  ValidationReport report_;
};

inline Quotient build_quotient(const Structure& ring, ElementSet ideal,
                               DistributivityMode mode = DistributivityMode::strict) {
  if (ideal.empty() || !is_hyperideal(ring, ideal)) {
    throw usage_error("build_quotient: " + ideal.to_string() + " is not a hyperideal of " + ring.name());
  }
  Quotient q;
  q.base_ = ring;
  q.ideal_ = ideal;
  const std::size_t card = ring.card();
  std::vector<ElementSet> raw(card);
  for (Element r = 0; r < card; ++r) {
    raw[r] = ring.f_padded({ElementSet::single(r), ideal});
    if (!raw[r].contains(r)) {
      throw construction_error("coset of " + std::to_string(r) + " is " + raw[r].to_string() + ", missing " +
                               std::to_string(r));
    }
  }
  for (Element r = 0; r < card; ++r) {
    for (Element t = r + 1; t < card; ++t) {
      if (raw[r] != raw[t] && raw[r].intersects(raw[t])) {
        throw construction_error("cosets of " + std::to_string(r) + " and " + std::to_string(t) + " overlap: " +
                                 raw[r].to_string() + ", " + raw[t].to_string());
      }
    }
  }
  q.coset_of_.assign(card, 0);
  for (Element r = 0; r < card; ++r) {
    if (raw[r].min() == r) q.cosets_.push_back(raw[r]);
  }
  for (Element c = 0; c < q.cosets_.size(); ++c) {
    q.cosets_[c].for_each([&](Element x) { q.coset_of_[x] = c; });
  }
  if (q.cosets_[q.coset_of_[ring.zero()]] != ideal) {
    throw construction_error("zero coset differs from the hyperideal " + ideal.to_string());
  }

  const std::size_t k = q.cosets_.size();
  std::vector<std::vector<Element>> choices;
  auto members = [&](std::span<const Element> ct) {
    choices.assign(ct.size(), {});
    for (std::size_t i = 0; i < ct.size(); ++i) choices[i] = q.cosets_[ct[i]].elements();
  };

  std::vector<ElementSet> f_table;
  f_table.reserve(checked_power(k, ring.m()));
  for_each_tuple(k, ring.m(), [&](std::span<const Element> ct) {
    members(ct);
    std::optional<ElementSet> first;
    std::vector<Element> first_reps;
    for_each_product(std::span<const std::vector<Element>>(choices), [&](std::span<const Element> reps) {
      ElementSet out;
      ring.f(reps).for_each([&](Element t) { out.insert(q.coset_of_[t]); });
      if (!first) {
        first = out;
        first_reps.assign(reps.begin(), reps.end());
      } else if (out != *first) {
        throw construction_error("induced f depends on representatives: " + tuple_to_string(first_reps) + " gives " +
                                 first->to_string() + ", " + tuple_to_string(reps) + " gives " + out.to_string());
      }
      return true;
    });
    f_table.push_back(*first);
    return true;
  });

  std::vector<Element> g_table;
  g_table.reserve(checked_power(k, ring.n()));
  for_each_tuple(k, ring.n(), [&](std::span<const Element> ct) {
    members(ct);
    std::optional<Element> first;
    std::vector<Element> first_reps;
    for_each_product(std::span<const std::vector<Element>>(choices), [&](std::span<const Element> reps) {
      const Element out = q.coset_of_[ring.g(reps)];
      if (!first) {
        first = out;
        first_reps.assign(reps.begin(), reps.end());
      } else if (out != *first) {
        throw construction_error("induced g depends on representatives: " + tuple_to_string(first_reps) + " gives " +
                                 std::to_string(*first) + ", " + tuple_to_string(reps) + " gives " +
                                 std::to_string(out));
      }
      return true;
    });
    g_table.push_back(*first);
    return true;
  });

  q.ring_ = Structure("quot(" + ring.name() + "," + ideal.to_string() + ")", ring.arity(), k,
                      q.coset_of_[ring.zero()], q.coset_of_[ring.one()], ring.commutative(), std::move(f_table),
                      std::move(g_table));
  q.report_ = validate_structure(q.ring_, mode);
  return q;
}

// The cosets of S, multiplicative in R/I when S misses I.
inline ElementSet sbar(const Quotient& q, ElementSet subset) {
  if (subset.intersects(q.ideal())) {
    throw usage_error("hypothesis S n I = {} fails: " + (subset & q.ideal()).to_string());
  }
  if (!is_multiplicative(q.base(), subset)) {
    throw usage_error(subset.to_string() + " is not multiplicative in " + q.base().name());
  }
  ElementSet out;
  subset.for_each([&](Element s) { out.insert(q.coset_of(s)); });
  if (!is_multiplicative(q.ring(), out)) {
    throw construction_error("image " + out.to_string() + " of S is not multiplicative in " + q.ring().name());
  }
  return out;
}

// Fractions of the quotient against the quotient of the fractions: an
// isomorphism must exist, and the explicit coset map k must satisfy the
// hypotheses of the isomorphism criterion and factor into a bijection.
inline TheoremVerdict check_quotient_fraction_iso(const Structure& ring, ElementSet subset, ElementSet ideal,
                                                  UniversalOptions opts = {}) {
  TheoremVerdict v{"quotient-fraction-iso", ring.name(), "S=" + subset.to_string() + " I=" + ideal.to_string()};
  const DistributivityMode mode = opts.localize.mode;
  const Quotient q = build_quotient(ring, ideal, mode);
  const ElementSet sb = sbar(q, subset);
  const Localization a = build_localization(q.ring(), sb, opts.localize);
  const Localization loc = build_localization(ring, subset, opts.localize);
  const ElementSet ext = extend_ideal(loc, ideal);
  const Quotient b = build_quotient(loc.ring(), ext, mode);
  const Structure& target = b.ring();

  std::vector<Check> checks;
  checks.push_back({"fractions-of-quotient-valid", a.report().ok(), ""});
  checks.push_back({"quotient-of-fractions-valid", b.report().ok(), ""});
  const auto iso = find_isomorphism(a.ring(), target, opts.hom);
  checks.push_back({"isomorphic", iso.has_value(),
                    iso ? "" : "no isomorphism between " + std::to_string(a.size()) + " and " +
                                   std::to_string(target.card()) + " element structures"});

  // k(coset of r) = coset of r/1
  MapTable k{q.ring().name(), target.name(), std::vector<Element>(q.size())};
  Check well_defined{"k-well-defined"};
  for (Element c = 0; c < q.size(); ++c) {
    std::optional<Element> value;
    q.cosets()[c].for_each([&](Element r) {
      const Element y = b.coset_of(loc.class_of(r, ring.one()));
      if (!value) value = y;
      if (*value != y && well_defined.pass) {
        well_defined.pass = false;
        well_defined.detail = "coset " + std::to_string(c) + " has representatives with different images";
      }
    });
    k.image[c] = *value;
  }
  checks.push_back(well_defined);
  const auto k_defect = homomorphism_defect(q.ring(), target, k, opts.hom);
  checks.push_back({"k-homomorphism", !k_defect, k_defect.value_or("")});

  if (well_defined.pass && !k_defect) {
    const Structure& rq = q.ring();
    Check units{"k-units"};
    sb.for_each([&](Element s) {
      if (units.pass && !is_invertible(target, k(s))) {
        units.pass = false;
        units.detail = "k(" + std::to_string(s) + ") is not invertible";
      }
    });
    checks.push_back(units);

    Check kernel{"k-kernel"};
    for (Element x = 0; x < rq.card() && kernel.pass; ++x) {
      if (k(x) != target.zero()) continue;
      bool killed = false;
      sb.for_each([&](Element t) { killed = killed || rq.g_padded({t, x}) == rq.zero(); });
      if (!killed) {
        kernel.pass = false;
        kernel.detail = "k(" + std::to_string(x) + ") = 0 but no t in S-bar kills it";
      }
    }
    checks.push_back(kernel);

    Check cover{"k-covers"};
    if (units.pass) {
      ElementSet reached;
      for (Element x = 0; x < rq.card(); ++x) {
        sb.for_each([&](Element s) { reached.insert(target.g_padded({k(x), *is_invertible(target, k(s))})); });
      }
      if (reached != target.carrier()) {
        cover.pass = false;
        cover.detail = "unreached " + (target.carrier() - reached).to_string();
      }
      checks.push_back(cover);

      const UniversalResult u = check_universal_property(a, target, k, opts);
      checks.push_back({"h-factors", u.verdict.passed(), u.verdict.detail});
      Check bijective{"h-bijective"};
      if (u.h) {
        const ElementSet image = u.h->apply(a.ring().carrier());
        bijective.pass = image == target.carrier() && a.size() == target.card();
        if (!bijective.pass) bijective.detail = "h image " + image.to_string();
      } else {
        bijective.pass = false;
        bijective.detail = "h not defined";
      }
      checks.push_back(bijective);
    }
  }
  return verdict_from(v.theorem, v.structure, v.instance, checks);
}

}  // namespace khr
