#pragma once

// Universal property of S^-1 R: a homomorphism k: R -> B sending S to units
// factors uniquely through the natural map.

#include <optional>
#include <string>
#include <vector>

#include "khr/fractions.hpp"
#include "khr/morphisms.hpp"
#include "khr/verdict.hpp"

namespace khr {

struct UniversalResult {
  TheoremVerdict verdict;
  std::optional<MapTable> h;  // the factoring map L -> B when it is well defined
};

struct UniversalOptions {
  LocalizeOptions localize;
  HomomorphismOptions hom;
  double search_cap = kDefaultSearchCap;
};

// h(r/s) = g(k(r), k(s)^-1, 1...), checked on every representative.
inline UniversalResult check_universal_property(const Localization& loc, const Structure& target, const MapTable& k,
                                                UniversalOptions opts = {}) {
  const Structure& ring = loc.base();
  const ElementSet subset = loc.subset();
  if (auto defect = homomorphism_defect(ring, target, k, opts.hom)) {
    throw usage_error("k is not a homomorphism: " + *defect);
  }
  std::vector<Element> k_inverse(ring.card(), 0);
  subset.for_each([&](Element s) {
    auto inv = is_invertible(target, k(s));
    if (!inv) {
      throw usage_error("k(" + std::to_string(s) + ") = " + std::to_string(k(s)) + " is not invertible in " +
                        target.name());
    }
    k_inverse[s] = *inv;
  });

  UniversalResult res;
  res.verdict = {"universal-property", ring.name(),
                 "S=" + subset.to_string() + " B=" + target.name() + " k=" + tuple_to_string(k.image)};
  std::vector<Check> checks;

  Check well_defined{"h-well-defined"};
  MapTable h{loc.ring().name(), target.name(), std::vector<Element>(loc.size())};
  for (Element c = 0; c < loc.size(); ++c) {
    const auto& members = loc.classes()[c].members;
    const auto value = [&](const FractionPair& p) { return target.g_padded({k(p.r), k_inverse[p.s]}); };
    h.image[c] = value(members.front());
    for (const auto& p : members) {
      if (well_defined.pass && value(p) != h.image[c]) {
        well_defined.pass = false;
        well_defined.detail = "h(" + members.front().to_string() + ") = " + std::to_string(h.image[c]) + " but h(" +
                              p.to_string() + ") = " + std::to_string(value(p));
      }
    }
  }
  checks.push_back(well_defined);
  if (!well_defined.pass) {
    res.verdict = verdict_from(res.verdict.theorem, res.verdict.structure, res.verdict.instance, checks);
    return res;
  }
  res.h = h;

  const auto defect = homomorphism_defect(loc.ring(), target, h, opts.hom);
  checks.push_back({"h-homomorphism", !defect, defect.value_or("")});

  Check factors{"h-phi-equals-k"};
  const MapTable phi = loc.natural_map();
  for (Element r = 0; r < ring.card(); ++r) {
    if (factors.pass && h(phi(r)) != k(r)) {
      factors.pass = false;
      factors.detail = "h(phi(" + std::to_string(r) + ")) = " + std::to_string(h(phi(r))) + " != k(r) = " +
                       std::to_string(k(r));
    }
  }
  checks.push_back(factors);

  Check unique{"h-unique"};
  std::size_t count = 0;
  for (const MapTable& other : enumerate_homomorphisms(loc.ring(), target, opts.hom, opts.search_cap)) {
    bool composes = true;
    for (Element r = 0; r < ring.card() && composes; ++r) composes = other(phi(r)) == k(r);
    if (!composes) continue;
    ++count;
    if (other != h) {
      unique.pass = false;
      unique.detail = "another factoring homomorphism " + tuple_to_string(other.image);
    }
  }
  if (count == 0 && !defect) {
    unique.pass = false;
    unique.detail = "enumeration found no factoring homomorphism";
  }
  checks.push_back(unique);

  res.verdict = verdict_from(res.verdict.theorem, res.verdict.structure, res.verdict.instance, checks);
  return res;
}

inline UniversalResult check_universal_property(const Structure& ring, ElementSet subset, const Structure& target,
                                                const MapTable& k, UniversalOptions opts = {}) {
  return check_universal_property(build_localization(ring, subset, opts.localize), target, k, opts);
}

}  // namespace khr
