#pragma once

// Moving hyperideals between R and S^-1 R, and the checks that extension and
// contraction behave as the theory of fractions predicts.

#include <string>
#include <vector>

#include "khr/fractions.hpp"
#include "khr/ideals.hpp"
#include "khr/verdict.hpp"

namespace khr {

// S^-1 I = { a/s : a in I, s in S }
inline ElementSet extend_ideal(const Localization& loc, ElementSet ideal) {
  const Structure& r = loc.base();
  if (ideal.empty() || !is_hyperideal(r, ideal)) {
    throw usage_error("extend_ideal: " + ideal.to_string() + " is not a hyperideal of " + r.name());
  }
  ElementSet out;
  ideal.for_each([&](Element a) { loc.subset().for_each([&](Element s) { out.insert(loc.class_of(a, s)); }); });
  if (!is_hyperideal(loc.ring(), out)) {
    throw construction_error("extension of " + ideal.to_string() + " is " + out.to_string() +
                             ", which is not a hyperideal of " + loc.ring().name());
  }
  return out;
}

// { r : r/s in J for some s in S }
inline ElementSet contract_ideal(const Localization& loc, ElementSet ideal) {
  if (ideal.empty() || !is_hyperideal(loc.ring(), ideal)) {
    throw usage_error("contract_ideal: " + ideal.to_string() + " is not a hyperideal of " + loc.ring().name());
  }
  ElementSet out;
  for (Element x = 0; x < loc.base().card(); ++x) {
    loc.subset().for_each([&](Element s) {
      if (ideal.contains(loc.class_of(x, s))) out.insert(x);
    });
  }
  if (!is_hyperideal(loc.base(), out)) {
    throw construction_error("contraction of " + ideal.to_string() + " is " + out.to_string() +
                             ", which is not a hyperideal of " + loc.base().name());
  }
  return out;
}

namespace detail {

inline std::string loc_instance(const Localization& loc, ElementSet ideal) {
  return "S=" + loc.subset().to_string() + " I=" + ideal.to_string();
}

}  // namespace detail

// I meets S exactly when S^-1 I is everything.
inline TheoremVerdict check_unit_criterion(const Localization& loc, ElementSet ideal) {
  const bool meets = ideal.intersects(loc.subset());
  const ElementSet ext = extend_ideal(loc, ideal);
  const bool everything = ext == loc.ring().carrier();
  TheoremVerdict v{"unit-criterion", loc.base().name(), detail::loc_instance(loc, ideal)};
  if (meets != everything) {
    v.status = Status::fail;
    v.detail = std::string("I meets S: ") + (meets ? "yes" : "no") + ", S^-1 I = " + ext.to_string();
  }
  return v;
}

// Every hyperideal J of S^-1 R equals the extension of its contraction.
inline TheoremVerdict check_all_extended(const Localization& loc) {
  TheoremVerdict v{"extended-ideals", loc.base().name(), "S=" + loc.subset().to_string()};
  for (ElementSet j : enumerate_hyperideals(loc.ring())) {
    const ElementSet b = contract_ideal(loc, j);
    const ElementSet back = extend_ideal(loc, b);
    if (back != j) {
      v.status = Status::fail;
      v.detail = "J=" + j.to_string() + " contracts to " + b.to_string() + " which extends to " + back.to_string();
      break;
    }
  }
  return v;
}

// Localizing at the complement of a prime P leaves S^-1 P as the only maximal
// hyperideal, and every class outside it is a unit.
inline TheoremVerdict check_local_maximal(const Structure& ring, ElementSet prime, LocalizeOptions opts = {}) {
  if (!is_prime(ring, prime)) throw usage_error(prime.to_string() + " is not a prime hyperideal");
  const ElementSet subset = ring.carrier() - prime;
  TheoremVerdict v{"local-maximal", ring.name(), "P=" + prime.to_string()};
  if (!is_multiplicative(ring, subset)) {
    v.status = Status::fail;
    v.detail = "complement " + subset.to_string() + " is not multiplicative";
    return v;
  }
  const Localization loc = build_localization(ring, subset, opts);
  const ElementSet maximal = extend_ideal(loc, prime);
  const Structure& l = loc.ring();
  std::vector<Check> checks;
  checks.push_back({"proper", maximal != l.carrier(), "S^-1 P = " + maximal.to_string()});
  if (maximal != l.carrier()) {
    checks.push_back({"maximal", is_maximal(l, maximal), ""});
    const auto all_max = maximal_hyperideals(l);
    checks.push_back({"unique", all_max.size() == 1 && all_max.front() == maximal,
                      std::to_string(all_max.size()) + " maximal hyperideals"});
    Check units{"units-outside"};
    (l.carrier() - maximal).for_each([&](Element c) {
      if (units.pass && !is_invertible(l, c)) {
        units.pass = false;
        units.detail = "class " + std::to_string(c) + " is not invertible";
      }
    });
    checks.push_back(units);
  }
  return verdict_from(v.theorem, v.structure, v.instance, checks);
}

enum class IdealKind { prime, primary, two_absorbing };

inline const char* to_string(IdealKind kind) {
  switch (kind) {
    case IdealKind::prime: return "prime";
    case IdealKind::primary: return "primary";
    case IdealKind::two_absorbing: return "2-absorbing";
  }
  return "?";
}

inline bool has_kind(const Structure& s, ElementSet ideal, IdealKind kind) {
  switch (kind) {
    case IdealKind::prime: return is_prime(s, ideal);
    case IdealKind::primary: return is_primary(s, ideal);
    case IdealKind::two_absorbing: return is_two_absorbing(s, ideal);
  }
  return false;
}

// A prime / primary / 2-absorbing hyperideal disjoint from S extends to one of
// the same kind.
inline TheoremVerdict check_preserved(const Localization& loc, ElementSet ideal, IdealKind kind) {
  const Structure& r = loc.base();
  if (ideal.empty() || !is_hyperideal(r, ideal) || ideal == r.carrier()) {
    throw usage_error(ideal.to_string() + " is not a proper hyperideal");
  }
  if (ideal.intersects(loc.subset())) {
    throw usage_error("hypothesis I n S = {} fails: " + (ideal & loc.subset()).to_string());
  }
  if (!has_kind(r, ideal, kind)) {
    throw usage_error(ideal.to_string() + " is not " + to_string(kind) + " in " + r.name());
  }
  TheoremVerdict v{std::string(to_string(kind)) + "-preserved", r.name(), detail::loc_instance(loc, ideal)};
  const ElementSet ext = extend_ideal(loc, ideal);
  if (ext == loc.ring().carrier()) {
    v.status = Status::fail;
    v.detail = "extension is the whole localization";
  } else if (!has_kind(loc.ring(), ext, kind)) {
    v.status = Status::fail;
    v.detail = "S^-1 I = " + ext.to_string() + " is not " + to_string(kind);
  }
  return v;
}

inline TheoremVerdict check_prime_preserved(const Localization& loc, ElementSet ideal) {
  return check_preserved(loc, ideal, IdealKind::prime);
}
inline TheoremVerdict check_primary_preserved(const Localization& loc, ElementSet ideal) {
  return check_preserved(loc, ideal, IdealKind::primary);
}
inline TheoremVerdict check_two_absorbing_preserved(const Localization& loc, ElementSet ideal) {
  return check_preserved(loc, ideal, IdealKind::two_absorbing);
}

// radical(S^-1 I) = S^-1 radical(I)
inline TheoremVerdict check_radical_commutes(const Localization& loc, ElementSet ideal) {
  const ElementSet lhs = radical(loc.ring(), extend_ideal(loc, ideal));
  const ElementSet rhs = extend_ideal(loc, radical(loc.base(), ideal));
  TheoremVerdict v{"radical-commutes", loc.base().name(), detail::loc_instance(loc, ideal)};
  if (lhs != rhs) {
    v.status = Status::fail;
    v.detail = "radical of extension " + lhs.to_string() + ", extension of radical " + rhs.to_string();
  }
  return v;
}

}  // namespace khr
