#pragma once

// Built-in families: residue rings Z_k, small hyperfields, and the
// constructions (derived arity, relabeling, products) used to grow a corpus.

#include <string>
#include <vector>

#include "khr/structure.hpp"

namespace khr {

namespace detail {

inline std::string arity_suffix(Arity a) {
  if (a == Arity{}) return "";
  return "-(" + std::to_string(a.m) + "," + std::to_string(a.n) + ")";
}

inline void require_arity(Arity a) {
  if (a.m < 2 || a.n < 2) throw usage_error("arities must satisfy m >= 2 and n >= 2");
}

}  // namespace detail

// Z_k with f = sum of m arguments and g = product of n arguments, mod k.
inline Structure ring_embedding(std::size_t k, Arity arity = {}) {
  if (k < 2 || k > kMaxCard) throw usage_error("modulus must lie in [2, 64]");
  detail::require_arity(arity);
  return tabulate(
      "Z" + std::to_string(k) + detail::arity_suffix(arity), arity, k, 0, 1, true,
      [&](std::span<const Element> t) {
        std::size_t sum = 0;
        for (Element x : t) sum += x;
        return ElementSet::single(static_cast<Element>(sum % k));
      },
      [&](std::span<const Element> t) {
        std::size_t prod = 1;
        for (Element x : t) prod = prod * x % k;
        return static_cast<Element>(prod);
      });
}

// Arity (m,n) structure from a (2,2) one: f and g iterated m-1 and n-1 times.
inline Structure derive(const Structure& base, Arity arity) {
  if (base.arity() != Arity{}) throw usage_error("derive expects a (2,2) structure");
  detail::require_arity(arity);
  std::vector<ElementSet> sets(arity.m);
  return tabulate(
      base.name() + detail::arity_suffix(arity), arity, base.card(), base.zero(), base.one(), base.commutative(),
      [&](std::span<const Element> t) {
        for (std::size_t i = 0; i < t.size(); ++i) sets[i] = ElementSet::single(t[i]);
        return base.f_iterated(arity.m - 1, sets);
      },
      [&](std::span<const Element> t) { return base.g_iterated(arity.n - 1, t); });
}

// Krasner hyperfield {0, 1} with 1 + 1 = {0, 1}.
inline Structure krasner_hyperfield(Arity arity = {}) {
  Structure k("krasner", {}, 2, 0, 1, true,
              {ElementSet::single(0), ElementSet::single(1), ElementSet::single(1), ElementSet::of({0, 1})},
              {0, 0, 0, 1});
  return arity == Arity{} ? k : derive(k, arity);
}

// Sign hyperfield {0, 1, -1}; element 2 is -1 and 1 + (-1) is everything.
inline Structure sign_hyperfield(Arity arity = {}) {
  Structure s = tabulate(
      "sign", {}, 3, 0, 1, true,
      [](std::span<const Element> t) {
        if (t[0] == 0) return ElementSet::single(t[1]);
        if (t[1] == 0 || t[0] == t[1]) return ElementSet::single(t[0]);
        return ElementSet::full(3);
      },
      [](std::span<const Element> t) {
        if (t[0] == 0 || t[1] == 0) return Element{0};
        return Element{t[0] == t[1] ? 1u : 2u};
      });
  return arity == Arity{} ? s : derive(s, arity);
}

// Krasner's quotient Z_p / <h>: zero plus the cosets of the subgroup of units
// generated by h, ordered by least member.
inline Structure quotient_hyperfield(std::size_t p, std::size_t h, Arity arity = {}) {
  if (p < 2 || p > kMaxCard) throw usage_error("modulus must lie in [2, 64]");
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw usage_error("modulus " + std::to_string(p) + " is not prime");
  }
  if (h == 0 || h >= p) throw usage_error("generator must be a unit mod " + std::to_string(p));
  ElementSet subgroup;
  for (std::size_t x = 1; !subgroup.contains(static_cast<Element>(x)); x = x * h % p) {
    subgroup.insert(static_cast<Element>(x));
  }
  std::vector<Element> class_of(p, 0);
  std::vector<ElementSet> classes{ElementSet::single(0)};
  ElementSet assigned = ElementSet::single(0);
  for (std::size_t x = 1; x < p; ++x) {
    if (assigned.contains(static_cast<Element>(x))) continue;
    ElementSet coset;
    subgroup.for_each([&](Element u) { coset.insert(static_cast<Element>(x * u % p)); });
    const auto id = static_cast<Element>(classes.size());
    coset.for_each([&](Element y) { class_of[y] = id; });
    assigned = assigned | coset;
    classes.push_back(coset);
  }
  const std::size_t card = classes.size();
  Structure q = tabulate(
      "Z" + std::to_string(p) + "/<" + std::to_string(h) + ">", {}, card, 0, 1, true,
      [&](std::span<const Element> t) {
        ElementSet out;
        classes[t[0]].for_each([&](Element x) {
          classes[t[1]].for_each([&](Element y) { out.insert(class_of[(x + y) % p]); });
        });
        return out;
      },
      [&](std::span<const Element> t) { return class_of[classes[t[0]].min() * classes[t[1]].min() % p]; });
  return arity == Arity{} ? q : derive(q, arity);
}

// perm[old] = new
inline Structure relabel(const Structure& s, const std::vector<Element>& perm, std::string name = {}) {
  if (perm.size() != s.card()) throw usage_error("relabeling must be total on the carrier");
  std::vector<Element> inv(s.card(), 0);
  ElementSet seen;
  for (Element x = 0; x < s.card(); ++x) {
    if (perm[x] >= s.card() || seen.contains(perm[x])) throw usage_error("relabeling is not a permutation");
    seen.insert(perm[x]);
    inv[perm[x]] = x;
  }
  std::vector<Element> args;
  auto pull = [&](std::span<const Element> t) {
    args.resize(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) args[i] = inv[t[i]];
    return std::span<const Element>(args);
  };
  return tabulate(
      name.empty() ? s.name() + "'" : std::move(name), s.arity(), s.card(), perm[s.zero()], perm[s.one()],
      s.commutative(),
      [&](std::span<const Element> t) {
        ElementSet out;
        s.f(pull(t)).for_each([&](Element y) { out.insert(perm[y]); });
        return out;
      },
      [&](std::span<const Element> t) { return perm[s.g(pull(t))]; });
}

// A x B with componentwise operations; (a, b) has index a * card(B) + b.
inline Structure direct_product(const Structure& a, const Structure& b) {
  if (a.arity() != b.arity()) throw usage_error("direct product of structures of different arity");
  const std::size_t cb = b.card();
  if (a.card() * cb > kMaxCard) throw usage_error("direct product exceeds the carrier limit");
  std::vector<Element> left, right;
  auto split = [&](std::span<const Element> t) {
    left.resize(t.size());
    right.resize(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      left[i] = static_cast<Element>(t[i] / cb);
      right[i] = static_cast<Element>(t[i] % cb);
    }
  };
  const auto pair = [&](Element x, Element y) { return static_cast<Element>(x * cb + y); };
  return tabulate(
      a.name() + "x" + b.name(), a.arity(), a.card() * cb, pair(a.zero(), b.zero()), pair(a.one(), b.one()),
      a.commutative() && b.commutative(),
      [&](std::span<const Element> t) {
        split(t);
        const ElementSet fa = a.f(left);
        const ElementSet fb = b.f(right);
        ElementSet out;
        fa.for_each([&](Element x) { fb.for_each([&](Element y) { out.insert(pair(x, y)); }); });
        return out;
      },
      [&](std::span<const Element> t) {
        split(t);
        return pair(a.g(left), b.g(right));
      });
}

}  // namespace khr
