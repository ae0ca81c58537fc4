#pragma once

// Hyperideals, multiplicative subsets, and the prime / primary / 2-absorbing /
// maximal predicates with radicals.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "khr/element_set.hpp"
#include "khr/errors.hpp"
#include "khr/structure.hpp"

namespace khr {

enum class PrimaryReading {
  universal,   // every index i with x_i outside Q forces the substituted product into the radical
  existential  // some index has x_i in Q or its substituted product in the radical
};

namespace detail {

inline void require_nonempty(ElementSet a) {
  if (a.empty()) throw usage_error("subset must be nonempty");
}

inline void require_in_carrier(const Structure& s, ElementSet a) {
  if (!a.subset_of(s.carrier())) throw usage_error("subset " + a.to_string() + " exceeds the carrier");
}

// Every n-tuple with at least one argument drawn from `a`, the rest arbitrary.
template <typename Fn>
bool for_each_absorption_tuple(const Structure& s, ElementSet a, Fn&& fn) {
  return for_each_tuple(s.card(), s.n(), [&](std::span<const Element> t) {
    for (Element x : t) {
      if (a.contains(x)) return fn(t);
    }
    return true;
  });
}

}  // namespace detail

inline bool is_hyperideal(const Structure& s, ElementSet a) {
  detail::require_nonempty(a);
  detail::require_in_carrier(s, a);
  if (!a.contains(s.zero())) return false;
  bool ok = true;
  a.for_each([&](Element x) { ok = ok && a.contains(s.neg(x)); });
  if (!ok) return false;
  const auto members = a.elements();
  std::vector<std::vector<Element>> choices(s.m(), members);
  // f-closure
  if (!for_each_product(std::span<const std::vector<Element>>(choices),
                        [&](std::span<const Element> t) { return s.f(t).subset_of(a); })) {
    return false;
  }
  // reproducibility inside the subset
  std::vector<Element> full(s.m());
  std::vector<std::vector<Element>> rest_choices(s.m() - 1, members);
  for (std::size_t i = 0; i < s.m(); ++i) {
    const bool reproducible =
        for_each_product(std::span<const std::vector<Element>>(rest_choices), [&](std::span<const Element> rest) {
          ElementSet reach;
          for (Element x : members) {
            for (std::size_t j = 0, k = 0; j < s.m(); ++j) full[j] = (j == i) ? x : rest[k++];
            reach |= s.f(full);
          }
          return a.subset_of(reach);
        });
    if (!reproducible) return false;
  }
  // g-absorption in every position
  return detail::for_each_absorption_tuple(s, a, [&](std::span<const Element> t) { return a.contains(s.g(t)); });
}

// Smallest subset containing `gens` closed under zero, negation, f and
// g-absorption; this is the hyperideal generated by `gens`.
inline ElementSet hyperideal_closure(const Structure& s, ElementSet gens) {
  detail::require_in_carrier(s, gens);
  ElementSet a = gens;
  a.insert(s.zero());
  while (true) {
    ElementSet next = a;
    a.for_each([&](Element x) { next.insert(s.neg(x)); });
    const auto members = a.elements();
    std::vector<std::vector<Element>> choices(s.m(), members);
    for_each_product(std::span<const std::vector<Element>>(choices), [&](std::span<const Element> t) {
      next |= s.f(t);
      return true;
    });
    detail::for_each_absorption_tuple(s, a, [&](std::span<const Element> t) {
      next.insert(s.g(t));
      return true;
    });
    if (next == a) return a;
    a = next;
  }
}

// All hyperideals in ascending bitmask order.
inline std::vector<ElementSet> enumerate_hyperideals(const Structure& s) {
  std::set<ElementSet> seen;
  std::vector<ElementSet> frontier;
  const ElementSet bottom = hyperideal_closure(s, ElementSet{});
  seen.insert(bottom);
  frontier.push_back(bottom);
  while (!frontier.empty()) {
    const ElementSet cur = frontier.back();
    frontier.pop_back();
    (s.carrier() - cur).for_each([&](Element x) {
      ElementSet bigger = hyperideal_closure(s, cur | ElementSet::single(x));
      if (seen.insert(bigger).second) frontier.push_back(bigger);
    });
  }
  std::vector<ElementSet> out;
  for (ElementSet a : seen) {
    if (is_hyperideal(s, a)) out.push_back(a);
  }
  return out;
}

inline bool is_multiplicative(const Structure& s, ElementSet a) {
  detail::require_in_carrier(s, a);
  if (!a.contains(s.one())) return false;
  const auto members = a.elements();
  std::vector<std::vector<Element>> choices(s.n(), members);
  return for_each_product(std::span<const std::vector<Element>>(choices),
                          [&](std::span<const Element> t) { return a.contains(s.g(t)); });
}

// All multiplicative subsets (each containing one), ascending bitmask order.
inline std::vector<ElementSet> enumerate_multiplicative_subsets(const Structure& s) {
  if (s.card() > 24) throw usage_error("multiplicative subset enumeration is limited to carriers of size 24");
  std::vector<ElementSet> out;
  const std::uint64_t limit = std::uint64_t{1} << s.card();
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    const ElementSet a(bits);
    if (a.contains(s.one()) && is_multiplicative(s, a)) out.push_back(a);
  }
  return out;
}

namespace detail {

inline void require_proper_ideal(const Structure& s, ElementSet a, const char* what) {
  if (a.empty() || !is_hyperideal(s, a)) {
    throw usage_error(std::string(what) + ": " + a.to_string() + " is not a hyperideal");
  }
  if (a == s.carrier()) throw usage_error(std::string(what) + ": " + a.to_string() + " is not proper");
}

}  // namespace detail

// Elementwise criterion: g(x_1..x_n) in I forces some x_i in I.
inline bool is_prime(const Structure& s, ElementSet ideal) {
  detail::require_proper_ideal(s, ideal, "is_prime");
  return for_each_tuple(s.card(), s.n(), [&](std::span<const Element> t) {
    if (!ideal.contains(s.g(t))) return true;
    return std::any_of(t.begin(), t.end(), [&](Element x) { return ideal.contains(x); });
  });
}

// Hyperideal-product form: g(I_1..I_n) within I forces some I_k within I,
// quantified over all n-tuples of hyperideals.
inline bool is_prime_by_ideals(const Structure& s, ElementSet ideal) {
  detail::require_proper_ideal(s, ideal, "is_prime_by_ideals");
  const auto ideals = enumerate_hyperideals(s);
  std::vector<ElementSet> args(s.n());
  return for_each_tuple(ideals.size(), s.n(), [&](std::span<const Element> t) {
    for (std::size_t i = 0; i < t.size(); ++i) args[i] = ideals[t[i]];
    if (!s.g_sets(args).subset_of(ideal)) return true;
    return std::any_of(args.begin(), args.end(), [&](ElementSet a) { return a.subset_of(ideal); });
  });
}

// Elements x with a power in I: g(x^(t), 1^(n-t)) for t <= n, or an iterated
// power g_(l)(x^(l(n-1)+1)). Iteration stops once the power sequence cycles.
inline ElementSet power_radical(const Structure& s, ElementSet ideal) {
  detail::require_in_carrier(s, ideal);
  ElementSet out;
  for (Element x = 0; x < s.card(); ++x) {
    std::vector<Element> args(s.n(), s.one());
    bool hit = false;
    for (std::size_t t = 1; t <= s.n() && !hit; ++t) {
      args[t - 1] = x;
      hit = ideal.contains(s.g(args));
    }
    // iterated powers: p_1 = g(x^(n)), p_{l+1} = g(p_l, x^(n-1))
    Element p = s.g(std::vector<Element>(s.n(), x));
    ElementSet visited;
    while (!hit && !visited.contains(p)) {
      visited.insert(p);
      hit = ideal.contains(p);
      std::vector<Element> next(s.n(), x);
      next[0] = p;
      p = s.g(next);
    }
    if (hit) out.insert(x);
  }
  return out;
}

// Intersection of all prime hyperideals containing I, or the whole carrier when
// there is none.
inline ElementSet radical(const Structure& s, ElementSet ideal) {
  if (ideal.empty() || !is_hyperideal(s, ideal)) {
    throw usage_error("radical: " + ideal.to_string() + " is not a hyperideal");
  }
  ElementSet out = s.carrier();
  for (ElementSet p : enumerate_hyperideals(s)) {
    if (p != s.carrier() && ideal.subset_of(p) && is_prime(s, p)) out &= p;
  }
  const ElementSet powers = power_radical(s, ideal);
  if (!powers.subset_of(out)) {
    throw std::logic_error("radical: power set " + powers.to_string() + " not contained in " + out.to_string());
  }
  return out;
}

inline bool is_primary(const Structure& s, ElementSet q, PrimaryReading reading = PrimaryReading::universal) {
  detail::require_proper_ideal(s, q, "is_primary");
  const ElementSet rad = radical(s, q);
  std::vector<Element> sub(s.n());
  auto substituted_in_radical = [&](std::span<const Element> t, std::size_t i) {
    std::copy(t.begin(), t.end(), sub.begin());
    sub[i] = s.one();
    return rad.contains(s.g(sub));
  };
  return for_each_tuple(s.card(), s.n(), [&](std::span<const Element> t) {
    if (!q.contains(s.g(t))) return true;
    if (reading == PrimaryReading::universal) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (!q.contains(t[i]) && !substituted_in_radical(t, i)) return false;
      }
      return true;
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (q.contains(t[i]) || substituted_in_radical(t, i)) return true;
    }
    return false;
  });
}

inline bool is_two_absorbing(const Structure& s, ElementSet ideal) {
  detail::require_proper_ideal(s, ideal, "is_two_absorbing");
  return for_each_tuple(s.card(), s.n(), [&](std::span<const Element> t) {
    if (!ideal.contains(s.g(t))) return true;
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        if (ideal.contains(s.g_padded({t[i], t[j]}))) return true;
      }
    }
    return false;
  });
}

inline bool is_maximal(const Structure& s, ElementSet ideal) {
  detail::require_proper_ideal(s, ideal, "is_maximal");
  for (ElementSet other : enumerate_hyperideals(s)) {
    if (other != ideal && other != s.carrier() && ideal.subset_of(other)) return false;
  }
  return true;
}

// Maximal elements among the proper hyperideals.
inline std::vector<ElementSet> maximal_hyperideals(const Structure& s) {
  std::vector<ElementSet> out;
  for (ElementSet a : enumerate_hyperideals(s)) {
    if (a != s.carrier() && is_maximal(s, a)) out.push_back(a);
  }
  return out;
}

// Commutative, and a zero product forces a zero factor.
inline bool is_hyperintegral_domain(const Structure& s) {
  if (!s.commutative()) return false;
  return for_each_tuple(s.card(), s.n(), [&](std::span<const Element> t) {
    if (s.g(t) != s.zero()) return true;
    return std::find(t.begin(), t.end(), s.zero()) != t.end();
  });
}

}  // namespace khr
