#pragma once

// Exhaustive axiom checks for Krasner (m,n)-hyperrings.
//
// Every axiom is checked independently over all tuples in lexicographic
// order; a failed axiom carries the first failing tuple.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "khr/element_set.hpp"
#include "khr/structure.hpp"

namespace khr {

enum class DistributivityMode { strict, weak };

inline const char* to_string(DistributivityMode mode) {
  return mode == DistributivityMode::strict ? "strict" : "weak";
}

namespace axiom {
inline constexpr const char* f_associative = "f-associative";
inline constexpr const char* f_reproducible = "f-reproducible";
inline constexpr const char* scalar_neutral = "scalar-neutral";
inline constexpr const char* inverses = "inverses";
inline constexpr const char* reversible = "reversible";
inline constexpr const char* g_associative = "g-associative";
inline constexpr const char* distributive = "distributive";
inline constexpr const char* zero_absorbing = "zero-absorbing";
inline constexpr const char* scalar_identity = "scalar-identity";
inline constexpr const char* f_commutative = "f-commutative";
inline constexpr const char* g_commutative = "g-commutative";
}  // namespace axiom

struct AxiomVerdict {
  std::string id;
  bool pass = true;
  std::vector<Element> counterexample;  // first failing tuple
  std::string detail;
};

struct ValidationReport {
  std::string structure;
  Arity arity;
  std::size_t card = 0;
  DistributivityMode mode = DistributivityMode::strict;
  std::vector<AxiomVerdict> verdicts;

  bool ok() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const AxiomVerdict& v) { return v.pass; });
  }

  const AxiomVerdict* find(std::string_view id) const {
    for (const auto& v : verdicts) {
      if (v.id == id) return &v;
    }
    return nullptr;
  }

  const AxiomVerdict* first_failure() const {
    for (const auto& v : verdicts) {
      if (!v.pass) return &v;
    }
    return nullptr;
  }

  std::string render() const {
    std::ostringstream out;
    out << "structure " << structure << " m=" << arity.m << " n=" << arity.n << " card=" << card << '\n';
    out << "mode " << to_string(mode) << '\n';
    for (const auto& v : verdicts) {
      out << (v.pass ? "pass " : "FAIL ") << v.id;
      if (!v.pass) out << " at " << tuple_to_string(v.counterexample) << ": " << v.detail;
      out << '\n';
    }
    out << "verdict " << (ok() ? "valid" : "invalid") << '\n';
    return out.str();
  }
};

namespace detail {

inline AxiomVerdict check_f_associative(const Structure& s) {
  AxiomVerdict v{axiom::f_associative};
  const std::size_t m = s.m();
  std::vector<ElementSet> args(m);
  auto cut = [&](std::span<const Element> t, std::size_t i) {
    ElementSet inner = s.f(t.subspan(i, m));
    for (std::size_t j = 0; j < i; ++j) args[j] = ElementSet::single(t[j]);
    args[i] = inner;
    for (std::size_t j = i + 1; j < m; ++j) args[j] = ElementSet::single(t[j + m - 1]);
    return s.f_sets(args);
  };
  for_each_tuple(s.card(), 2 * m - 1, [&](std::span<const Element> t) {
    const ElementSet first = cut(t, 0);
    for (std::size_t i = 1; i < m; ++i) {
      const ElementSet other = cut(t, i);
      if (other != first) {
        v.pass = false;
        v.counterexample.assign(t.begin(), t.end());
        v.detail = "inner f at position 1 gives " + first.to_string() + ", at position " +
                   std::to_string(i + 1) + " gives " + other.to_string();
        return false;
      }
    }
    return true;
  });
  return v;
}

inline AxiomVerdict check_f_reproducible(const Structure& s) {
  AxiomVerdict v{axiom::f_reproducible};
  const std::size_t m = s.m();
  std::vector<Element> full(m);
  for (std::size_t i = 0; i < m && v.pass; ++i) {
    for_each_tuple(s.card(), m - 1, [&](std::span<const Element> rest) {
      ElementSet reach;
      for (Element x = 0; x < s.card(); ++x) {
        for (std::size_t j = 0, k = 0; j < m; ++j) full[j] = (j == i) ? x : rest[k++];
        reach |= s.f(full);
      }
      if (reach != s.carrier()) {
        v.pass = false;
        for (std::size_t j = 0, k = 0; j < m; ++j) full[j] = (j == i) ? 0 : rest[k++];
        v.counterexample = full;
        v.detail = "no solution x at position " + std::to_string(i + 1) + " for b = " +
                   std::to_string((s.carrier() - reach).min());
        return false;
      }
      return true;
    });
  }
  return v;
}

inline AxiomVerdict check_scalar_neutral(const Structure& s) {
  AxiomVerdict v{axiom::scalar_neutral};
  const std::size_t m = s.m();
  std::vector<Element> t(m);
  // Returns the first failing (position, x) for candidate e.
  auto failure = [&](Element e) -> std::optional<std::vector<Element>> {
    for (Element x = 0; x < s.card(); ++x) {
      for (std::size_t i = 0; i < m; ++i) {
        std::fill(t.begin(), t.end(), e);
        t[i] = x;
        if (s.f(t) != ElementSet::single(x)) return t;
      }
    }
    return std::nullopt;
  };
  if (auto bad = failure(s.zero())) {
    v.pass = false;
    v.counterexample = *bad;
    v.detail = "declared zero " + std::to_string(s.zero()) + " is not a scalar neutral: f" +
               tuple_to_string(*bad) + " = " + s.f(*bad).to_string();
    return v;
  }
  for (Element e = 0; e < s.card(); ++e) {
    if (e != s.zero() && !failure(e)) {
      v.pass = false;
      v.counterexample = {e};
      v.detail = "scalar neutral is not unique: " + std::to_string(e) + " is also neutral";
      return v;
    }
  }
  return v;
}

inline AxiomVerdict check_inverses(const Structure& s) {
  AxiomVerdict v{axiom::inverses};
  for (Element x = 0; x < s.card(); ++x) {
    ElementSet inv;
    for (Element y = 0; y < s.card(); ++y) {
      if (s.f_padded({ElementSet::single(x), ElementSet::single(y)}).contains(s.zero())) inv.insert(y);
    }
    if (inv != ElementSet::single(s.neg(x))) {
      v.pass = false;
      v.counterexample = {x};
      v.detail = "elements y with zero in f(x, y, zero...) are " + inv.to_string() +
                 ", expected exactly {" + std::to_string(s.neg(x)) + "}";
      return v;
    }
  }
  return v;
}

inline AxiomVerdict check_reversible(const Structure& s) {
  AxiomVerdict v{axiom::reversible};
  const std::size_t m = s.m();
  std::vector<Element> args(m);
  for_each_tuple(s.card(), m, [&](std::span<const Element> t) {
    bool ok = true;
    s.f(t).for_each([&](Element x) {
      for (std::size_t i = 0; i < m && ok; ++i) {
        args[0] = x;
        for (std::size_t j = 0, k = 1; j < m; ++j) {
          if (j != i) args[k++] = s.neg(t[j]);
        }
        if (!s.f(args).contains(t[i])) {
          ok = false;
          v.counterexample.assign(t.begin(), t.end());
          v.detail = std::to_string(x) + " in f" + tuple_to_string(t) + " but x_" + std::to_string(i + 1) +
                     " = " + std::to_string(t[i]) + " not in f" + tuple_to_string(args);
        }
      }
    });
    v.pass = ok;
    return ok;
  });
  return v;
}

inline AxiomVerdict check_g_associative(const Structure& s) {
  AxiomVerdict v{axiom::g_associative};
  const std::size_t n = s.n();
  std::vector<Element> args(n);
  auto cut = [&](std::span<const Element> t, std::size_t i) {
    Element inner = s.g(t.subspan(i, n));
    for (std::size_t j = 0; j < i; ++j) args[j] = t[j];
    args[i] = inner;
    for (std::size_t j = i + 1; j < n; ++j) args[j] = t[j + n - 1];
    return s.g(args);
  };
  for_each_tuple(s.card(), 2 * n - 1, [&](std::span<const Element> t) {
    const Element first = cut(t, 0);
    for (std::size_t i = 1; i < n; ++i) {
      const Element other = cut(t, i);
      if (other != first) {
        v.pass = false;
        v.counterexample.assign(t.begin(), t.end());
        v.detail = "inner g at position 1 gives " + std::to_string(first) + ", at position " +
                   std::to_string(i + 1) + " gives " + std::to_string(other);
        return false;
      }
    }
    return true;
  });
  return v;
}

// Layout of a tuple for position i: (a_1..a_{i-1}, x_1..x_m, a_{i+1}..a_n).
inline AxiomVerdict check_distributive(const Structure& s, DistributivityMode mode) {
  AxiomVerdict v{axiom::distributive};
  const std::size_t m = s.m();
  const std::size_t n = s.n();
  std::vector<Element> gargs(n);
  std::vector<ElementSet> fargs(m);
  for (std::size_t i = 0; i < n && v.pass; ++i) {
    for_each_tuple(s.card(), n - 1 + m, [&](std::span<const Element> t) {
      auto x = t.subspan(i, m);
      for (std::size_t j = 0; j < i; ++j) gargs[j] = t[j];
      for (std::size_t j = i + 1; j < n; ++j) gargs[j] = t[j + m - 1];
      ElementSet lhs;
      s.f(x).for_each([&](Element y) {
        gargs[i] = y;
        lhs.insert(s.g(gargs));
      });
      for (std::size_t k = 0; k < m; ++k) {
        gargs[i] = x[k];
        fargs[k] = ElementSet::single(s.g(gargs));
      }
      const ElementSet rhs = s.f_sets(fargs);
      const bool ok = mode == DistributivityMode::strict ? lhs == rhs : rhs.subset_of(lhs);
      if (!ok) {
        v.pass = false;
        v.counterexample.assign(t.begin(), t.end());
        v.detail = "position " + std::to_string(i + 1) + ": g over f" + tuple_to_string(x) + " gives " +
                   lhs.to_string() + ", f over g gives " + rhs.to_string();
        return false;
      }
      return true;
    });
  }
  return v;
}

inline AxiomVerdict check_zero_absorbing(const Structure& s) {
  AxiomVerdict v{axiom::zero_absorbing};
  for_each_tuple(s.card(), s.n(), [&](std::span<const Element> t) {
    if (std::find(t.begin(), t.end(), s.zero()) != t.end() && s.g(t) != s.zero()) {
      v.pass = false;
      v.counterexample.assign(t.begin(), t.end());
      v.detail = "g" + tuple_to_string(t) + " = " + std::to_string(s.g(t));
      return false;
    }
    return true;
  });
  return v;
}

inline AxiomVerdict check_scalar_identity(const Structure& s) {
  AxiomVerdict v{axiom::scalar_identity};
  for (Element x = 0; x < s.card(); ++x) {
    if (s.g_padded({x}) != x) {
      std::vector<Element> t(s.n(), s.one());
      t[0] = x;
      v.pass = false;
      v.counterexample = t;
      v.detail = "g" + tuple_to_string(t) + " = " + std::to_string(s.g(t));
      return v;
    }
  }
  return v;
}

inline AxiomVerdict check_f_commutative(const Structure& s) {
  AxiomVerdict v{axiom::f_commutative};
  for_each_tuple(s.card(), s.m(), [&](std::span<const Element> t) {
    std::vector<Element> sorted(t.begin(), t.end());
    std::sort(sorted.begin(), sorted.end());
    if (s.f(t) != s.f(sorted)) {
      v.pass = false;
      v.counterexample.assign(t.begin(), t.end());
      v.detail = "f" + tuple_to_string(t) + " = " + s.f(t).to_string() + " but f" + tuple_to_string(sorted) +
                 " = " + s.f(sorted).to_string();
      return false;
    }
    return true;
  });
  return v;
}

inline AxiomVerdict check_g_commutative(const Structure& s) {
  AxiomVerdict v{axiom::g_commutative};
  for_each_tuple(s.card(), s.n(), [&](std::span<const Element> t) {
    std::vector<Element> sorted(t.begin(), t.end());
    std::sort(sorted.begin(), sorted.end());
    if (s.g(t) != s.g(sorted)) {
      v.pass = false;
      v.counterexample.assign(t.begin(), t.end());
      v.detail = "g" + tuple_to_string(t) + " = " + std::to_string(s.g(t)) + " but g" +
                 tuple_to_string(sorted) + " = " + std::to_string(s.g(sorted));
      return false;
    }
    return true;
  });
  return v;
}

}  // namespace detail

inline ValidationReport validate_structure(const Structure& s,
                                           DistributivityMode mode = DistributivityMode::strict) {
  ValidationReport r;
  r.structure = s.name();
  r.arity = s.arity();
  r.card = s.card();
  r.mode = mode;
  r.verdicts.push_back(detail::check_f_associative(s));
  r.verdicts.push_back(detail::check_f_reproducible(s));
  r.verdicts.push_back(detail::check_scalar_neutral(s));
  r.verdicts.push_back(detail::check_inverses(s));
  r.verdicts.push_back(detail::check_reversible(s));
  r.verdicts.push_back(detail::check_g_associative(s));
  r.verdicts.push_back(detail::check_distributive(s, mode));
  r.verdicts.push_back(detail::check_zero_absorbing(s));
  r.verdicts.push_back(detail::check_scalar_identity(s));
  if (s.commutative()) {
    r.verdicts.push_back(detail::check_f_commutative(s));
    r.verdicts.push_back(detail::check_g_commutative(s));
  }
  return r;
}

}  // namespace khr
