#pragma once

// A finite Krasner (m,n)-hyperring stored as explicit operation tables.
//
// Tuples are indexed in mixed radix with the first argument most significant,
// so table order is lexicographic tuple order.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "khr/element_set.hpp"
#include "khr/errors.hpp"

namespace khr {

// m: arity of the hyperaddition f; n: arity of the multiplication g.
struct Arity {
  std::size_t m = 2;
  std::size_t n = 2;
  friend bool operator==(const Arity&, const Arity&) = default;
};

inline constexpr std::size_t kMaxTableEntries = std::size_t{1} << 24;

inline std::size_t checked_power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > kMaxTableEntries / base) {
      throw format_error("operation table exceeds " + std::to_string(kMaxTableEntries) + " entries");
    }
    out *= base;
  }
  return out;
}

class Structure {
 public:
  Structure() = default;

  // Tables must be total: card^m nonempty f entries, card^n g entries in
  // range. An empty `neg` is derived from f (least y with zero in
  // f(x, y, zero...)); validation then decides whether it is a true inverse.
  Structure(std::string name, Arity arity, std::size_t card, Element zero, Element one,
            bool commutative, std::vector<ElementSet> f, std::vector<Element> g,
            std::vector<Element> neg = {})
      : name_(std::move(name)),
        arity_(arity),
        card_(card),
        zero_(zero),
        one_(one),
        commutative_(commutative),
        f_(std::move(f)),
        g_(std::move(g)),
        neg_(std::move(neg)) {
    if (arity_.m < 2 || arity_.n < 2) throw format_error("arities must satisfy m >= 2 and n >= 2");
    if (card_ == 0 || card_ > kMaxCard) {
      throw format_error("carrier size must lie in [1, " + std::to_string(kMaxCard) + "]");
    }
    if (zero_ >= card_ || one_ >= card_) throw format_error("zero/one out of range");
    if (f_.size() != checked_power(card_, arity_.m)) throw format_error("f table is not total");
    if (g_.size() != checked_power(card_, arity_.n)) throw format_error("g table is not total");
    const ElementSet carrier = ElementSet::full(card_);
    for (std::size_t i = 0; i < f_.size(); ++i) {
      if (f_[i].empty()) throw format_error("f entry " + std::to_string(i) + " is empty");
      if (!f_[i].subset_of(carrier)) throw format_error("f entry " + std::to_string(i) + " out of range");
    }
    for (std::size_t i = 0; i < g_.size(); ++i) {
      if (g_[i] >= card_) throw format_error("g entry " + std::to_string(i) + " out of range");
    }
    if (neg_.empty()) {
      neg_.resize(card_);
      for (Element x = 0; x < card_; ++x) {
        neg_[x] = x;
        for (Element y = 0; y < card_; ++y) {
          if (f_padded({ElementSet::single(x), ElementSet::single(y)}).contains(zero_)) {
            neg_[x] = y;
            break;
          }
        }
      }
    } else if (neg_.size() != card_) {
      throw format_error("neg table is not total");
    } else {
      for (Element y : neg_) {
        if (y >= card_) throw format_error("neg entry out of range");
      }
    }
  }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  Arity arity() const { return arity_; }
  std::size_t m() const { return arity_.m; }
  std::size_t n() const { return arity_.n; }
  std::size_t card() const { return card_; }
  Element zero() const { return zero_; }
  Element one() const { return one_; }
  bool commutative() const { return commutative_; }
  ElementSet carrier() const { return ElementSet::full(card_); }
  Element neg(Element x) const { return neg_.at(x); }
  const std::vector<Element>& neg_table() const { return neg_; }
  const std::vector<ElementSet>& f_table() const { return f_; }
  const std::vector<Element>& g_table() const { return g_; }

  std::size_t tuple_index(std::span<const Element> t) const {
    std::size_t idx = 0;
    for (Element x : t) {
      if (x >= card_) {
        throw usage_error("element " + std::to_string(x) + " out of range for carrier of size " +
                          std::to_string(card_));
      }
      idx = idx * card_ + x;
    }
    return idx;
  }

  // eval_f
  ElementSet f(std::span<const Element> t) const {
    if (t.size() != arity_.m) throw usage_error("f expects " + std::to_string(arity_.m) + " arguments");
    return f_[tuple_index(t)];
  }
  ElementSet f(std::initializer_list<Element> t) const { return f(std::span(t.begin(), t.size())); }

  // eval_g
  Element g(std::span<const Element> t) const {
    if (t.size() != arity_.n) throw usage_error("g expects " + std::to_string(arity_.n) + " arguments");
    return g_[tuple_index(t)];
  }
  Element g(std::initializer_list<Element> t) const { return g(std::span(t.begin(), t.size())); }

  // eval_f_subsets: union of f over the Cartesian product of the argument sets.
  ElementSet f_sets(std::span<const ElementSet> args) const {
    if (args.size() != arity_.m) throw usage_error("f expects " + std::to_string(arity_.m) + " arguments");
    for (ElementSet a : args) {
      if (a.empty()) throw usage_error("f applied to an empty set");
      if (!a.subset_of(carrier())) throw usage_error("argument set out of range");
    }
    ElementSet out;
    f_union(args, 0, 0, out);
    return out;
  }
  ElementSet f_sets(std::initializer_list<ElementSet> args) const {
    return f_sets(std::span(args.begin(), args.size()));
  }

  // g applied elementwise to set arguments.
  ElementSet g_sets(std::span<const ElementSet> args) const {
    if (args.size() != arity_.n) throw usage_error("g expects " + std::to_string(arity_.n) + " arguments");
    for (ElementSet a : args) {
      if (a.empty()) throw usage_error("g applied to an empty set");
    }
    ElementSet out;
    g_union(args, 0, 0, out);
    return out;
  }

  // f(args..., zero, ..., zero): trailing positions padded with the zero.
  ElementSet f_padded(std::span<const ElementSet> args) const {
    if (args.size() > arity_.m) throw usage_error("too many arguments for f");
    std::vector<ElementSet> full(args.begin(), args.end());
    full.resize(arity_.m, ElementSet::single(zero_));
    return f_sets(full);
  }
  ElementSet f_padded(std::initializer_list<ElementSet> args) const {
    return f_padded(std::span(args.begin(), args.size()));
  }

  // g(args..., one, ..., one): trailing positions padded with the identity.
  Element g_padded(std::span<const Element> args) const {
    if (args.size() > arity_.n) throw usage_error("too many arguments for g");
    std::vector<Element> full(args.begin(), args.end());
    full.resize(arity_.n, one_);
    return g(full);
  }
  Element g_padded(std::initializer_list<Element> args) const {
    return g_padded(std::span(args.begin(), args.size()));
  }

  // g_(l): left-nested fold over l(n-1)+1 arguments.
  Element g_iterated(std::size_t l, std::span<const Element> t) const {
    if (l == 0 || t.size() != l * (arity_.n - 1) + 1) {
      throw usage_error("iterated g expects l(n-1)+1 arguments with l >= 1");
    }
    std::vector<Element> args(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(arity_.n));
    Element acc = g(args);
    for (std::size_t pos = arity_.n; pos < t.size(); pos += arity_.n - 1) {
      args[0] = acc;
      for (std::size_t j = 1; j < arity_.n; ++j) args[j] = t[pos + j - 1];
      acc = g(args);
    }
    return acc;
  }

  // f_(l): left-nested fold over l(m-1)+1 set arguments.
  ElementSet f_iterated(std::size_t l, std::span<const ElementSet> t) const {
    if (l == 0 || t.size() != l * (arity_.m - 1) + 1) {
      throw usage_error("iterated f expects l(m-1)+1 arguments with l >= 1");
    }
    std::vector<ElementSet> args(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(arity_.m));
    ElementSet acc = f_sets(args);
    for (std::size_t pos = arity_.m; pos < t.size(); pos += arity_.m - 1) {
      args[0] = acc;
      for (std::size_t j = 1; j < arity_.m; ++j) args[j] = t[pos + j - 1];
      acc = f_sets(args);
    }
    return acc;
  }

 private:
  void f_union(std::span<const ElementSet> args, std::size_t pos, std::size_t idx, ElementSet& out) const {
    if (pos == args.size()) {
      out |= f_[idx];
      return;
    }
    args[pos].for_each([&](Element x) { f_union(args, pos + 1, idx * card_ + x, out); });
  }
  void g_union(std::span<const ElementSet> args, std::size_t pos, std::size_t idx, ElementSet& out) const {
    if (pos == args.size()) {
      out.insert(g_[idx]);
      return;
    }
    args[pos].for_each([&](Element x) { g_union(args, pos + 1, idx * card_ + x, out); });
  }

  std::string name_;
  Arity arity_;
  std::size_t card_ = 0;
  Element zero_ = 0;
  Element one_ = 0;
  bool commutative_ = false;
  std::vector<ElementSet> f_;
  std::vector<Element> g_;
  std::vector<Element> neg_;
};

// Builds a structure by calling `add(tuple) -> ElementSet` and `mul(tuple) ->
// Element` on every tuple.
template <typename Add, typename Mul>
Structure tabulate(std::string name, Arity arity, std::size_t card, Element zero, Element one,
                   bool commutative, Add&& add, Mul&& mul) {
  std::vector<ElementSet> f;
  f.reserve(checked_power(card, arity.m));
  for_each_tuple(card, arity.m, [&](std::span<const Element> t) {
    f.push_back(add(t));
    return true;
  });
  std::vector<Element> g;
  g.reserve(checked_power(card, arity.n));
  for_each_tuple(card, arity.n, [&](std::span<const Element> t) {
    g.push_back(mul(t));
    return true;
  });
  return Structure(std::move(name), arity, card, zero, one, commutative, std::move(f), std::move(g));
}

}  // namespace khr
