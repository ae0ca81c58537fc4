#pragma once

// Dense carrier elements and fixed-width element sets.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace khr {

using Element = std::uint32_t;

// Element sets are 64-bit masks, so carriers hold at most this many elements.
inline constexpr std::size_t kMaxCard = 64;

class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet single(Element x) {
    return ElementSet(std::uint64_t{1} << x);
  }
  static constexpr ElementSet full(std::size_t card) {
    return ElementSet(card >= 64 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << card) - 1);
  }
  static ElementSet of(std::initializer_list<Element> xs) {
    ElementSet s;
    for (Element x : xs) s.insert(x);
    return s;
  }
  static ElementSet of(std::span<const Element> xs) {
    ElementSet s;
    for (Element x : xs) s.insert(x);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return std::popcount(bits_); }
  constexpr bool contains(Element x) const { return (bits_ >> x) & 1U; }
  constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(ElementSet o) const { return (bits_ & o.bits_) != 0; }

  // Least member; undefined on the empty set.
  constexpr Element min() const { return static_cast<Element>(std::countr_zero(bits_)); }

  constexpr void insert(Element x) { bits_ |= std::uint64_t{1} << x; }
  constexpr void erase(Element x) { bits_ &= ~(std::uint64_t{1} << x); }

  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  // Set difference.
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  // Ascending bitmask order.
  friend constexpr auto operator<=>(ElementSet a, ElementSet b) { return a.bits_ <=> b.bits_; }

  template <typename Fn>
  constexpr void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      fn(static_cast<Element>(std::countr_zero(b)));
    }
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for_each([&](Element x) { out.push_back(x); });
    return out;
  }

  // "{0,2,4}"
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](Element x) {
      if (!first) out += ',';
      out += std::to_string(x);
      first = false;
    });
    out += '}';
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

// "(0,1,2)"
inline std::string tuple_to_string(std::span<const Element> xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(xs[i]);
  }
  out += ')';
  return out;
}

// Visits every tuple in [0, card)^arity in lexicographic order. The visitor
// returns false to stop early; the function returns false iff it was stopped.
template <typename Fn>
bool for_each_tuple(std::size_t card, std::size_t arity, Fn&& fn) {
  std::vector<Element> t(arity, 0);
  if (card == 0) return true;
  while (true) {
    if (!fn(std::span<const Element>(t))) return false;
    std::size_t i = arity;
    while (i > 0) {
      --i;
      if (++t[i] < card) break;
      t[i] = 0;
      if (i == 0) return true;
    }
    if (arity == 0) return true;
  }
}

// Visits the Cartesian product of the given choice lists, lexicographically by
// position in each list. Empty choice lists yield no tuples.
template <typename Fn>
bool for_each_product(std::span<const std::vector<Element>> choices, Fn&& fn) {
  const std::size_t arity = choices.size();
  for (const auto& c : choices) {
    if (c.empty()) return true;
  }
  std::vector<std::size_t> pos(arity, 0);
  std::vector<Element> t(arity);
  for (std::size_t i = 0; i < arity; ++i) t[i] = choices[i][0];
  while (true) {
    if (!fn(std::span<const Element>(t))) return false;
    std::size_t i = arity;
    while (true) {
      if (i == 0) return true;
      --i;
      if (++pos[i] < choices[i].size()) {
        t[i] = choices[i][pos[i]];
        break;
      }
      pos[i] = 0;
      t[i] = choices[i][0];
    }
  }
}

}  // namespace khr
