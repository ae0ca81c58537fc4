#pragma once

// Maps between structures: the homomorphism predicate and exhaustive
// homomorphism / isomorphism search.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "khr/element_set.hpp"
#include "khr/errors.hpp"
#include "khr/structure.hpp"

namespace khr {

struct MapTable {
  std::string source;
  std::string target;
  std::vector<Element> image;

  Element operator()(Element x) const { return image.at(x); }
  std::size_t size() const { return image.size(); }

  ElementSet apply(ElementSet a) const {
    ElementSet out;
    a.for_each([&](Element x) { out.insert(image.at(x)); });
    return out;
  }

  // One `map <src> -> <dst>` line per source element.
  std::string render() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < image.size(); ++i) out << "map " << i << " -> " << image[i] << '\n';
    return out.str();
  }

  friend bool operator==(const MapTable& a, const MapTable& b) { return a.image == b.image; }
};

inline MapTable identity_map(const Structure& s) {
  MapTable k{s.name(), s.name(), std::vector<Element>(s.card())};
  for (Element x = 0; x < s.card(); ++x) k.image[x] = x;
  return k;
}

struct HomomorphismOptions {
  // Require k(zero) = zero and k(one) = one.
  bool preserve_units = true;
};

// Reason `k` fails to be a homomorphism A -> B, or nullopt when it is one.
inline std::optional<std::string> homomorphism_defect(const Structure& a, const Structure& b, const MapTable& k,
                                                      HomomorphismOptions opts = {}) {
  if (a.arity() != b.arity()) throw usage_error("homomorphism between structures of different arity");
  if (k.size() != a.card()) throw usage_error("map is not total on the source carrier");
  for (Element y : k.image) {
    if (y >= b.card()) throw usage_error("map image out of target range");
  }
  if (opts.preserve_units) {
    if (k(a.zero()) != b.zero()) return "zero maps to " + std::to_string(k(a.zero()));
    if (k(a.one()) != b.one()) return "one maps to " + std::to_string(k(a.one()));
  }
  std::optional<std::string> defect;
  std::vector<Element> img(a.m());
  for_each_tuple(a.card(), a.m(), [&](std::span<const Element> t) {
    for (std::size_t i = 0; i < t.size(); ++i) img[i] = k(t[i]);
    const ElementSet lhs = k.apply(a.f(t));
    const ElementSet rhs = b.f(img);
    if (lhs != rhs) {
      defect = "f at " + tuple_to_string(t) + ": image " + lhs.to_string() + " vs " + rhs.to_string();
      return false;
    }
    return true;
  });
  if (defect) return defect;
  img.resize(a.n());
  for_each_tuple(a.card(), a.n(), [&](std::span<const Element> t) {
    for (std::size_t i = 0; i < t.size(); ++i) img[i] = k(t[i]);
    const Element lhs = k(a.g(t));
    const Element rhs = b.g(img);
    if (lhs != rhs) {
      defect = "g at " + tuple_to_string(t) + ": image " + std::to_string(lhs) + " vs " + std::to_string(rhs);
      return false;
    }
    return true;
  });
  return defect;
}

inline bool is_homomorphism(const Structure& a, const Structure& b, const MapTable& k,
                            HomomorphismOptions opts = {}) {
  return !homomorphism_defect(a, b, k, opts);
}

namespace detail {

// Backtracking over images in index order. Equations are checked as soon as
// every element they mention is assigned; leaves get a full check.
class MapSearch {
 public:
  MapSearch(const Structure& a, const Structure& b, HomomorphismOptions opts, bool bijective)
      : a_(a), b_(b), opts_(opts), bijective_(bijective), image_(a.card(), kUnset) {}

  // Visitor returns false to stop.
  void run(const std::function<bool(const MapTable&)>& visit) {
    visit_ = &visit;
    stopped_ = false;
    extend(0);
  }

 private:
  static constexpr Element kUnset = ~Element{0};

  bool consistent(Element x) const {
    const ElementSet known = ElementSet::full(x + 1);
    bool ok = true;
    std::vector<Element> img;
    auto check_f = [&](std::span<const Element> t) {
      if (std::find(t.begin(), t.end(), x) == t.end()) return true;
      const ElementSet res = a_.f(t);
      if (!res.subset_of(known)) return true;
      img.resize(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) img[i] = image_[t[i]];
      ElementSet lhs;
      res.for_each([&](Element y) { lhs.insert(image_[y]); });
      ok = lhs == b_.f(img);
      return ok;
    };
    for_each_tuple(x + 1, a_.m(), check_f);
    if (!ok) return false;
    auto check_g = [&](std::span<const Element> t) {
      if (std::find(t.begin(), t.end(), x) == t.end()) return true;
      const Element res = a_.g(t);
      if (res > x) return true;
      img.resize(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) img[i] = image_[t[i]];
      ok = image_[res] == b_.g(img);
      return ok;
    };
    for_each_tuple(x + 1, a_.n(), check_g);
    return ok;
  }

  void extend(Element x) {
    if (stopped_) return;
    if (x == a_.card()) {
      MapTable k{a_.name(), b_.name(), image_};
      if (homomorphism_defect(a_, b_, k, opts_)) return;
      if (bijective_) {
        MapTable inverse{b_.name(), a_.name(), std::vector<Element>(b_.card())};
        for (Element i = 0; i < a_.card(); ++i) inverse.image[image_[i]] = i;
        if (homomorphism_defect(b_, a_, inverse, opts_)) return;
      }
      if (!(*visit_)(k)) stopped_ = true;
      return;
    }
    std::vector<Element> candidates;
    if (opts_.preserve_units && x == a_.zero()) {
      candidates = {b_.zero()};
    } else if (opts_.preserve_units && x == a_.one()) {
      candidates = {b_.one()};
    } else if (opts_.preserve_units && a_.neg(x) < x) {
      candidates = {b_.neg(image_[a_.neg(x)])};
    } else {
      for (Element y = 0; y < b_.card(); ++y) candidates.push_back(y);
    }
    for (Element y : candidates) {
      if (bijective_ && used_.contains(y)) continue;
      image_[x] = y;
      used_.insert(y);
      if (consistent(x)) extend(x + 1);
      used_.erase(y);
      image_[x] = kUnset;
      if (stopped_) return;
    }
  }

  const Structure& a_;
  const Structure& b_;
  HomomorphismOptions opts_;
  bool bijective_;
  std::vector<Element> image_;
  ElementSet used_;
  const std::function<bool(const MapTable&)>* visit_ = nullptr;
  bool stopped_ = false;
};

}  // namespace detail

inline constexpr double kDefaultSearchCap = 1e8;

// All homomorphisms A -> B, lexicographic by image vector. Refuses when the
// raw search space card(B)^card(A) exceeds `cap`.
inline std::vector<MapTable> enumerate_homomorphisms(const Structure& a, const Structure& b,
                                                     HomomorphismOptions opts = {},
                                                     double cap = kDefaultSearchCap) {
  if (a.arity() != b.arity()) throw usage_error("homomorphism search between structures of different arity");
  const double space = std::pow(static_cast<double>(b.card()), static_cast<double>(a.card()));
  if (space > cap) {
    std::ostringstream msg;
    msg << "homomorphism search space " << b.card() << "^" << a.card() << " exceeds cap " << cap
        << "; raise the search cap to at least " << space;
    throw usage_error(msg.str());
  }
  std::vector<MapTable> out;
  detail::MapSearch search(a, b, opts, false);
  search.run([&](const MapTable& k) {
    out.push_back(k);
    return true;
  });
  return out;
}

// Lexicographically least bijective homomorphism whose inverse is also a
// homomorphism.
inline std::optional<MapTable> find_isomorphism(const Structure& a, const Structure& b,
                                                HomomorphismOptions opts = {}) {
  if (a.arity() != b.arity()) throw usage_error("isomorphism search between structures of different arity");
  if (a.card() != b.card()) return std::nullopt;
  std::optional<MapTable> found;
  detail::MapSearch search(a, b, opts, true);
  search.run([&](const MapTable& k) {
    found = k;
    return false;
  });
  return found;
}

}  // namespace khr
