#pragma once

// The `khr 1` text format:
//
//   khr 1
//   name <token>
//   m <int>  n <int>  card <int>
//   zero <idx>  one <idx>
//   flags commutative
//   f <i1> ... <im> : <j1> [<j2> ...]
//   g <i1> ... <in> : <j>
//
// `#` starts a comment, `*` matches any argument and yields to specific
// entries. Optional `neg i : j`, `class id : r/s ...` and `coset id : e ...`
// lines carry negation tables and the sidecar maps of derived structures.
// A file may instead hold a single generator directive such as `ring Z 6`.

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "khr/fractions.hpp"
#include "khr/generators.hpp"
#include "khr/quotients.hpp"
#include "khr/structure.hpp"

namespace khr {

struct StructureFile {
  Structure structure;
  std::vector<std::vector<FractionPair>> classes;  // sidecar class map, by id
  std::vector<ElementSet> cosets;                  // sidecar coset map, by id
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline std::optional<std::size_t> to_uint(std::string_view tok) {
  std::size_t v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end || tok.empty()) return std::nullopt;
  return v;
}

inline std::size_t expect_uint(std::size_t line, std::string_view tok, std::string_view what) {
  auto v = to_uint(tok);
  if (!v) throw format_error(line, "expected integer for " + std::string(what) + ", got '" + std::string(tok) + "'");
  return *v;
}

// Parses `[m M] [n N]` starting at tokens[i].
inline Arity parse_arity_options(std::size_t line, const std::vector<std::string>& tok, std::size_t i) {
  Arity a;
  for (; i < tok.size(); i += 2) {
    if (i + 1 >= tok.size()) throw format_error(line, "missing value after '" + tok[i] + "'");
    if (tok[i] == "m") {
      a.m = expect_uint(line, tok[i + 1], "m");
    } else if (tok[i] == "n") {
      a.n = expect_uint(line, tok[i + 1], "n");
    } else {
      throw format_error(line, "unknown generator option '" + tok[i] + "'");
    }
  }
  if (a.m < 2 || a.n < 2) throw format_error(line, "arities must satisfy m >= 2 and n >= 2");
  return a;
}

inline Structure run_generator(std::size_t line, const std::vector<std::string>& tok) {
  try {
    if (tok.size() >= 3 && tok[0] == "ring" && tok[1] == "Z") {
      const std::size_t k = expect_uint(line, tok[2], "modulus");
      if (tok.size() == 6 && tok[3] == "x" && tok[4] == "Z") {
        return direct_product(ring_embedding(k), ring_embedding(expect_uint(line, tok[5], "modulus")));
      }
      return ring_embedding(k, parse_arity_options(line, tok, 3));
    }
    if (tok.size() >= 2 && tok[0] == "hyperfield") {
      if (tok[1] == "krasner") return krasner_hyperfield(parse_arity_options(line, tok, 2));
      if (tok[1] == "sign") return sign_hyperfield(parse_arity_options(line, tok, 2));
      if (tok[1] == "Z" && tok.size() >= 5 && tok[3] == "/") {
        return quotient_hyperfield(expect_uint(line, tok[2], "modulus"), expect_uint(line, tok[4], "generator"),
                                   parse_arity_options(line, tok, 5));
      }
    }
  } catch (const usage_error& e) {
    throw format_error(line, e.what());
  }
  std::string joined;
  for (const auto& t : tok) joined += (joined.empty() ? "" : " ") + t;
  throw format_error(line, "unknown generator directive '" + joined + "'");
}

inline bool is_generator_line(const std::vector<std::string>& tok) {
  return !tok.empty() && (tok[0] == "ring" || tok[0] == "hyperfield");
}

struct RawEntry {
  std::size_t line;
  std::vector<std::optional<Element>> args;  // nullopt is '*'
  std::vector<Element> values;
};

// Fills `table` (indexed like Structure's tables) from the entries: specific
// entries and their permutations first, then wildcards over the gaps.
template <typename Value, typename MakeValue>
std::vector<std::optional<Value>> expand_entries(const std::vector<RawEntry>& entries, std::size_t card,
                                                 std::size_t arity, bool commutative, const char* op,
                                                 MakeValue make) {
  std::vector<std::optional<Value>> table(checked_power(card, arity));
  std::vector<std::size_t> origin(table.size(), 0);
  auto index = [&](std::span<const Element> t) {
    std::size_t idx = 0;
    for (Element x : t) idx = idx * card + x;
    return idx;
  };
  auto place = [&](std::span<const Element> t, const Value& v, std::size_t line) {
    const std::size_t idx = index(t);
    if (table[idx] && !(*table[idx] == v)) {
      throw format_error(line, std::string("conflicting ") + op + " entries for " + tuple_to_string(t) +
                                   " (first given on line " + std::to_string(origin[idx]) + ")");
    }
    if (!table[idx]) origin[idx] = line;
    table[idx] = v;
  };

  std::vector<Element> t;
  for (const auto& e : entries) {
    if (std::any_of(e.args.begin(), e.args.end(), [](const auto& a) { return !a; })) continue;
    t.clear();
    for (const auto& a : e.args) t.push_back(*a);
    const Value v = make(e);
    if (commutative) {
      std::sort(t.begin(), t.end());
      do {
        place(t, v, e.line);
      } while (std::next_permutation(t.begin(), t.end()));
    } else {
      place(t, v, e.line);
    }
  }

  std::vector<bool> specific(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) specific[i] = table[i].has_value();
  std::vector<Element> perm;
  for (const auto& e : entries) {
    if (std::all_of(e.args.begin(), e.args.end(), [](const auto& a) { return a.has_value(); })) continue;
    const Value v = make(e);
    auto matches = [&](std::span<const Element> tuple) {
      for (std::size_t i = 0; i < arity; ++i) {
        if (e.args[i] && *e.args[i] != tuple[i]) return false;
      }
      return true;
    };
    for_each_tuple(card, arity, [&](std::span<const Element> tuple) {
      const std::size_t idx = index(tuple);
      if (specific[idx]) return true;
      bool hit = matches(tuple);
      if (!hit && commutative) {
        perm.assign(tuple.begin(), tuple.end());
        std::sort(perm.begin(), perm.end());
        do {
          hit = matches(perm);
        } while (!hit && std::next_permutation(perm.begin(), perm.end()));
      }
      if (hit) place(tuple, v, e.line);
      return true;
    });
  }
  return table;
}

}  // namespace detail

inline StructureFile parse_structure_file(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
  {
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::string_view line = text.substr(start, end - start);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      auto tok = detail::split_ws(line);
      if (!tok.empty()) lines.emplace_back(number, std::move(tok));
      start = end + 1;
    }
  }
  if (lines.empty()) throw format_error(1, "empty input");

  StructureFile out;
  if (detail::is_generator_line(lines.front().second)) {
    if (lines.size() > 1) throw format_error(lines[1].first, "unexpected content after generator directive");
    out.structure = detail::run_generator(lines.front().first, lines.front().second);
    return out;
  }

  const auto& magic = lines.front();
  if (magic.second.size() != 2 || magic.second[0] != "khr") throw format_error(magic.first, "bad magic, expected 'khr 1'");
  if (magic.second[1] != "1") throw format_error(magic.first, "unsupported version '" + magic.second[1] + "'");

  std::string name = "unnamed";
  std::optional<std::size_t> m, n, card, zero, one;
  bool commutative = false;
  std::vector<detail::RawEntry> f_entries, g_entries;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> neg_lines, class_lines, coset_lines;

  auto header_done = [&](std::size_t line) {
    if (!m || !n || !card || !zero || !one) throw format_error(line, "table entry before the header is complete");
  };

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& [line, tok] = lines[li];
    const std::string& key = tok[0];
    if (key == "f" || key == "g") {
      header_done(line);
      const std::size_t arity = key == "f" ? *m : *n;
      auto colon = std::find(tok.begin(), tok.end(), ":");
      if (colon == tok.end()) throw format_error(line, "missing ':' in " + key + " entry");
      const auto nargs = static_cast<std::size_t>(colon - tok.begin() - 1);
      if (nargs != arity) {
        throw format_error(line, key + " entry has " + std::to_string(nargs) + " arguments, expected " +
                                     std::to_string(arity));
      }
      detail::RawEntry e{line, {}, {}};
      for (auto it = tok.begin() + 1; it != colon; ++it) {
        if (*it == "*") {
          e.args.emplace_back();
          continue;
        }
        const std::size_t x = detail::expect_uint(line, *it, "element");
        if (x >= *card) throw format_error(line, "element " + *it + " out of range");
        e.args.emplace_back(static_cast<Element>(x));
      }
      for (auto it = colon + 1; it != tok.end(); ++it) {
        const std::size_t x = detail::expect_uint(line, *it, "element");
        if (x >= *card) throw format_error(line, "element " + *it + " out of range");
        e.values.push_back(static_cast<Element>(x));
      }
      if (e.values.empty()) throw format_error(line, key + " entry has no value");
      if (key == "g" && e.values.size() != 1) throw format_error(line, "g entry must have exactly one value");
      (key == "f" ? f_entries : g_entries).push_back(std::move(e));
    } else if (key == "neg") {
      header_done(line);
      neg_lines.push_back(lines[li]);
    } else if (key == "class") {
      class_lines.push_back(lines[li]);
    } else if (key == "coset") {
      coset_lines.push_back(lines[li]);
    } else if (key == "name") {
      if (tok.size() != 2) throw format_error(line, "name takes one token");
      name = tok[1];
    } else if (key == "flags") {
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (tok[i] != "commutative") throw format_error(line, "unknown flag '" + tok[i] + "'");
        commutative = true;
      }
    } else if (key == "m" || key == "n" || key == "card" || key == "zero" || key == "one") {
      if (tok.size() % 2 != 0) throw format_error(line, "header keys take one value each");
      for (std::size_t i = 0; i < tok.size(); i += 2) {
        const std::string& k = tok[i];
        const std::size_t v = detail::expect_uint(line, tok[i + 1], k);
        std::optional<std::size_t>* slot = k == "m"      ? &m
                                           : k == "n"    ? &n
                                           : k == "card" ? &card
                                           : k == "zero" ? &zero
                                           : k == "one"  ? &one
                                                         : nullptr;
        if (!slot) throw format_error(line, "unknown header key '" + k + "'");
        if (*slot && **slot != v) throw format_error(line, "conflicting value for '" + k + "'");
        *slot = v;
      }
      if (m && *m < 2) throw format_error(line, "m must be at least 2");
      if (n && *n < 2) throw format_error(line, "n must be at least 2");
      if (card && (*card == 0 || *card > kMaxCard)) {
        throw format_error(line, "card must lie in [1, " + std::to_string(kMaxCard) + "]");
      }
      if (card && zero && *zero >= *card) throw format_error(line, "zero out of range");
      if (card && one && *one >= *card) throw format_error(line, "one out of range");
    } else {
      throw format_error(line, "unknown directive '" + key + "'");
    }
  }
  const std::size_t last = lines.back().first;
  header_done(last);

  auto f_table = detail::expand_entries<ElementSet>(f_entries, *card, *m, commutative, "f",
                                                    [](const detail::RawEntry& e) { return ElementSet::of(e.values); });
  auto g_table = detail::expand_entries<Element>(g_entries, *card, *n, commutative, "g",
                                                 [](const detail::RawEntry& e) { return e.values.front(); });
  auto first_missing = [&](const auto& table, std::size_t arity, const char* op) {
    for_each_tuple(*card, arity, [&](std::span<const Element> t) {
      std::size_t idx = 0;
      for (Element x : t) idx = idx * *card + x;
      if (!table[idx]) throw format_error(last, std::string("missing ") + op + " entry for " + tuple_to_string(t));
      return true;
    });
  };
  first_missing(f_table, *m, "f");
  first_missing(g_table, *n, "g");

  std::vector<ElementSet> f;
  f.reserve(f_table.size());
  for (auto& v : f_table) f.push_back(*v);
  std::vector<Element> g;
  g.reserve(g_table.size());
  for (auto& v : g_table) g.push_back(*v);

  std::vector<Element> neg;
  if (!neg_lines.empty()) {
    std::vector<std::optional<Element>> raw(*card);
    for (const auto& [line, tok] : neg_lines) {
      if (tok.size() != 4 || tok[2] != ":") throw format_error(line, "neg entry must read 'neg <i> : <j>'");
      const std::size_t x = detail::expect_uint(line, tok[1], "element");
      const std::size_t y = detail::expect_uint(line, tok[3], "element");
      if (x >= *card || y >= *card) throw format_error(line, "neg entry out of range");
      if (raw[x] && *raw[x] != y) throw format_error(line, "conflicting neg entries for " + tok[1]);
      raw[x] = static_cast<Element>(y);
    }
    for (Element x = 0; x < *card; ++x) {
      if (!raw[x]) throw format_error(last, "missing neg entry for " + std::to_string(x));
      neg.push_back(*raw[x]);
    }
  }

  try {
    out.structure = Structure(name, Arity{*m, *n}, *card, static_cast<Element>(*zero), static_cast<Element>(*one),
                              commutative, std::move(f), std::move(g), std::move(neg));
  } catch (const format_error& e) {
    throw format_error(last, e.what());
  }

  auto sidecar_id = [](std::size_t line, const std::vector<std::string>& tok, std::size_t expected) {
    if (tok.size() < 3 || tok[2] != ":") throw format_error(line, tok[0] + " entry must read '" + tok[0] + " <id> : ...'");
    const std::size_t id = detail::expect_uint(line, tok[1], "id");
    if (id != expected) throw format_error(line, tok[0] + " ids must be consecutive from 0");
  };
  for (const auto& [line, tok] : class_lines) {
    sidecar_id(line, tok, out.classes.size());
    std::vector<FractionPair> members;
    for (std::size_t i = 3; i < tok.size(); ++i) {
      const auto slash = tok[i].find('/');
      if (slash == std::string::npos) throw format_error(line, "fraction '" + tok[i] + "' lacks '/'");
      members.push_back({static_cast<Element>(detail::expect_uint(line, tok[i].substr(0, slash), "numerator")),
                         static_cast<Element>(detail::expect_uint(line, tok[i].substr(slash + 1), "denominator"))});
    }
    out.classes.push_back(std::move(members));
  }
  for (const auto& [line, tok] : coset_lines) {
    sidecar_id(line, tok, out.cosets.size());
    ElementSet members;
    for (std::size_t i = 3; i < tok.size(); ++i) {
      members.insert(static_cast<Element>(detail::expect_uint(line, tok[i], "element")));
    }
    out.cosets.push_back(members);
  }
  return out;
}

inline Structure parse_structure(std::string_view text) { return parse_structure_file(text).structure; }

// Canonical text: header, then f and g entries in lexicographic tuple order
// (sorted tuples only when commutative).
inline std::string serialize(const Structure& s) {
  std::ostringstream out;
  out << "khr 1\n";
  out << "name " << s.name() << '\n';
  out << "m " << s.m() << " n " << s.n() << " card " << s.card() << '\n';
  out << "zero " << s.zero() << " one " << s.one() << '\n';
  if (s.commutative()) out << "flags commutative\n";
  auto keep = [&](std::span<const Element> t) { return !s.commutative() || std::is_sorted(t.begin(), t.end()); };
  for_each_tuple(s.card(), s.m(), [&](std::span<const Element> t) {
    if (!keep(t)) return true;
    out << 'f';
    for (Element x : t) out << ' ' << x;
    out << " :";
    s.f(t).for_each([&](Element y) { out << ' ' << y; });
    out << '\n';
    return true;
  });
  for_each_tuple(s.card(), s.n(), [&](std::span<const Element> t) {
    if (!keep(t)) return true;
    out << 'g';
    for (Element x : t) out << ' ' << x;
    out << " : " << s.g(t) << '\n';
    return true;
  });
  return out.str();
}

inline std::string serialize(const Localization& loc) {
  return serialize(loc.ring()) + "# classes of " + loc.base().name() + " at " + loc.subset().to_string() + "\n" +
         loc.render_class_map();
}

inline std::string serialize(const Quotient& q) {
  return serialize(q.ring()) + "# cosets of " + q.ideal().to_string() + " in " + q.base().name() + "\n" +
         q.render_coset_map();
}

}  // namespace khr
