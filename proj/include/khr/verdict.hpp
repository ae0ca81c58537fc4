#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace khr {

// One named sub-check inside a composite report.
struct Check {
  std::string id;
  bool pass = true;
  std::string detail;
};

inline bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

// "id: detail; id: detail" for the failed checks.
inline std::string describe_failures(const std::vector<Check>& checks) {
  std::string out;
  for (const auto& c : checks) {
    if (c.pass) continue;
    if (!out.empty()) out += "; ";
    out += c.id;
    if (!c.detail.empty()) out += ": " + c.detail;
  }
  return out;
}

enum class Status { pass, fail, skip, info, adjudicate };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
    case Status::info: return "info";
    case Status::adjudicate: return "adjudicate";
  }
  return "?";
}

struct TheoremVerdict {
  std::string theorem;
  std::string structure;
  std::string instance;  // the subsets / ideals / maps the check was run on
  Status status = Status::pass;
  std::string detail;    // counterexample payload when failed

  bool passed() const { return status == Status::pass; }
};

inline TheoremVerdict verdict_from(std::string theorem, std::string structure, std::string instance,
                                   const std::vector<Check>& checks) {
  TheoremVerdict v{std::move(theorem), std::move(structure), std::move(instance)};
  v.status = all_pass(checks) ? Status::pass : Status::fail;
  v.detail = describe_failures(checks);
  return v;
}

}  // namespace khr
