#pragma once

#include <stdexcept>
#include <string>

namespace khr {

// Malformed input text or tables that are not total over the carrier.
class format_error : public std::runtime_error {
 public:
  explicit format_error(const std::string& what) : std::runtime_error(what) {}
  format_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

// A caller broke a precondition: index out of range, wrong tuple length, a
// subset that is not a hyperideal, a violated theorem hypothesis, ...
class usage_error : public std::invalid_argument {
 public:
  explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// A construction (fractions, quotient) was refused: the relation is not an
// equivalence, an operation depends on representatives, cosets overlap.
// The message carries the witnesses.
class construction_error : public std::runtime_error {
 public:
  explicit construction_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace khr
