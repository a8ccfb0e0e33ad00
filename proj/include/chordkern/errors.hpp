#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chordkern {

/// Malformed edge-list input. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A caller violated an operation's precondition.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact routine refused to run because the input exceeds its configured size gate.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Brute-force enumeration would visit more candidates than the configured budget.
class BudgetExceeded : public SizeLimitError {
 public:
  BudgetExceeded(std::uint64_t needed, std::uint64_t budget)
      : SizeLimitError("search space of " + std::to_string(needed) +
                       " candidate sets exceeds budget " + std::to_string(budget)),
        needed_(needed),
        budget_(budget) {}
  std::uint64_t needed() const noexcept { return needed_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t needed_;
  std::uint64_t budget_;
};

/// Random instance generation could not satisfy its request.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chordkern
