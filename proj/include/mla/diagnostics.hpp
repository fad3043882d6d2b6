#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace mla {

// One violated law instance. `where` holds the element tuple the law failed
// on; unused slots stay -1. `note` carries extra context (H-tuples, values).
struct Violation {
  std::string law;
  std::array<int, 3> where{-1, -1, -1};
  std::string note;
};

struct Diagnostics {
  bool valid = true;
  std::vector<Violation> violations;

  void add(std::string law, std::array<int, 3> where = {-1, -1, -1},
           std::string note = {});
  void merge(const Diagnostics& other);
  std::string to_string(std::size_t max_items = 0) const;  // 0 = all
};

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computed structure contradicts a law the construction was supposed to
// guarantee. Carries the evidence; callers surface it, never swallow it.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
  unsigned long long required = 0;
  unsigned long long limit = 0;
  BudgetError(unsigned long long required_, unsigned long long limit_);
};

// Shared knobs for enumeration-heavy operations. `budget` caps estimated
// candidate-equation evaluations; operations refuse up front when the
// estimate exceeds it. `jobs` <= 0 means use all hardware threads.
struct RunContext {
  unsigned long long budget = 100'000'000ULL;
  int jobs = 0;
};

}  // namespace mla
