#pragma once

#include <stdexcept>
#include <string>

namespace cantorsep {

// A gap sequence broke the per-level admissibility requirement
// delta_n < 3^-(n+1).
class InvalidSequenceError : public std::domain_error {
 public:
  InvalidSequenceError(int level, const std::string& what)
      : std::domain_error(what), level_(level) {}
  int level() const { return level_; }

 private:
  int level_;
};

// The covering oracle would need more squares than the configured budget.
class CoverBudgetError : public std::runtime_error {
 public:
  CoverBudgetError(long long counted, long long budget)
      : std::runtime_error("cover budget exceeded: counted " +
                           std::to_string(counted) + " squares, budget " +
                           std::to_string(budget)),
        counted_(counted) {}
  long long counted() const { return counted_; }

 private:
  long long counted_;
};

// A strict comparison could not be certified before the precision cap.
class InconclusiveError : public std::runtime_error {
 public:
  explicit InconclusiveError(const std::string& link)
      : std::runtime_error("comparison inconclusive at precision cap: " + link),
        link_(link) {}
  const std::string& link() const { return link_; }

 private:
  std::string link_;
};

// A serialized document does not match its declared schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Re-verification was requested at lower precision than the stored record.
class PrecisionMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cantorsep
