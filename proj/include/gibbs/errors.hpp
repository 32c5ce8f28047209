#pragma once

#include <stdexcept>
#include <string>

namespace gibbs {

// A caller broke a documented precondition (unassigned spin, bad range, ...).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// A certified numeric check could not be pushed below its tolerance.
class InconclusiveCheck : public std::runtime_error {
 public:
  explicit InconclusiveCheck(const std::string& what) : std::runtime_error(what) {}
};

// A quantitative hypothesis (summability, contraction, termination) fails,
// so the requested quantity is undefined.
class ConditionFailed : public std::runtime_error {
 public:
  explicit ConditionFailed(const std::string& what) : std::runtime_error(what) {}
};

// The backward sketch exceeded its event budget.
class NonTermination : public std::runtime_error {
 public:
  NonTermination(const std::string& what, std::size_t live_sites)
      : std::runtime_error(what), live_sites(live_sites) {}
  std::size_t live_sites;
};

}  // namespace gibbs
