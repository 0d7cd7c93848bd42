#pragma once

#include <stdexcept>
#include <string>

namespace reduktor {

// Base class for everything thrown on purpose.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A configured budget was exhausted (basis size, S-pair degree, monomial
// counts, minor enumeration, ...).  Carries the budget name for reporting.
class resource_error : public error {
public:
  resource_error(const std::string& budget, const std::string& what)
      : error(what), budget_(budget) {}
  const std::string& budget() const { return budget_; }

private:
  std::string budget_;
};

// Internal consistency check failed; indicates a bug, never bad input.
class internal_error : public error {
public:
  explicit internal_error(const std::string& what) : error(what) {}
};

// Valid request for something deliberately out of scope.
class unsupported_error : public error {
public:
  explicit unsupported_error(const std::string& what) : error(what) {}
};

}  // namespace reduktor
