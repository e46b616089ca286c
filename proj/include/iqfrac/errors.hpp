#pragma once

#include <stdexcept>
#include <string>

namespace iqfrac {

// An enumeration was asked to materialize more values than its budget allows.
class budget_exceeded : public std::runtime_error {
  public:
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Exact ideal division was requested for a non-divisor.
class non_integral_quotient : public std::domain_error {
  public:
    explicit non_integral_quotient(const std::string& what) : std::domain_error(what) {}
};

// An operation's stated precondition was violated; kept distinct from
// plain domain errors so callers can route inputs instead of failing.
class precondition_error : public std::domain_error {
  public:
    explicit precondition_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace iqfrac
