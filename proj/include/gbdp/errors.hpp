#ifndef GBDP_ERRORS_HPP
#define GBDP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gbdp {

// Bad or missing configuration input (CLI exit code 2).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation was called outside its documented precondition (CLI exit code 3).
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation would exceed its configured evaluation budget (CLI exit code 4).
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gbdp

#endif
