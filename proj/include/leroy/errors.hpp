#pragma once

#include <stdexcept>
#include <string>

namespace leroy {

enum class ErrorKind {
  domain,             // argument outside the operation's domain
  pole,               // log-gamma / gamma evaluated at a pole
  precision_budget,   // max_working_digits would be exceeded
  term_budget,        // max_terms exceeded before convergence
  divergent,          // parameter set defines no entire series
  undefined_term,     // a numerator gamma hits a pole
  quadrature,         // contour / Laplace quadrature did not converge
  overflow,           // magnitude exceeds exponent range
  invalid_argument,   // malformed input (parse errors, bad parameters)
};

/// Single exception type for evaluation failures; `kind()` drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace leroy
