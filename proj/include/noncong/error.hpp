#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace noncong {

/// Failure categories raised by the library. The CLI maps every kind except
/// `integrality_violation` to a usage/precondition exit code.
enum class ErrorKind {
  invalid_argument,
  reducible_representation,
  incompatible_alpha,
  non_unit,
  insufficient_precision,
  pole,
  unsupported_weight,
  parity,
  integrality_violation,
  precondition,
  bad_reduction,
  inapplicable_prime,
  inconsistent_counts,
  order_incompatible,
  identity_inapplicable,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::reducible_representation: return "reducible-representation";
    case ErrorKind::incompatible_alpha: return "incompatible-alpha";
    case ErrorKind::non_unit: return "non-unit";
    case ErrorKind::insufficient_precision: return "insufficient-precision";
    case ErrorKind::pole: return "pole";
    case ErrorKind::unsupported_weight: return "unsupported-weight";
    case ErrorKind::parity: return "parity";
    case ErrorKind::integrality_violation: return "integrality-violation";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::bad_reduction: return "bad-reduction";
    case ErrorKind::inapplicable_prime: return "inapplicable-prime";
    case ErrorKind::inconsistent_counts: return "inconsistent-counts";
    case ErrorKind::order_incompatible: return "order-incompatible";
    case ErrorKind::identity_inapplicable: return "identity-inapplicable";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace noncong
