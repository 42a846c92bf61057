#ifndef RBO_ERROR_HPP
#define RBO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rbo {

enum class ErrorKind {
  zero_denominator,
  algebra_mismatch,
  operator_domain,
  invalid_domain,
  invalid_dimension,
  cannot_normalize,
  unsupported,
  format,
  not_associative,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::zero_denominator: return "zero-denominator";
    case ErrorKind::algebra_mismatch: return "algebra-mismatch";
    case ErrorKind::operator_domain: return "operator-domain";
    case ErrorKind::invalid_domain: return "invalid-domain";
    case ErrorKind::invalid_dimension: return "invalid-dimension";
    case ErrorKind::cannot_normalize: return "cannot-normalize";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::format: return "format";
    case ErrorKind::not_associative: return "not-associative";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + " error: " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rbo

#endif
