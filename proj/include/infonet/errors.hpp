#ifndef INFONET_ERRORS_HPP
#define INFONET_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace infonet {

// Unknown unit symbol, or a custom base that is not a real number > 1.
class UnitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Attempt to add, compare or convert quantities of different dimensions,
// or to mix a bare flow with a flow-information product.
class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid probability data: negative mass, zero total, bad normalization.
class DistributionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally invalid call (axis out of range, equal axes, bad shape).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numeric argument outside its mathematical domain (e.g. p not in [0,1]).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid flow network: non-square, negative or non-finite flows, zero total.
class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text that does not match the expected grammar. Positions are 1-based;
// 0 means "not applicable" (e.g. no line number for a bare unit string).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(message), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace infonet

#endif  // INFONET_ERRORS_HPP
