#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace smallknot {

enum class errc {
  zero_over_zero,
  undefined_value,
  non_positive_input,
  degenerate_link,
  out_of_range,
  invalid_input,
  excluded_case,
  parse_error,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::zero_over_zero: return "ZeroOverZero";
    case errc::undefined_value: return "UndefinedValue";
    case errc::non_positive_input: return "NonPositiveInput";
    case errc::degenerate_link: return "DegenerateLink";
    case errc::out_of_range: return "OutOfRange";
    case errc::invalid_input: return "InvalidInput";
    case errc::excluded_case: return "ExcludedCase";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Grammar failure with the 1-based column of the offending character.
class parse_error : public error {
 public:
  parse_error(std::size_t column, const std::string& what)
      : error(errc::parse_error,
              "column " + std::to_string(column) + ": " + what),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace smallknot
