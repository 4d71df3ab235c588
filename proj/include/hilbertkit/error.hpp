#pragma once

#include <stdexcept>
#include <string>

namespace hk {

/// Base class of every error raised by the library. The `kind` is what the
/// CLI maps onto exit codes.
class Error : public std::runtime_error {
 public:
  enum class Kind { Structural, Parse, NotMPrimary, CapExceeded, Precondition };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

inline Error structural_error(const std::string& what) { return {Error::Kind::Structural, what}; }
inline Error precondition_error(const std::string& what) { return {Error::Kind::Precondition, what}; }
inline Error cap_error(const std::string& what) { return {Error::Kind::CapExceeded, what}; }
inline Error not_m_primary_error(const std::string& what) { return {Error::Kind::NotMPrimary, what}; }

/// Parse failure with a 1-based line/column anchor (column only for
/// single-line inputs such as one polynomial).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(Kind::Parse, format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace hk
