#pragma once

#include "kronbrist/module.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace kronbrist {

/// Positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                           message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Text format:
///
///   kron n=<int> field=<gf(p)|q> dims=<a>,<b>
///   alpha 1
///   <b rows of a entries>
///   ...
///   alpha n
///   ...
///
/// `#` starts a comment and blank lines are ignored, so a matrix with zero
/// columns is written as an empty block. GF(p) entries are integers in
/// [0, p); rational entries are integers or num/den in lowest terms with a
/// positive denominator.
KroneckerModule parse_module_file(std::string_view text);
std::string write_module_file(const KroneckerModule& m);

KroneckerModule read_module_path(const std::string& path);

}  // namespace kronbrist
