#pragma once

// Textual scalar and polynomial grammar shared by the CLI and reports.
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := ('+' | '-') unary | power
//   power := atom ('^' integer)?
//   atom  := integer | 'i' | 'sqrt' '(' expr ')' | variable | '(' expr ')'
//
// Variables are x1..x{n+1}; on the rank-1 line `x` is accepted as x1.
// Division is allowed by nonzero constants times products of root forms,
// which keeps every parsed value a rational section.

#include "ddk/polyring.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ddk {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Constant expressions such as `3/2`, `-i`, `sqrt(3)/2`, `1 + 2*i`.
FieldElem parse_scalar(std::string_view text);

RationalSection parse_section(const RootSystemPtr& rs, std::string_view text);

}  // namespace ddk
