#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gentile/expr.hpp"

namespace gentile {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Concrete syntax for operator expressions:
//
//   expr    := ("+"|"-")? term (("+"|"-") term)*
//   term    := scalar ("*"? factor)* | factor ("*"? factor)*
//   factor  := atom ("^" uint)?
//   atom    := "e" | "e+" | "1" | "(" expr ")" | "[" expr "," expr "]"
//            | "{" expr "," expr "}"
//   scalar  := uint | uint "/" uint
//
// Juxtaposition multiplies; "e+" is the creator; "[,]" and "{,}" are the
// commutator and anticommutator; "1" is the identity operator.
ExprPtr parse(std::string_view text);

}  // namespace gentile
