#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "oppair/symbolic/rational_fn.hpp"

namespace oppair::symbolic {

// Small expression language:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := ('+' | '-') unary | power
//   power := atom ('^' ['+' | '-'] integer | '^' '(' ['+' | '-'] integer ')')?
//   atom  := integer | identifier | '(' expr ')'
// Identifiers are [A-Za-z_][A-Za-z0-9_']*. Whitespace is ignored.
class Expr {
 public:
  struct Node;
  using Env = std::map<std::string, RationalFn, std::less<>>;

  static Expr parse(std::string_view text);  // throws ParseError

  // Identifiers bound in env are replaced by their value; the rest become
  // variables of the same name.
  RationalFn evaluate(const Env& env = {}) const;
  const std::string& source() const { return source_; }

 private:
  std::shared_ptr<const Node> root_;
  std::string source_;
};

inline RationalFn parse_rational(std::string_view text, const Expr::Env& env = {}) {
  return Expr::parse(text).evaluate(env);
}

}  // namespace oppair::symbolic
