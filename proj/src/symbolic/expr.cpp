#include "oppair/symbolic/expr.hpp"

#include <cctype>
#include <vector>

#include "oppair/error.hpp"

namespace oppair::symbolic {

struct Expr::Node {
  enum class Kind { Number, Ident, Neg, Add, Sub, Mul, Div, Pow } kind;
  Rational number;
  std::string ident;
  int exponent = 0;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;
using Kind = Expr::Node::Kind;

NodePtr make(Kind k, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = k;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse() {
    NodePtr n = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression \"" + std::string(s_) + "\" at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr n = term();
    while (true) {
      if (eat('+')) n = make(Kind::Add, n, term());
      else if (eat('-')) n = make(Kind::Sub, n, term());
      else return n;
    }
  }

  NodePtr term() {
    NodePtr n = unary();
    while (true) {
      if (eat('*')) n = make(Kind::Mul, n, unary());
      else if (eat('/')) n = make(Kind::Div, n, unary());
      else return n;
    }
  }

  NodePtr unary() {
    if (eat('-')) return make(Kind::Neg, unary());
    if (eat('+')) return unary();
    return power();
  }

  int signed_integer() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    const int v = std::stoi(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  NodePtr power() {
    NodePtr base = atom();
    if (!eat('^')) return base;
    int e;
    if (eat('(')) {
      e = signed_integer();
      if (!eat(')')) fail("expected ')' after exponent");
    } else {
      e = signed_integer();
    }
    auto n = std::make_shared<Expr::Node>();
    n->kind = Kind::Pow;
    n->lhs = std::move(base);
    n->exponent = e;
    return n;
  }

  NodePtr atom() {
    skip();
    if (pos_ == s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr n = expr();
      if (!eat(')')) fail("expected ')'");
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto n = std::make_shared<Expr::Node>();
      n->kind = Kind::Number;
      n->number = Rational(std::string(s_.substr(start, pos_ - start)));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                  s_[pos_] == '\''))
        ++pos_;
      auto n = std::make_shared<Expr::Node>();
      n->kind = Kind::Ident;
      n->ident = std::string(s_.substr(start, pos_ - start));
      return n;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

RationalFn eval(const Expr::Node& n, const Expr::Env& env) {
  switch (n.kind) {
    case Kind::Number: return RationalFn(n.number);
    case Kind::Ident: {
      auto it = env.find(n.ident);
      return it != env.end() ? it->second : RationalFn::var(n.ident);
    }
    case Kind::Neg: return -eval(*n.lhs, env);
    case Kind::Add: return eval(*n.lhs, env) + eval(*n.rhs, env);
    case Kind::Sub: return eval(*n.lhs, env) - eval(*n.rhs, env);
    case Kind::Mul: return eval(*n.lhs, env) * eval(*n.rhs, env);
    case Kind::Div: return eval(*n.lhs, env) / eval(*n.rhs, env);
    case Kind::Pow: return eval(*n.lhs, env).pow(n.exponent);
  }
  throw DomainError("corrupt expression tree");
}

}  // namespace

Expr Expr::parse(std::string_view text) {
  Expr e;
  e.root_ = Parser(text).parse();
  e.source_ = std::string(text);
  return e;
}

RationalFn Expr::evaluate(const Env& env) const { return eval(*root_, env); }

}  // namespace oppair::symbolic
