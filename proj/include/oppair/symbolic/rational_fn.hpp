#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "oppair/symbolic/poly.hpp"

namespace oppair::symbolic {

// Reduced fraction num/den with den monic in lex order, so equal functions
// have identical representations.
class RationalFn {
 public:
  RationalFn() : den_(1) {}
  RationalFn(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFn(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFn(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFn(const Poly& num, const Poly& den);  // throws DomainError on den == 0
  static RationalFn var(Var v) { return RationalFn(Poly::var(v)); }
  static RationalFn var(std::string_view name) { return var(Var::named(name)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == Poly(1); }
  std::vector<Var> variables() const;

  RationalFn operator-() const;
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  RationalFn& operator+=(const RationalFn& b) { return *this = *this + b; }
  RationalFn& operator-=(const RationalFn& b) { return *this = *this - b; }
  RationalFn& operator*=(const RationalFn& b) { return *this = *this * b; }
  RationalFn& operator/=(const RationalFn& b) { return *this = *this / b; }
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFn pow(int k) const;
  RationalFn derivative(Var v) const;

  using Substitution = std::map<Var, RationalFn>;
  // Simultaneous substitution; unmapped variables stay.
  RationalFn substitute(const Substitution& s) const;

  std::string to_string() const;

 private:
  struct Reduced {};
  RationalFn(Poly num, Poly den, Reduced);  // caller guarantees coprime; only normalises
  Poly num_;
  Poly den_;
};

RationalFn substitute(const Poly& p, const RationalFn::Substitution& s);

}  // namespace oppair::symbolic
