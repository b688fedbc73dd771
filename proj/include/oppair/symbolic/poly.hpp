#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oppair::symbolic {

using Rational = mpq_class;

// Interned variable. Ids are handed out in order of first use; a smaller id
// is the more significant variable in lex order.
class Var {
 public:
  Var() = default;
  static Var named(std::string_view name);

  std::uint32_t id() const { return id_; }
  std::string name() const;

  friend bool operator==(Var a, Var b) { return a.id_ == b.id_; }
  friend auto operator<=>(Var a, Var b) { return a.id_ <=> b.id_; }

 private:
  friend class Poly;
  explicit Var(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

// Sorted by variable id, every exponent positive.
using Monomial = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// Lex comparison: -1, 0, 1.
int lex_compare(const Monomial& a, const Monomial& b);

class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
    bool operator==(const Term&) const = default;
  };

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  static Poly var(Var v, std::uint32_t exp = 1);
  static Poly monomial(Monomial m, Rational c = 1);
  static Poly from_terms(std::vector<Term> terms);  // any order, duplicates merged

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.empty()); }
  Rational constant_term() const;
  // Terms in strictly decreasing lex order.
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  std::size_t size() const { return terms_.size(); }

  std::uint32_t degree(Var v) const;
  std::uint32_t min_degree(Var v) const;
  std::vector<Var> variables() const;
  bool contains(Var v) const { return degree(v) > 0; }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly scaled(const Rational& c) const;
  Poly times_monomial(const Monomial& m) const;
  Poly pow(std::uint32_t k) const;
  Poly derivative(Var v) const;

  // Quotient if d divides *this exactly, otherwise nullopt.
  std::optional<Poly> divide_exact(const Poly& d) const;

  // Largest monomial dividing every term.
  Monomial monomial_content() const;
  // Scaled so the leading coefficient is 1 (zero stays zero).
  Poly monic() const;

  // c[k] is the coefficient of v^k.
  std::vector<Poly> coefficients(Var v) const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

Monomial monomial_gcd(const Monomial& a, const Monomial& b);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
std::optional<Monomial> monomial_div(const Monomial& a, const Monomial& b);

// Monic greatest common divisor over Q (gcd(0, 0) = 0).
Poly gcd(const Poly& a, const Poly& b);

}  // namespace oppair::symbolic
