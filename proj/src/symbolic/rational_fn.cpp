#include "oppair/symbolic/rational_fn.hpp"

#include <algorithm>

#include "oppair/error.hpp"

namespace oppair::symbolic {

RationalFn::RationalFn(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const Poly g = gcd(num, den);
  Poly n = g.is_constant() ? num : *num.divide_exact(g);
  Poly d = g.is_constant() ? den : *den.divide_exact(g);
  *this = RationalFn(std::move(n), std::move(d), Reduced{});
}

RationalFn::RationalFn(Poly num, Poly den, Reduced) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const Rational lc = den.leading().coeff;
  if (lc != 1) {
    const Rational inv = 1 / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

std::vector<Var> RationalFn::variables() const {
  auto a = num_.variables(), b = den_.variables();
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_, Reduced{}); }

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
  // With g = gcd(b, d): a/b + c/d = (a d' + c b') / (b' d' g), and only g can
  // share a factor with the new numerator.
  const Poly g = gcd(a.den_, b.den_);
  const Poly bp = g.is_constant() ? a.den_ : *a.den_.divide_exact(g);
  const Poly dp = g.is_constant() ? b.den_ : *b.den_.divide_exact(g);
  Poly num = a.num_ * dp + b.num_ * bp;
  if (num.is_zero()) return RationalFn();
  if (g.is_constant()) return RationalFn(std::move(num), bp * dp * g, RationalFn::Reduced{});
  const Poly h = gcd(num, g);
  if (h.is_constant()) return RationalFn(std::move(num), bp * dp * g, RationalFn::Reduced{});
  return RationalFn(*num.divide_exact(h), bp * dp * *g.divide_exact(h), RationalFn::Reduced{});
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero() || b.is_zero()) return RationalFn();
  const Poly g1 = gcd(a.num_, b.den_);
  const Poly g2 = gcd(b.num_, a.den_);
  auto cut = [](const Poly& p, const Poly& g) { return g.is_constant() ? p : *p.divide_exact(g); };
  return RationalFn(cut(a.num_, g1) * cut(b.num_, g2), cut(a.den_, g2) * cut(b.den_, g1),
                    RationalFn::Reduced{});
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) throw DomainError("division by the zero rational function");
  return a * RationalFn(b.den_, b.num_, RationalFn::Reduced{});
}

RationalFn RationalFn::pow(int k) const {
  if (k == 0) return RationalFn(1);
  if (k < 0) {
    if (is_zero()) throw DomainError("negative power of zero");
    return RationalFn(den_.pow(static_cast<std::uint32_t>(-k)), num_.pow(static_cast<std::uint32_t>(-k)),
                      Reduced{});
  }
  return RationalFn(num_.pow(static_cast<std::uint32_t>(k)), den_.pow(static_cast<std::uint32_t>(k)),
                    Reduced{});
}

RationalFn RationalFn::derivative(Var v) const {
  if (den_.is_constant()) return RationalFn(num_.derivative(v), den_, Reduced{});
  // (n/d)' = (n' d - n d') / d^2
  return RationalFn(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

RationalFn substitute(const Poly& p, const RationalFn::Substitution& s) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, RationalFn> powers;
  auto power = [&](std::uint32_t var, std::uint32_t e, const RationalFn& base) -> const RationalFn& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, base.pow(static_cast<int>(e))).first;
    return it->second;
  };

  RationalFn total;
  Monomial kept;
  for (const auto& t : p.terms()) {
    RationalFn term(t.coeff);
    kept.clear();
    for (const auto& [var, e] : t.mono) {
      auto it = std::find_if(s.begin(), s.end(), [var = var](const auto& kv) { return kv.first.id() == var; });
      if (it == s.end()) kept.emplace_back(var, e);
      else term = term * power(var, e, it->second);
    }
    if (!kept.empty()) term = term * RationalFn(Poly::monomial(kept));
    total += term;
  }
  return total;
}

RationalFn RationalFn::substitute(const Substitution& s) const {
  return symbolic::substitute(num_, s) / symbolic::substitute(den_, s);
}

std::string RationalFn::to_string() const {
  if (den_ == Poly(1)) return num_.to_string();
  auto wrap = [](const Poly& p) {
    const std::string s = p.to_string();
    return p.size() > 1 || (p.size() == 1 && !p.leading().mono.empty() && p.leading().coeff != 1)
               ? "(" + s + ")"
               : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace oppair::symbolic
