#include "oppair/symbolic/poly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>

#include "oppair/error.hpp"

namespace oppair::symbolic {

namespace {

struct Registry {
  std::mutex mu;
  std::deque<std::string> names{"?"};  // id 0 is the default-constructed Var
  std::unordered_map<std::string, std::uint32_t> ids;
};

Registry& registry() {
  static Registry r;
  return r;
}

std::uint32_t exponent_of(const Monomial& m, std::uint32_t var) {
  for (const auto& [v, e] : m)
    if (v == var) return e;
  return 0;
}

bool term_greater(const Poly::Term& a, const Poly::Term& b) { return lex_compare(a.mono, b.mono) > 0; }

}  // namespace

Var Var::named(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  std::string key(name);
  auto it = r.ids.find(key);
  if (it != r.ids.end()) return Var(it->second);
  const auto id = static_cast<std::uint32_t>(r.names.size());
  r.names.push_back(key);
  r.ids.emplace(std::move(key), id);
  return Var(id);
}

std::string Var::name() const {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  return r.names.at(id_);
}

int lex_compare(const Monomial& a, const Monomial& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) return 1;
    if (i == a.size() || b[j].first < a[i].first) return -1;
    if (a[i].second != b[j].second) return a[i].second > b[j].second ? 1 : -1;
    ++i;
    ++j;
  }
  return 0;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) r.push_back(a[i++]);
    else if (i == a.size() || b[j].first < a[i].first) r.push_back(b[j++]);
    else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

std::optional<Monomial> monomial_div(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0;
  for (const auto& [v, e] : b) {
    while (i < a.size() && a[i].first < v) r.push_back(a[i++]);
    if (i == a.size() || a[i].first != v || a[i].second < e) return std::nullopt;
    if (a[i].second > e) r.emplace_back(v, a[i].second - e);
    ++i;
  }
  while (i < a.size()) r.push_back(a[i++]);
  return r;
}

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) ++i;
    else if (b[j].first < a[i].first) ++j;
    else {
      r.emplace_back(a[i].first, std::min(a[i].second, b[j].second));
      ++i;
      ++j;
    }
  }
  return r;
}

Poly::Poly(long c) {
  if (c != 0) terms_.push_back({{}, Rational(c)});
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.push_back({{}, c});
}

Poly Poly::var(Var v, std::uint32_t exp) {
  if (exp == 0) return Poly(1);
  return monomial({{v.id(), exp}});
}

Poly Poly::monomial(Monomial m, Rational c) {
  Poly p;
  if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) p.terms_.back().coeff += t.coeff;
    else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.empty()) return terms_.back().coeff;
  return 0;
}

std::uint32_t Poly::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, exponent_of(t.mono, v.id()));
  return d;
}

std::uint32_t Poly::min_degree(Var v) const {
  if (terms_.empty()) return 0;
  std::uint32_t d = UINT32_MAX;
  for (const auto& t : terms_) d = std::min(d, exponent_of(t.mono, v.id()));
  return d;
}

std::vector<Var> Poly::variables() const {
  std::vector<std::uint32_t> ids;
  for (const auto& t : terms_)
    for (const auto& [v, e] : t.mono) ids.push_back(v);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Var> r;
  for (auto id : ids) r.push_back(Var(id));
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int c = i == a.terms_.size() ? -1 : j == b.terms_.size() ? 1 : lex_compare(a.terms_[i].mono, b.terms_[j].mono);
    if (c > 0) r.terms_.push_back(a.terms_[i++]);
    else if (c < 0) r.terms_.push_back(b.terms_[j++]);
    else {
      Rational s = a.terms_[i].coeff + b.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].mono).scaled(a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].mono).scaled(b.terms_[0].coeff);
  std::vector<Poly::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prods.push_back({monomial_mul(s.mono, t.mono), s.coeff * t.coeff});
  return Poly::from_terms(std::move(prods));
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return {};
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::times_monomial(const Monomial& m) const {
  if (m.empty()) return *this;
  Poly r = *this;
  for (auto& t : r.terms_) t.mono = monomial_mul(t.mono, m);
  return r;
}

Poly Poly::pow(std::uint32_t k) const {
  Poly result(1);
  for (std::uint32_t i = 0; i < k; ++i) result = result * *this;
  return result;
}

Poly Poly::derivative(Var v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const auto e = exponent_of(t.mono, v.id());
    if (e == 0) continue;
    Monomial m;
    for (const auto& [w, f] : t.mono) {
      if (w != v.id()) m.emplace_back(w, f);
      else if (f > 1) m.emplace_back(w, f - 1);
    }
    out.push_back({std::move(m), t.coeff * e});
  }
  return from_terms(std::move(out));
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  if (is_zero()) return Poly();
  if (d.is_constant()) return scaled(1 / d.terms_[0].coeff);
  if (d.terms_.size() == 1) {
    Poly r;
    for (const auto& t : terms_) {
      auto m = monomial_div(t.mono, d.terms_[0].mono);
      if (!m) return std::nullopt;
      r.terms_.push_back({std::move(*m), t.coeff / d.terms_[0].coeff});
    }
    return r;
  }

  // Degree box for the quotient; it keeps the loop finite on failure.
  Monomial bound;
  for (Var v : variables()) {
    const auto a = degree(v), b = d.degree(v);
    if (a < b || min_degree(v) < d.min_degree(v)) return std::nullopt;
    bound.emplace_back(v.id(), a - b);
  }
  for (Var v : d.variables())
    if (!contains(v)) return std::nullopt;

  std::vector<Term> q;
  Poly r = *this;
  const Term& lead = d.terms_[0];
  while (!r.is_zero()) {
    auto m = monomial_div(r.terms_[0].mono, lead.mono);
    if (!m || !monomial_div(bound, *m)) return std::nullopt;
    Rational c = r.terms_[0].coeff / lead.coeff;
    r = r - d.times_monomial(*m).scaled(c);
    q.push_back({std::move(*m), std::move(c)});
  }
  return from_terms(std::move(q));
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_[0].mono;
  for (std::size_t i = 1; i < terms_.size() && !g.empty(); ++i) g = monomial_gcd(g, terms_[i].mono);
  return g;
}

Poly Poly::monic() const {
  if (terms_.empty() || terms_[0].coeff == 1) return *this;
  return scaled(1 / terms_[0].coeff);
}

std::vector<Poly> Poly::coefficients(Var v) const {
  std::vector<Poly> c(degree(v) + 1);
  std::vector<std::vector<Term>> buckets(c.size());
  for (const auto& t : terms_) {
    std::uint32_t e = 0;
    Monomial m;
    for (const auto& [w, f] : t.mono) {
      if (w == v.id()) e = f;
      else m.emplace_back(w, f);
    }
    buckets[e].push_back({std::move(m), t.coeff});
  }
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = from_terms(std::move(buckets[k]));
  return c;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  auto& reg = registry();
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    Rational c = t.coeff;
    if (i == 0) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    std::string mono;
    {
      std::lock_guard lock(reg.mu);
      for (const auto& [v, e] : t.mono) {
        if (!mono.empty()) mono += "*";
        mono += reg.names.at(v);
        if (e > 1) mono += "^" + std::to_string(e);
      }
    }
    if (mono.empty()) out += c.get_str();
    else if (c == 1) out += mono;
    else out += c.get_str() + "*" + mono;
  }
  return out;
}

namespace {

Poly gcd_core(const Poly& a, const Poly& b);

Poly strip_monomial(const Poly& p) {
  const Monomial m = p.monomial_content();
  if (m.empty()) return p;
  return *p.divide_exact(Poly::monomial(m));
}

// gcd of g with every coefficient of p in v.
Poly fold_content(Poly g, const Poly& p, Var v) {
  for (const auto& c : p.coefficients(v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

Poly content(const Poly& p, Var v) {
  Poly g;
  for (const auto& c : p.coefficients(v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

Poly primitive_part(const Poly& p, Var v) {
  const Poly c = content(p, v);
  if (c.is_constant()) return p;
  return *p.divide_exact(c);
}

Poly pseudo_remainder(Poly r, const Poly& b, Var x) {
  const auto n = b.degree(x);
  const Poly lcb = b.coefficients(x)[n];
  while (!r.is_zero()) {
    const auto d = r.degree(x);
    if (d < n) break;
    const Poly lcr = r.coefficients(x)[d];
    r = r * lcb - lcr * Poly::var(x, d - n) * b;
  }
  return r;
}

Poly gcd_core(const Poly& a, const Poly& b) {
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.divide_exact(b)) return b.monic();
  if (b.divide_exact(a)) return a.monic();

  const auto va = a.variables(), vb = b.variables();
  for (Var v : va)
    if (!b.contains(v)) return fold_content(b, a, v);
  for (Var v : vb)
    if (!a.contains(v)) return fold_content(a, b, v);

  Var x = va.front();
  std::uint32_t best = UINT32_MAX;
  for (Var v : va) {
    const auto cost = a.degree(v) + b.degree(v);
    if (cost < best) {
      best = cost;
      x = v;
    }
  }

  const Poly ca = content(a, x), cb = content(b, x);
  Poly p = ca.is_constant() ? a : *a.divide_exact(ca);
  Poly q = cb.is_constant() ? b : *b.divide_exact(cb);
  const Poly c = gcd(ca, cb);
  if (p.degree(x) < q.degree(x)) std::swap(p, q);
  while (true) {
    Poly r = pseudo_remainder(p, q, x);
    if (r.is_zero()) break;
    if (r.degree(x) == 0) return c.monic();
    p = std::move(q);
    q = primitive_part(r, x);
  }
  return (c * primitive_part(q, x)).monic();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  const Monomial m = monomial_gcd(a.monomial_content(), b.monomial_content());
  return gcd_core(strip_monomial(a), strip_monomial(b)).times_monomial(m).monic();
}

}  // namespace oppair::symbolic
