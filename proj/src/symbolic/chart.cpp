#include "oppair/symbolic/chart.hpp"

#include "oppair/error.hpp"

namespace oppair::symbolic {

RationalFn jacobian_det(const Pair& f, const Coords& wrt) {
  return f[0].derivative(wrt[0]) * f[1].derivative(wrt[1]) - f[0].derivative(wrt[1]) * f[1].derivative(wrt[0]);
}

Pair substitute(const Pair& f, const Coords& coords, const Pair& values) {
  const RationalFn::Substitution s{{coords[0], values[0]}, {coords[1], values[1]}};
  return {f[0].substitute(s), f[1].substitute(s)};
}

namespace {

int multiplicity(Poly p, const Poly& divisor) {
  int k = 0;
  while (!p.is_zero()) {
    auto q = p.divide_exact(divisor);
    if (!q) break;
    p = std::move(*q);
    ++k;
  }
  return k;
}

}  // namespace

int pole_order(const RationalFn& form_factor, const Poly& divisor) {
  if (divisor.is_constant()) throw DomainError("pole order along a constant divisor");
  if (form_factor.is_zero()) throw DomainError("pole order of the zero form");
  return multiplicity(form_factor.den(), divisor) - multiplicity(form_factor.num(), divisor);
}

}  // namespace oppair::symbolic
