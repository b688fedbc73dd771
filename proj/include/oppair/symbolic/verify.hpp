#pragma once

#include <string>
#include <vector>

#include "oppair/symbolic/tower.hpp"

namespace oppair::symbolic {

enum class CheckKind { Identity, PoleOrder, Tower };

struct SymbolicCheck {
  std::string name;
  CheckKind kind = CheckKind::Identity;
  bool passed = false;
  std::string residual;  // reduced lhs - rhs, or a mismatch description; empty when passed
};

struct VerificationReport {
  std::string suite;
  std::vector<SymbolicCheck> checks;
  double seconds = 0;

  bool ok() const;
  std::size_t count(CheckKind kind) const;
  std::size_t passed(CheckKind kind) const;
};

// Rational-map identities for the E~8 pair on F2, the pole orders of the
// transported form along D0' and D1, and the replayed eight-step tower.
VerificationReport verify_e8_charts();

// Sigma^(2)_(eps): round trips, Jacobians, cocycle and the eps = 0 limit.
VerificationReport verify_gluing_sigma2();

// The D~4 tower on Sigma^(2)_(eps): chart formulas and the resulting pair.
VerificationReport verify_d4_tower();

VerificationReport verify_suite(const std::string& name);  // "e8", "d4", "gluing"

// Pole order of the form along every visible line equals the multiplicity of
// its component in the final configuration.
std::vector<SymbolicCheck> tower_pole_checks(const Tower& tower);

}  // namespace oppair::symbolic
