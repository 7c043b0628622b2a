#pragma once

#include <string>
#include <vector>

#include "newt/suspension.hpp"

namespace newt {

// canonical inputs used across the verification suites
extern const char* const kSuspensionFixture;   // x^9 + x^4 y^2 + x^2 y^4 + y^7 + z^7
extern const char* const kNonSuspensionFixture;  // x^7 + y^5 + z^3 + x^2 z + y^3 z
extern const char* const kBrieskorn237;        // x^2 + y^3 + z^7

struct VerifyConfig {
  std::uint64_t seed = 20240801;
  bool parallel = true;
  FiltrationConfig filt;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

CriterionResult criterion_golden(const VerifyConfig& cfg);
CriterionResult criterion_zeta_vs_closed(const VerifyConfig& cfg);
CriterionResult criterion_group_orders(const VerifyConfig& cfg);
CriterionResult criterion_hilbert_oracle(const VerifyConfig& cfg);
CriterionResult criterion_lift_equality(const VerifyConfig& cfg);
CriterionResult criterion_inclusion_chain(const VerifyConfig& cfg);
CriterionResult criterion_structural(const VerifyConfig& cfg);

std::vector<CriterionResult> run_criteria(const VerifyConfig& cfg, const std::vector<int>& ids);

// integral members of the equality cone derived from cone_sample outputs
// (roundings, the primitive ray point, small multiples), each re-verified by
// cone_contains; size-capped by what the truncated ring can exercise
std::vector<std::vector<long long>> integral_cone_points(const Model& m, int want);

// monomials u with total degree <= degree and wt(u) >= k componentwise
std::vector<Exp3> high_monomials(const Model& m, std::span<const long long> k, long long degree);

// random element of the truncated ring with div >= k, of the form
// (high monomial) [+ high monomial] + h*f, drawn from a precomputed pool
LaurentPoly random_high_element(Rng& rng, const Model& m, std::span<const Exp3> pool);

// box for zeta comparisons: first-node exponent capped by `limit`, the other
// coordinates bounded through the dual-cycle direction ratios
Box zeta_box(const Model& m, long long limit);

}  // namespace newt
