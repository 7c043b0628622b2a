#pragma once

#include <optional>

#include "newt/filtration.hpp"
#include "newt/model.hpp"
#include "newt/series.hpp"

namespace newt {

// Combinatorial data of f = f0(x,y) + z^N extracted from the plane diagram
// of f0.  Chain vertices run from the y-axis to the x-axis; segment i joins
// chain[i-1] to chain[i].
struct SuspensionData {
  long long n = 0;                                // the suspension degree N
  std::vector<std::array<long long, 2>> chain;    // (a_i, b_i), i = 0..r
  std::vector<long long> s;                       // segment contents, size r
  std::vector<long long> m;                       // facet levels, size r
  std::vector<Weight> normals;                    // facet normals, chain order
  std::vector<long long> alpha_z;                 // z-leg index per chain node
  long long sx = 0, sy = 0, sz = 0;
  long long ax = 0, ay = 0;
  bool minimal = true;  // false when redundant legs were materialized

  int r() const { return static_cast<int>(s.size()); }
};

// f0 must be convenient in two variables (pure x- and y-powers present)
SuspensionData analyze_suspension(const LaurentPoly& f0, long long n);

LaurentPoly suspension_poly(const LaurentPoly& f0, long long n);

// Monodromy characteristic polynomial, kept factored as prod (t^e - 1)^mult.
// Evaluation at 1 is a limit: multiplicities must cancel, and the value is
// the product of the exponents raised to their multiplicities.
struct FactoredCharPoly {
  std::vector<std::pair<Rat, long long>> factors;  // (exponent, multiplicity)
  Int value_at_one() const;
  Rat total_degree() const;  // must come out a nonnegative integer
};

FactoredCharPoly characteristic_polynomial(const SuspensionData& sd);

// |H| = N^(sz-1) * ax^(sx-1) * ay^(sy-1)
Int h_order(const SuspensionData& sd);

// End-generator basis: z-ends grouped by chain node, then x-ends, then
// y-ends.
struct EndBasis {
  long long sz = 0, sx = 0, sy = 0;
  std::vector<long long> s;  // per-node z counts
  int count() const { return static_cast<int>(sz + sx + sy); }
  int z_end(int node, int j) const;  // j-th z-end of chain node
  int x_end(int j) const;
  int y_end(int j) const;
};

EndBasis end_basis(const SuspensionData& sd);

// Relations presenting the homology group over the end generators: per-end
// torsion rows, consecutive-difference rows, the divisor rows of x, y, z,
// and one cross-type row per chain end identifying the node's class through
// both leg types attached there.
IMat relation_matrix(const SuspensionData& sd);

// Torsion rows alone (the diagonal block); its determinant is the index of
// the sublattice they span.
IMat relation_matrix_top(const SuspensionData& sd);

// Closed form of the reduced zeta function: numerator exponent wt(f),
// denominator exponents wt(x), wt(y), wt(z), all in model node order.
struct ZetaClosedForm {
  std::vector<long long> wt_f;
  std::array<std::vector<long long>, 3> wt_xyz;
};

ZetaClosedForm zeta_closed_form(const Model& model, bool bypass_gate = false);

MultiSeries expand_closed_form(const ZetaClosedForm& cf, const Box& box);

// chain node -> model node index
std::vector<int> chain_to_model(const Model& model, const SuspensionData& sd);

// Direct evaluation of the zeta product over the resolution data, reduced to
// nodes and to the identity class.  Independent of the closed form.
MultiSeries zeta_reduced_suspension(const Model& model, const SuspensionData& sd, const Box& box,
                                    bool parallel = true);

// group built from relation_matrix
FiniteAbelianGroup suspension_group(const SuspensionData& sd);

struct RandomSuspension {
  LaurentPoly f0;
  long long n = 0;
  SuspensionData sd;
};

// Seeded sampler over chains with r <= 4, N <= 9, coordinates <= 30 that
// pass the rational-homology-sphere gate; rejects diagrams whose group-ring
// bookkeeping would be too large to verify quickly.
std::optional<RandomSuspension> random_suspension_diagram(Rng& rng, int max_attempts = 400);

}  // namespace newt
