#pragma once

#include <cstdint>
#include <vector>

#include "newt/common.hpp"

namespace newt {

using IMat = std::vector<std::vector<Int>>;

// D = U * A * V with U, V unimodular and D diagonal with d1 | d2 | ...
// Only D and V are tracked (V is what the quotient construction needs).
struct SmithForm {
  std::vector<Int> diag;  // length min(rows, cols), nonnegative
  IMat v;                 // cols x cols
  int rank = 0;
};

SmithForm smith_form(IMat a);

Int determinant(IMat a);  // square integer matrix, fraction-free elimination

// Finite abelian quotient Z^gens / rowspan(relations), with the projection of
// each generator to canonical coordinates.  Elements are encoded mixed-radix
// into a single word, which caps the representable order at 2^62.
class FiniteAbelianGroup {
 public:
  using Elem = std::uint64_t;

  static FiniteAbelianGroup from_relations(int gens, const IMat& relations);

  const Int& order() const { return order_; }
  bool trivial() const { return inv_.empty(); }
  int components() const { return static_cast<int>(inv_.size()); }
  const std::vector<long long>& invariant_factors() const { return inv_; }

  Elem identity() const { return 0; }
  Elem generator(int i) const { return gen_[static_cast<std::size_t>(i)]; }
  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, long long k) const;
  long long element_order(Elem a) const;
  std::vector<long long> coords(Elem a) const;

 private:
  std::vector<long long> inv_;     // invariant factors > 1
  std::vector<Elem> gen_;          // encoded generator images
  Int order_;
};

}  // namespace newt
