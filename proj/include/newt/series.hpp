#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "newt/abelian.hpp"
#include "newt/common.hpp"

namespace newt {

// Componentwise-inclusive truncation region [0, hi] in Z^dim.
struct Box {
  std::vector<long long> hi;
  int dim() const { return static_cast<int>(hi.size()); }
};

constexpr int kMaxSeriesDim = 8;

// packed exponent; coordinates beyond dim stay zero so comparisons work
struct ExpKey {
  std::array<std::int32_t, kMaxSeriesDim> v{};
  auto operator<=>(const ExpKey&) const = default;
};

ExpKey make_key(const std::vector<long long>& e);
std::vector<long long> key_vec(const ExpKey& k, int dim);

inline bool key_in_box(const ExpKey& k, const Box& b) {
  for (int i = 0; i < b.dim(); ++i) {
    if (k.v[static_cast<std::size_t>(i)] < 0) return false;
    if (k.v[static_cast<std::size_t>(i)] > b.hi[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

inline ExpKey key_add(const ExpKey& a, const ExpKey& b) {
  ExpKey r;
  for (int i = 0; i < kMaxSeriesDim; ++i)
    r.v[static_cast<std::size_t>(i)] = a.v[static_cast<std::size_t>(i)] + b.v[static_cast<std::size_t>(i)];
  return r;
}

// Finitely truncated formal series over Z^dim with integer coefficients.
// Coefficients are certified inside the box; nothing outside is stored.
struct MultiSeries {
  int dim = 0;
  Box box;
  std::map<ExpKey, long long> c;

  long long get(const ExpKey& k) const {
    auto it = c.find(k);
    return it == c.end() ? 0 : it->second;
  }
  void add(const ExpKey& k, long long v) {
    if (v == 0 || !key_in_box(k, box)) return;
    auto [it, fresh] = c.emplace(k, v);
    if (!fresh && (it->second += v) == 0) c.erase(it);
  }
  bool operator==(const MultiSeries& o) const { return dim == o.dim && c == o.c; }
};

MultiSeries ms_multiply_serial(const MultiSeries& a, const MultiSeries& b);
MultiSeries ms_multiply_omp(const MultiSeries& a, const MultiSeries& b);
MultiSeries ms_multiply(const MultiSeries& a, const MultiSeries& b, bool parallel = true);

// in-place product with the geometric series sum_j t^(j*step), repeated
// `multiplicity` times; step must be nonzero with nonnegative entries
void geometric_closure(MultiSeries& s, const ExpKey& step, int multiplicity = 1);

struct SignedTerm {
  std::vector<long long> e;
  long long coeff = 1;
};

// expansion of (sum of signed numerator terms) / prod (1 - t^denominator)
MultiSeries expand_rational(const Box& box, const std::vector<SignedTerm>& numerator,
                            const std::vector<std::vector<long long>>& denominators);

// P(t) = -H(t) * prod_n (1 - t_n^{-1}); result box is shrunk by one in every
// coordinate, which must stay nonnegative
MultiSeries poincare_from_hilbert(const MultiSeries& h);

// Series with coefficients in the group ring Z[H].  The inner maps are keyed
// by encoded group elements and never store zeros.
struct GroupRingSeries {
  int dim = 0;
  Box box;
  const FiniteAbelianGroup* grp = nullptr;
  std::map<ExpKey, std::map<std::uint64_t, long long>> c;

  void add(const ExpKey& k, std::uint64_t h, long long v) {
    if (v == 0 || !key_in_box(k, box)) return;
    auto& cell = c[k];
    auto [it, fresh] = cell.emplace(h, v);
    if (!fresh && (it->second += v) == 0) {
      cell.erase(it);
      if (cell.empty()) c.erase(k);
    }
  }
  std::size_t term_count() const {
    std::size_t n = 0;
    for (auto& [k, cell] : c) n += cell.size();
    return n;
  }
};

GroupRingSeries grs_multiply_serial(const GroupRingSeries& a, const GroupRingSeries& b);
GroupRingSeries grs_multiply_omp(const GroupRingSeries& a, const GroupRingSeries& b);
GroupRingSeries grs_multiply(const GroupRingSeries& a, const GroupRingSeries& b, bool parallel = true);

// coefficients at the identity class
MultiSeries trivial_part(const GroupRingSeries& s);

// identity-class part of a*b without materializing the full product: only
// term pairs with inverse classes contribute
MultiSeries grs_trivial_product(const GroupRingSeries& a, const GroupRingSeries& b, bool parallel = true);

// Zeta input data, already restricted to nodes: every exponent is the node's
// dual cycle (rationally) divided by the leg index.
struct ZetaNode {
  std::vector<Rat> dual;            // restricted dual cycle of the node
  long long delta = 0;              // graph degree
  FiniteAbelianGroup::Elem cls = 0; // class of the node's dual
};
struct ZetaEnd {
  int node = 0;
  long long alpha = 1;
  FiniteAbelianGroup::Elem cls = 0;
};

// Expansion of prod_n (1 - [E_n] t^{E_n})^(delta_n - 2) * prod_e 1/(1 - [E_e] t^{E_e})
// followed by extraction of the identity-class part.  Exponents are handled
// on a per-coordinate common denominator; only lattice exponents survive the
// extraction and that integrality is asserted.
MultiSeries zeta_reduced(const FiniteAbelianGroup& grp, const std::vector<ZetaNode>& nodes,
                         const std::vector<ZetaEnd>& ends, const Box& box, bool parallel = true);

}  // namespace newt
