#include "newt/abelian.hpp"

#include <algorithm>

namespace newt {

namespace {

void col_sub(IMat& a, IMat& v, std::size_t dst, std::size_t src, const Int& q) {
  for (auto& row : a) row[dst] -= q * row[src];
  for (auto& row : v) row[dst] -= q * row[src];
}

void col_swap(IMat& a, IMat& v, std::size_t i, std::size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
  for (auto& row : v) std::swap(row[i], row[j]);
}

void col_neg(IMat& a, IMat& v, std::size_t i) {
  for (auto& row : a) row[i] = -row[i];
  for (auto& row : v) row[i] = -row[i];
}

}  // namespace

SmithForm smith_form(IMat a) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  IMat v(cols, std::vector<Int>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) v[i][i] = 1;

  std::size_t t = 0;
  std::size_t steps = std::min(rows, cols);
  while (t < steps) {
    // locate a nonzero entry of minimal absolute value in the working block
    std::size_t pi = rows, pj = cols;
    Int best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        Int m = abs(a[i][j]);
        if (pi == rows || m < best) {
          best = m;
          pi = i;
          pj = j;
        }
      }
    if (pi == rows) break;  // block is zero
    std::swap(a[t], a[pi]);
    if (pj != t) col_swap(a, v, t, pj);
    if (a[t][t] < 0) col_neg(a, v, t);

    bool dirty = false;
    // clear the pivot row with column operations
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (a[t][j] == 0) continue;
      Int q = a[t][j] / a[t][t];
      if (q != 0) col_sub(a, v, j, t, q);
      if (a[t][j] != 0) dirty = true;
    }
    // clear the pivot column with row operations (V unaffected)
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (a[i][t] == 0) continue;
      Int q = a[i][t] / a[t][t];
      if (q != 0)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) dirty = true;
    }
    if (dirty) continue;  // remainders became new smaller pivot candidates

    // enforce divisibility of the remaining block by the pivot
    bool fixed = false;
    for (std::size_t i = t + 1; i < rows && !fixed; ++i)
      for (std::size_t j = t + 1; j < cols && !fixed; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (std::size_t jj = 0; jj < cols; ++jj) a[t][jj] += a[i][jj];
          fixed = true;
        }
    if (fixed) continue;
    ++t;
  }

  SmithForm out;
  out.v = std::move(v);
  out.rank = static_cast<int>(t);
  for (std::size_t i = 0; i < steps; ++i) out.diag.push_back(i < t ? a[i][i] : Int(0));
  return out;
}

Int determinant(IMat a) {
  // Bareiss fraction-free elimination
  std::size_t n = a.size();
  Int prev = 1, sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = num / prev;  // exact by Bareiss
      }
    prev = a[k][k];
  }
  return n == 0 ? Int(1) : sign * a[n - 1][n - 1];
}

FiniteAbelianGroup FiniteAbelianGroup::from_relations(int gens, const IMat& relations) {
  for (auto& r : relations)
    if (static_cast<int>(r.size()) != gens) throw PrecondError("relation row of wrong length");
  SmithForm s = smith_form(relations);
  if (s.rank < gens) throw PrecondError("relations do not have full rank: quotient is infinite");

  FiniteAbelianGroup g;
  g.order_ = 1;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < s.diag.size(); ++i) {
    if (s.diag[i] == 1) continue;
    g.order_ *= s.diag[i];
    keep.push_back(i);
    g.inv_.push_back(to_ll(s.diag[i]));
  }
  // element encoding must fit one word
  Int cap = Int(1) << 62;
  if (g.order_ >= cap) throw Error("group too large to encode: |H| = " + g.order_.get_str());

  // generator i has canonical coordinates row i of V, reduced mod the
  // invariant factors
  for (int i = 0; i < gens; ++i) {
    Elem code = 0;
    std::uint64_t radix = 1;
    for (std::size_t k = 0; k < keep.size(); ++k) {
      long long d = g.inv_[k];
      Int c = s.v[static_cast<std::size_t>(i)][keep[k]] % gl(d);
      if (c < 0) c += gl(d);
      code += static_cast<std::uint64_t>(to_ll(c)) * radix;
      radix *= static_cast<std::uint64_t>(d);
    }
    g.gen_.push_back(code);
  }
  return g;
}

std::vector<long long> FiniteAbelianGroup::coords(Elem a) const {
  std::vector<long long> c(inv_.size());
  for (std::size_t k = 0; k < inv_.size(); ++k) {
    c[k] = static_cast<long long>(a % static_cast<std::uint64_t>(inv_[k]));
    a /= static_cast<std::uint64_t>(inv_[k]);
  }
  return c;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::add(Elem a, Elem b) const {
  Elem out = 0;
  std::uint64_t radix = 1;
  for (std::size_t k = 0; k < inv_.size(); ++k) {
    std::uint64_t d = static_cast<std::uint64_t>(inv_[k]);
    std::uint64_t ca = a % d, cb = b % d;
    a /= d;
    b /= d;
    out += ((ca + cb) % d) * radix;
    radix *= d;
  }
  return out;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::neg(Elem a) const {
  Elem out = 0;
  std::uint64_t radix = 1;
  for (std::size_t k = 0; k < inv_.size(); ++k) {
    std::uint64_t d = static_cast<std::uint64_t>(inv_[k]);
    std::uint64_t ca = a % d;
    a /= d;
    out += ((d - ca) % d) * radix;
    radix *= d;
  }
  return out;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::mul(Elem a, long long k) const {
  Elem out = 0;
  std::uint64_t radix = 1;
  for (std::size_t c = 0; c < inv_.size(); ++c) {
    std::uint64_t d = static_cast<std::uint64_t>(inv_[c]);
    std::uint64_t ca = a % d;
    a /= d;
    long long kk = k % static_cast<long long>(d);
    if (kk < 0) kk += static_cast<long long>(d);
    // d < 2^62, so use Int for the product to stay safe
    Int prod = Int(static_cast<unsigned long>(ca)) * gl(kk) % static_cast<long>(d);
    out += static_cast<std::uint64_t>(to_ll(prod)) * radix;
    radix *= d;
  }
  return out;
}

long long FiniteAbelianGroup::element_order(Elem a) const {
  Int ord = 1;
  for (std::size_t k = 0; k < inv_.size(); ++k) {
    std::uint64_t d = static_cast<std::uint64_t>(inv_[k]);
    long long ca = static_cast<long long>(a % d);
    a /= d;
    long long g = std::gcd(ca, inv_[k]);
    long long comp = inv_[k] / g;
    ord = ord * gl(comp) / gcd(ord, Int(gl(comp)));
  }
  return to_ll(ord);
}

}  // namespace newt
