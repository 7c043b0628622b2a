#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "newt/vec.hpp"

namespace newt {

// Laurent polynomial in x, y, z with exact rational coefficients.
// Canonical form: the term map never stores a zero coefficient, so equality
// of values is equality of maps.  Immutable in spirit: all operations return
// new values.
class LaurentPoly {
 public:
  using Terms = std::map<Exp3, Rat>;

  LaurentPoly() = default;

  static LaurentPoly monomial(const Exp3& e, const Rat& c) {
    LaurentPoly p;
    if (c != 0) p.terms_[e] = c;
    return p;
  }

  // Power-series entry point: sums of terms like "2*x^3*y", "-1/2*z^7", "y".
  // Negative exponents are a parse error here (Laurent terms only arise from
  // division).
  static LaurentPoly parse(const std::string& text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::vector<Exp3> support() const {
    std::vector<Exp3> s;
    s.reserve(terms_.size());
    for (auto& [e, c] : terms_) s.push_back(e);
    return s;
  }

  bool has_negative_exponent() const {
    for (auto& [e, c] : terms_)
      if (!all_nonneg(e)) return true;
    return false;
  }

  long long max_total_degree() const {
    long long d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
  }

  Rat coeff(const Exp3& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const Exp3& e, const Rat& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (c != 0) terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Rat& s) const;
  LaurentPoly shifted(const Exp3& e) const;  // multiply by the monomial x^e
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  // min of the functional over the support; undefined on zero
  long long weight(const Weight& w) const;
  // sum of the terms attaining weight(w)
  LaurentPoly principal_part(const Weight& w) const;

  // Exact division in the Laurent ring: returns h with h*divisor == *this, or
  // nullopt when no such h exists.  The quotient is unique, so the term order
  // used internally does not affect the result.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  // canonical print; parse(str()) == *this for nonnegative exponents
  std::string str() const;

  // truncate away terms of total degree > d (power-series context)
  LaurentPoly truncated(long long d) const;

 private:
  Terms terms_;
};

inline LaurentPoly operator*(const Rat& s, const LaurentPoly& p) { return p * s; }

}  // namespace newt
