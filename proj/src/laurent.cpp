#include "newt/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace newt {

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::operator*(const Rat& s) const {
  LaurentPoly r;
  if (s == 0) return r;
  for (auto& [e, c] : terms_) r.terms_[e] = c * s;
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exp3& sh) const {
  LaurentPoly r;
  for (auto& [e, c] : terms_) r.terms_[e + sh] = c;
  return r;
}

long long LaurentPoly::weight(const Weight& w) const {
  if (terms_.empty()) throw PrecondError("weight of the zero polynomial is undefined");
  bool first = true;
  long long m = 0;
  for (auto& [e, c] : terms_) {
    long long v = dot(w, e);
    if (first || v < m) m = v;
    first = false;
  }
  return m;
}

LaurentPoly LaurentPoly::principal_part(const Weight& w) const {
  long long m = weight(w);
  LaurentPoly r;
  for (auto& [e, c] : terms_)
    if (dot(w, e) == m) r.terms_[e] = c;
  return r;
}

LaurentPoly LaurentPoly::truncated(long long d) const {
  LaurentPoly r;
  for (auto& [e, c] : terms_)
    if (e[0] + e[1] + e[2] <= d) r.terms_[e] = c;
  return r;
}

namespace {

// graded-lex comparison used as the division order
bool grlex_less(const Exp3& a, const Exp3& b) {
  long long da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
  if (da != db) return da < db;
  return a < b;
}

Exp3 min_exponents(const LaurentPoly& p) {
  Exp3 m{};
  bool first = true;
  for (auto& [e, c] : p.terms()) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (int i = 0; i < 3; ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

}  // namespace

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw PrecondError("division by zero polynomial");
  if (is_zero()) return LaurentPoly();

  // Shift both operands to nonnegative exponents.  When a quotient exists its
  // minimal exponents are exactly min(this) - min(divisor) coordinatewise, so
  // the shifted quotient is an honest polynomial.
  Exp3 mg = min_exponents(*this), mf = min_exponents(divisor);
  LaurentPoly r = shifted(-mg);
  LaurentPoly f = divisor.shifted(-mf);

  // leading term of f in graded-lex
  Exp3 flead{};
  bool first = true;
  for (auto& [e, c] : f.terms())
    if (first || grlex_less(flead, e)) {
      flead = e;
      first = false;
    }
  Rat fc = f.coeff(flead);

  LaurentPoly q;
  while (!r.is_zero()) {
    Exp3 rlead{};
    first = true;
    for (auto& [e, c] : r.terms())
      if (first || grlex_less(rlead, e)) {
        rlead = e;
        first = false;
      }
    Exp3 d = rlead - flead;
    if (!all_nonneg(d)) return std::nullopt;
    Rat qc = r.coeff(rlead) / fc;
    q.add_term(d, qc);
    r = r - f.shifted(d) * qc;
  }
  return q.shifted(mg - mf);
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [e, c] : terms_) {
    Rat a = c;
    if (a < 0) {
      out << (first ? "-" : " - ");
      a = -a;
    } else if (!first) {
      out << " + ";
    }
    bool has_var = !newt::is_zero(e);
    if (a != 1 || !has_var) {
      out << rat_str(a);
      if (has_var) out << "*";
    }
    const char* names = "xyz";
    bool started = false;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (started) out << "*";
      out << names[i];
      if (e[i] != 1) out << "^" << e[i];
      started = true;
    }
    first = false;
  }
  return out.str();
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos));
  }

  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stoll(s.substr(start, pos - start));
  }

  // [int][/int]
  Rat rational() {
    long long num = integer();
    if (accept('/')) {
      long long den = integer();
      if (den == 0) fail("zero denominator");
      return rat(num, den);
    }
    return rat(num);
  }

  int var_index() {
    skip_ws();
    if (pos >= s.size()) return -1;
    switch (s[pos]) {
      case 'x': ++pos; return 0;
      case 'y': ++pos; return 1;
      case 'z': ++pos; return 2;
      default: return -1;
    }
  }

  // term := [rational]['*'] (var['^'int])('*'?(var['^'int]))*
  void term(LaurentPoly& acc, int sign) {
    skip_ws();
    Rat coeff(sign);
    bool saw_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff *= rational();
      saw_coeff = true;
    }
    Exp3 e{0, 0, 0};
    bool saw_var = false;
    for (;;) {
      if (saw_coeff || saw_var) {
        std::size_t save = pos;
        bool star = accept('*');
        int v = var_index();
        if (v < 0) {
          if (star) fail("expected variable after '*'");
          pos = save;
          break;
        }
        long long ex = 1;
        if (accept('^')) {
          bool neg = accept('-');
          ex = integer();
          if (neg) fail("negative exponents are not allowed in this context");
        }
        e[v] += ex;
        saw_var = true;
      } else {
        int v = var_index();
        if (v < 0) fail("expected coefficient or variable");
        long long ex = 1;
        if (accept('^')) {
          bool neg = accept('-');
          ex = integer();
          if (neg) fail("negative exponents are not allowed in this context");
        }
        e[v] += ex;
        saw_var = true;
      }
    }
    if (!saw_coeff && !saw_var) fail("empty term");
    acc.add_term(e, coeff);
  }

  LaurentPoly parse() {
    LaurentPoly acc;
    skip_ws();
    if (pos == s.size()) fail("empty input");
    int sign = 1;
    if (accept('-'))
      sign = -1;
    else
      accept('+');
    term(acc, sign);
    for (;;) {
      skip_ws();
      if (pos == s.size()) break;
      if (accept('+'))
        sign = 1;
      else if (accept('-'))
        sign = -1;
      else
        fail("expected '+' or '-'");
      term(acc, sign);
    }
    return acc;
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
  Parser p(text);
  return p.parse();
}

}  // namespace newt
