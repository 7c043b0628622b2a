#pragma once

#include <array>
#include <cstdlib>

#include "newt/common.hpp"

namespace newt {

// Lattice exponent vectors and integral linear functionals on them.  Both are
// plain integer triples; a Weight is interpreted through dot().
using Exp3 = std::array<long long, 3>;
using Weight = std::array<long long, 3>;
using RVec3 = std::array<Rat, 3>;

inline Exp3 operator+(const Exp3& a, const Exp3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Exp3 operator-(const Exp3& a, const Exp3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Exp3 operator-(const Exp3& a) { return {-a[0], -a[1], -a[2]}; }

inline long long dot(const Weight& w, const Exp3& u) { return w[0] * u[0] + w[1] * u[1] + w[2] * u[2]; }

inline Rat dot(const Weight& w, const RVec3& u) {
  return gl(w[0]) * u[0] + gl(w[1]) * u[1] + gl(w[2]) * u[2];
}

inline Exp3 cross(const Exp3& a, const Exp3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline bool is_zero(const Exp3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }
inline bool all_nonneg(const Exp3& a) { return a[0] >= 0 && a[1] >= 0 && a[2] >= 0; }
inline bool all_positive(const Exp3& a) { return a[0] > 0 && a[1] > 0 && a[2] > 0; }

// gcd of coordinates; 0 for the zero vector
inline long long content(const Exp3& a) {
  return std::gcd(std::llabs(a[0]), std::gcd(std::llabs(a[1]), std::llabs(a[2])));
}

inline Exp3 primitive(const Exp3& a) {
  long long g = content(a);
  if (g == 0) throw InternalError("primitive(0)");
  return {a[0] / g, a[1] / g, a[2] / g};
}

inline RVec3 to_rvec(const Exp3& a) { return {Rat(gl(a[0])), Rat(gl(a[1])), Rat(gl(a[2]))}; }

inline RVec3 operator+(const RVec3& a, const RVec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline RVec3 operator-(const RVec3& a, const RVec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline RVec3 operator*(const Rat& s, const RVec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

inline std::string str(const Exp3& a) {
  return "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + ")";
}
inline std::string str(const RVec3& a) {
  return "(" + rat_str(a[0]) + "," + rat_str(a[1]) + "," + rat_str(a[2]) + ")";
}

}  // namespace newt
