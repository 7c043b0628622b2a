#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace newt {

using Int = mpz_class;
using Rat = mpq_class;

// Error taxonomy.  CLI maps these onto exit codes: ParseError -> 2,
// InternalError -> 3, everything else -> 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : Error {
  using Error::Error;
};
struct PrecondError : Error {
  using Error::Error;
};
// An exact identity the construction relies on failed to hold; this always
// indicates a bug upstream, never bad user input.
struct InternalError : Error {
  using Error::Error;
};

inline long long to_ll(const Int& v) {
  if (!v.fits_slong_p()) throw InternalError("integer out of machine range: " + v.get_str());
  return v.get_si();
}

// gmpxx has no long long overloads; long is 64-bit on every platform this
// builds for
static_assert(sizeof(long) == sizeof(long long));
inline long gl(long long v) { return static_cast<long>(v); }

inline long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

inline Rat rat(long long num, long long den = 1) {
  Rat r(Int(gl(num)), Int(gl(den)));
  r.canonicalize();
  return r;
}

inline Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string rat_str(const Rat& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Minimal deterministic RNG (splitmix64).  Used instead of <random>
// distributions so that seeded reports are byte-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw InternalError("Rng::below(0)");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
      std::uint64_t v = next();
      if (v < limit) return v % n;
    }
  }

  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // derive an independent stream; used to keep parallel loops deterministic
  Rng fork(std::uint64_t tag) const {
    Rng r(state_ ^ (0xd1342543de82ef95ULL * (tag + 1)));
    r.next();
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace newt
