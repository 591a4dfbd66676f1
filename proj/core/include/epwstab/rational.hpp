#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace epws {

// Exact rationals. GMP keeps them canonical (gcd-reduced, positive
// denominator), which is exactly the invariant we need for reproducible
// equality tests.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using Vec = std::vector<Rational>;

inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  return Rational(s);
}

inline std::string rational_str(const Rational& r) { return r.str(); }

// Deterministic splitmix64; used by every seeded sampler so results are
// platform independent (std::mt19937_64 would also do, but distributions
// are not pinned by the standard).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [lo, hi]
  long integer(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational rational(long span = 20) {
    return Rational(integer(-span, span));
  }

 private:
  std::uint64_t state_;
};

}  // namespace epws
