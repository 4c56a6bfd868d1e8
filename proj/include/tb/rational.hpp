#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <tuple>

namespace tb {

// Exact arithmetic substrate. All integers are arbitrary precision; there is
// no floating point anywhere in the library.
using Int = mpz_class;
using Rational = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline bool coprime(const Int& a, const Int& b) { return gcd(a, b) == 1; }

// Floor division and the representative of a mod m in [0, m), m > 0.
inline Int floor_div(const Int& a, const Int& m) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return q;
}

inline Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Serialized form is always "num/den" with den > 0, e.g. "0/1", "-3/4".
inline std::string rational_to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& s);

// Extended Euclid: g = gcd(a,b) > 0 and a*x + b*y = g.  Among all Bezout
// pairs, returns the one with the smallest positive x (when b != 0 and
// a != 0); for b == 0 returns (|a|, sgn a, 0), for a == 0 returns (|b|, 0,
// sgn b).  Rejects (0,0).
std::tuple<Int, Int, Int> ext_gcd(const Int& a, const Int& b);

// Minimal positive integers r, s with p*s - q*r = 1, for 0 < q < p coprime.
// s is the least positive inverse of p mod q (s in [1, q]), r = (p*s - 1)/q.
struct RepPair {
  Int r;
  Int s;
};
RepPair solve_rep(const Int& p, const Int& q);

}  // namespace tb
