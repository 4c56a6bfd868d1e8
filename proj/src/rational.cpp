#include "tb/rational.hpp"

namespace tb {

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  Rational r;
  if (slash == std::string::npos) {
    r = Rational(Int(s));
  } else {
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    r = Rational(num, den);
  }
  r.canonicalize();
  return r;
}

std::tuple<Int, Int, Int> ext_gcd(const Int& a, const Int& b) {
  if (a == 0 && b == 0) throw std::invalid_argument("ext_gcd(0,0)");
  if (a == 0) return {abs(b), 0, b > 0 ? 1 : -1};
  if (b == 0) return {abs(a), a > 0 ? 1 : -1, 0};
  Int g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  // Shift to the smallest positive x; y follows from a*x + b*y = g.
  Int step = abs(b) / g;
  x = mod_floor(x, step);
  if (x == 0) x = step;
  y = (g - a * x) / b;
  return {g, x, y};
}

RepPair solve_rep(const Int& p, const Int& q) {
  if (p <= 0 || q <= 0 || q >= p) throw std::invalid_argument("solve_rep: need 0 < q < p");
  if (!coprime(p, q)) throw std::invalid_argument("solve_rep: gcd(p,q) != 1");
  Int s;
  if (q == 1) {
    s = 1;
  } else {
    if (mpz_invert(s.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t()) == 0)
      throw std::invalid_argument("solve_rep: p not invertible mod q");
    s = mod_floor(s, q);
    if (s == 0) s = q;
  }
  Int r = (p * s - 1) / q;
  return {r, s};
}

}  // namespace tb
