#include "tb/contfrac.hpp"

namespace tb {

std::vector<Int> positive_cf_odd(const Int& p, const Int& q) {
  if (p <= 0 || q <= 0 || q >= p || !coprime(p, q))
    throw std::invalid_argument("positive_cf_odd: need coprime 0 < q < p");
  std::vector<Int> cf;
  Int a = p, b = q;
  while (b != 0) {
    cf.push_back(floor_div(a, b));
    Int r = mod_floor(a, b);
    a = b;
    b = r;
  }
  // Greedy expansion of p/q > 1 ends with a last entry >= 2.
  if (cf.size() % 2 == 0) {
    Int last = cf.back();
    cf.back() = last - 1;
    cf.push_back(1);
  }
  return cf;
}

Rational evaluate_plus_cf(const std::vector<Int>& entries) {
  if (entries.empty()) throw std::invalid_argument("empty continued fraction");
  Rational v(entries.back());
  for (auto it = entries.rbegin() + 1; it != entries.rend(); ++it) {
    v = Rational(*it) + 1 / v;
  }
  return v;
}

Rational evaluate_minus_cf(const std::vector<Int>& entries) {
  if (entries.empty()) throw std::invalid_argument("empty continued fraction");
  Rational v(entries.back());
  for (auto it = entries.rbegin() + 1; it != entries.rend(); ++it) {
    v = Rational(*it) - 1 / v;
  }
  return v;
}

EvenCF even_continued_fraction(const Int& p, const Int& q_in) {
  if (p <= 0) throw std::invalid_argument("even_continued_fraction: p < 1");
  Int q = mod_floor(q_in, p);
  if (!coprime(p, q)) throw std::invalid_argument("even_continued_fraction: gcd != 1");
  if (p == 1) return {{}, 1, 0};
  Int lift = q;
  if (mod_floor(p, 2) == 1 && mod_floor(lift, 2) == 1) lift -= p;
  return even_cf_of_fraction(p, lift);
}

EvenCF even_cf_of_fraction(const Int& p, const Int& lift) {
  if (p <= 0 || lift == 0 || abs(lift) >= p || !coprime(p, abs(lift)))
    throw std::invalid_argument("even_cf_of_fraction: bad fraction");
  if (mod_floor(p + lift, 2) == 0)
    throw std::invalid_argument("even_cf_of_fraction: parity admits no all-even expansion");

  EvenCF out;
  out.p = p;
  out.q_lift = lift;
  // Greedy nearest-even expansion of p/lift.  The numerator/denominator
  // parities alternate (odd,even) -> (even,odd) -> ..., so the value is
  // never an odd integer and the nearest even entry c has |c*den - num| <
  // |den|, which forces termination.
  Int num = p, den = lift;
  while (den != 0) {
    // nearest even integer to num/den: 2*round(num/(2*den))
    Int two_den = 2 * den;
    Int k = floor_div(num + den, two_den);  // round-half-up of num/(2 den)
    Int c = 2 * k;
    Int r = c * den - num;  // next numerator after inversion is den/(c*den-num)
    if (c == 0) throw std::logic_error("even_continued_fraction: zero entry");
    out.entries.push_back(c);
    num = den;
    den = r;
  }
  return out;
}

}  // namespace tb
