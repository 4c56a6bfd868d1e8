#pragma once

#include <vector>

#include "tb/rational.hpp"

namespace tb {

// Plus-convention continued fraction p/q = a1 + 1/(a2 + 1/(... + 1/am)) with
// all entries >= 1, for coprime 0 < q < p.  Canonicalized to odd length
// (folding the last entry as a = (a-1) + 1/1 when needed), which keeps the
// entry sum fixed; the 4-plat diagram has sum(a_i) crossings.
std::vector<Int> positive_cf_odd(const Int& p, const Int& q);

// Evaluate a plus-convention continued fraction.
Rational evaluate_plus_cf(const std::vector<Int>& entries);

// Minus-convention all-even continued fraction
//   p/q~ = c1 - 1/(c2 - 1/(... - 1/cm)),  all c_i even and nonzero,
// where q~ is the parity-correct lift of q mod p (q~ even when p is odd,
// q~ = q when p is even).  An exact all-even expansion of p/q itself exists
// only for the parity pattern (odd, even); continuant parity rules out
// (odd, odd) and coprimality rules out (even, even), so the lift is forced.
// The symmetrized Seifert matrix of K(p,q) is tridiagonal with this diagonal.
struct EvenCF {
  std::vector<Int> entries;
  Int p;
  Int q_lift;  // the expanded fraction is exactly p / q_lift
};
EvenCF even_continued_fraction(const Int& p, const Int& q);

// Expansion of the exact fraction p/lift (no reduction mod p); the lift must
// have the parity that admits an all-even expansion.
EvenCF even_cf_of_fraction(const Int& p, const Int& lift);

// Evaluate a minus-convention continued fraction.
Rational evaluate_minus_cf(const std::vector<Int>& entries);

}  // namespace tb
