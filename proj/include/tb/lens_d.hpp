#pragma once

#include <vector>

#include "tb/rational.hpp"

namespace tb {

// Ozsvath-Szabo correction terms of lens spaces, Spin^c structures indexed
// by Z/pZ.  Exact rationals; recursion
//   d(L(p,q), i) = ((2i+1-p-q)^2 - pq) / (4pq) - d(L(q, p mod q), i mod q)
// with d(L(1,0), 0) = 0.  Values are memoized; the cache is mutex-guarded
// and safe for concurrent use.
Rational d_invariant(const Int& p, const Int& q, const Int& i);

// Same relation evaluated with an un-reduced window representative i (which
// may exceed p); the quadratic term uses i itself while the Spin^c structure
// is i mod p.  Exposed so the window consistency property can be tested.
Rational d_relation_raw(const Int& p, const Int& q, const Int& i);

struct SpincRow {
  Int index;
  Rational d;
  bool spin;
};

struct SpincTable {
  Int p, q;
  std::vector<SpincRow> rows;  // exactly p rows, indices 0..p-1
};

// Full d-invariant table with the self-conjugate (spin) rows marked.  The
// conjugation involution is i -> (p+q-1-i) mod p; one fixed point for p odd,
// two for p even.
SpincTable spinc_table(const Int& p, const Int& q);

// Fixed points of the conjugation involution.
std::vector<Int> spin_indices(const Int& p, const Int& q);

}  // namespace tb
