#pragma once

#include <vector>

#include "tb/lens_d.hpp"
#include "tb/rational.hpp"

namespace tb {

// Weighted lattice-point count of the triangle with vertices (0,0), (n,0),
// (n, n*b/a): interior points weigh 1, boundary non-vertex points 1/2,
// integer vertices 1/4, and the origin is excluded.
struct TriangleCount {
  Rational area;
  Rational weighted;  // the "int" term
};
TriangleCount triangle_count(const Int& a, const Int& b, const Int& n);

// APS rho-invariant of the representation indexed by n in Z/aZ:
//   rho(a,b,n) = 4 (area - int) of the triangle above.
// Exact; rho(a,b,0) = 0 and rho(a,b,n) = rho(a,b,-n) = rho(a,b,n+a).
Rational rho(const Int& a, const Int& b, const Int& n);

// The window P of Spin^c representatives: all integers in
// [(p-1)/2, (p-1+2q)/2].  For p odd this has q+1 elements and one endpoint
// is dropped (both endpoints are conjugate indices, so the choice does not
// change any invariant; see calibrate()).
std::vector<Int> spinc_window(const Int& p, const Int& q);

Int n_of_i(const Int& p, const Int& q, const Int& i);

// Representation index produced by iota for a window representative.
struct RepIndex {
  Int a;  // modulus
  Int b;  // rotation parameter (the r of ps - qr = 1)
  Int n;  // in Z/aZ
};
RepIndex iota(const Int& p, const Int& q, const Int& i);

// One Spin^c structure of L(p,q) with its assembled data.  Side A rows come
// from the window of (p,q) itself; side B rows come from the window of
// (p, p-q) describing -L(p,q), with d and rho flipped back.
struct IvalRow {
  char side;   // 'A' or 'B'
  Int i_raw;   // window representative (side-local coordinates)
  Int n;       // n(i) in side-local coordinates
  Rational d;  // d-invariant, side-local orientation
  Rational rho_val;
  Int I;       // I-invariant of L(p,q) (side B already flipped back)
  bool spin;
};

struct IvalTable {
  Int p, q;
  int i_sign;  // +1: I = 8d + rho, -1: I = 8d - rho (side-local)
  std::vector<IvalRow> rows;  // exactly p rows
  std::vector<Int> class_values;  // one I per conjugacy class
  std::vector<Int> spin_values;   // one I per spin structure (1 or 2)
  std::vector<Int> nonspin_class_values;
};

// Thrown when 8d +- rho fails to be an integer under the requested sign.
struct IntegralityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// drop_high selects which endpoint of an odd-p window is discarded.
IvalTable i_table(const Int& p, const Int& q, int i_sign, bool drop_high = false);

// Single I-invariant by Spin^c index (via the table).
Int I_invariant(const Int& p, const Int& q, const Int& i, int i_sign);

}  // namespace tb
