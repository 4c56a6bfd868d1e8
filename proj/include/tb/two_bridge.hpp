#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tb/contfrac.hpp"
#include "tb/rational.hpp"

namespace tb {

// A 2-bridge link K(p,q) in normal form 0 <= q < p, gcd(p,q) = 1.
// q = 0 only for the unknot sentinel K(1,0).  p odd <=> knot, p even <=>
// 2-component link.  The mirror flag records whether a mirror image was
// taken while normalizing (input q < 0).
struct TwoBridge {
  Int p;
  Int q;
  bool mirrored = false;

  bool is_unknot() const { return p == 1; }
  int components() const { return mod_floor(p, 2) == 0 ? 2 : 1; }
  const Int& determinant() const { return p; }

  bool operator==(const TwoBridge& o) const { return p == o.p && q == o.q; }
};

TwoBridge normalize(const Int& p, const Int& q);
TwoBridge mirror(const TwoBridge& k);

// Orientation classes of the underlying unoriented link: o1 is the base
// orientation of the generated diagram; o2 (links only) reverses the
// non-base component.
enum class Orientation { o1, o2 };

// A 4-plat diagram.  Crossings sit in a row of twist regions read west to
// east; geometric slots at each crossing are fixed as
//   0 = west-upper, 1 = west-lower, 2 = east-lower, 3 = east-upper,
// which is the counterclockwise rotation order used for face tracing.
// over_back == true means the backslash strand (slot 0 <-> slot 2) is the
// over strand.
struct Crossing {
  std::array<int, 4> arc;  // arc id per slot
  bool over_back;
};

class PlanarDiagram {
 public:
  // Build the canonical alternating 4-plat of K(p,q), p >= 2.
  static PlanarDiagram canonical(const TwoBridge& k);

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return n_arcs_; }
  int component_count() const { return n_components_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  bool faces_available() const { return faces_ok_; }

  // Writhe-style sign of crossing c under the given orientation class.
  int crossing_sign(int c, Orientation o = Orientation::o1) const;
  int negative_crossings(Orientation o = Orientation::o1) const;
  int writhe(Orientation o = Orientation::o1) const;

  // Total linking number of the two components (p even only).
  Int linking_number(Orientation o = Orientation::o1) const;

  // Goeritz/Gordon-Litherland signature for the given orientation class.
  Int signature(Orientation o = Orientation::o1) const;

  // |det| of the Goeritz matrix (any dropped region), an oracle for det(K).
  Int goeritz_determinant() const;

  bool is_alternating() const;

  // Index of the skein crossing ("top crossing" of the normal form).
  int top_crossing() const { return 0; }

  // The two smoothings at a crossing.  The oriented one inherits the
  // orientation of this diagram; the other gets a fresh traversal.
  PlanarDiagram smoothed(int c, bool oriented) const;

  // R1 removal of a kink whose loop arc spans corners (loop_slot, loop_slot+1).
  PlanarDiagram without_kink(int c, int loop_slot) const;

  // Component id (0 or 1) of the strand entering a given slot.
  int component_of_slot(int c, int slot) const;

  // PD-code JSON: [{"pd":[a,b,c,d],"sign":s}, ...] with arcs numbered from 1
  // and tuples counterclockwise from the incoming under-strand.
  std::string pd_json(Orientation o = Orientation::o1) const;

 private:
  friend PlanarDiagram build_plat(const std::vector<Int>& cf);
  void finalize();  // components, orientations, faces, coloring

  std::vector<Crossing> crossings_;
  int n_arcs_ = 0;

  // Orientation bookkeeping: for each crossing and slot, whether the strand
  // flows out of the crossing at that slot (base orientation).
  std::vector<std::array<bool, 4>> outgoing_;
  std::vector<int> components_of_arc_;
  int n_components_ = 0;

  // Faces: per crossing and corner k (between slots k and k+1 mod 4), the
  // face id; plus a white/black color per face.  faces_ok_ is false for
  // diagrams whose checkerboard structure breaks (kinks, disconnection).
  std::vector<std::array<int, 4>> corner_face_;
  int n_faces_ = 0;
  std::vector<bool> face_black_;
  bool faces_ok_ = false;

  int eta(int c) const;           // Goeritz sign, orientation-free
  bool black_horizontal(int c) const;
  std::vector<std::vector<Rational>> goeritz_matrix(int drop) const;
};

// Exact signature of a symmetric rational matrix (LDL^T with symmetric
// pivoting; exact arithmetic).
int symmetric_signature(std::vector<std::vector<Rational>> m);

// Signature from the all-even continued fraction: the symmetrized Seifert
// matrix of K(p,q) is tridiagonal with the even entries on the diagonal and
// ones off it.  For links the two odd lifts of q give the two orientation
// classes; both values are returned (equal entries for knots).
std::vector<Int> seifert_signatures(const TwoBridge& k);

// sigma(K^o) via Gordon-Litherland on the canonical diagram; the Seifert
// route is the independent cross-check exercised by the tests.
Int signature_of(const TwoBridge& k, Orientation o = Orientation::o1);

Int linking_number_of(const TwoBridge& k);

// Skein children at the top crossing of the canonical positive form.
//   k0, k1: the two smoothings as fractions (Riley: K(q,-p) and K(p-q,q)),
//           with k0 = the smoothing that inherits the orientation of K;
//   e     : n_-(K1 diagram) - n_-(K diagram);
//   lk_inherited: linking number of the oriented child (knot case);
//   mirror_first: the canonical diagram's top crossing was negative, so the
//           data refers to the mirror image m(K) instead (callers flip).
struct SkeinChildren {
  TwoBridge k0;
  TwoBridge k1;
  Int e;
  Int lk_inherited;
  bool mirror_first;
  Orientation base;  // orientation class that makes the top crossing positive
};
SkeinChildren skein_children(const TwoBridge& k);

}  // namespace tb
