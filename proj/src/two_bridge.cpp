#include "tb/two_bridge.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace tb {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

constexpr bool kMidOverBack = true;   // twist region on strands (1,2)
constexpr bool kTopOverBack = false;  // twist region on strands (0,1)

// Slot direction vectors pointing away from the crossing, y up.
constexpr int kSlotDir[4][2] = {{-1, 1}, {-1, -1}, {1, -1}, {1, 1}};

}  // namespace

TwoBridge normalize(const Int& p, const Int& q) {
  if (p < 1) throw std::invalid_argument("normalize: p < 1");
  Int qn = mod_floor(q, p);
  if (p == 1) return {1, 0, false};
  if (qn == 0 || !coprime(p, qn)) throw std::invalid_argument("normalize: gcd(p,q) != 1");
  return {p, qn, q < 0};
}

TwoBridge mirror(const TwoBridge& k) {
  if (k.is_unknot()) return k;
  return {k.p, k.p - k.q, !k.mirrored};
}

PlanarDiagram build_plat(const std::vector<Int>& cf) {
  PlanarDiagram d;
  int next_arc = 0;
  int cur[4];
  // West caps: positions 0,1 share one arc, positions 2,3 the other.
  cur[0] = cur[1] = next_arc++;
  cur[2] = cur[3] = next_arc++;
  for (size_t j = 0; j < cf.size(); ++j) {
    int r = (j % 2 == 0) ? 1 : 0;  // odd entries on (1,2), even on (0,1)
    bool over_back = (j % 2 == 0) ? kMidOverBack : kTopOverBack;
    if (!cf[j].fits_slong_p()) throw std::overflow_error("plat: entry too large");
    long reps = cf[j].get_si();
    for (long t = 0; t < reps; ++t) {
      Crossing c;
      c.over_back = over_back;
      c.arc[0] = cur[r];
      c.arc[1] = cur[r + 1];
      c.arc[2] = next_arc++;  // continuation of the slot-0 strand
      c.arc[3] = next_arc++;
      cur[r + 1] = c.arc[2];
      cur[r] = c.arc[3];
      d.crossings_.push_back(c);
    }
  }
  // East caps.
  UnionFind uf(next_arc);
  uf.unite(cur[0], cur[1]);
  uf.unite(cur[2], cur[3]);
  std::map<int, int> relabel;
  for (auto& c : d.crossings_)
    for (int s = 0; s < 4; ++s) {
      int root = uf.find(c.arc[s]);
      auto [it, fresh] = relabel.try_emplace(root, static_cast<int>(relabel.size()));
      c.arc[s] = it->second;
    }
  d.n_arcs_ = static_cast<int>(relabel.size());
  d.finalize();
  return d;
}

PlanarDiagram PlanarDiagram::canonical(const TwoBridge& k) {
  if (k.is_unknot()) throw std::invalid_argument("canonical: unknot has no plat");
  return build_plat(positive_cf_odd(k.p, k.q));
}

void PlanarDiagram::finalize() {
  const int nc = crossing_count();
  // Arc endpoints: exactly two (crossing, slot) incidences per arc.
  std::vector<std::vector<std::pair<int, int>>> ends(n_arcs_);
  for (int c = 0; c < nc; ++c)
    for (int s = 0; s < 4; ++s) ends[crossings_[c].arc[s]].push_back({c, s});
  for (const auto& e : ends)
    if (!e.empty() && e.size() != 2)
      throw std::logic_error("diagram: arc with valence != 2");

  // Components: strands connect slot 0<->2 and 1<->3 at each crossing.
  UnionFind comp(n_arcs_);
  for (int c = 0; c < nc; ++c) {
    comp.unite(crossings_[c].arc[0], crossings_[c].arc[2]);
    comp.unite(crossings_[c].arc[1], crossings_[c].arc[3]);
  }
  components_of_arc_.assign(n_arcs_, -1);
  n_components_ = 0;
  for (int a = 0; a < n_arcs_; ++a) {
    int root = comp.find(a);
    if (components_of_arc_[root] < 0) components_of_arc_[root] = n_components_++;
    components_of_arc_[a] = components_of_arc_[root];
  }

  // Base orientation: walk each component from its smallest arc id.
  outgoing_.assign(nc, {false, false, false, false});
  std::vector<bool> arc_done(n_arcs_, false);
  for (int a0 = 0; a0 < n_arcs_; ++a0) {
    if (arc_done[a0] || ends[a0].empty()) continue;
    int arc = a0;
    auto head = ends[a0][0];
    while (!arc_done[arc]) {
      arc_done[arc] = true;
      auto [c, s] = head;
      int t = (s + 2) % 4;  // strand partner slot
      outgoing_[c][t] = true;
      int next = crossings_[c].arc[t];
      // head of `next` = its endpoint that is not (c, t)
      auto& ne = ends[next];
      head = (ne[0] == std::make_pair(c, t)) ? ne[1] : ne[0];
      arc = next;
    }
  }

  // Faces: orbits of dir-arc -> (turn to CCW-next slot at the head).
  // dir-arc id = 2*arc + e, directed toward ends[arc][e].
  corner_face_.assign(nc, {-1, -1, -1, -1});
  n_faces_ = 0;
  faces_ok_ = nc > 0;
  std::vector<int> dir_face(2 * n_arcs_, -1);
  for (int d0 = 0; d0 < 2 * n_arcs_ && faces_ok_; ++d0) {
    if (dir_face[d0] >= 0 || ends[d0 / 2].empty()) continue;
    int face = n_faces_++;
    int d = d0;
    do {
      dir_face[d] = face;
      auto [c, s] = ends[d / 2][d % 2];
      if (corner_face_[c][s] >= 0) {
        faces_ok_ = false;
        break;
      }
      corner_face_[c][s] = face;
      int s2 = (s + 1) % 4;
      int next_arc_id = crossings_[c].arc[s2];
      int e = (ends[next_arc_id][0] == std::make_pair(c, s2)) ? 1 : 0;
      d = 2 * next_arc_id + e;
    } while (d != d0);
  }
  if (faces_ok_ && n_faces_ != nc + 2) faces_ok_ = false;

  // Checkerboard coloring: the two sides of an arc get opposite colors.
  if (faces_ok_) {
    face_black_.assign(n_faces_, false);
    std::vector<int> color(n_faces_, -1);
    std::vector<int> stack;
    color[0] = 0;
    stack.push_back(0);
    while (!stack.empty() && faces_ok_) {
      int f = stack.back();
      stack.pop_back();
      for (int a = 0; a < n_arcs_; ++a) {
        if (ends[a].empty()) continue;
        int f0 = dir_face[2 * a], f1 = dir_face[2 * a + 1];
        if (f0 != f && f1 != f) continue;
        int g = (f0 == f) ? f1 : f0;
        if (g == f) {
          faces_ok_ = false;  // nugatory crossing
          break;
        }
        if (color[g] < 0) {
          color[g] = 1 - color[f];
          stack.push_back(g);
        } else if (color[g] == color[f]) {
          faces_ok_ = false;
          break;
        }
      }
    }
    if (faces_ok_)
      for (int f = 0; f < n_faces_; ++f) {
        if (color[f] < 0) faces_ok_ = false;  // disconnected
        face_black_[f] = color[f] == 1;
      }
  }
}

int PlanarDiagram::component_of_slot(int c, int slot) const {
  return components_of_arc_[crossings_[c].arc[slot]];
}

int PlanarDiagram::crossing_sign(int c, Orientation o) const {
  const Crossing& x = crossings_[c];
  int over_out = x.over_back ? (outgoing_[c][2] ? 2 : 0) : (outgoing_[c][3] ? 3 : 1);
  int under_out = x.over_back ? (outgoing_[c][3] ? 3 : 1) : (outgoing_[c][2] ? 2 : 0);
  int ox = kSlotDir[over_out][0], oy = kSlotDir[over_out][1];
  int ux = kSlotDir[under_out][0], uy = kSlotDir[under_out][1];
  if (o == Orientation::o2) {
    int over_slot = x.over_back ? 0 : 1;
    int under_slot = x.over_back ? 1 : 0;
    if (component_of_slot(c, over_slot) != 0) { ox = -ox; oy = -oy; }
    if (component_of_slot(c, under_slot) != 0) { ux = -ux; uy = -uy; }
  }
  int det = ox * uy - oy * ux;
  return det > 0 ? 1 : -1;
}

int PlanarDiagram::negative_crossings(Orientation o) const {
  int n = 0;
  for (int c = 0; c < crossing_count(); ++c)
    if (crossing_sign(c, o) < 0) ++n;
  return n;
}

int PlanarDiagram::writhe(Orientation o) const {
  int w = 0;
  for (int c = 0; c < crossing_count(); ++c) w += crossing_sign(c, o);
  return w;
}

Int PlanarDiagram::linking_number(Orientation o) const {
  if (n_components_ != 2) throw std::invalid_argument("linking_number: not a 2-component diagram");
  Int twice = 0;
  for (int c = 0; c < crossing_count(); ++c)
    if (component_of_slot(c, 0) != component_of_slot(c, 1)) twice += crossing_sign(c, o);
  if (mod_floor(twice, 2) != 0) throw std::logic_error("linking_number: odd crossing sum");
  return twice / 2;
}

bool PlanarDiagram::black_horizontal(int c) const {
  // Corner k lies between slots k and k+1: 0 = west, 1 = south, 2 = east,
  // 3 = north.  Black at west/east means the black diagonal is horizontal.
  bool w = face_black_[corner_face_[c][0]];
  bool e = face_black_[corner_face_[c][2]];
  bool s = face_black_[corner_face_[c][1]];
  bool n = face_black_[corner_face_[c][3]];
  if (w != e || s != n || w == s) throw std::logic_error("checkerboard corners inconsistent");
  return w;
}

int PlanarDiagram::eta(int c) const {
  return (black_horizontal(c) == crossings_[c].over_back) ? -1 : 1;
}

std::vector<std::vector<Rational>> PlanarDiagram::goeritz_matrix(int drop) const {
  if (!faces_ok_) throw std::logic_error("goeritz: faces unavailable");
  std::vector<int> white;
  for (int f = 0; f < n_faces_; ++f)
    if (!face_black_[f]) white.push_back(f);
  std::vector<int> idx(n_faces_, -1);
  for (size_t i = 0; i < white.size(); ++i) idx[white[i]] = static_cast<int>(i);
  int w = static_cast<int>(white.size());
  std::vector<std::vector<Rational>> g(w, std::vector<Rational>(w, 0));
  for (int c = 0; c < crossing_count(); ++c) {
    int u, v;
    if (black_horizontal(c)) {  // white corners north/south
      u = idx[corner_face_[c][3]];
      v = idx[corner_face_[c][1]];
    } else {  // white corners west/east
      u = idx[corner_face_[c][0]];
      v = idx[corner_face_[c][2]];
    }
    if (u == v) continue;
    g[u][v] -= eta(c);
    g[v][u] -= eta(c);
  }
  for (int i = 0; i < w; ++i) {
    Rational sum = 0;
    for (int j = 0; j < w; ++j)
      if (j != i) sum += g[i][j];
    g[i][i] = -sum;
  }
  if (w < 2) throw std::logic_error("goeritz: fewer than two white regions");
  if (drop < 0 || drop >= w) drop = 0;
  std::vector<std::vector<Rational>> r(w - 1, std::vector<Rational>(w - 1));
  for (int i = 0, ri = 0; i < w; ++i) {
    if (i == drop) continue;
    for (int j = 0, rj = 0; j < w; ++j) {
      if (j == drop) continue;
      r[ri][rj++] = g[i][j];
    }
    ++ri;
  }
  return r;
}

int symmetric_signature(std::vector<std::vector<Rational>> m) {
  int n = static_cast<int>(m.size());
  int pos = 0, neg = 0;
  std::vector<bool> used(n, false);
  for (int step = 0; step < n; ++step) {
    int pivot = -1;
    for (int i = 0; i < n; ++i)
      if (!used[i] && m[i][i] != 0) { pivot = i; break; }
    if (pivot < 0) {
      // all remaining diagonal entries vanish; find an off-diagonal one
      int a = -1, b = -1;
      for (int i = 0; i < n && a < 0; ++i)
        if (!used[i])
          for (int j = i + 1; j < n; ++j)
            if (!used[j] && m[i][j] != 0) { a = i; b = j; break; }
      if (a < 0) break;  // zero block, contributes nothing
      for (int k = 0; k < n; ++k) m[a][k] += m[b][k];
      for (int k = 0; k < n; ++k) m[k][a] += m[k][b];
      pivot = a;
    }
    used[pivot] = true;
    const Rational d = m[pivot][pivot];
    if (d > 0) ++pos; else ++neg;
    for (int i = 0; i < n; ++i) {
      if (used[i] || m[i][pivot] == 0) continue;
      Rational f = m[i][pivot] / d;
      for (int j = 0; j < n; ++j)
        if (!used[j]) m[i][j] -= f * m[pivot][j];
      m[i][pivot] = 0;
    }
    for (int j = 0; j < n; ++j)
      if (!used[j]) m[pivot][j] = 0;
  }
  return pos - neg;
}

namespace {

Rational matrix_determinant(std::vector<std::vector<Rational>> m) {
  int n = static_cast<int>(m.size());
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (m[i][col] != 0) { pivot = i; break; }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      Rational f = m[i][col] / m[col][col];
      for (int j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return det;
}

}  // namespace

Int PlanarDiagram::goeritz_determinant() const {
  Rational det = matrix_determinant(goeritz_matrix(0));
  Rational a = abs(det);
  if (a.get_den() != 1) throw std::logic_error("goeritz determinant not integral");
  return a.get_num();
}

Int PlanarDiagram::signature(Orientation o) const {
  int sig = symmetric_signature(goeritz_matrix(0));
  Int mu = 0;
  for (int c = 0; c < crossing_count(); ++c) {
    int e = eta(c);
    if (crossing_sign(c, o) * e == 1) mu += e;  // type II crossing
  }
  return Int(sig) - mu;
}

bool PlanarDiagram::is_alternating() const {
  std::vector<std::vector<bool>> over_at(n_arcs_);
  for (int c = 0; c < crossing_count(); ++c)
    for (int s = 0; s < 4; ++s) {
      bool over = crossings_[c].over_back ? (s % 2 == 0) : (s % 2 == 1);
      over_at[crossings_[c].arc[s]].push_back(over);
    }
  for (const auto& v : over_at)
    if (v.size() == 2 && v[0] == v[1]) return false;
  return true;
}

PlanarDiagram PlanarDiagram::smoothed(int c, bool oriented) const {
  // Horizontal pairing joins slots (0,3) and (1,2); vertical joins (0,1)
  // and (2,3).  The orientation-respecting pairing puts one inflow and one
  // outflow on each new arc.
  bool horizontal_oriented = outgoing_[c][0] != outgoing_[c][3];
  bool horizontal = oriented ? horizontal_oriented : !horizontal_oriented;
  UnionFind uf(n_arcs_);
  const auto& x = crossings_[c];
  if (horizontal) {
    uf.unite(x.arc[0], x.arc[3]);
    uf.unite(x.arc[1], x.arc[2]);
  } else {
    uf.unite(x.arc[0], x.arc[1]);
    uf.unite(x.arc[2], x.arc[3]);
  }
  PlanarDiagram d;
  std::map<int, int> relabel;
  for (int i = 0; i < crossing_count(); ++i) {
    if (i == c) continue;
    Crossing nc = crossings_[i];
    for (int s = 0; s < 4; ++s) {
      int root = uf.find(nc.arc[s]);
      auto [it, fresh] = relabel.try_emplace(root, static_cast<int>(relabel.size()));
      nc.arc[s] = it->second;
    }
    d.crossings_.push_back(nc);
  }
  d.n_arcs_ = static_cast<int>(relabel.size());
  if (d.crossings_.empty()) {
    d.n_arcs_ = 0;
    d.n_components_ = 1;
    d.faces_ok_ = false;
    return d;
  }
  d.finalize();
  return d;
}

PlanarDiagram PlanarDiagram::without_kink(int c, int loop_slot) const {
  // R1 removal: the loop arc at corners (loop_slot, loop_slot+1) vanishes
  // and the strand through the other two slots is joined straight.
  const Crossing& x = crossings_[c];
  int a = x.arc[(loop_slot + 2) % 4];
  int b = x.arc[(loop_slot + 3) % 4];
  UnionFind uf(n_arcs_);
  uf.unite(a, b);
  PlanarDiagram d;
  std::map<int, int> relabel;
  for (int i = 0; i < crossing_count(); ++i) {
    if (i == c) continue;
    Crossing nc = crossings_[i];
    for (int s = 0; s < 4; ++s) {
      int root = uf.find(nc.arc[s]);
      auto [it, fresh] = relabel.try_emplace(root, static_cast<int>(relabel.size()));
      nc.arc[s] = it->second;
    }
    d.crossings_.push_back(nc);
  }
  d.n_arcs_ = static_cast<int>(relabel.size());
  if (d.crossings_.empty()) {
    d.n_components_ = 1;
    d.faces_ok_ = false;
    return d;
  }
  d.finalize();
  return d;
}

std::string PlanarDiagram::pd_json(Orientation o) const {
  nlohmann::json out = nlohmann::json::array();
  for (int c = 0; c < crossing_count(); ++c) {
    const Crossing& x = crossings_[c];
    int under_in = x.over_back ? (outgoing_[c][1] ? 3 : 1) : (outgoing_[c][0] ? 2 : 0);
    nlohmann::json pd = nlohmann::json::array();
    for (int k = 0; k < 4; ++k) pd.push_back(x.arc[(under_in + k) % 4] + 1);
    out.push_back({{"pd", pd}, {"sign", crossing_sign(c, o)}});
  }
  return out.dump();
}

std::vector<Int> seifert_signatures(const TwoBridge& k) {
  if (k.is_unknot()) return {0};
  auto tridiag_sig = [](const std::vector<Int>& diag) {
    int n = static_cast<int>(diag.size());
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i) {
      m[i][i] = Rational(diag[i]);
      if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = 1;
    }
    return Int(symmetric_signature(std::move(m)));
  };
  if (k.components() == 1) {
    Int s = tridiag_sig(even_continued_fraction(k.p, k.q).entries);
    return {s, s};
  }
  Int s1 = tridiag_sig(even_cf_of_fraction(k.p, k.q).entries);
  Int s2 = tridiag_sig(even_cf_of_fraction(k.p, k.q - k.p).entries);
  return {s1, s2};
}

Int signature_of(const TwoBridge& k, Orientation o) {
  if (k.is_unknot()) {
    if (o == Orientation::o2) throw std::invalid_argument("signature: o2 on a knot");
    return 0;
  }
  if (o == Orientation::o2 && k.components() == 1)
    throw std::invalid_argument("signature: o2 on a knot");
  static std::map<std::tuple<Int, Int, int>, Int> memo;
  static std::mutex mu;
  std::tuple<Int, Int, int> key{k.p, k.q, o == Orientation::o2};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  Int sig = PlanarDiagram::canonical(k).signature(o);
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(key, sig);
  return sig;
}

Int linking_number_of(const TwoBridge& k) {
  if (k.components() != 2) throw std::invalid_argument("linking number: not a link");
  return PlanarDiagram::canonical(k).linking_number(Orientation::o1);
}

namespace {

// Determinant of a (possibly kinked) diagram via Goeritz, removing R1 kinks
// first since they break the checkerboard coloring.
Int smoothed_determinant(const PlanarDiagram& d) {
  PlanarDiagram r = d;
  for (bool changed = true; changed;) {
    changed = false;
    for (int c = 0; c < r.crossing_count(); ++c) {
      const auto& x = r.crossings()[c];
      int loop_slot = -1;
      for (int s = 0; s < 4; ++s)
        if (x.arc[s] == x.arc[(s + 1) % 4]) loop_slot = s;
      if (loop_slot >= 0) {
        r = r.without_kink(c, loop_slot);
        changed = true;
        break;
      }
    }
  }
  if (r.crossing_count() == 0) return 1;
  return r.goeritz_determinant();
}

}  // namespace

SkeinChildren skein_children(const TwoBridge& k) {
  if (k.is_unknot()) throw std::invalid_argument("skein_children: unknot");
  PlanarDiagram d = PlanarDiagram::canonical(k);
  Orientation base = Orientation::o1;
  int s0 = d.crossing_sign(0, base);
  if (s0 < 0 && k.components() == 2 &&
      d.component_of_slot(0, 0) != d.component_of_slot(0, 1)) {
    base = Orientation::o2;
    s0 = d.crossing_sign(0, base);
  }
  if (s0 < 0) {
    SkeinChildren sc = skein_children(mirror(k));
    if (sc.mirror_first) throw std::logic_error("skein: mirror image also has negative top crossing");
    sc.mirror_first = true;
    return sc;
  }

  TwoBridge fa = normalize(k.q, -k.p);
  TwoBridge fb = normalize(k.p - k.q, k.q);
  PlanarDiagram oriented_child = d.smoothed(0, true);
  PlanarDiagram other_child = d.smoothed(0, false);

  SkeinChildren out;
  out.mirror_first = false;
  out.base = base;
  out.lk_inherited = 0;

  if (k.components() == 1) {
    if (oriented_child.component_count() != 2 || other_child.component_count() != 1)
      throw std::logic_error("skein: unexpected component counts (knot case)");
    // the oriented smoothing of a knot is the 2-component child, which is
    // the fraction with even determinant
    bool fa_even = mod_floor(fa.p, 2) == 0;
    out.k0 = fa_even ? fa : fb;
    out.k1 = fa_even ? fb : fa;
    out.lk_inherited = oriented_child.linking_number(Orientation::o1);
  } else {
    if (oriented_child.component_count() != 1 || other_child.component_count() != 1)
      throw std::logic_error("skein: unexpected component counts (link case)");
    Int det0 = smoothed_determinant(oriented_child);
    if (det0 == fa.p) {
      out.k0 = fa;
      out.k1 = fb;
    } else if (det0 == fb.p) {
      out.k0 = fb;
      out.k1 = fa;
    } else {
      throw std::logic_error("skein: oriented child determinant matches neither fraction");
    }
  }
  out.e = Int(other_child.negative_crossings(Orientation::o1)) -
          Int(d.negative_crossings(base));
  return out;
}

}  // namespace tb
