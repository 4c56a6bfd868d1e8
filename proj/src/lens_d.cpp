#include "tb/lens_d.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace tb {

namespace {

std::map<std::tuple<Int, Int, Int>, Rational> g_cache;
std::mutex g_cache_mu;

Rational d_impl(const Int& p, const Int& q, const Int& i) {
  if (p == 1) return Rational(0);
  std::tuple<Int, Int, Int> key{p, q, i};
  {
    std::lock_guard<std::mutex> lock(g_cache_mu);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  Int t = 2 * i + 1 - p - q;
  Rational val = Rational(t * t - p * q, 4 * p * q);
  val.canonicalize();
  val -= d_impl(q, mod_floor(p, q), mod_floor(i, q));
  std::lock_guard<std::mutex> lock(g_cache_mu);
  g_cache.emplace(key, val);
  return val;
}

}  // namespace

Rational d_invariant(const Int& p, const Int& q, const Int& i) {
  if (p < 1) throw std::invalid_argument("d_invariant: p < 1");
  Int qn = mod_floor(q, p);
  if (p > 1 && !coprime(p, qn)) throw std::invalid_argument("d_invariant: gcd(p,q) != 1");
  if (p == 1) return Rational(0);
  return d_impl(p, qn, mod_floor(i, p));
}

Rational d_relation_raw(const Int& p, const Int& q, const Int& i) {
  if (p == 1) return Rational(0);
  Int t = 2 * i + 1 - p - q;
  Rational val = Rational(t * t - p * q, 4 * p * q);
  val.canonicalize();
  if (q == 1) return val;
  val -= d_invariant(q, mod_floor(p, q), mod_floor(i, q));
  return val;
}

std::vector<Int> spin_indices(const Int& p, const Int& q) {
  std::vector<Int> out;
  if (p == 1) return {Int(0)};
  if (mod_floor(p, 2) == 1) {
    // unique solution of 2i = p+q-1 (mod p)
    Int inv2 = (p + 1) / 2;
    out.push_back(mod_floor((p + q - 1) * inv2, p));
  } else {
    Int i0 = mod_floor((q - 1) / 2, p);
    out.push_back(i0);
    out.push_back(mod_floor(i0 + p / 2, p));
  }
  return out;
}

SpincTable spinc_table(const Int& p, const Int& q) {
  if (p < 1) throw std::invalid_argument("spinc_table: p < 1");
  Int qn = mod_floor(q, p);
  SpincTable t;
  t.p = p;
  t.q = qn;
  auto spins = spin_indices(p, qn);
  for (Int i = 0; i < p; ++i) {
    bool spin = false;
    for (const auto& s : spins) spin |= (s == i);
    t.rows.push_back({i, d_invariant(p, qn, i), spin});
  }
  return t;
}

}  // namespace tb
