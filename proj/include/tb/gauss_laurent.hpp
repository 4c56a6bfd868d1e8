#pragma once

#include <map>
#include <string>
#include <vector>

#include "tb/rational.hpp"

namespace tb {

// Gaussian integer a + b*i, exact.
struct GaussInt {
  Int re{0};
  Int im{0};

  GaussInt() = default;
  GaussInt(Int r) : re(std::move(r)) {}
  GaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }

  GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
  GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
  GaussInt operator-() const { return {-re, -im}; }
  GaussInt operator*(const GaussInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool operator==(const GaussInt& o) const { return re == o.re && im == o.im; }

  // this * i^k
  GaussInt times_i_power(const Int& k) const;

  std::string to_string() const;
};

// i^k for any integer k.
GaussInt i_power(const Int& k);

// Laurent polynomial in one variable q with Gaussian-integer coefficients,
// stored sparsely; no zero coefficients are kept.
class GaussLaurent {
 public:
  GaussLaurent() = default;
  explicit GaussLaurent(const GaussInt& c) {
    if (!c.is_zero()) terms_[0] = c;
  }

  static GaussLaurent monomial(const GaussInt& c, long exp) {
    GaussLaurent p;
    if (!c.is_zero()) p.terms_[exp] = c;
    return p;
  }
  // (i*q)^e
  static GaussLaurent iq_power(const Int& e);

  bool is_zero() const { return terms_.empty(); }
  const std::map<long, GaussInt>& terms() const { return terms_; }
  GaussInt coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussInt() : it->second;
  }

  GaussLaurent& operator+=(const GaussLaurent& o);
  GaussLaurent& operator-=(const GaussLaurent& o);
  GaussLaurent operator+(const GaussLaurent& o) const {
    GaussLaurent r = *this;
    r += o;
    return r;
  }
  GaussLaurent operator-(const GaussLaurent& o) const {
    GaussLaurent r = *this;
    r -= o;
    return r;
  }
  GaussLaurent operator*(const GaussLaurent& o) const;
  GaussLaurent operator-() const;
  bool operator==(const GaussLaurent& o) const { return terms_ == o.terms_; }

  GaussLaurent scale(const GaussInt& c) const;
  GaussLaurent scale_by_i_power(const Int& k) const { return scale(i_power(k)); }
  // q^k * this
  GaussLaurent shift(long k) const;
  // q -> q^{-1}
  GaussLaurent substitute_q_inverse() const;
  // Evaluate at q = i.
  GaussInt evaluate_at_i() const;

  bool is_real() const;  // all imaginary parts zero

  std::string to_string() const;
  // JSON list of [exponent, re, im] triples sorted by exponent; the
  // coefficients are serialized as decimal strings.
  std::string to_json() const;
  static GaussLaurent from_json(const std::string& json);

 private:
  void put(long e, const GaussInt& c) {
    if (c.is_zero())
      terms_.erase(e);
    else
      terms_[e] = c;
  }
  std::map<long, GaussInt> terms_;
};

}  // namespace tb
