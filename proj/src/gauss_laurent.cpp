#include "tb/gauss_laurent.hpp"

#include <sstream>

#include "json.hpp"

namespace tb {

GaussInt i_power(const Int& k) {
  switch (mod_floor(k, 4).get_ui()) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

GaussInt GaussInt::times_i_power(const Int& k) const {
  return *this * i_power(k);
}

std::string GaussInt::to_string() const {
  if (im == 0) return re.get_str();
  std::ostringstream os;
  if (re != 0) os << re.get_str() << (im > 0 ? "+" : "");
  if (im == 1)
    os << "i";
  else if (im == -1)
    os << "-i";
  else
    os << im.get_str() << "i";
  return os.str();
}

GaussLaurent GaussLaurent::iq_power(const Int& e) {
  if (!e.fits_slong_p()) throw std::overflow_error("iq_power: exponent too large");
  return monomial(i_power(e), e.get_si());
}

GaussLaurent& GaussLaurent::operator+=(const GaussLaurent& o) {
  for (const auto& [e, c] : o.terms_) put(e, coeff(e) + c);
  return *this;
}

GaussLaurent& GaussLaurent::operator-=(const GaussLaurent& o) {
  for (const auto& [e, c] : o.terms_) put(e, coeff(e) - c);
  return *this;
}

GaussLaurent GaussLaurent::operator*(const GaussLaurent& o) const {
  GaussLaurent r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.put(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
  return r;
}

GaussLaurent GaussLaurent::operator-() const {
  GaussLaurent r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

GaussLaurent GaussLaurent::scale(const GaussInt& c) const {
  GaussLaurent r;
  if (c.is_zero()) return r;
  for (const auto& [e, k] : terms_) r.put(e, k * c);
  return r;
}

GaussLaurent GaussLaurent::shift(long k) const {
  GaussLaurent r;
  for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
  return r;
}

GaussLaurent GaussLaurent::substitute_q_inverse() const {
  GaussLaurent r;
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

GaussInt GaussLaurent::evaluate_at_i() const {
  GaussInt v;
  for (const auto& [e, c] : terms_) v = v + c * i_power(e);
  return v;
}

bool GaussLaurent::is_real() const {
  for (const auto& [e, c] : terms_)
    if (c.im != 0) return false;
  return true;
}

std::string GaussLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string cs = c.to_string();
    if (!first) os << " + ";
    if (e == 0) {
      os << "(" << cs << ")";
    } else {
      os << "(" << cs << ")q^" << e;
    }
    first = false;
  }
  return os.str();
}

std::string GaussLaurent::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [e, c] : terms_)
    j.push_back({e, c.re.get_str(), c.im.get_str()});
  return j.dump();
}

GaussLaurent GaussLaurent::from_json(const std::string& json) {
  auto j = nlohmann::json::parse(json);
  GaussLaurent p;
  for (const auto& t : j) {
    long e = t.at(0).get<long>();
    GaussInt c(Int(t.at(1).get<std::string>()), Int(t.at(2).get<std::string>()));
    p.put(e, p.coeff(e) + c);
  }
  return p;
}

}  // namespace tb
