#include "qwitt/ore.hpp"

namespace qwitt {

OrePoly::OrePoly(SigmaDerivation twist, Coeffs coeffs) : twist_(std::move(twist)) {
  for (const auto& [k, a] : coeffs) add_term(k, a);
}

OrePoly OrePoly::term(const SigmaDerivation& twist, const LaurentPoly& a, int k) {
  OrePoly r(twist);
  r.add_term(k, a);
  return r;
}

void OrePoly::add_term(int k, const LaurentPoly& a) {
  if (k < 0) throw Error("negative X-degree");
  if (a.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(k, a);
  if (inserted) return;
  it->second += a;
  if (it->second.is_zero()) coeffs_.erase(it);
}

LaurentPoly OrePoly::coeff(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? LaurentPoly() : it->second;
}

OrePoly& OrePoly::operator+=(const OrePoly& o) {
  if (!(twist_ == o.twist_)) throw Error("context mismatch");
  for (const auto& [k, a] : o.coeffs_) add_term(k, a);
  return *this;
}

OrePoly OrePoly::left_mul_x() const {
  OrePoly r(twist_);
  const TwistContext& tc = ctx();
  for (const auto& [k, a] : coeffs_) {
    r.add_term(k + 1, tc.sigma(a));
    if (!twist_.coeff.is_zero()) r.add_term(k, twist_(a));
  }
  return r;
}

OrePoly operator*(const OrePoly& u, const OrePoly& v) {
  if (!(u.twist_ == v.twist_)) throw Error("context mismatch");
  OrePoly result(u.twist_);
  if (u.is_zero() || v.is_zero()) return result;
  // X^i * v for increasing i, reused across the terms of u.
  OrePoly power = v;
  int at = 0;
  for (const auto& [i, a] : u.coeffs_) {
    for (; at < i; ++at) power = power.left_mul_x();
    for (const auto& [k, b] : power.coeffs_) result.add_term(k, a * b);
  }
  return result;
}

std::string OrePoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [k, a] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += "(" + a.to_string() + ")";
    if (k == 1) out += std::string("*") + var;
    else if (k > 1) out += std::string("*") + var + "^" + std::to_string(k);
  }
  return out;
}

OrePoly ore_untwist(const OrePoly& u) {
  auto p = der_is_inner(u.twist());
  if (!p) throw Error("not an inner twist");
  const TwistPtr& ctx = u.twist().ctx;
  const OrePoly zero = OrePoly::untwisted_zero(ctx);
  const OrePoly y_plus_p = OrePoly::term(zero.twist(), LaurentPoly::t_power(0), 1) +
                           OrePoly::term(zero.twist(), *p, 0);

  OrePoly result = zero;
  OrePoly power = OrePoly::term(zero.twist(), LaurentPoly(1), 0);  // (Y + p)^0
  int at = 0;
  for (const auto& [i, a] : u.coeffs()) {
    for (; at < i; ++at) power = power * y_plus_p;
    result += OrePoly::term(zero.twist(), a, 0) * power;
  }
  return result;
}

}  // namespace qwitt
