#include "qwitt/twist.hpp"

#include <stdexcept>

namespace qwitt {

std::string QMode::to_string() const { return value ? "specialized:" + value->get_str() : "formal"; }

TwistPtr TwistContext::create(int s, QMode mode) {
  return TwistPtr(new TwistContext(s, std::move(mode)));
}

TwistContext::TwistContext(int s, QMode mode) : s_(s), mode_(std::move(mode)), q_(mode_.q()) {
  if (mode_.value && *mode_.value == 0) throw Error("q must be nonzero");
  if (s_ == 1 && q_.is_one()) throw Error("sigma is identity");

  if (s_ >= 1) {
    d_ = s_ - 1;
    lambda_ = q_;
  } else {
    d_ = 1 - s_;
    lambda_ = q_.inverse();
  }
  g_ = LaurentPoly(1) - LaurentPoly::monomial(lambda_, d_);
  T_ = LaurentPoly::monomial(q_, s_ - 1);

  auto factor = try_exact_div(sigma(g_), g_);
  if (!factor) throw std::logic_error("twist factor: g does not divide sigma(g)");
  delta_ = *std::move(factor);
}

LaurentPoly TwistContext::generator(const LaurentPoly& f) const {
  auto r = try_exact_div(f - sigma(f), g_);
  if (!r) throw std::logic_error("gcd convention violated");
  return *std::move(r);
}

LaurentPoly TwistContext::t_integer(int n) const {
  LaurentPoly acc;
  if (n > 0) {
    LaurentPoly power(1);
    for (int k = 0; k < n; ++k) {
      acc += power;
      power = power * T_;
    }
  } else if (n < 0) {
    const LaurentPoly inv = LaurentPoly::monomial(q_.inverse(), 1 - s_);
    LaurentPoly power = inv;
    for (int k = -1; k >= n; --k) {
      acc -= power;
      power = power * inv;
    }
  }
  return acc;
}

}  // namespace qwitt
