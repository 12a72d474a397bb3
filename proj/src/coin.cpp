#include "hexwalk/coin.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hexwalk {

namespace {

constexpr double kDegenerateAngleTolerance = 1e-12;

double reduce_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

}  // namespace

CoinParams::CoinParams(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("coin angle must be finite");
  }
  const double r = reduce_angle(theta);
  const double to_zero = std::min(r, kTwoPi - r);
  if (to_zero < kDegenerateAngleTolerance || std::abs(r - kPi) < kDegenerateAngleTolerance) {
    throw std::invalid_argument("coin angle " + std::to_string(theta) +
                                " is degenerate (theta = 0 or pi is not admitted)");
  }
  theta_ = r;
  c_ = std::cos(r);
  s_ = std::sin(r);
}

CoinParams CoinParams::grover() {
  return CoinParams(std::acos(-1.0 / 3.0), -1.0 / 3.0, 2.0 * std::sqrt(2.0) / 3.0);
}

CoinState::CoinState(cdouble alpha, cdouble beta, cdouble gamma)
    : CoinState(Vec3cd(alpha, beta, gamma)) {}

CoinState::CoinState(const Vec3cd& amplitudes) : v_(amplitudes) {
  if (!v_.allFinite()) {
    throw std::invalid_argument("coin state has non-finite amplitudes");
  }
  const double norm2 = v_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kStateNormTolerance) {
    throw std::invalid_argument("coin state is not normalized: |alpha|^2+|beta|^2+|gamma|^2 = " +
                                std::to_string(norm2));
  }
}

CoinState CoinState::normalized(const Vec3cd& amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0) || !std::isfinite(n)) {
    throw std::invalid_argument("cannot normalize a zero or non-finite coin state");
  }
  return CoinState(Vec3cd(amplitudes / n));
}

}  // namespace hexwalk
