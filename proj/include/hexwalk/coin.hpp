#pragma once

#include <complex>

#include "hexwalk/types.hpp"

namespace hexwalk {

/// Coin angle together with its cosine and sine.
///
/// The angle is reduced to [0, 2pi). Angles within 1e-12 of 0 or pi are
/// rejected: the walk degenerates there. c and s are computed once so every
/// module sees bit-identical values.
class CoinParams {
 public:
  explicit CoinParams(double theta);

  /// c = -1/3, s = 2 sqrt(2) / 3, for which the coin is the 3x3 Grover matrix.
  static CoinParams grover();

  double theta() const { return theta_; }
  double c() const { return c_; }
  double s() const { return s_; }

 private:
  CoinParams(double theta, double c, double s) : theta_(theta), c_(c), s_(s) {}

  double theta_;
  double c_;
  double s_;
};

/// Initial coin amplitudes (alpha, beta, gamma), unit norm within 1e-12.
class CoinState {
 public:
  CoinState(cdouble alpha, cdouble beta, cdouble gamma);
  explicit CoinState(const Vec3cd& amplitudes);

  /// Rescales a nonzero vector to unit norm.
  static CoinState normalized(const Vec3cd& amplitudes);

  cdouble alpha() const { return v_(0); }
  cdouble beta() const { return v_(1); }
  cdouble gamma() const { return v_(2); }
  const Vec3cd& vector() const { return v_; }

 private:
  Vec3cd v_;
};

inline constexpr double kStateNormTolerance = 1e-12;

/// The real orthogonal coin block. Symmetric by construction, hence an
/// involution.
using CoinMatrix = Mat3d;

template <typename Real = double>
Mat3<Real> build_coin(const CoinParams& params) {
  const Real c = static_cast<Real>(params.c());
  const Real s = static_cast<Real>(params.s());
  const Real diag = -(1 + c) / 2;
  const Real off = s / std::sqrt(Real(2));
  const Real corner = (1 - c) / 2;
  Mat3<Real> m;
  m << diag, off, corner,
       off, c, off,
       corner, off, diag;
  return m;
}

template <typename Derived>
Vec3cd apply_coin(const CoinMatrix& coin, const Eigen::MatrixBase<Derived>& v) {
  return coin.cast<cdouble>() * v;
}

}  // namespace hexwalk
