#pragma once

#include <complex>

#include <Eigen/Core>

#include "hexwalk/coin.hpp"
#include "hexwalk/types.hpp"

namespace hexwalk {

/// Fourier variables conjugate to the integer site indices, wrapped into
/// [-pi, pi). Everything in this module is 2pi-periodic in both.
class Momentum {
 public:
  Momentum(double a, double b);

  double a() const { return a_; }
  double b() const { return b_; }
  Momentum operator-() const { return Momentum(-a_, -b_); }

 private:
  double a_;
  double b_;
};

/// diag(e^{-ib}, e^{ia}, e^{ib}): the phase picked up by each coin component
/// on an A -> B shift.
template <typename Real = double>
Eigen::DiagonalMatrix<std::complex<Real>, 3> r_matrix(const Momentum& m) {
  const Real a = static_cast<Real>(m.a());
  const Real b = static_cast<Real>(m.b());
  return Eigen::DiagonalMatrix<std::complex<Real>, 3>(std::polar(Real(1), -b), std::polar(Real(1), a),
                                                      std::polar(Real(1), b));
}

/// R(-a,-b) C R(a,b) C, the momentum-space propagator over one even/odd step
/// pair.
Mat3cd two_step_matrix(const Momentum& m, const CoinMatrix& coin);

/// Spectral decomposition of the two-step matrix.
///
/// Phases follow the flat-band labelling: nu1 = 0, nu2 in [0, pi] and
/// nu3 = 2pi - nu2 (so nu3 = 2pi exactly where the bands touch). Column j of
/// `eigenvectors` belongs to phases(j). Eigenvectors come from the unitary
/// Schur factor and are orthonormal to machine precision; inside a degenerate
/// eigenspace they are an arbitrary orthonormal basis.
struct TwoStepOperator {
  Mat3cd matrix;
  Vec3d phases;
  Mat3cd eigenvectors;

  cdouble eigenvalue(int j) const { return std::polar(1.0, phases(j)); }
};

TwoStepOperator two_step_operator(const Momentum& m, const CoinMatrix& coin);

/// (0, arccos X, 2pi - arccos X) with
/// X = c^2 - (1-c)^2 sin^2(b) / 2 + s^2 cos(a) cos(b), clamped to [-1, 1].
Vec3d eigenphases_closed_form(const Momentum& m, const CoinParams& params);

/// Two-step matrix applied `pairs` times to the initial coin state. Uses
/// repeated products up to kDirectPowerLimit pairs and the eigen-decomposition
/// beyond.
Vec3cd fourier_evolve(const CoinState& state, long pairs, const Momentum& m, const CoinMatrix& coin);

inline constexpr long kDirectPowerLimit = 64;

/// Amplitude at A(x, y) after 2 * pairs steps by uniform-grid inverse
/// transform over grid_n x grid_n momenta a_k = -pi + 2 pi k / grid_n.
/// Summed a-major, b-minor. Exact up to round-off once
/// grid_n > 2 * pairs + max(|x|, |y|).
Vec3cd inverse_transform_site(const CoinState& state, long pairs, int x, int y, int grid_n,
                              const CoinMatrix& coin);

}  // namespace hexwalk
