#include "hexwalk/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace hexwalk {

namespace {

double wrap(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("momentum components must be finite");
  double r = std::fmod(v + kPi, kTwoPi);
  if (r < 0) r += kTwoPi;
  r -= kPi;
  return r >= kPi ? -kPi : r;
}

}  // namespace

Momentum::Momentum(double a, double b) : a_(wrap(a)), b_(wrap(b)) {}

Mat3cd two_step_matrix(const Momentum& m, const CoinMatrix& coin) {
  const Mat3cd c = coin.cast<cdouble>();
  return r_matrix(-m) * c * r_matrix(m) * c;
}

TwoStepOperator two_step_operator(const Momentum& m, const CoinMatrix& coin) {
  TwoStepOperator op;
  op.matrix = two_step_matrix(m, coin);

  // The matrix is normal, so its Schur form is diagonal up to round-off and
  // the Schur vectors are eigenvectors.
  Eigen::ComplexSchur<Mat3cd> schur(op.matrix);
  const Vec3cd lambda = schur.matrixT().diagonal();
  const Mat3cd& q = schur.matrixU();

  std::array<int, 3> order{0, 1, 2};
  const auto dist_to_one = [&](int j) { return std::abs(lambda(j) - 1.0); };
  std::sort(order.begin(), order.end(), [&](int i, int j) { return dist_to_one(i) < dist_to_one(j); });
  if (lambda(order[1]).imag() < lambda(order[2]).imag()) std::swap(order[1], order[2]);

  op.phases(0) = 0.0;
  op.phases(1) = std::abs(std::arg(lambda(order[1])));
  op.phases(2) = kTwoPi - std::abs(std::arg(lambda(order[2])));
  for (int j = 0; j < 3; ++j) op.eigenvectors.col(j) = q.col(order[j]);
  return op;
}

Vec3d eigenphases_closed_form(const Momentum& m, const CoinParams& params) {
  const double c = params.c();
  const double s = params.s();
  const double sb = std::sin(m.b());
  const double sp = std::sin(0.5 * (m.a() + m.b()));
  const double sm = std::sin(0.5 * (m.a() - m.b()));
  // d = 1 - X, written as a sum of non-negative terms
  const double d = s * s * (sp * sp + sm * sm) + 0.5 * (1 - c) * (1 - c) * sb * sb;
  const double nu = d <= 1 ? 2 * std::asin(std::sqrt(0.5 * d)) : std::acos(std::clamp(1 - d, -1.0, 1.0));
  return Vec3d(0.0, nu, kTwoPi - nu);
}

Vec3cd fourier_evolve(const CoinState& state, long pairs, const Momentum& m, const CoinMatrix& coin) {
  if (pairs < 0) throw std::invalid_argument("pair count must be non-negative");
  if (pairs <= kDirectPowerLimit) {
    const Mat3cd u = two_step_matrix(m, coin);
    Vec3cd v = state.vector();
    for (long i = 0; i < pairs; ++i) v = u * v;
    return v;
  }
  const TwoStepOperator op = two_step_operator(m, coin);
  const Vec3cd coeffs = op.eigenvectors.adjoint() * state.vector();
  Vec3cd v = Vec3cd::Zero();
  for (int j = 0; j < 3; ++j) {
    const double phase = std::fmod(static_cast<double>(pairs) * op.phases(j), kTwoPi);
    v += std::polar(1.0, phase) * coeffs(j) * op.eigenvectors.col(j);
  }
  return v;
}

Vec3cd inverse_transform_site(const CoinState& state, long pairs, int x, int y, int grid_n,
                              const CoinMatrix& coin) {
  if (grid_n < 1) throw std::invalid_argument("grid_n must be at least 1");
  const double h = kTwoPi / grid_n;
  Vec3cd sum = Vec3cd::Zero();
  for (int ka = 0; ka < grid_n; ++ka) {
    const double a = -kPi + h * ka;
    for (int kb = 0; kb < grid_n; ++kb) {
      const double b = -kPi + h * kb;
      const Vec3cd psi_hat = fourier_evolve(state, pairs, Momentum(a, b), coin);
      sum += std::polar(1.0, a * x + b * y) * psi_hat;
    }
  }
  return sum / (static_cast<double>(grid_n) * grid_n);
}

}  // namespace hexwalk
