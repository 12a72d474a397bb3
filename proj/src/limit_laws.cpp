#include "hexwalk/limit_laws.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace hexwalk {

namespace {

// Coefficients shared by the origin amplitude and the return-probability
// limit.
struct OriginCoefficients {
  double diag;    // 1/2 - A/pi
  double beta;    // sqrt(2) s A / (pi (1-c))
  double corner;  // (3+c) A / (pi (1-c)) - 1/2
  double middle;  // sqrt(2) A / (pi (1-c))
};

OriginCoefficients origin_coefficients(const CoinParams& params) {
  const double c = params.c();
  const double s = params.s();
  const double a = a_theta(params);
  const double k = a / (kPi * (1 - c));
  return {0.5 - a / kPi, std::sqrt(2.0) * s * k, (3 + c) * k - 0.5, std::sqrt(2.0) * k};
}

double int_pow(double base, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

// After integrating out a by residues:
//   g(x, y) = \int_0^pi cos(b|y|) z(b)^{|x|} / (pi (1-c) sin b Q(b)) db,
//   Q(b) = sqrt((3+c)^2 - (1-c)^2 cos^2 b),
// where z is the root inside the unit circle of s^2 cos b (z + 1/z) = K,
// K = 2 s^2 + (1-c)^2 sin^2 b. z is evaluated as 2 s^2 cos b / (K + root),
// which avoids the cancellation in (K - root) / (2 s^2 cos b) near b = pi/2.
class ReducedGreenKernel {
 public:
  explicit ReducedGreenKernel(const CoinParams& params) : c_(params.c()), s2_(params.s() * params.s()) {}

  double difference(int x, int y, int x2, int y2, double b) const {
    const double sb = std::sin(b);
    const double cb = std::cos(b);
    const double q = std::sqrt((3 + c_) * (3 + c_) - (1 - c_) * (1 - c_) * cb * cb);
    const double root = (1 - c_) * sb * q;
    const double k = 2 * s2_ + (1 - c_) * (1 - c_) * sb * sb;
    const double z = 2 * s2_ * cb / (k + root);
    const double num = std::cos(b * std::abs(y)) * int_pow(z, std::abs(x)) -
                       std::cos(b * std::abs(y2)) * int_pow(z, std::abs(x2));
    return num / (kPi * root);
  }

 private:
  double c_;
  double s2_;
};

}  // namespace

double a_theta(const CoinParams& params) {
  const double c = params.c();
  return std::asin((1 - c) / (3 + c));
}

AsymptoticOriginAmplitude asymptotic_origin_amplitude(const CoinParams& params, const CoinState& state) {
  const auto k = origin_coefficients(params);
  const double c = params.c();
  const double s = params.s();
  const cdouble al = state.alpha(), be = state.beta(), ga = state.gamma();
  return {k.diag * al - k.beta * be + k.corner * ga,
          -k.middle * (s * al - std::sqrt(2.0) * (1 - c) * be + s * ga),
          k.corner * al - k.beta * be + k.diag * ga};
}

double limit_return_probability(const CoinParams& params, const CoinState& state) {
  const auto k = origin_coefficients(params);
  const double c = params.c();
  const double s = params.s();
  const cdouble al = state.alpha(), be = state.beta(), ga = state.gamma();
  const double first = std::norm(k.diag * al - k.beta * be + k.corner * ga);
  const double second = std::norm(k.middle * (s * al - std::sqrt(2.0) * (1 - c) * be + s * ga));
  const double third = std::norm(k.corner * al - k.beta * be + k.diag * ga);
  return first + second + third;
}

double g_difference(int x, int y, int x1, int y1, const CoinParams& params, const QuadratureConfig& q) {
  if (((x1 + y1) % 2) != 0) {
    throw std::invalid_argument("g_difference needs an even displacement x1 + y1; got (" +
                                std::to_string(x1) + ", " + std::to_string(y1) + ")");
  }
  if (x1 == 0 && y1 == 0) return 0.0;
  const int x2 = x - x1;
  const int y2 = y - y1;
  if (std::abs(x) == std::abs(x2) && std::abs(y) == std::abs(y2)) return 0.0;

  const ReducedGreenKernel kernel(params);
  const auto f = [&](double b) { return kernel.difference(x, y, x2, y2, b); };

  double error = 0;
  double l1 = 0;
  double value = 0;
  try {
    value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, kPi, q.max_depth,
                                                                          q.rel_tol, &error, &l1);
  } catch (const std::exception& e) {
    throw QuadratureError(std::string("G integral evaluation failed: ") + e.what());
  }
  if (!std::isfinite(value) || !(error <= std::max(q.abs_tol, q.rel_tol * l1))) {
    throw QuadratureError("G(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(x1) +
                          "," + std::to_string(y1) + ") did not converge: error estimate " +
                          std::to_string(error) + " after depth " + std::to_string(q.max_depth));
  }
  return value;
}

Vec3cd asymptotic_amplitude(int x, int y, const CoinParams& params, const CoinState& state,
                            const QuadratureConfig& q) {
  if (((x + y) % 2) != 0) {
    throw std::invalid_argument("A(" + std::to_string(x) + "," + std::to_string(y) +
                                ") is never occupied at even times");
  }
  const double c = params.c();
  const double s = params.s();
  const cdouble al = state.alpha(), be = state.beta(), ga = state.gamma();
  const auto W1 = [&](cdouble z1, cdouble z2) { return -s * z1 + s * z2; };
  const auto W2 = [&](cdouble z1, cdouble z2) { return s * z1 - std::sqrt(2.0) / 2 * (1 - c) * z2; };
  const auto G = [&](int gx, int gy, int x1, int y1) { return g_difference(gx, gy, x1, y1, params, q); };

  const cdouble w1 = W1(al, ga);
  const cdouble w2a = W2(al, be);
  const cdouble w2g = W2(ga, be);

  Vec3cd out;
  out(0) = -s / 2 * (w1 * G(x, y, 1, -1) + w2a * G(x + 1, y - 1, 1, -1) + w2g * G(x, y + 2, -1, 1));
  out(1) = -std::sqrt(2.0) / 4 * (1 - c) *
           (w1 * G(x - 1, y + 1, 0, 2) + w2a * G(x, y, 0, 2) + w2g * G(x, y, 0, -2));
  out(2) = s / 2 * (w1 * G(x, y, 1, 1) + w2a * G(x + 1, y - 1, 1, 1) + w2g * G(x, y, -1, -1));
  return out;
}

bool delocalization_condition(const CoinParams& params, const CoinState& state) {
  const double c = params.c();
  const double s = params.s();
  const cdouble al = state.alpha(), be = state.beta(), ga = state.gamma();
  const double tol = kDelocalizationTolerance;
  return std::abs(std::abs(al) - std::sqrt(1 - c) / 2) <= tol &&
         std::abs(be - std::sqrt(2.0) * (1 + c) / s * al) <= tol && std::abs(ga - al) <= tol;
}

double delta_weight(const CoinParams& params, const CoinState& state) {
  const double c = params.c();
  const double s = params.s();
  const double a = a_theta(params);
  const cdouble al = state.alpha(), be = state.beta(), ga = state.gamma();
  const double diag = 0.5 - a / kPi;
  return diag * std::norm(al) + 2 * a / kPi * std::norm(be) + diag * std::norm(ga) -
         2 * std::sqrt(2.0) * s * a / (kPi * (1 - c)) * ((al + ga) * std::conj(be)).real() +
         (2 * (3 + c) * a / (kPi * (1 - c)) - 1) * (al * std::conj(ga)).real();
}

}  // namespace hexwalk
