#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "hexwalk/coin.hpp"
#include "hexwalk/types.hpp"

namespace hexwalk {

/// Adaptive Gauss-Kronrod settings. The integral is accepted when the
/// embedded error estimate is below max(abs_tol, rel_tol * L1); bisection
/// stops at max_depth levels (up to 2^max_depth subintervals).
struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  unsigned max_depth = 15;
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Long-time amplitude at the origin.
struct AsymptoticOriginAmplitude {
  cdouble psi0;
  cdouble psi1;
  cdouble psi2;

  Vec3cd vector() const { return Vec3cd(psi0, psi1, psi2); }
  double squared_norm() const { return std::norm(psi0) + std::norm(psi1) + std::norm(psi2); }
};

/// arcsin((1 - c) / (3 + c)).
double a_theta(const CoinParams& params);

double limit_return_probability(const CoinParams& params, const CoinState& state);

AsymptoticOriginAmplitude asymptotic_origin_amplitude(const CoinParams& params, const CoinState& state);

/// G(x, y, x1, y1) = g(x, y) - g(x - x1, y - y1), where g is the lattice
/// Green-type integral
///
///   g(x, y) = 1/(4 pi^2) \iint e^{i(ax+by)} / (2 s^2 (1 - cos a cos b) + (1-c)^2 sin^2 b) da db.
///
/// g itself diverges (the denominator vanishes at (0,0) and (pi,pi)), so only
/// the difference is computed: after the residue integration over a, the
/// pointwise difference of the two 1D integrands over b in (0, pi) stays
/// bounded at both ends provided x1 + y1 is even. Odd displacements are
/// rejected with std::invalid_argument. Throws QuadratureError when the
/// tolerance in `q` is not met.
double g_difference(int x, int y, int x1, int y1, const CoinParams& params,
                    const QuadratureConfig& q = {});

/// Long-time amplitude at A(x, y). Requires x + y even (other A sites are
/// never occupied at even times).
Vec3cd asymptotic_amplitude(int x, int y, const CoinParams& params, const CoinState& state,
                            const QuadratureConfig& q = {});

inline constexpr double kDelocalizationTolerance = 1e-10;

/// |alpha| = sqrt(1-c)/2, beta = sqrt(2)(1+c)/s alpha, gamma = alpha.
bool delocalization_condition(const CoinParams& params, const CoinState& state);

/// Weight of the point mass at the origin in the ballistically rescaled
/// limit distribution.
double delta_weight(const CoinParams& params, const CoinState& state);

}  // namespace hexwalk
