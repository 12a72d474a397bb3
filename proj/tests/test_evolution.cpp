#include "hexwalk/evolution.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "oracles.hpp"

using namespace hexwalk;

namespace {

constexpr Sublattice A = Sublattice::A;
constexpr Sublattice B = Sublattice::B;
const Site kOrigin{A, 0, 0};

double max_diff(const Vec3cd& a, const Vec3cd& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(evolution, initial_wavefunction_examples) {
  const double r = 1 / std::sqrt(3.0);
  for (const Vec3cd& v : {Vec3cd(1, 0, 0), Vec3cd(r, r, r), Vec3cd(0, 1, 0)}) {
    const CoinState st = CoinState::normalized(v);
    const WaveFunction wf = initial_wavefunction(st);
    ASSERT_EQ(wf.size(), 1u);
    EXPECT_EQ(wf.time(), 0);
    EXPECT_EQ(wf.entries()[0].first, kOrigin);
    EXPECT_LT(max_diff(wf.entries()[0].second, st.vector()), 1e-15);
    EXPECT_NEAR(wf.norm_squared(), 1.0, 1e-15);
  }
}

TEST(evolution, one_grover_step_from_beta) {
  const WaveFunction wf = step(initial_wavefunction(CoinState(0.0, 1.0, 0.0)), build_coin(CoinParams::grover()));
  EXPECT_EQ(wf.time(), 1);
  ASSERT_EQ(wf.size(), 3u);
  EXPECT_LT(max_diff(wf.amplitude({B, 0, 1}), Vec3cd(2.0 / 3, 0, 0)), 1e-15);
  EXPECT_LT(max_diff(wf.amplitude({B, -1, 0}), Vec3cd(0, -1.0 / 3, 0)), 1e-15);
  EXPECT_LT(max_diff(wf.amplitude({B, 0, -1}), Vec3cd(0, 0, 2.0 / 3)), 1e-15);
  EXPECT_EQ(wf.amplitude({A, 0, 0}), Vec3cd::Zero());
}

TEST(evolution, evolve_matches_step_examples) {
  const CoinState beta(0.0, 1.0, 0.0);
  const CoinMatrix g = build_coin(CoinParams::grover());
  const WaveFunction w0 = evolve(beta, 0, g);
  ASSERT_EQ(w0.size(), 1u);
  EXPECT_EQ(w0.amplitude(kOrigin), beta.vector());
  const WaveFunction w1 = evolve(beta, 1, g);
  EXPECT_LT(max_diff(w1.amplitude({B, 0, 1}), Vec3cd(2.0 / 3, 0, 0)), 1e-15);
  EXPECT_THROW(evolve(beta, -1, g), std::invalid_argument);
}

TEST(evolution, two_step_origin_amplitude_matches_hand_evolution) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const CoinParams p(oracle::random_theta(rng));
    const CoinState st = oracle::random_state(rng);
    const WaveFunction wf = evolve(st, 2, build_coin(p));
    EXPECT_LT(max_diff(wf.amplitude(kOrigin), oracle::two_step_origin_amplitude(p, st)), 1e-14);
  }
}

TEST(evolution, grover_return_probability_after_two_steps) {
  const WaveFunction wf = evolve(CoinState(0.0, 1.0, 0.0), 2, build_coin(CoinParams::grover()));
  EXPECT_NEAR(distribution(wf).probability(kOrigin), 1.0 / 9, 1e-15);
}

TEST(evolution, odd_times_leave_a_sublattice_empty) {
  std::mt19937_64 rng(4);
  const CoinMatrix m = build_coin(CoinParams(oracle::random_theta(rng)));
  const CoinState st = oracle::random_state(rng);
  for (int t : {1, 3, 7, 15}) {
    const WaveFunction wf = evolve(st, t, m);
    for (const auto& [site, v] : wf.entries()) EXPECT_EQ(site.sub, B);
  }
}

TEST(evolution, step_chain_is_bitwise_equal_to_evolve) {
  std::mt19937_64 rng(8);
  const CoinMatrix m = build_coin(CoinParams(oracle::random_theta(rng)));
  const CoinState st = oracle::random_state(rng);
  WaveFunction wf = initial_wavefunction(st);
  for (int t = 0; t < 25; ++t) wf = step(wf, m);
  const WaveFunction direct = evolve(st, 25, m);
  ASSERT_EQ(wf.size(), direct.size());
  for (std::size_t i = 0; i < wf.size(); ++i) {
    EXPECT_EQ(wf.entries()[i].first, direct.entries()[i].first);
    EXPECT_TRUE(wf.entries()[i].second == direct.entries()[i].second);
  }
}

TEST(evolution, norm_conserved_over_long_runs) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 3; ++trial) {
    Propagator p(build_coin(CoinParams(oracle::random_theta(rng))), oracle::random_state(rng));
    for (int t = 1; t <= 1000; ++t) {
      p.advance();
      ASSERT_NEAR(p.total_probability(), 1.0, 1e-10) << "t=" << t;
    }
  }
  const WaveFunction wf = evolve(CoinState(0.0, 1.0, 0.0), 100, build_coin(CoinParams::grover()));
  EXPECT_NEAR(wf.norm_squared(), 1.0, 1e-10);
  EXPECT_NEAR(distribution(wf).total(), 1.0, 1e-10);
}

TEST(evolution, support_parity_and_light_cone) {
  std::mt19937_64 rng(21);
  const int depth = 40;
  const auto dist = oracle::honeycomb_distances(depth);
  const CoinMatrix m = build_coin(CoinParams(oracle::random_theta(rng)));
  Propagator p(m, oracle::random_state(rng));
  for (int t = 0; t <= depth; ++t) {
    int max_d = 0;
    const WaveFunction snap = p.snapshot();
    for (const auto& [site, v] : snap.entries()) {
      ASSERT_TRUE(support_parity_ok(site, t)) << site << " t=" << t;
      auto it = dist.find(site);
      ASSERT_NE(it, dist.end()) << site << " outside the light cone at t=" << t;
      ASSERT_LE(it->second, t);
      max_d = std::max(max_d, it->second);
    }
    EXPECT_EQ(max_d, t);
    p.advance();
  }
}

TEST(evolution, return_series_examples) {
  const CoinMatrix g = build_coin(CoinParams::grover());
  const auto series = return_series(CoinState(0.0, 1.0, 0.0), 400, g);
  ASSERT_EQ(series.size(), 201u);
  EXPECT_EQ(series.front().t, 0);
  EXPECT_EQ(series.front().probability, 1.0);
  EXPECT_EQ(series[1].t, 2);
  EXPECT_NEAR(series[1].probability, 1.0 / 9, 1e-15);
  EXPECT_EQ(series.back().t, 400);

  double sum = 0;
  int n = 0;
  for (const auto& pt : series) {
    if (pt.t >= 360) {
      sum += pt.probability;
      ++n;
    }
  }
  EXPECT_NEAR(sum / n, 1.0 / 6, 0.01);

  EXPECT_EQ(return_series(CoinState(0.0, 1.0, 0.0), 5, g).back().t, 4);
  EXPECT_EQ(return_series(CoinState(0.0, 1.0, 0.0), 0, g).size(), 1u);
}

TEST(evolution, return_series_agrees_with_evolve) {
  std::mt19937_64 rng(77);
  const CoinMatrix m = build_coin(CoinParams(oracle::random_theta(rng)));
  const CoinState st = oracle::random_state(rng);
  const auto series = return_series(st, 30, m);
  for (const auto& pt : series) {
    EXPECT_EQ(pt.probability, evolve(st, pt.t, m).amplitude(kOrigin).squaredNorm());
  }
}

TEST(evolution, repeated_runs_are_bit_identical) {
  const CoinMatrix m = build_coin(CoinParams(0.9));
  const CoinState st(cdouble(0.6, 0.0), cdouble(0.0, 0.48), cdouble(0.64, 0.0));
  const WaveFunction a = evolve(st, 60, m);
  const WaveFunction b = evolve(st, 60, m);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a.entries()[i].first, b.entries()[i].first);
    EXPECT_TRUE(a.entries()[i].second == b.entries()[i].second);
  }
}

TEST(evolution, entries_sorted_by_site) {
  const WaveFunction wf = evolve(CoinState(0.0, 1.0, 0.0), 9, build_coin(CoinParams(2.0)));
  for (std::size_t i = 1; i < wf.size(); ++i) EXPECT_LT(wf.entries()[i - 1].first, wf.entries()[i].first);
}

TEST(evolution, grover_distributions_depend_on_initial_state) {
  const CoinMatrix g = build_coin(CoinParams::grover());
  const double r = 1 / std::sqrt(3.0);

  // localized case: sharp peak at the origin
  const Distribution peaked = distribution(evolve(CoinState(0.0, 1.0, 0.0), 100, g));
  double max_p = 0;
  Site argmax;
  for (const auto& [site, p] : peaked.probs) {
    if (p > max_p) {
      max_p = p;
      argmax = site;
    }
  }
  EXPECT_EQ(argmax, kOrigin);
  EXPECT_GT(max_p, 0.1);

  // uniform state: no central peak
  const Distribution spread = distribution(evolve(CoinState(r, r, r), 100, g));
  double spread_max = 0;
  for (const auto& [site, p] : spread.probs) spread_max = std::max(spread_max, p);
  EXPECT_LT(spread.probability(kOrigin), 1e-3);
  EXPECT_LT(spread.probability(kOrigin), 0.25 * spread_max);
}

TEST(evolution, from_entries_validation) {
  const double h = 1 / std::sqrt(2.0);
  EXPECT_NO_THROW(WaveFunction::from_entries({{{B, 0, 1}, Vec3cd(h, 0, 0)}, {{B, -1, 0}, Vec3cd(0, h, 0)}}, 1));
  // wrong sublattice for t = 1
  EXPECT_THROW(WaveFunction::from_entries({{{A, 0, 0}, Vec3cd(1, 0, 0)}}, 1), std::invalid_argument);
  // wrong parity of x + y
  EXPECT_THROW(WaveFunction::from_entries({{{A, 1, 0}, Vec3cd(1, 0, 0)}}, 2), std::invalid_argument);
  // duplicate
  EXPECT_THROW(WaveFunction::from_entries({{{A, 0, 0}, Vec3cd(h, 0, 0)}, {{A, 0, 0}, Vec3cd(0, h, 0)}}, 0),
               std::invalid_argument);
  // norm
  EXPECT_THROW(WaveFunction::from_entries({{{A, 0, 0}, Vec3cd(0.5, 0, 0)}}, 0), std::invalid_argument);
  EXPECT_THROW(WaveFunction::from_entries({{{A, 0, 0}, Vec3cd(1, 0, 0)}}, -2), std::invalid_argument);
}

TEST(evolution, step_of_an_arbitrary_wavefunction) {
  const double h = 1 / std::sqrt(2.0);
  const WaveFunction wf =
      WaveFunction::from_entries({{{B, 3, 2}, Vec3cd(h, 0, 0)}, {{B, -1, 0}, Vec3cd(0, 0, cdouble(0, h))}}, 5);
  const CoinMatrix m = build_coin(CoinParams(1.1));
  const WaveFunction next = step(wf, m);
  EXPECT_EQ(next.time(), 6);
  EXPECT_NEAR(next.norm_squared(), 1.0, 1e-14);
  // component j of B(3,2) lands on shift_target(B(3,2), j)
  const Vec3cd coined = m.cast<cdouble>() * Vec3cd(h, 0, 0);
  for (int j = 0; j < 3; ++j) {
    EXPECT_EQ(next.amplitude(shift_target({B, 3, 2}, j))(j), coined(j));
  }
}

TEST(propagator, queries_agree_with_snapshot) {
  std::mt19937_64 rng(17);
  Propagator p(build_coin(CoinParams(oracle::random_theta(rng))), oracle::random_state(rng));
  for (int t = 1; t <= 31; ++t) {
    p.advance();
    const WaveFunction snap = p.snapshot();
    for (int radius : {0, 3, 10, 40}) {
      double expected = 0;
      for (const auto& [site, v] : snap.entries()) {
        if (std::abs(site.x) <= radius && std::abs(site.y) <= radius) expected += v.squaredNorm();
      }
      EXPECT_NEAR(p.window_probability(radius), expected, 1e-14) << "t=" << t << " radius=" << radius;
    }
    for (int x = -t; x <= t; ++x)
      for (int y = -2 * t; y <= 2 * t; ++y)
        for (auto sub : {A, B}) {
          const Site site{sub, x, y};
          if (support_parity_ok(site, t)) {
            EXPECT_EQ(p.amplitude(site), snap.amplitude(site)) << site << " t=" << t;
          } else {
            EXPECT_EQ(p.probability(site), 0.0) << site << " t=" << t;
          }
        }
  }
}
