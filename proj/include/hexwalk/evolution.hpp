#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hexwalk/coin.hpp"
#include "hexwalk/lattice.hpp"
#include "hexwalk/types.hpp"

namespace hexwalk {

/// Walker state at step t: coin amplitudes on the occupied sites.
///
/// Entries are kept sorted by Site order and never contain an all-zero
/// triple. Every entry lies on the sublattice visited at step t.
class WaveFunction {
 public:
  using Entry = std::pair<Site, Vec3cd>;

  static constexpr double kNormTolerance = 1e-10;

  /// Validates and sorts user-provided entries. Throws std::invalid_argument
  /// on duplicate sites, parity violations or a norm off by more than 1e-10.
  static WaveFunction from_entries(std::vector<Entry> entries, int t);

  int time() const { return t_; }
  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// Zero for unoccupied sites.
  Vec3cd amplitude(const Site& site) const;
  double norm_squared() const;

 private:
  friend class Propagator;
  WaveFunction(std::vector<Entry> entries, int t) : entries_(std::move(entries)), t_(t) {}

  std::vector<Entry> entries_;
  int t_ = 0;
};

/// Per-site probabilities, sorted by Site order.
struct Distribution {
  std::vector<std::pair<Site, double>> probs;
  int t = 0;

  double probability(const Site& site) const;
  double total() const;
};

/// Dense-window engine behind step() and evolve().
///
/// Holds the amplitudes of the currently occupied sublattice on a bounding
/// box that grows by one column in x and two rows in y per step. Only cells
/// with x + y + t even can be occupied, so each column stores every other
/// row. Each target
/// component receives exactly one source contribution, so a step involves no
/// floating-point accumulation and results are bit-reproducible.
class Propagator {
 public:
  Propagator(const CoinMatrix& coin, const CoinState& state);
  Propagator(const CoinMatrix& coin, const WaveFunction& wf);

  void advance();
  void advance(int steps);

  int time() const { return t_; }
  Sublattice sublattice() const { return sublattice_at(t_); }

  Vec3cd amplitude(const Site& site) const;
  double probability(const Site& site) const { return amplitude(site).squaredNorm(); }

  /// Sum of |psi|^2 over all stored cells in column-major order.
  double total_probability() const;
  /// Mass on sites with |x| <= radius and |y| <= radius.
  double window_probability(int radius) const;

  WaveFunction snapshot() const;

 private:
  bool contains(int x, int y) const {
    return x >= x0_ && x < x0_ + nx_ && y >= y0_ && y < y0_ + ny_;
  }
  int rows() const { return (ny_ + 1) / 2; }
  // Valid only for cells with x + y + t even.
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(x - x0_) * static_cast<std::size_t>(rows()) +
           static_cast<std::size_t>((y - y0_) >> 1);
  }
  // First y >= y0_ in column x whose parity matches the occupied sublattice.
  int first_row(int x) const;

  CoinMatrix coin_;
  int t_ = 0;
  int x0_ = 0;
  int y0_ = 0;
  int nx_ = 1;
  int ny_ = 1;
  std::vector<Vec3cd> cells_;
  std::vector<Vec3cd> scratch_;
};

WaveFunction initial_wavefunction(const CoinState& state);

/// One application of (S1 + S2) C.
WaveFunction step(const WaveFunction& wf, const CoinMatrix& coin);

WaveFunction evolve(const CoinState& state, int t, const CoinMatrix& coin);

Distribution distribution(const WaveFunction& wf);

struct ReturnPoint {
  int t = 0;
  double probability = 0;
};

/// Origin probability at t = 0, 2, 4, ... <= t_max from one evolution pass.
std::vector<ReturnPoint> return_series(const CoinState& state, int t_max, const CoinMatrix& coin);

}  // namespace hexwalk
