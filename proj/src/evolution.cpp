#include "hexwalk/evolution.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hexwalk {

namespace {

bool is_zero(const Vec3cd& v) {
  return v(0) == cdouble(0) && v(1) == cdouble(0) && v(2) == cdouble(0);
}

template <typename Entries>
auto find_site(const Entries& entries, const Site& site) {
  return std::lower_bound(entries.begin(), entries.end(), site,
                          [](const auto& e, const Site& s) { return e.first < s; });
}

}  // namespace

WaveFunction WaveFunction::from_entries(std::vector<Entry> entries, int t) {
  if (t < 0) throw std::invalid_argument("wave function time must be non-negative");
  std::erase_if(entries, [](const Entry& e) { return is_zero(e.second); });
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && entries[i - 1].first == entries[i].first) {
      throw std::invalid_argument("duplicate site " + to_string(entries[i].first));
    }
    if (!support_parity_ok(entries[i].first, t)) {
      throw std::invalid_argument("site " + to_string(entries[i].first) +
                                  " is not reachable at step " + std::to_string(t));
    }
  }
  WaveFunction wf(std::move(entries), t);
  const double n2 = wf.norm_squared();
  if (std::abs(n2 - 1.0) > kNormTolerance) {
    throw std::invalid_argument("wave function is not normalized: " + std::to_string(n2));
  }
  return wf;
}

Vec3cd WaveFunction::amplitude(const Site& site) const {
  auto it = find_site(entries_, site);
  if (it != entries_.end() && it->first == site) return it->second;
  return Vec3cd::Zero();
}

double WaveFunction::norm_squared() const {
  double sum = 0;
  for (const auto& [site, v] : entries_) sum += v.squaredNorm();
  return sum;
}

double Distribution::probability(const Site& site) const {
  auto it = find_site(probs, site);
  if (it != probs.end() && it->first == site) return it->second;
  return 0;
}

double Distribution::total() const {
  double sum = 0;
  for (const auto& [site, p] : probs) sum += p;
  return sum;
}

Propagator::Propagator(const CoinMatrix& coin, const CoinState& state)
    : coin_(coin), cells_(1, state.vector()) {}

Propagator::Propagator(const CoinMatrix& coin, const WaveFunction& wf) : coin_(coin), t_(wf.time()) {
  const auto entries = wf.entries();
  if (entries.empty()) throw std::invalid_argument("cannot propagate an empty wave function");
  int xmin = entries.front().first.x, xmax = xmin;
  int ymin = entries.front().first.y, ymax = ymin;
  for (const auto& [site, v] : entries) {
    xmin = std::min(xmin, site.x);
    xmax = std::max(xmax, site.x);
    ymin = std::min(ymin, site.y);
    ymax = std::max(ymax, site.y);
  }
  x0_ = xmin;
  y0_ = ymin;
  nx_ = xmax - xmin + 1;
  ny_ = ymax - ymin + 1;
  cells_.assign(static_cast<std::size_t>(nx_) * rows(), Vec3cd::Zero());
  for (const auto& [site, v] : entries) cells_[index(site.x, site.y)] = v;
}

int Propagator::first_row(int x) const { return y0_ + ((x + y0_ + t_) & 1); }

void Propagator::advance() {
  const CoinMatrix& m = coin_;
  for (int x = x0_; x < x0_ + nx_; ++x) {
    for (int y = first_row(x); y < y0_ + ny_; y += 2) {
      Vec3cd& v = cells_[index(x, y)];
      const cdouble v0 = v(0), v1 = v(1), v2 = v(2);
      for (int i = 0; i < 3; ++i) v(i) = m(i, 0) * v0 + m(i, 1) * v1 + m(i, 2) * v2;
    }
  }

  const Sublattice from = sublattice();
  const Sublattice to = sublattice_at(t_ + 1);
  const int nx = nx_ + 1;
  const int ny = ny_ + 2;
  const int x0 = from == Sublattice::A ? x0_ - 1 : x0_;
  const int y0 = y0_ - 1;
  const int rows = (ny + 1) / 2;
  const std::size_t cells = static_cast<std::size_t>(nx) * rows;
  if (scratch_.capacity() < cells) scratch_.reserve(cells + cells / 2);
  scratch_.assign(cells, Vec3cd::Zero());

  std::array<int, 3> dx{}, dy{};
  for (int j = 0; j < 3; ++j) {
    const Site src = shift_source(Site{to, 0, 0}, j);
    dx[j] = src.x;
    dy[j] = src.y;
  }

  for (int x = x0; x < x0 + nx; ++x) {
    const int y_start = y0 + ((x + y0 + t_ + 1) & 1);
    Vec3cd* out = scratch_.data() + static_cast<std::size_t>(x - x0) * rows + ((y_start - y0) >> 1);
    for (int y = y_start; y < y0 + ny; y += 2, ++out) {
      for (int j = 0; j < 3; ++j) {
        const int sx = x + dx[j], sy = y + dy[j];
        if (contains(sx, sy)) (*out)(j) = cells_[index(sx, sy)](j);
      }
    }
  }

  cells_.swap(scratch_);
  x0_ = x0;
  y0_ = y0;
  nx_ = nx;
  ny_ = ny;
  ++t_;
}

void Propagator::advance(int steps) {
  if (steps < 0) throw std::invalid_argument("step count must be non-negative");
  for (int i = 0; i < steps; ++i) advance();
}

Vec3cd Propagator::amplitude(const Site& site) const {
  if (!support_parity_ok(site, t_) || !contains(site.x, site.y)) return Vec3cd::Zero();
  return cells_[index(site.x, site.y)];
}

double Propagator::total_probability() const {
  double sum = 0;
  for (const auto& v : cells_) sum += v.squaredNorm();
  return sum;
}

double Propagator::window_probability(int radius) const {
  double sum = 0;
  const int xlo = std::max(x0_, -radius), xhi = std::min(x0_ + nx_ - 1, radius);
  const int ylo = std::max(y0_, -radius), yhi = std::min(y0_ + ny_ - 1, radius);
  for (int x = xlo; x <= xhi; ++x) {
    for (int y = ylo + ((x + ylo + t_) & 1); y <= yhi; y += 2) sum += cells_[index(x, y)].squaredNorm();
  }
  return sum;
}

WaveFunction Propagator::snapshot() const {
  std::vector<WaveFunction::Entry> entries;
  const Sublattice sub = sublattice();
  for (int x = x0_; x < x0_ + nx_; ++x) {
    for (int y = first_row(x); y < y0_ + ny_; y += 2) {
      const Vec3cd& v = cells_[index(x, y)];
      if (!is_zero(v)) entries.emplace_back(Site{sub, x, y}, v);
    }
  }
  return WaveFunction(std::move(entries), t_);
}

WaveFunction initial_wavefunction(const CoinState& state) {
  return WaveFunction::from_entries({{Site{Sublattice::A, 0, 0}, state.vector()}}, 0);
}

WaveFunction step(const WaveFunction& wf, const CoinMatrix& coin) {
  Propagator p(coin, wf);
  p.advance();
  return p.snapshot();
}

WaveFunction evolve(const CoinState& state, int t, const CoinMatrix& coin) {
  if (t < 0) throw std::invalid_argument("step count must be non-negative");
  Propagator p(coin, state);
  p.advance(t);
  return p.snapshot();
}

Distribution distribution(const WaveFunction& wf) {
  Distribution d;
  d.t = wf.time();
  d.probs.reserve(wf.size());
  for (const auto& [site, v] : wf.entries()) d.probs.emplace_back(site, v.squaredNorm());
  return d;
}

std::vector<ReturnPoint> return_series(const CoinState& state, int t_max, const CoinMatrix& coin) {
  if (t_max < 0) throw std::invalid_argument("t_max must be non-negative");
  const Site origin{Sublattice::A, 0, 0};
  std::vector<ReturnPoint> series;
  series.reserve(static_cast<std::size_t>(t_max / 2 + 1));
  Propagator p(coin, state);
  series.push_back({0, p.probability(origin)});
  while (p.time() + 2 <= t_max) {
    p.advance(2);
    series.push_back({p.time(), p.probability(origin)});
  }
  return series;
}

}  // namespace hexwalk
