#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace hexwalk {

// A sites sit at (3x/2, sqrt(3) y/2), B sites at ((3x+1)/2, sqrt(3) y/2).
// The walk alternates between them: A -> B on even steps, B -> A on odd.
enum class Sublattice : std::uint8_t { A = 0, B = 1 };

struct Site {
  Sublattice sub = Sublattice::A;
  int x = 0;
  int y = 0;

  // Total order: sublattice, then x, then y.
  friend auto operator<=>(const Site&, const Site&) = default;
};

struct PhysicalPoint {
  double px = 0;
  double py = 0;
};

PhysicalPoint to_physical(const Site& site);

/// Site reached from `site` when the coin component `coin_index` is shifted.
constexpr Site shift_target(const Site& site, int coin_index) {
  if (coin_index < 0 || coin_index > 2) throw std::out_of_range("coin index must be 0, 1 or 2");
  if (site.sub == Sublattice::A) {
    switch (coin_index) {
      case 0: return {Sublattice::B, site.x, site.y + 1};
      case 1: return {Sublattice::B, site.x - 1, site.y};
      default: return {Sublattice::B, site.x, site.y - 1};
    }
  }
  switch (coin_index) {
    case 0: return {Sublattice::A, site.x, site.y - 1};
    case 1: return {Sublattice::A, site.x + 1, site.y};
    default: return {Sublattice::A, site.x, site.y + 1};
  }
}

/// Inverse of shift_target for a fixed coin index: the unique site whose
/// component `coin_index` lands on `target`.
constexpr Site shift_source(const Site& target, int coin_index) {
  if (coin_index < 0 || coin_index > 2) throw std::out_of_range("coin index must be 0, 1 or 2");
  if (target.sub == Sublattice::B) {
    switch (coin_index) {
      case 0: return {Sublattice::A, target.x, target.y - 1};
      case 1: return {Sublattice::A, target.x + 1, target.y};
      default: return {Sublattice::A, target.x, target.y + 1};
    }
  }
  switch (coin_index) {
    case 0: return {Sublattice::B, target.x, target.y + 1};
    case 1: return {Sublattice::B, target.x - 1, target.y};
    default: return {Sublattice::B, target.x, target.y - 1};
  }
}

/// True when a walk started at A(0,0) may carry amplitude on `site` at step t.
constexpr bool support_parity_ok(const Site& site, long t) {
  const bool even_time = (t % 2) == 0;
  const bool even_sum = ((static_cast<long>(site.x) + site.y) % 2) == 0;
  if (even_time) return site.sub == Sublattice::A && even_sum;
  return site.sub == Sublattice::B && !even_sum;
}

constexpr Sublattice sublattice_at(long t) { return t % 2 == 0 ? Sublattice::A : Sublattice::B; }

std::string to_string(const Site& site);
std::ostream& operator<<(std::ostream& os, const Site& site);

}  // namespace hexwalk
