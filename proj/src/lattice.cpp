#include "hexwalk/lattice.hpp"

#include <cmath>
#include <ostream>

namespace hexwalk {

PhysicalPoint to_physical(const Site& site) {
  const int twice_px = 3 * site.x + (site.sub == Sublattice::B ? 1 : 0);
  return {0.5 * twice_px, 0.5 * std::sqrt(3.0) * site.y};
}

std::string to_string(const Site& site) {
  return std::string(site.sub == Sublattice::A ? "A" : "B") + "(" + std::to_string(site.x) + "," +
         std::to_string(site.y) + ")";
}

std::ostream& operator<<(std::ostream& os, const Site& site) { return os << to_string(site); }

}  // namespace hexwalk
