#ifndef TORALG_CONFIG_HPP
#define TORALG_CONFIG_HPP

#include <cstddef>

namespace toralg {

/// Global knobs. All have fixed defaults; the CLI may override them
/// before any engine call (they are read at call time, not cached).
struct Config {
  /// Ambient rank guard; enumeration costs are exponential in the rank.
  static std::size_t max_rank;
  /// Total degree bound (in dual generators) for oracle monomial sweeps.
  static std::size_t oracle_degree_bound;
  /// Fallback box half-width multiplier for root searches (bound = factor * rank).
  static std::size_t root_box_factor;
};

}  // namespace toralg

#endif
