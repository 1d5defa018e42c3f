#pragma once

#include <cstddef>

namespace tspread {

/// Size limits for the exponential parts of the library. Exceeding one
/// throws GuardExceeded instead of truncating.
struct Guards {
  std::size_t max_power_generators = 200'000;
  std::size_t max_decomposition_vars = 12;
  std::size_t max_components = 5'000;
  std::size_t max_witness_search = 4'000'000;
  std::size_t max_facet_vars = 24;

  /// Defaults overridden by TSPREAD_MAX_GENERATORS, TSPREAD_MAX_DECOMP_VARS,
  /// TSPREAD_MAX_COMPONENTS, TSPREAD_MAX_WITNESS_SEARCH when set.
  static Guards from_env();
};

}  // namespace tspread
