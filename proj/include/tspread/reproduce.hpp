#pragma once

// Reproduction of the worked examples and theorems on fixed instances, plus
// the seeded random instance generator shared by the property suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tspread/borel.hpp"
#include "tspread/guards.hpp"
#include "tspread/reports.hpp"

namespace tspread {

struct ReproduceOptions {
  std::uint64_t seed = 20240229;
  /// Number of random instances in the linear-quotients suite.
  int random_instances = 100;
  /// Fault injection: remove u from G(I) before the duality and SCM checks.
  bool drop_u = false;
  Guards guards;
};

ReproduceReport run_reproduction(const ReproduceOptions& options = {});

struct RandomInstanceShape {
  int n_min = 1;
  int n_max = 12;
  int d_max = 4;
  /// When set, force i_d = n.
  bool last_is_n = false;
};

/// A uniformly drawn legal (n, t, u) for the shape. Uses only the raw engine
/// output so the sequence is the same on every standard library.
BorelInstance random_instance(std::mt19937_64& rng, const RandomInstanceShape& shape);

/// Every t-spread u in n variables, for every t >= 1 and both endpoints.
std::vector<BorelInstance> all_instances(int n);

/// The worked duality example: B_2(x2*x4*x9) in 9 variables.
BorelInstance example_instance();

}  // namespace tspread
