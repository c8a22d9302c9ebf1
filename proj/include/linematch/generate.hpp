#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "linematch/instance.hpp"

namespace linematch {

struct GenParams {
  std::size_t n_s = 1;
  std::size_t n_t = 1;
  std::optional<Capacity> cap_max;  // caps uniform in [1, cap_max]; none = omitted
  Coord coord_max = 100;            // coords uniform in [0, coord_max)
};

/// Independent uniform coordinates and capacities drawn from `rng`.
InstanceText generate(const GenParams& params, std::mt19937_64& rng);

/// Same as generate(), seeded; equal seeds give equal instances.
InstanceText generate(const GenParams& params, std::uint64_t seed);

/// Redraws until the instance passes check_feasibility(). Throws
/// InfeasibleError if the sizes cannot fit even with every cap at cap_max.
InstanceText generate_feasible(const GenParams& params, std::mt19937_64& rng);

/// |S|, |T| uniform in [1, 8], coordinates in [0, 100), no capacities.
InstanceText small_mm_instance(std::mt19937_64& rng);

/// Feasible instance with 2 <= |S| + |T| <= max_points, caps uniform in
/// [1, cap_max] and coordinates in [0, coord_max). Sizes are redrawn along
/// with the points until the capacities fit.
InstanceText small_olcmm_instance(std::mt19937_64& rng, std::size_t max_points = 10,
                                  Capacity cap_max = 3, Coord coord_max = 50);

/// Convenience: normalize(text.s, text.t).
ProblemInstance to_instance(const InstanceText& text);

}  // namespace linematch
