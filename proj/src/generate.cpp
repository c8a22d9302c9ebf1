#include "linematch/generate.hpp"

namespace linematch {

namespace {

std::vector<RawPoint> draw_side(std::size_t count, const GenParams& params,
                                std::mt19937_64& rng) {
  std::uniform_int_distribution<Coord> coord(0, params.coord_max - 1);
  std::uniform_int_distribution<Capacity> cap(1, params.cap_max.value_or(1));
  std::vector<RawPoint> pts(count);
  for (RawPoint& p : pts) {
    p.coord = coord(rng);
    if (params.cap_max) p.cap = cap(rng);
  }
  return pts;
}

}  // namespace

InstanceText generate(const GenParams& params, std::mt19937_64& rng) {
  InstanceText text;
  text.s = draw_side(params.n_s, params, rng);
  text.t = draw_side(params.n_t, params, rng);
  return text;
}

InstanceText generate(const GenParams& params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return generate(params, rng);
}

InstanceText generate_feasible(const GenParams& params, std::mt19937_64& rng) {
  if (params.cap_max) {
    const auto most = static_cast<std::size_t>(*params.cap_max);
    if (params.n_s > params.n_t * most || params.n_t > params.n_s * most) {
      throw InfeasibleError("no instance with these sizes fits cap_max " +
                            std::to_string(*params.cap_max));
    }
  }
  for (;;) {
    InstanceText text = generate(params, rng);
    if (check_feasibility(to_instance(text))) return text;
  }
}

InstanceText small_mm_instance(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 8);
  GenParams params;
  params.n_s = size(rng);
  params.n_t = size(rng);
  params.coord_max = 100;
  return generate(params, rng);
}

InstanceText small_olcmm_instance(std::mt19937_64& rng, std::size_t max_points, Capacity cap_max,
                                  Coord coord_max) {
  std::uniform_int_distribution<std::size_t> total(2, max_points);
  GenParams params;
  params.cap_max = cap_max;
  params.coord_max = coord_max;
  for (;;) {
    const std::size_t n = total(rng);
    params.n_s = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
    params.n_t = n - params.n_s;
    InstanceText text = generate(params, rng);
    if (check_feasibility(to_instance(text))) return text;
  }
}

ProblemInstance to_instance(const InstanceText& text) { return normalize(text.s, text.t); }

}  // namespace linematch
