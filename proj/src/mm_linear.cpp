#include "linematch/mm_linear.hpp"

#include <algorithm>
#include <cassert>

#include "linematch/matching.hpp"

namespace linematch::mm {

namespace {

bool finite(Cost c) { return c < kInfiniteCost; }

// C(a_h) of A_w for h = 0..s; h = 0 refers to the prefix closed before A_w.
Cost left_cost(const MmState& state, const Block& a_block, std::size_t h) {
  if (h == 0) return a_block.first == 0 ? Cost{0} : state.c[a_block.first - 1];
  return state.c[a_block.first + h - 1];
}

}  // namespace

Cost case0_cost(std::span<const Coord> a, std::span<const Coord> b, std::size_t i) {
  assert(!a.empty() && i >= 1 && i <= b.size());
  const std::size_t s = a.size();
  Cost e_sum = 0;  // Σ_{j<=s} e_j, e_j = b_1 - a_j
  for (Coord x : a) e_sum += distance(b[0], x);
  Cost f_sum = 0;  // Σ_{j<=i} f_j, f_j = b_j - b_1
  for (std::size_t j = 0; j < i; ++j) f_sum += distance(b[j], b[0]);
  if (i <= s) return e_sum + f_sum;
  return static_cast<Cost>(i - s) * distance(b[0], a[s - 1]) + e_sum + f_sum;
}

MmState::MmState(const Partition& part)
    : c(part.merged().size(), kInfiniteCost),
      choice(part.merged().size(), 0) {}

void insert_b1(MmState& state, const Partition& part, std::size_t w) {
  const Block& a_block = part.blocks()[w];
  const Block& b_block = part.blocks()[w + 1];
  const auto a = part.members(a_block);
  const std::size_t s = a.size();
  BlockTables& tab = state.tables;
  tab.w = w;
  tab.s = s;
  tab.b1 = part.merged()[b_block.first].coord;
  tab.a_s = a.back().coord;
  tab.best_p.assign(s + 1, kInfiniteCost);
  tab.arg_p.assign(s + 1, 0);
  tab.best_q.assign(s + 2, kInfiniteCost);
  tab.arg_q.assign(s + 2, s + 1);

  // tail[h] = Σ_{j>h} a_j, accumulated from the right.
  std::vector<Cost> tail(s + 1, 0);
  for (std::size_t h = s; h-- > 0;) tail[h] = tail[h + 1] + a[h].coord;

  for (std::size_t h = 0; h <= s; ++h) {
    ++state.examined;
    const Cost left = left_cost(state, a_block, h);
    Cost p = kInfiniteCost;
    if (finite(left)) p = left - tail[h] + static_cast<Cost>(s - h) * tab.b1;
    // Ties go to the larger h (fewer points pulled across the gap).
    if (h > 0 && tab.best_p[h - 1] < p) {
      tab.best_p[h] = tab.best_p[h - 1];
      tab.arg_p[h] = tab.arg_p[h - 1];
    } else {
      tab.best_p[h] = p;
      tab.arg_p[h] = h;
    }
  }
  for (std::size_t h = s + 1; h-- > 0;) {
    const Cost left = left_cost(state, a_block, h);
    Cost q = kInfiniteCost;
    if (finite(left)) q = left - tail[h] - static_cast<Cost>(h) * tab.a_s;
    if (q < tab.best_q[h + 1]) {
      tab.best_q[h] = q;
      tab.arg_q[h] = h;
    } else {
      tab.best_q[h] = tab.best_q[h + 1];
      tab.arg_q[h] = tab.arg_q[h + 1];
    }
  }
  tab.b_sum = 0;
  tab.inserted = 0;
  extend_bi(state, part);
}

void extend_bi(MmState& state, const Partition& part) {
  BlockTables& tab = state.tables;
  const Block& b_block = part.blocks()[tab.w + 1];
  const std::size_t i = ++tab.inserted;
  assert(i <= b_block.size());
  const std::size_t pos = b_block.first + i - 1;
  ++state.examined;
  tab.b_sum += part.merged()[pos].coord;

  const std::size_t s = tab.s;
  Cost best = kInfiniteCost;
  std::size_t arg = 0;
  // m = s - h >= i: surplus a's all go to b_1.
  if (i <= s && finite(tab.best_p[s - i])) {
    best = tab.best_p[s - i] - static_cast<Cost>(i) * tab.b1;
    arg = tab.arg_p[s - i];
  }
  // m < i: surplus b's all go to a_s.
  const std::size_t k = i <= s ? s - i + 1 : 0;
  if (finite(tab.best_q[k])) {
    const Cost q = tab.best_q[k] - (static_cast<Cost>(i) - static_cast<Cost>(s)) * tab.a_s;
    if (q <= best) {
      best = q;
      arg = tab.arg_q[k];
    }
  }
  if (!finite(best)) return;  // cannot happen: h = 0 or h = s is always available
  state.c[pos] = tab.b_sum + best;
  state.choice[pos] = arg;
}

MmState run_dp(const Partition& part) {
  MmState state(part);
  const auto blocks = part.blocks();
  for (std::size_t w = 0; w + 1 < blocks.size(); ++w) {
    insert_b1(state, part, w);
    for (std::size_t i = 2; i <= blocks[w + 1].size(); ++i) extend_bi(state, part);
  }
  return state;
}

std::vector<Pair> reconstruct(const MmState& state, const Partition& part, std::size_t end) {
  const auto merged = part.merged();
  const auto blocks = part.blocks();
  std::vector<Pair> pairs;
  const auto add = [&](std::size_t x, std::size_t y) {
    const MergedPoint& p = merged[x];
    const MergedPoint& q = merged[y];
    pairs.push_back(p.side == Side::S ? Pair{p.index, q.index} : Pair{q.index, p.index});
  };

  std::size_t cur = end;
  for (;;) {
    const std::size_t bw = part.block_of(cur);
    assert(bw > 0);
    const Block& b_block = blocks[bw];
    const Block& a_block = blocks[bw - 1];
    const std::size_t i = cur - b_block.first + 1;
    const std::size_t h = state.choice[cur];
    const std::size_t s = a_block.size();
    const std::size_t m = s - h;
    const std::size_t a0 = a_block.first + h;  // position of a_{h+1}
    const std::size_t b0 = b_block.first;      // position of b_1
    if (m >= i) {
      const std::size_t extra = m - i;  // a_{h+1..h+extra} also go to b_1
      for (std::size_t k = 0; k <= extra; ++k) add(a0 + k, b0);
      for (std::size_t k = 1; k < i; ++k) add(a0 + extra + k, b0 + k);
    } else {
      for (std::size_t k = 0; k < m; ++k) add(a0 + k, b0 + k);
      for (std::size_t k = m; k < i; ++k) add(a_block.last - 1, b0 + k);
    }
    if (h > 0) {
      cur = a_block.first + h - 1;
    } else if (a_block.ordinal == 0) {
      break;
    } else {
      cur = a_block.first - 1;
    }
  }
  return pairs;
}

std::vector<std::size_t> separating_indices(const Partition& part, std::span<const Pair> pairs) {
  const auto blocks = part.blocks();
  std::vector<std::size_t> sep(blocks.size());
  for (const Block& b : blocks) sep[b.ordinal] = b.size();
  for (const Pair& p : pairs) {
    const std::size_t ps = part.position_of(Side::S, p.s);
    const std::size_t pt = part.position_of(Side::T, p.t);
    const std::size_t left = std::min(ps, pt);
    const Block& b = blocks[part.block_of(left)];
    sep[b.ordinal] = std::min(sep[b.ordinal], left - b.first);
  }
  return sep;
}

Matching solve_mm(const ProblemInstance& inst, SolveStats* stats) {
  if (inst.s_points.empty()) throw EmptySideError(Side::S);
  if (inst.t_points.empty()) throw EmptySideError(Side::T);
  const Partition part(inst);
  MmState state = run_dp(part);
  std::vector<Pair> pairs = reconstruct(state, part, part.merged().size() - 1);
  Matching m = make_matching(inst, std::move(pairs));
  assert(m.total_cost == state.c.back());
  if (stats != nullptr) stats->examined = state.examined;
  return m;
}

}  // namespace linematch::mm
