#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linematch/types.hpp"

namespace linematch {

/// A point as the caller supplied it. A missing capacity means "unbounded".
struct RawPoint {
  Coord coord = 0;
  std::optional<Capacity> cap;
  friend bool operator==(const RawPoint&, const RawPoint&) = default;
};

/// Sorts both sides (stable), labels points with their input index and
/// resolves missing capacities to |S|+|T|, which can never bind.
///
/// Throws EmptySideError if either list is empty and CapOutOfRangeError if a
/// given capacity is below 1.
ProblemInstance normalize(std::span<const RawPoint> s_raw, std::span<const RawPoint> t_raw);

struct Feasibility {
  bool feasible = true;
  std::string reason;  // empty when feasible
  explicit operator bool() const { return feasible; }
};

/// A covering with every point matched at least once and at most cap times
/// exists iff |S| <= sum cap(T) and |T| <= sum cap(S).
Feasibility check_feasibility(const ProblemInstance& inst);

/// Same instance with every capacity replaced by |S|+|T|.
ProblemInstance uncapacitated(const ProblemInstance& inst);

// ---------------------------------------------------------------------------
// Merged order and block partition

/// One point of S ∪ T in merged order.
struct MergedPoint {
  Coord coord = 0;
  Side side = Side::S;
  Capacity cap = 1;
  std::size_t index = 0;  // index into inst.points(side)
};

/// A maximal same-side run of the merged order: positions [first, last).
struct Block {
  Side side = Side::S;
  std::size_t first = 0;
  std::size_t last = 0;
  std::size_t ordinal = 0;

  std::size_t size() const { return last - first; }
};

/// S ∪ T merged by coordinate (S before T on equal coordinates) and cut into
/// alternating blocks A_0, A_1, ...
class Partition {
 public:
  explicit Partition(const ProblemInstance& inst);

  std::span<const MergedPoint> merged() const { return merged_; }
  std::span<const Block> blocks() const { return blocks_; }
  std::span<const MergedPoint> members(const Block& block) const {
    return std::span<const MergedPoint>(merged_).subspan(block.first, block.size());
  }
  /// Ordinal of the block holding merged position `pos`.
  std::size_t block_of(std::size_t pos) const { return block_of_[pos]; }
  /// Merged position of point `index` of `side`.
  std::size_t position_of(Side side, std::size_t index) const {
    return side == Side::S ? s_pos_[index] : t_pos_[index];
  }

 private:
  std::vector<MergedPoint> merged_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> block_of_;
  std::vector<std::size_t> s_pos_;
  std::vector<std::size_t> t_pos_;
};

Partition partition(const ProblemInstance& inst);

// ---------------------------------------------------------------------------
// Instance text format
//
//   S <coord> [cap]
//   T <coord> [cap]
//
// one point per line, '#' starts a comment, blank lines are ignored.

struct InstanceText {
  std::vector<RawPoint> s;
  std::vector<RawPoint> t;
};

/// Throws ParseError naming the offending line.
InstanceText parse_instance(std::istream& in);
InstanceText parse_instance_string(const std::string& text);
InstanceText read_instance_file(const std::string& path);

/// Emits S lines then T lines, each side in input order. Caps are written
/// only when present, so parse(format(x)) == x.
void write_instance(std::ostream& out, const InstanceText& text);
std::string format_instance(const InstanceText& text);

/// Re-expresses a normalized instance in input order with explicit caps.
InstanceText to_text(const ProblemInstance& inst);

}  // namespace linematch
