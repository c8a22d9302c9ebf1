#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace linematch {

/// Position on the line. Exact integers keep solver/oracle comparisons exact.
using Coord = std::int64_t;
/// Accumulated matching cost. 128 bits so sums of 64-bit distances cannot overflow.
__extension__ using Cost = __int128;
using Capacity = std::int64_t;

inline constexpr Cost kInfiniteCost = Cost{1} << 122;

enum class Side : std::uint8_t { S = 0, T = 1 };

constexpr Side opposite(Side side) { return side == Side::S ? Side::T : Side::S; }
constexpr char side_char(Side side) { return side == Side::S ? 'S' : 'T'; }

struct Point {
  Coord coord = 0;
  Side side = Side::S;
  Capacity cap = 1;
  std::size_t orig_id = 0;  // index in the caller's input order for this side
};

/// Two point sets, each sorted by coordinate (stable w.r.t. input order).
struct ProblemInstance {
  std::vector<Point> s_points;
  std::vector<Point> t_points;

  std::size_t size() const { return s_points.size() + t_points.size(); }
  const std::vector<Point>& points(Side side) const {
    return side == Side::S ? s_points : t_points;
  }
};

/// One matched pair, as indices into ProblemInstance::s_points / t_points.
struct Pair {
  std::size_t s = 0;
  std::size_t t = 0;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

struct Matching {
  std::vector<Pair> pairs;
  Cost total_cost = 0;
};

/// Work counters filled in by the solvers when requested.
struct SolveStats {
  std::uint64_t examined = 0;        // point / breakpoint examinations
  std::size_t ledger_entries = 0;    // stored C(p,k) values (capacitated solver)
};

inline Cost distance(Coord a, Coord b) {
  const Cost d = static_cast<Cost>(a) - static_cast<Cost>(b);
  return d < 0 ? -d : d;
}

std::string to_string(Cost value);

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptySideError : public Error {
 public:
  explicit EmptySideError(Side side);
  Side side() const { return side_; }

 private:
  Side side_;
};

class CapOutOfRangeError : public Error {
 public:
  CapOutOfRangeError(Side side, std::size_t index, Capacity cap);
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace linematch
