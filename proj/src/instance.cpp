#include "linematch/instance.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace linematch {

namespace {

std::vector<Point> sorted_side(std::span<const RawPoint> raw, Side side, Capacity default_cap) {
  std::vector<Point> pts;
  pts.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const Capacity cap = raw[i].cap.value_or(default_cap);
    if (cap < 1) throw CapOutOfRangeError(side, i, cap);
    pts.push_back(Point{raw[i].coord, side, cap, i});
  }
  std::stable_sort(pts.begin(), pts.end(),
                   [](const Point& a, const Point& b) { return a.coord < b.coord; });
  return pts;
}

Cost total_cap(const std::vector<Point>& pts) {
  Cost sum = 0;
  for (const Point& p : pts) sum += p.cap;
  return sum;
}

}  // namespace

ProblemInstance normalize(std::span<const RawPoint> s_raw, std::span<const RawPoint> t_raw) {
  if (s_raw.empty()) throw EmptySideError(Side::S);
  if (t_raw.empty()) throw EmptySideError(Side::T);
  const auto unbounded = static_cast<Capacity>(s_raw.size() + t_raw.size());
  ProblemInstance inst;
  inst.s_points = sorted_side(s_raw, Side::S, unbounded);
  inst.t_points = sorted_side(t_raw, Side::T, unbounded);
  return inst;
}

Feasibility check_feasibility(const ProblemInstance& inst) {
  const Cost cap_s = total_cap(inst.s_points);
  const Cost cap_t = total_cap(inst.t_points);
  const auto ns = static_cast<Cost>(inst.s_points.size());
  const auto nt = static_cast<Cost>(inst.t_points.size());
  if (ns > cap_t) {
    return {false, "|S| = " + to_string(ns) + " exceeds total capacity of T = " + to_string(cap_t)};
  }
  if (nt > cap_s) {
    return {false, "|T| = " + to_string(nt) + " exceeds total capacity of S = " + to_string(cap_s)};
  }
  return {};
}

ProblemInstance uncapacitated(const ProblemInstance& inst) {
  ProblemInstance out = inst;
  const auto unbounded = static_cast<Capacity>(inst.size());
  for (Point& p : out.s_points) p.cap = unbounded;
  for (Point& p : out.t_points) p.cap = unbounded;
  return out;
}

Partition::Partition(const ProblemInstance& inst)
    : s_pos_(inst.s_points.size()), t_pos_(inst.t_points.size()) {
  const auto& s = inst.s_points;
  const auto& t = inst.t_points;
  merged_.reserve(inst.size());
  block_of_.reserve(inst.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < s.size() || j < t.size()) {
    // Ties go to S.
    const bool take_s = j == t.size() || (i < s.size() && s[i].coord <= t[j].coord);
    const Point& p = take_s ? s[i] : t[j];
    const std::size_t index = take_s ? i++ : j++;
    (take_s ? s_pos_ : t_pos_)[index] = merged_.size();
    if (blocks_.empty() || blocks_.back().side != p.side) {
      blocks_.push_back(Block{p.side, merged_.size(), merged_.size(), blocks_.size()});
    }
    merged_.push_back(MergedPoint{p.coord, p.side, p.cap, index});
    blocks_.back().last = merged_.size();
    block_of_.push_back(blocks_.size() - 1);
  }
}

Partition partition(const ProblemInstance& inst) { return Partition(inst); }

// ---------------------------------------------------------------------------

namespace {

template <typename Int>
bool parse_int(std::string_view token, Int& out) {
  const char* first = token.data();
  const char* last = first + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

InstanceText parse_instance(std::istream& in) {
  InstanceText text;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;
    if (tag != "S" && tag != "T") {
      throw ParseError(line_no, "expected 'S' or 'T', got '" + tag + "'");
    }
    std::string coord_tok;
    if (!(fields >> coord_tok)) throw ParseError(line_no, "missing coordinate");
    RawPoint point;
    if (!parse_int(coord_tok, point.coord)) {
      throw ParseError(line_no, "invalid coordinate '" + coord_tok + "'");
    }
    if (std::string cap_tok; fields >> cap_tok) {
      Capacity cap = 0;
      if (!parse_int(cap_tok, cap)) throw ParseError(line_no, "invalid capacity '" + cap_tok + "'");
      if (cap < 1) throw ParseError(line_no, "capacity must be >= 1, got " + cap_tok);
      point.cap = cap;
    }
    if (std::string extra; fields >> extra) {
      throw ParseError(line_no, "unexpected trailing field '" + extra + "'");
    }
    (tag == "S" ? text.s : text.t).push_back(point);
  }
  return text;
}

InstanceText parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

InstanceText read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_instance(in);
}

void write_instance(std::ostream& out, const InstanceText& text) {
  const auto emit = [&out](char tag, const std::vector<RawPoint>& pts) {
    for (const RawPoint& p : pts) {
      out << tag << ' ' << p.coord;
      if (p.cap) out << ' ' << *p.cap;
      out << '\n';
    }
  };
  emit('S', text.s);
  emit('T', text.t);
}

std::string format_instance(const InstanceText& text) {
  std::ostringstream out;
  write_instance(out, text);
  return out.str();
}

InstanceText to_text(const ProblemInstance& inst) {
  InstanceText text;
  const auto unsort = [](const std::vector<Point>& pts) {
    std::vector<RawPoint> raw(pts.size());
    for (const Point& p : pts) raw[p.orig_id] = RawPoint{p.coord, p.cap};
    return raw;
  };
  text.s = unsort(inst.s_points);
  text.t = unsort(inst.t_points);
  return text;
}

}  // namespace linematch
