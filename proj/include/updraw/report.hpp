#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace updraw {

enum class ViolationKind {
  crossing,
  coincident_points,
  vertex_on_edge,
  non_upward,
  x_crossing,
  intra_track_arc,
  plus_graph_cycle,
  bad_rank,
  nesting,
  non_topological,
};

inline std::string_view to_string(ViolationKind k) {
  switch (k) {
  case ViolationKind::crossing: return "crossing";
  case ViolationKind::coincident_points: return "coincident_points";
  case ViolationKind::vertex_on_edge: return "vertex_on_edge";
  case ViolationKind::non_upward: return "non_upward";
  case ViolationKind::x_crossing: return "x_crossing";
  case ViolationKind::intra_track_arc: return "intra_track_arc";
  case ViolationKind::plus_graph_cycle: return "plus_graph_cycle";
  case ViolationKind::bad_rank: return "bad_rank";
  case ViolationKind::nesting: return "nesting";
  case ViolationKind::non_topological: return "non_topological";
  }
  return "unknown";
}

/// One defect found by a verifier. `witnesses` holds the vertex, arc or
/// segment indices involved; `detail` is a human-readable description.
struct Violation {
  ViolationKind kind;
  std::vector<long long> witnesses;
  std::string detail;

  friend bool operator<(const Violation &a, const Violation &b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.witnesses < b.witnesses;
  }
};

struct VerifyReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t count(ViolationKind k) const {
    return static_cast<std::size_t>(std::count_if(
        violations.begin(), violations.end(),
        [k](const Violation &v) { return v.kind == k; }));
  }
  void add(ViolationKind k, std::vector<long long> w, std::string detail = {}) {
    violations.push_back({k, std::move(w), std::move(detail)});
  }
  void finalize() { std::stable_sort(violations.begin(), violations.end()); }

  std::string summary() const {
    if (ok()) return "ok";
    std::string s;
    for (auto k : {ViolationKind::crossing, ViolationKind::coincident_points,
                   ViolationKind::vertex_on_edge, ViolationKind::non_upward,
                   ViolationKind::x_crossing, ViolationKind::intra_track_arc,
                   ViolationKind::plus_graph_cycle, ViolationKind::bad_rank,
                   ViolationKind::nesting, ViolationKind::non_topological}) {
      if (auto c = count(k)) {
        if (!s.empty()) s += ", ";
        s += std::to_string(c) + " " + std::string(to_string(k));
      }
    }
    return s;
  }
};

} // namespace updraw
