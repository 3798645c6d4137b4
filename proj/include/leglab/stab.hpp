#pragma once

// Stabilizations: the zigzag move on fronts and its DGA-level model.

#include <cstdint>
#include <optional>
#include <vector>

#include "leglab/dga.hpp"
#include "leglab/front.hpp"

namespace leglab {

enum class StabilizationKind { Plus, Minus };

/// A zigzag on the oriented strand at `site`.  Plus adds two downward cusps
/// (m grows by 2), Minus two upward ones.  With no site, the first segment of
/// the oriented knot is used.
FrontWord stabilize_front(const FrontWord& w, StabilizationKind kind, std::optional<Segment> site = std::nullopt);

/// Every segment of the front, in traversal order of the oriented knot.
std::vector<Segment> stabilization_sites(const FrontWord& w);

/// Appends a generator a with d(a) = 1.
DGA stabilize_knot_dga(const DGA& d, Degree degree_of_new = 1);

struct CollapseReport {
  FrontWord stabilized;
  Census census;
  /// Per switch set that is not admissible, the first failing condition (1-3).
  std::vector<std::pair<std::uint64_t, int>> failures;
  /// Every failure is condition (1) or (2).
  bool only_disk_conditions = true;
  bool collapsed() const { return census.adm.empty(); }
};

CollapseReport verify_collapse(const FrontWord& w, StabilizationKind kind, std::optional<Segment> site = std::nullopt);

}  // namespace leglab
