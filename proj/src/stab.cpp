#include "leglab/stab.hpp"

#include <algorithm>

#include "leglab/errors.hpp"

namespace leglab {

std::vector<Segment> stabilization_sites(const FrontWord& w) {
  require_valid(w);
  return oriented_knot(w).segments;
}

FrontWord stabilize_front(const FrontWord& w, StabilizationKind kind, std::optional<Segment> site) {
  require_valid(w);
  const auto knot = oriented_knot(w);
  const Segment at = site.value_or(knot.segments.front());
  const auto it = std::find(knot.segments.begin(), knot.segments.end(), at);
  if (it == knot.segments.end()) {
    throw ValidationError("no strand at interval " + std::to_string(at.interval) + ", position " +
                          std::to_string(at.position));
  }
  const int dir = knot.directions[static_cast<std::size_t>(it - knot.segments.begin())];
  // Zigzag hanging below the strand: traversed rightward both cusps point down.
  const bool below = (kind == StabilizationKind::Plus) == (dir > 0);
  const int p = at.position;
  const FrontEvent first = below ? FrontEvent{EventKind::LeftCusp, p + 1} : FrontEvent{EventKind::LeftCusp, p};
  const FrontEvent second = below ? FrontEvent{EventKind::RightCusp, p} : FrontEvent{EventKind::RightCusp, p + 1};

  FrontWord out = w;
  const auto k = static_cast<std::size_t>(at.interval);
  out.events.insert(out.events.begin() + static_cast<std::ptrdiff_t>(k), {first, second});
  if (out.orientation.event >= k) out.orientation.event += 2;
  return out;
}

DGA stabilize_knot_dga(const DGA& d, Degree degree_of_new) {
  DGA out = d;
  out.add_generator(fresh_generator_name(d), degree_of_new, Polynomial::one());
  return out;
}

CollapseReport verify_collapse(const FrontWord& w, StabilizationKind kind, std::optional<Segment> site) {
  CollapseReport r;
  r.stabilized = stabilize_front(w, kind, site);
  r.census = enumerate_decompositions(r.stabilized);
  const std::uint64_t total = std::uint64_t{1} << r.stabilized.crossing_count();
  for (std::uint64_t e = 0; e < total; ++e) {
    const auto rep = check_admissible(r.stabilized, decomposition_from_switchset(r.stabilized, e));
    if (rep.admissible()) continue;
    const int cond = !rep.condition1 ? 1 : !rep.condition2 ? 2 : 3;
    r.failures.push_back({e, cond});
    if (cond == 3) r.only_disk_conditions = false;
  }
  return r;
}

}  // namespace leglab
