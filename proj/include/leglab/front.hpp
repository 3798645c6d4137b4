#pragma once

// Fronts encoded as words of cusp and crossing events on a stack of strands,
// and the admissible-decomposition census built on them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leglab/classical.hpp"

namespace leglab {

enum class EventKind { LeftCusp, RightCusp, Crossing };

/// position is 1-based from the top (largest u).  LeftCusp(i) inserts strands
/// i, i+1; RightCusp(i) joins strands i, i+1; Crossing(i) swaps them.
struct FrontEvent {
  EventKind kind;
  int position;
  friend bool operator==(const FrontEvent&, const FrontEvent&) = default;
};

enum class CuspDirection { Up, Down };

/// Orientation marker: the cusp at event `event` (0-based) is traversed from
/// its lower branch to its upper branch (Up) or the reverse (Down).
struct FrontOrientation {
  std::size_t event = 0;
  CuspDirection direction = CuspDirection::Up;
  friend bool operator==(const FrontOrientation&, const FrontOrientation&) = default;
};

struct FrontWord {
  std::vector<FrontEvent> events;
  FrontOrientation orientation;
  /// Label numbers of the crossings in left-to-right order (crossing c5 has
  /// number 5).  Empty means c1, c2, ... from left to right.  Switch-set bit j
  /// and "crossing j" always refer to the crossing numbered j + 1.
  std::vector<int> labels;

  std::size_t crossing_count() const;
  /// Event index of crossing j (label order), j 0-based.
  std::vector<std::size_t> crossing_events() const;
  /// Number of strands in interval k (after k events), k = 0..events.size().
  std::vector<int> strand_counts() const;

  friend bool operator==(const FrontWord&, const FrontWord&) = default;
};

struct FrontReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Stack discipline, closure, a single component, and a usable orientation.
FrontReport validate_front(const FrontWord& w);

/// Throws ValidationError with the first problem if the word is invalid.
void require_valid(const FrontWord& w);

/// A strand piece: interval k (1 .. E-1) and 1-based position.
struct Segment {
  int interval;
  int position;
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

/// One closed curve traced through a front: its segments in traversal order
/// with the horizontal direction (+1 rightward, -1 leftward), and the cusp
/// events met.
struct TracedCurve {
  std::vector<Segment> segments;
  std::vector<int> directions;
  std::vector<std::size_t> cusps;
  std::vector<bool> cusp_down;  // per entry of cusps: traversed upper -> lower
};

/// Traces the curves obtained by resolving every crossing whose bit is set in
/// `switches` (bit j = crossing j, see FrontWord::labels) as a switch: strands keep
/// their positions instead of swapping.  With switches = 0 this traces the
/// knot itself.
std::vector<TracedCurve> trace_curves(const FrontWord& w, std::uint64_t switches);

/// The knot traced in its orientation.
TracedCurve oriented_knot(const FrontWord& w);

/// Reverses the orientation marker.
FrontWord reverse_orientation(const FrontWord& w);

/// m = (#cusps traversed downward) - (#cusps traversed upward), which is twice
/// the rotation number; beta = signed crossings - right cusps, a crossing
/// being positive iff both strands run in the same q-direction.
Classical classical_from_front(const FrontWord& w);

/// Maslov potential: integer per segment, lower branch = upper branch - 1 at
/// every cusp, normalized so the minimum value is 0.
class MaslovPotential {
 public:
  MaslovPotential(std::int64_t modulus, std::map<Segment, std::int64_t> values);
  std::int64_t modulus() const { return modulus_; }
  std::int64_t at(Segment s) const;
  /// Equality in Z/m.
  bool same_class(std::int64_t a, std::int64_t b) const;

 private:
  std::int64_t modulus_;
  std::map<Segment, std::int64_t> values_;
};

MaslovPotential maslov_potential(const FrontWord& w);

/// Whether the two strands of the j-th crossing carry equal potential in Z/m.
bool is_maslov(const FrontWord& w, const MaslovPotential& mu, std::size_t crossing);
std::vector<bool> maslov_crossings(const FrontWord& w);

struct Decomposition {
  std::uint64_t switches = 0;
  std::vector<TracedCurve> curves;
};

Decomposition decomposition_from_switchset(const FrontWord& w, std::uint64_t switches);

struct AdmissibilityReport {
  /// Per condition (1)-(4): the event index of the first violation, if any.
  std::optional<std::size_t> embedded_disk;    // (1)
  std::optional<std::size_t> segment_slices;   // (2)
  std::optional<std::size_t> nested_switches;  // (3)
  std::optional<std::size_t> maslov_switches;  // (4)
  bool condition1 = true, condition2 = true, condition3 = true, condition4 = true;
  std::optional<std::int64_t> theta;  // #curves - #switches, when (1)-(3) hold

  bool admissible() const { return condition1 && condition2 && condition3; }
  bool graded() const { return admissible() && condition4; }
};

AdmissibilityReport check_admissible(const FrontWord& w, const Decomposition& d);

inline constexpr int kDefaultMaxCrossings = 24;

struct Census {
  std::vector<std::uint64_t> adm;
  std::vector<std::uint64_t> adm_graded;
  std::map<std::int64_t, int> theta;  // over Adm
  std::size_t crossings = 0;
};

/// Checks every switch set.  Throws CapExceeded above max_crossings crossings.
Census enumerate_decompositions(const FrontWord& w, int max_crossings = kDefaultMaxCrossings);

/// Text format: header "front", one event per line ("L i", "R i", "X i",
/// optionally "X i c5" to name the crossing; all or none are named),
/// optional "orient <event#> <up|down>" (1-based event number), "#" comments.
FrontWord parse_front(const std::string& text);
std::string serialize_front(const FrontWord& w);

}  // namespace leglab
