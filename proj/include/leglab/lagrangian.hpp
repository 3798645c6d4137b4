#pragma once

// Lagrangian diagrams as exact rational polylines in the (q, p) plane: the
// Legendrian lift, crossings and their sectors, the planar face structure,
// classical invariants, gradings, immersed polygons and the resulting DGA.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "leglab/classical.hpp"
#include "leglab/dga.hpp"

namespace leglab {

struct Point {
  mpq_class q;
  mpq_class p;
  friend bool operator==(const Point&, const Point&) = default;
};

/// A point where the knot passes through a crossing, ordered along the knot
/// from the first vertex.
struct Passage {
  std::size_t edge;  // edge i runs from vertex i to vertex i+1
  mpq_class t;       // position along the edge, in (0, 1)
  int crossing;
  bool over;
};

struct CrossingData {
  std::string label;  // "a1", "a2", ... in order of first passage
  Point point;
  int over_passage;   // index into passages; the branch with larger u
  int under_passage;
  int sign;           // +1 / -1, the usual writhe sign viewed from +u
  mpq_class action;   // u(over) - u(under) > 0
};

/// Directed arc of the diagram graph: arc k runs from passage k to passage
/// k+1 along the knot; forward = false traverses it backwards.
struct HalfEdge {
  int arc;
  bool forward;
  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

struct Face {
  std::vector<HalfEdge> boundary;  // face lies to the left
  mpq_class area;                  // signed; negative only for the unbounded face
  int corners = 0;                 // crossing corners on the boundary
};

/// The four quadrants at a crossing, counter-clockwise.  Quadrant k lies
/// between outgoing half-edges k and k+1.
struct CrossingLocal {
  std::array<HalfEdge, 4> outgoing;
  std::array<int, 4> quadrant_face;
  std::array<bool, 4> positive;  // exactly two, opposite
};

class LagrangianDiagram {
 public:
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<CrossingData>& crossings() const { return crossings_; }
  const std::vector<Passage>& passages() const { return passages_; }
  const std::vector<Face>& faces() const { return faces_; }
  int outer_face() const { return outer_face_; }
  const CrossingLocal& local(int crossing) const { return locals_.at(static_cast<std::size_t>(crossing)); }

  std::size_t arc_count() const { return passages_.size(); }
  int arc_start_crossing(int arc) const;
  int arc_end_crossing(int arc) const;
  /// Points of the arc in its own direction, crossing point to crossing point.
  std::vector<Point> arc_points(int arc) const;
  int face_left_of(HalfEdge h) const;
  /// Crossing reached at the end of h, and the index j such that the reverse
  /// of h is outgoing half-edge j there.
  std::pair<int, int> arrival(HalfEdge h) const;

  /// Total turning of the closed polyline in full turns.
  std::int64_t rotation_number() const { return rotation_; }
  /// u at the start of the edge.
  const mpq_class& lift_at_vertex(std::size_t i) const { return lift_.at(i); }

 private:
  friend LagrangianDiagram build_diagram(std::vector<Point> points);
  std::vector<Point> vertices_;
  std::vector<mpq_class> lift_;
  std::vector<Passage> passages_;
  std::vector<CrossingData> crossings_;
  std::vector<Face> faces_;
  std::vector<std::array<int, 2>> arc_faces_;  // left face of forward, left face of backward
  std::vector<CrossingLocal> locals_;
  int outer_face_ = -1;
  std::int64_t rotation_ = 0;
};

/// Validates genericity exactly and computes the lift, crossings and faces.
/// Throws ValidationError ("non-generic: ...", "no Legendrian lift: ...",
/// "zero action ...").
LagrangianDiagram build_diagram(std::vector<Point> points);

/// The same curve traversed backwards.
std::vector<Point> reversed(std::vector<Point> points);

/// (m, beta): twice the rotation number, and the writhe.
Classical classical_from_lagrangian(const LagrangianDiagram& d);

/// Rotation numbers N_1, N_2 (as in N/2 + 1/4) of the two capping paths from
/// the over point to the under point of crossing c, after rounding the
/// crossing angle to a right angle.
std::pair<std::int64_t, std::int64_t> capping_indices(const LagrangianDiagram& d, int c);

/// Degree of crossing c in Z/m.
Degree crossing_grading(const LagrangianDiagram& d, int c);

struct Corner {
  int crossing;
  int quadrant;
  friend auto operator<=>(const Corner&, const Corner&) = default;
};

/// An immersed polygon with one positive corner, found as a closed boundary
/// walk.  corners[0] is the positive corner; the rest are negative, in
/// counter-clockwise order.
struct DiskCandidate {
  std::vector<HalfEdge> walk;
  std::vector<Corner> corners;
  std::vector<int> multiplicity;  // per face; the unbounded face is 0
  Monomial word() const;
};

struct DiskEnumeration {
  std::vector<DiskCandidate> disks;
  bool truncated = false;  // some walk was cut off by a cap with energy left
};

inline int default_max_corners(const LagrangianDiagram& d) {
  return 2 + static_cast<int>(d.crossings().size());
}

DiskEnumeration enumerate_disks(const LagrangianDiagram& d, int c, int max_corners);

struct BuiltDGA {
  DGA dga;
  bool truncated = false;
};

/// Generators are the crossings; the differential counts the enumerated
/// polygons mod 2.
BuiltDGA build_dga(const LagrangianDiagram& d, int max_corners);

/// Text format: header "lagrangian", then one "q p" rational pair per line.
std::vector<Point> parse_diagram(const std::string& text);
std::string serialize_diagram(const std::vector<Point>& points);

std::string to_string(const mpq_class& x);

}  // namespace leglab
