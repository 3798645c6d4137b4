#pragma once

// Exact planar helpers on rational vectors.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leglab/lagrangian.hpp"

namespace leglab {

struct Vec {
  mpq_class x;
  mpq_class y;
};

inline int sgn(const mpq_class& v) { return ::sgn(v); }
inline mpq_class cross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }
inline mpq_class dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y; }
inline mpq_class orient(const Point& a, const Point& b, const Point& c) {
  return cross({b.q - a.q, b.p - a.p}, {c.q - a.q, c.p - a.p});
}

/// Angle order on nonzero vectors, starting at the positive x axis (inclusive)
/// and going counter-clockwise.
bool angle_less(const Vec& a, const Vec& b);

/// Number of times the direction passes the positive x axis going ccw, minus
/// clockwise passes, along consecutive pairs of the list.
std::int64_t open_turning_wraps(const std::vector<Vec>& dirs);

/// Turning number of a closed polyline given by its edge directions.
std::int64_t closed_turning(const std::vector<Vec>& dirs);

/// Shoelace area, positive for counter-clockwise.
mpq_class signed_area(const std::vector<Point>& poly);

/// Integers, "a/b" and finite decimals.
std::optional<mpq_class> parse_rational(const std::string& s);

/// Face multiplicities of the 2-chain bounded by a closed walk of half-edges,
/// zero on the unbounded face; nullopt if the walk is not a cycle.
std::optional<std::vector<int>> face_multiplicities(const LagrangianDiagram& d, const std::vector<HalfEdge>& walk);

}  // namespace leglab
