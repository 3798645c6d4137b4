#include "leglab/lagrangian.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "leglab/errors.hpp"
#include "leglab/geometry.hpp"

namespace leglab {

std::string to_string(const mpq_class& x) {
  mpq_class c = x;
  c.canonicalize();
  return c.get_str();
}

namespace {

Vec edge_dir(const std::vector<Point>& v, std::size_t i) {
  const auto& a = v[i];
  const auto& b = v[(i + 1) % v.size()];
  return {b.q - a.q, b.p - a.p};
}

Point along(const Point& a, const Point& b, const mpq_class& t) {
  return {a.q + t * (b.q - a.q), a.p + t * (b.p - a.p)};
}

bool within_box(const Point& x, const Point& a, const Point& b) {
  return std::min(a.q, b.q) <= x.q && x.q <= std::max(a.q, b.q) && std::min(a.p, b.p) <= x.p &&
         x.p <= std::max(a.p, b.p);
}

[[noreturn]] void non_generic(const std::string& why) { throw ValidationError("non-generic: " + why); }

std::string vertex_name(std::size_t i) { return "vertex " + std::to_string(i + 1); }

}  // namespace

std::vector<Point> reversed(std::vector<Point> points) {
  if (points.size() > 1) std::reverse(points.begin() + 1, points.end());
  return points;
}

LagrangianDiagram build_diagram(std::vector<Point> points) {
  const std::size_t n = points.size();
  if (n < 3) throw ValidationError("a diagram needs at least 3 vertices");
  LagrangianDiagram d;
  d.vertices_ = std::move(points);
  const auto& v = d.vertices_;

  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == v[(i + 1) % n]) non_generic("zero-length edge at " + vertex_name(i));
    const Vec a = edge_dir(v, i);
    const Vec b = edge_dir(v, (i + 1) % n);
    if (sgn(cross(a, b)) == 0 && sgn(dot(a, b)) < 0)
      non_generic("the curve doubles back on itself at " + vertex_name((i + 1) % n));
  }

  struct RawCrossing {
    std::size_t e1, e2;
    mpq_class t1, t2;
    Point at;
  };
  std::vector<RawCrossing> raw;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;
      const Point& a = v[i];
      const Point& b = v[(i + 1) % n];
      const Point& c = v[j];
      const Point& e = v[(j + 1) % n];
      const int o1 = sgn(orient(a, b, c));
      const int o2 = sgn(orient(a, b, e));
      const int o3 = sgn(orient(c, e, a));
      const int o4 = sgn(orient(c, e, b));
      if (o1 == 0 && o2 == 0) {
        if (within_box(c, a, b) || within_box(e, a, b) || within_box(a, c, e) || within_box(b, c, e))
          non_generic("edges " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " overlap");
        continue;
      }
      if ((o1 == 0 && within_box(c, a, b)) || (o2 == 0 && within_box(e, a, b)) ||
          (o3 == 0 && within_box(a, c, e)) || (o4 == 0 && within_box(b, c, e)))
        non_generic("a vertex lies on edge " + std::to_string(i + 1) + " or " + std::to_string(j + 1));
      if (o1 != o2 && o3 != o4) {
        const Vec ab = {b.q - a.q, b.p - a.p};
        const Vec ce = {e.q - c.q, e.p - c.p};
        const Vec ac = {c.q - a.q, c.p - a.p};
        const mpq_class den = cross(ab, ce);
        mpq_class t = cross(ac, ce) / den;
        mpq_class s = cross(ac, ab) / den;
        raw.push_back({i, j, t, s, along(a, b, t)});
      }
    }
  }
  {
    std::vector<Point> pts;
    for (const auto& r : raw) pts.push_back(r.at);
    std::sort(pts.begin(), pts.end(), [](const Point& x, const Point& y) {
      return x.q < y.q || (x.q == y.q && x.p < y.p);
    });
    for (std::size_t k = 1; k < pts.size(); ++k)
      if (pts[k] == pts[k - 1])
        non_generic("triple point at (" + to_string(pts[k].q) + ", " + to_string(pts[k].p) + ")");
  }

  // Lift u = integral of p dq from the first vertex.
  d.lift_.assign(n + 1, mpq_class(0));
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    d.lift_[i + 1] = d.lift_[i] + (a.p + b.p) / 2 * (b.q - a.q);
  }
  if (sgn(d.lift_[n]) != 0) {
    throw ValidationError("no Legendrian lift: the circulation of p dq is " + to_string(d.lift_[n]) +
                          ", not 0");
  }
  d.lift_.pop_back();
  if (raw.empty()) throw ValidationError("no Legendrian lift: diagram has no crossings");

  auto lift_at = [&](std::size_t e, const mpq_class& t) {
    const Point& a = v[e];
    const Point x = along(a, v[(e + 1) % n], t);
    return mpq_class(d.lift_[e] + (a.p + x.p) / 2 * (x.q - a.q));
  };

  struct Pending {
    std::size_t edge;
    mpq_class t;
    std::size_t raw;
  };
  std::vector<Pending> pend;
  for (std::size_t r = 0; r < raw.size(); ++r) {
    pend.push_back({raw[r].e1, raw[r].t1, r});
    pend.push_back({raw[r].e2, raw[r].t2, r});
  }
  std::sort(pend.begin(), pend.end(),
            [](const Pending& x, const Pending& y) { return x.edge < y.edge || (x.edge == y.edge && x.t < y.t); });

  std::map<std::size_t, int> crossing_of_raw;
  for (const auto& pp : pend) {
    if (!crossing_of_raw.count(pp.raw)) {
      const int id = static_cast<int>(crossing_of_raw.size());
      crossing_of_raw[pp.raw] = id;
    }
  }
  d.crossings_.resize(raw.size());
  std::vector<std::vector<int>> passages_of(raw.size());
  for (std::size_t k = 0; k < pend.size(); ++k) {
    const int c = crossing_of_raw[pend[k].raw];
    d.passages_.push_back({pend[k].edge, pend[k].t, c, false});
    passages_of[static_cast<std::size_t>(c)].push_back(static_cast<int>(k));
  }
  for (std::size_t c = 0; c < raw.size(); ++c) {
    const int p0 = passages_of[c][0];
    const int p1 = passages_of[c][1];
    const auto& a = d.passages_[static_cast<std::size_t>(p0)];
    const auto& b = d.passages_[static_cast<std::size_t>(p1)];
    const mpq_class ua = lift_at(a.edge, a.t);
    const mpq_class ub = lift_at(b.edge, b.t);
    auto& cd = d.crossings_[c];
    cd.label = "a" + std::to_string(c + 1);
    cd.point = along(v[a.edge], v[(a.edge + 1) % n], a.t);
    if (ua == ub) {
      throw ValidationError("zero action at crossing " + cd.label + " (" + to_string(cd.point.q) + ", " +
                            to_string(cd.point.p) + ")");
    }
    cd.over_passage = ua > ub ? p0 : p1;
    cd.under_passage = ua > ub ? p1 : p0;
    cd.action = ua > ub ? mpq_class(ua - ub) : mpq_class(ub - ua);
    d.passages_[static_cast<std::size_t>(cd.over_passage)].over = true;
    const Vec dover = edge_dir(v, d.passages_[static_cast<std::size_t>(cd.over_passage)].edge);
    const Vec dunder = edge_dir(v, d.passages_[static_cast<std::size_t>(cd.under_passage)].edge);
    cd.sign = sgn(cross(dover, dunder));
  }

  {
    std::vector<Vec> dirs;
    for (std::size_t i = 0; i < n; ++i) dirs.push_back(edge_dir(v, i));
    d.rotation_ = closed_turning(dirs);
  }

  // Planar structure: outgoing half-edges at each crossing, sorted ccw.
  const int arcs = static_cast<int>(d.passages_.size());
  std::map<HalfEdge, std::pair<int, int>> slot;  // outgoing half-edge -> (crossing, index)
  d.locals_.resize(raw.size());
  for (std::size_t c = 0; c < raw.size(); ++c) {
    std::vector<std::pair<Vec, HalfEdge>> out;
    for (int pidx : passages_of[c]) {
      const Vec dir = edge_dir(v, d.passages_[static_cast<std::size_t>(pidx)].edge);
      out.push_back({dir, HalfEdge{pidx, true}});
      out.push_back({Vec{-dir.x, -dir.y}, HalfEdge{(pidx + arcs - 1) % arcs, false}});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return angle_less(x.first, y.first); });
    auto& loc = d.locals_[c];
    for (int k = 0; k < 4; ++k) {
      loc.outgoing[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k)].second;
      slot[out[static_cast<std::size_t>(k)].second] = {static_cast<int>(c), k};
    }
  }
  auto reverse_of = [](HalfEdge h) { return HalfEdge{h.arc, !h.forward}; };
  auto arrival = [&](HalfEdge h) { return slot.at(reverse_of(h)); };

  d.arc_faces_.assign(static_cast<std::size_t>(arcs), {-1, -1});
  for (int a = 0; a < arcs; ++a) {
    for (bool fwd : {true, false}) {
      if (d.arc_faces_[static_cast<std::size_t>(a)][fwd ? 0 : 1] >= 0) continue;
      Face face;
      const int id = static_cast<int>(d.faces_.size());
      HalfEdge h{a, fwd};
      const HalfEdge start = h;
      do {
        face.boundary.push_back(h);
        d.arc_faces_[static_cast<std::size_t>(h.arc)][h.forward ? 0 : 1] = id;
        auto [x, j] = arrival(h);
        h = d.locals_[static_cast<std::size_t>(x)].outgoing[static_cast<std::size_t>((j + 3) % 4)];
      } while (!(h == start));
      face.corners = static_cast<int>(face.boundary.size());
      std::vector<Point> poly;
      for (const auto& step : face.boundary) {
        auto pts = d.arc_points(step.arc);
        if (!step.forward) std::reverse(pts.begin(), pts.end());
        poly.insert(poly.end(), pts.begin(), pts.end() - 1);
      }
      face.area = signed_area(poly);
      d.faces_.push_back(std::move(face));
    }
  }
  for (std::size_t f = 0; f < d.faces_.size(); ++f) {
    if (sgn(d.faces_[f].area) < 0) {
      if (d.outer_face_ >= 0) throw std::logic_error("diagram graph has two unbounded faces");
      d.outer_face_ = static_cast<int>(f);
    }
  }
  if (d.outer_face_ < 0) throw std::logic_error("diagram graph has no unbounded face");

  for (std::size_t c = 0; c < raw.size(); ++c) {
    auto& loc = d.locals_[c];
    for (std::size_t k = 0; k < 4; ++k) {
      const HalfEdge h = loc.outgoing[k];
      loc.quadrant_face[k] = d.face_left_of(h);
      // The passage this half-edge leaves from.
      const int pidx = h.forward ? h.arc : (h.arc + 1) % arcs;
      loc.positive[k] = d.passages_[static_cast<std::size_t>(pidx)].over;
    }
  }
  return d;
}

int LagrangianDiagram::arc_start_crossing(int arc) const {
  return passages_.at(static_cast<std::size_t>(arc)).crossing;
}

int LagrangianDiagram::arc_end_crossing(int arc) const {
  return passages_.at(static_cast<std::size_t>((arc + 1) % static_cast<int>(passages_.size()))).crossing;
}

std::vector<Point> LagrangianDiagram::arc_points(int arc) const {
  const std::size_t n = vertices_.size();
  const auto& a = passages_.at(static_cast<std::size_t>(arc));
  const auto& b = passages_.at(static_cast<std::size_t>((arc + 1) % static_cast<int>(passages_.size())));
  std::vector<Point> pts;
  pts.push_back(along(vertices_[a.edge], vertices_[(a.edge + 1) % n], a.t));
  std::size_t steps = (b.edge + n - a.edge) % n;
  if (steps == 0 && !(b.t > a.t)) steps = n;
  for (std::size_t s = 1; s <= steps; ++s) pts.push_back(vertices_[(a.edge + s) % n]);
  pts.push_back(along(vertices_[b.edge], vertices_[(b.edge + 1) % n], b.t));
  return pts;
}

int LagrangianDiagram::face_left_of(HalfEdge h) const {
  return arc_faces_.at(static_cast<std::size_t>(h.arc))[h.forward ? 0 : 1];
}

std::pair<int, int> LagrangianDiagram::arrival(HalfEdge h) const {
  const int arcs = static_cast<int>(passages_.size());
  const int pidx = h.forward ? (h.arc + 1) % arcs : h.arc;
  const int x = passages_[static_cast<std::size_t>(pidx)].crossing;
  const HalfEdge rev{h.arc, !h.forward};
  const auto& loc = locals_[static_cast<std::size_t>(x)];
  for (int j = 0; j < 4; ++j)
    if (loc.outgoing[static_cast<std::size_t>(j)] == rev) return {x, j};
  throw std::logic_error("half-edge not found at its end crossing");
}

Classical classical_from_lagrangian(const LagrangianDiagram& d) {
  Classical out{2 * d.rotation_number(), 0};
  for (const auto& c : d.crossings()) out.tb += c.sign;
  return out;
}

std::pair<std::int64_t, std::int64_t> capping_indices(const LagrangianDiagram& d, int c) {
  const auto& v = d.vertices();
  const std::size_t n = v.size();
  const auto& cd = d.crossings().at(static_cast<std::size_t>(c));
  const auto& over = d.passages()[static_cast<std::size_t>(cd.over_passage)];
  const auto& under = d.passages()[static_cast<std::size_t>(cd.under_passage)];

  auto index_of_path = [&](bool forward) {
    std::vector<Vec> dirs;
    if (forward) {
      std::size_t steps = (under.edge + n - over.edge) % n;
      if (steps == 0 && !(under.t > over.t)) steps = n;
      for (std::size_t s = 0; s <= steps; ++s) dirs.push_back(edge_dir(v, (over.edge + s) % n));
    } else {
      std::size_t steps = (over.edge + n - under.edge) % n;
      if (steps == 0 && !(under.t < over.t)) steps = n;
      for (std::size_t s = 0; s <= steps; ++s) {
        const Vec e = edge_dir(v, (over.edge + n * 2 - s) % n);
        dirs.push_back({-e.x, -e.y});
      }
    }
    // Lifted turning = ang(end) - ang(start) + 2 pi * wraps; the signed
    // crossing angle phi = ang(end) - ang(start) + 2 pi * delta.  Rounding
    // phi to +-pi/2 gives rotation (wraps - delta) + sign(phi)/4.
    const std::int64_t wraps = open_turning_wraps(dirs);
    const Vec& s = dirs.front();
    const Vec& e = dirs.back();
    const int sign = sgn(cross(s, e));
    if (sign == 0) throw std::logic_error("capping path ends parallel to its start");
    std::int64_t delta = 0;
    if (sign > 0 && !angle_less(s, e)) delta = 1;
    if (sign < 0 && !angle_less(e, s)) delta = -1;
    const std::int64_t k = wraps - delta;
    return sign > 0 ? 2 * k : 2 * k - 1;
  };
  return {index_of_path(true), index_of_path(false)};
}

Degree crossing_grading(const LagrangianDiagram& d, int c) {
  const GradingGroup g(std::abs(2 * d.rotation_number()));
  return g.reduce(capping_indices(d, c).first);
}

Monomial DiskCandidate::word() const {
  Monomial w;
  for (std::size_t k = 1; k < corners.size(); ++k) w.push_back(corners[k].crossing);
  return w;
}

namespace {

std::vector<Vec> walk_directions(const LagrangianDiagram& d, const std::vector<HalfEdge>& walk) {
  std::vector<Vec> dirs;
  for (const auto& h : walk) {
    auto pts = d.arc_points(h.arc);
    if (!h.forward) std::reverse(pts.begin(), pts.end());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      Vec dir{pts[i + 1].q - pts[i].q, pts[i + 1].p - pts[i].p};
      if (sgn(dir.x) == 0 && sgn(dir.y) == 0) continue;
      dirs.push_back(std::move(dir));
    }
  }
  return dirs;
}

}  // namespace

std::optional<std::vector<int>> face_multiplicities(const LagrangianDiagram& d, const std::vector<HalfEdge>& walk) {
  std::vector<int> chain(d.arc_count(), 0);
  for (const auto& h : walk) chain[static_cast<std::size_t>(h.arc)] += h.forward ? 1 : -1;
  const std::size_t faces = d.faces().size();
  std::vector<std::vector<std::pair<int, int>>> adj(faces);  // neighbour, n(neighbour) - n(self)
  for (std::size_t a = 0; a < d.arc_count(); ++a) {
    const int left = d.face_left_of({static_cast<int>(a), true});
    const int right = d.face_left_of({static_cast<int>(a), false});
    adj[static_cast<std::size_t>(left)].push_back({right, -chain[a]});
    adj[static_cast<std::size_t>(right)].push_back({left, chain[a]});
  }
  std::vector<std::optional<int>> mult(faces);
  mult[static_cast<std::size_t>(d.outer_face())] = 0;
  std::deque<int> queue{d.outer_face()};
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (auto [g, diff] : adj[static_cast<std::size_t>(f)]) {
      const int want = *mult[static_cast<std::size_t>(f)] + diff;
      auto& slot = mult[static_cast<std::size_t>(g)];
      if (!slot) {
        slot = want;
        queue.push_back(g);
      } else if (*slot != want) {
        return std::nullopt;  // not a closed chain
      }
    }
  }
  std::vector<int> out;
  for (const auto& m : mult) out.push_back(m.value_or(0));
  return out;
}

DiskEnumeration enumerate_disks(const LagrangianDiagram& d, int c, int max_corners) {
  DiskEnumeration result;
  const auto& loc0 = d.local(c);
  const mpq_class& top = d.crossings()[static_cast<std::size_t>(c)].action;
  const int arcs = static_cast<int>(d.arc_count());

  struct Frame {
    HalfEdge h;
    mpq_class energy;  // action(c) - sum of negative corner actions so far
    int straight;      // arcs walked since the last corner
    HalfEdge run_start;
  };

  for (int k = 0; k < 4; ++k) {
    if (!loc0.positive[static_cast<std::size_t>(k)]) continue;
    std::vector<HalfEdge> walk;
    std::vector<Corner> corners{{c, k}};
    // Faces seen on the left of the walk so far lie inside the disk, so their
    // total area bounds the energy still needed.
    std::vector<int> covered(d.faces().size(), 0);
    mpq_class covered_area = 0;

    // Depth-first over boundary walks: at each arrival, go straight or turn
    // left into a negative quadrant.
    auto dfs = [&](auto&& self, const Frame& f) -> void {
      const auto left = static_cast<std::size_t>(d.face_left_of(f.h));
      if (static_cast<int>(left) == d.outer_face()) return;
      if (covered[left]++ == 0) covered_area += d.faces()[left].area;
      if (covered_area > f.energy) {
        if (--covered[left] == 0) covered_area -= d.faces()[left].area;
        return;
      }
      walk.push_back(f.h);
      auto [x, j] = d.arrival(f.h);
      const auto& loc = d.local(x);
      const int turn_q = (j + 3) % 4;
      if (x == c && turn_q == k) {
        DiskCandidate cand{walk, corners, {}};
        auto mult = face_multiplicities(d, walk);
        const bool nonneg =
            mult && std::all_of(mult->begin(), mult->end(), [](int m) { return m >= 0; });
        if (nonneg && closed_turning(walk_directions(d, walk)) == 1) {
          mpq_class area = 0;
          for (std::size_t fi = 0; fi < mult->size(); ++fi)
            if (static_cast<int>(fi) != d.outer_face()) area += (*mult)[fi] * d.faces()[fi].area;
          if (area != f.energy) throw std::logic_error("disk area does not match its energy");
          cand.multiplicity = std::move(*mult);
          result.disks.push_back(std::move(cand));
        }
      }
      // Straight on.
      const HalfEdge straight = loc.outgoing[static_cast<std::size_t>((j + 2) % 4)];
      if (f.straight < arcs && !(straight == f.run_start && f.straight > 0))
        self(self, Frame{straight, f.energy, f.straight + 1, f.run_start});
      // Convex corner.
      if (!loc.positive[static_cast<std::size_t>(turn_q)]) {
        mpq_class rest = f.energy - d.crossings()[static_cast<std::size_t>(x)].action;
        if (sgn(rest) > 0) {
          const HalfEdge next = loc.outgoing[static_cast<std::size_t>(turn_q)];
          if (static_cast<int>(corners.size()) + 1 > max_corners) {
            // Only a walk the pruning would still follow counts as cut off.
            const auto nf = static_cast<std::size_t>(d.face_left_of(next));
            const mpq_class extra = covered[nf] == 0 ? d.faces()[nf].area : mpq_class(0);
            if (static_cast<int>(nf) != d.outer_face() && covered_area + extra <= rest) result.truncated = true;
          } else {
            corners.push_back({x, turn_q});
            self(self, Frame{next, rest, 0, next});
            corners.pop_back();
          }
        }
      }
      walk.pop_back();
      if (--covered[left] == 0) covered_area -= d.faces()[left].area;
    };
    const HalfEdge first = loc0.outgoing[static_cast<std::size_t>(k)];
    dfs(dfs, Frame{first, top, 0, first});
  }
  return result;
}

BuiltDGA build_dga(const LagrangianDiagram& d, int max_corners) {
  BuiltDGA out;
  out.dga.grading = GradingGroup(std::abs(2 * d.rotation_number()));
  const int n = static_cast<int>(d.crossings().size());
  for (int c = 0; c < n; ++c)
    out.dga.add_generator(d.crossings()[static_cast<std::size_t>(c)].label, crossing_grading(d, c));
  for (int c = 0; c < n; ++c) {
    auto disks = enumerate_disks(d, c, max_corners);
    out.truncated = out.truncated || disks.truncated;
    Polynomial diff;
    for (const auto& disk : disks.disks) diff.add(disk.word());
    out.dga.diffs[static_cast<std::size_t>(c)] = std::move(diff);
  }
  return out;
}

std::vector<Point> parse_diagram(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool header = false;
  std::vector<Point> pts;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;
    auto fail = [&](const std::string& why) {
      throw ParseError("lagrangian line " + std::to_string(lineno) + ": " + why);
    };
    if (!header) {
      if (a != "lagrangian") fail("expected header 'lagrangian'");
      header = true;
      continue;
    }
    if (!(ls >> b) || (ls >> extra)) fail("expected a 'q p' pair");
    auto q = parse_rational(a);
    auto p = parse_rational(b);
    if (!q || !p) fail("not a rational number");
    pts.push_back({*q, *p});
  }
  if (!header) throw ParseError("missing 'lagrangian' header");
  return pts;
}

std::string serialize_diagram(const std::vector<Point>& points) {
  std::string out = "lagrangian\n";
  for (const auto& pt : points) out += to_string(pt.q) + " " + to_string(pt.p) + "\n";
  return out;
}

}  // namespace leglab
