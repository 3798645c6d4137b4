#include "leglab/front.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "leglab/errors.hpp"

namespace leglab {

std::size_t FrontWord::crossing_count() const {
  return static_cast<std::size_t>(std::count_if(
      events.begin(), events.end(), [](const FrontEvent& e) { return e.kind == EventKind::Crossing; }));
}

std::vector<std::size_t> FrontWord::crossing_events() const {
  std::vector<std::size_t> order;
  for (std::size_t e = 0; e < events.size(); ++e)
    if (events[e].kind == EventKind::Crossing) order.push_back(e);
  if (labels.size() != order.size()) return order;
  std::vector<std::size_t> out(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) out.at(static_cast<std::size_t>(labels[j] - 1)) = order[j];
  return out;
}

std::vector<int> FrontWord::strand_counts() const {
  std::vector<int> n{0};
  for (const auto& e : events) {
    int next = n.back();
    if (e.kind == EventKind::LeftCusp) next += 2;
    if (e.kind == EventKind::RightCusp) next -= 2;
    n.push_back(next);
  }
  return n;
}

namespace {

struct Walker {
  Segment seg;
  int dir;  // +1 right, -1 left
  friend bool operator==(const Walker&, const Walker&) = default;
};

// Per-event switch flags derived from a crossing bitmask.
std::vector<bool> switch_flags(const FrontWord& w, std::uint64_t switches) {
  std::vector<bool> flags(w.events.size(), false);
  const auto events = w.crossing_events();
  for (std::size_t j = 0; j < events.size(); ++j) flags[events[j]] = (switches >> j) & 1U;
  return flags;
}

int through_crossing(int p, int i, bool switched) {
  if (switched) return p;
  if (p == i) return i + 1;
  if (p == i + 1) return i;
  return p;
}

struct Step {
  Walker next;
  std::optional<std::size_t> cusp;
  bool down = false;
};

Step advance(const FrontWord& w, const std::vector<bool>& flags, Walker at) {
  const int k = at.seg.interval;
  const int p = at.seg.position;
  if (at.dir > 0) {
    const auto e = static_cast<std::size_t>(k);
    const auto& ev = w.events[e];
    const int i = ev.position;
    switch (ev.kind) {
      case EventKind::Crossing:
        return {{{k + 1, through_crossing(p, i, flags[e])}, +1}, std::nullopt, false};
      case EventKind::LeftCusp:
        return {{{k + 1, p < i ? p : p + 2}, +1}, std::nullopt, false};
      case EventKind::RightCusp:
        if (p == i) return {{{k, i + 1}, -1}, e, true};
        if (p == i + 1) return {{{k, i}, -1}, e, false};
        return {{{k + 1, p < i ? p : p - 2}, +1}, std::nullopt, false};
    }
  } else {
    const auto e = static_cast<std::size_t>(k - 1);
    const auto& ev = w.events[e];
    const int i = ev.position;
    switch (ev.kind) {
      case EventKind::Crossing:
        return {{{k - 1, through_crossing(p, i, flags[e])}, -1}, std::nullopt, false};
      case EventKind::LeftCusp:
        if (p == i) return {{{k, i + 1}, +1}, e, true};
        if (p == i + 1) return {{{k, i}, +1}, e, false};
        return {{{k - 1, p < i ? p : p - 2}, -1}, std::nullopt, false};
      case EventKind::RightCusp:
        return {{{k - 1, p < i ? p : p + 2}, -1}, std::nullopt, false};
    }
  }
  throw std::logic_error("unreachable event kind");
}

TracedCurve trace_from(const FrontWord& w, const std::vector<bool>& flags, Walker start) {
  TracedCurve curve;
  Walker at = start;
  const std::size_t limit = 4 * (w.events.size() + 1) * (w.events.size() + 1);
  do {
    curve.segments.push_back(at.seg);
    curve.directions.push_back(at.dir);
    Step s = advance(w, flags, at);
    if (s.cusp) {
      curve.cusps.push_back(*s.cusp);
      curve.cusp_down.push_back(s.down);
    }
    at = s.next;
    if (curve.segments.size() > limit) throw std::logic_error("front trace does not close");
  } while (!(at == start));
  return curve;
}

std::string event_name(const FrontEvent& e) {
  const char* k = e.kind == EventKind::LeftCusp ? "L" : e.kind == EventKind::RightCusp ? "R" : "X";
  return std::string(k) + " " + std::to_string(e.position);
}

Walker orientation_start(const FrontWord& w) {
  const auto e = w.orientation.event;
  const auto& ev = w.events.at(e);
  const bool up = w.orientation.direction == CuspDirection::Up;
  const int k = static_cast<int>(e);
  if (ev.kind == EventKind::LeftCusp) return {{k + 1, up ? ev.position : ev.position + 1}, +1};
  if (ev.kind == EventKind::RightCusp) return {{k, up ? ev.position : ev.position + 1}, -1};
  throw ValidationError("orientation marker is not on a cusp");
}

}  // namespace

FrontReport validate_front(const FrontWord& w) {
  FrontReport report;
  if (w.events.empty()) {
    report.problems.push_back("empty front");
    return report;
  }
  if (!w.labels.empty()) {
    auto sorted = w.labels;
    std::sort(sorted.begin(), sorted.end());
    bool perm = sorted.size() == w.crossing_count();
    for (std::size_t j = 0; perm && j < sorted.size(); ++j) perm = sorted[j] == static_cast<int>(j + 1);
    if (!perm) {
      report.problems.push_back("crossing labels must be c1..c" + std::to_string(w.crossing_count()) +
                                ", each used once");
      return report;
    }
  }
  int n = 0;
  for (std::size_t e = 0; e < w.events.size(); ++e) {
    const auto& ev = w.events[e];
    const bool in_range = ev.kind == EventKind::LeftCusp ? (ev.position >= 1 && ev.position <= n + 1)
                                                         : (ev.position >= 1 && ev.position + 1 <= n);
    if (!in_range) {
      report.problems.push_back("event " + std::to_string(e + 1) + " (" + event_name(ev) +
                                ") out of range for " + std::to_string(n) + " strands");
      return report;
    }
    n += ev.kind == EventKind::LeftCusp ? 2 : ev.kind == EventKind::RightCusp ? -2 : 0;
    if (n == 0 && e + 1 < w.events.size()) {
      report.problems.push_back("front closes up before event " + std::to_string(e + 2) +
                                ": more than one component");
      return report;
    }
  }
  if (n != 0) {
    report.problems.push_back("front does not close: " + std::to_string(n) + " strands left open");
    return report;
  }
  const auto curves = trace_curves(w, 0);
  if (curves.size() != 1) {
    report.problems.push_back("front traces " + std::to_string(curves.size()) +
                              " components; expected a knot");
  }
  const auto o = w.orientation.event;
  if (o >= w.events.size() || w.events[o].kind == EventKind::Crossing)
    report.problems.push_back("orientation marker must name a cusp event");
  return report;
}

void require_valid(const FrontWord& w) {
  auto r = validate_front(w);
  if (!r.ok()) throw ValidationError(r.problems.front());
}

std::vector<TracedCurve> trace_curves(const FrontWord& w, std::uint64_t switches) {
  const auto flags = switch_flags(w, switches);
  const auto counts = w.strand_counts();
  std::set<Segment> seen;
  std::vector<TracedCurve> curves;
  for (int k = 1; k + 1 < static_cast<int>(counts.size()); ++k) {
    for (int p = 1; p <= counts[static_cast<std::size_t>(k)]; ++p) {
      if (seen.count({k, p})) continue;
      auto c = trace_from(w, flags, {{k, p}, +1});
      for (const auto& s : c.segments) seen.insert(s);
      curves.push_back(std::move(c));
    }
  }
  return curves;
}

TracedCurve oriented_knot(const FrontWord& w) {
  return trace_from(w, switch_flags(w, 0), orientation_start(w));
}

FrontWord reverse_orientation(const FrontWord& w) {
  FrontWord out = w;
  out.orientation.direction =
      w.orientation.direction == CuspDirection::Up ? CuspDirection::Down : CuspDirection::Up;
  return out;
}

Classical classical_from_front(const FrontWord& w) {
  require_valid(w);
  const auto knot = oriented_knot(w);
  std::map<Segment, int> dir;
  for (std::size_t s = 0; s < knot.segments.size(); ++s) dir[knot.segments[s]] = knot.directions[s];
  Classical out{0, 0};
  for (bool down : knot.cusp_down) out.maslov += down ? 1 : -1;
  for (std::size_t e = 0; e < w.events.size(); ++e) {
    const auto& ev = w.events[e];
    const int k = static_cast<int>(e);
    if (ev.kind == EventKind::RightCusp) out.tb -= 1;
    if (ev.kind == EventKind::Crossing)
      out.tb += dir.at({k, ev.position}) == dir.at({k, ev.position + 1}) ? 1 : -1;
  }
  return out;
}

MaslovPotential::MaslovPotential(std::int64_t modulus, std::map<Segment, std::int64_t> values)
    : modulus_(modulus < 0 ? -modulus : modulus), values_(std::move(values)) {}

std::int64_t MaslovPotential::at(Segment s) const { return values_.at(s); }

bool MaslovPotential::same_class(std::int64_t a, std::int64_t b) const {
  if (modulus_ == 0) return a == b;
  return (a - b) % modulus_ == 0;
}

MaslovPotential maslov_potential(const FrontWord& w) {
  require_valid(w);
  const auto knot = oriented_knot(w);
  std::map<Segment, std::int64_t> values;
  std::int64_t mu = 0;
  std::size_t next_cusp = 0;
  // Replay the trace; cusps are recorded in traversal order, between the
  // segment that ends at them and the one that starts there.
  const auto flags = switch_flags(w, 0);
  for (std::size_t s = 0; s < knot.segments.size(); ++s) {
    values[knot.segments[s]] = mu;
    Step st = advance(w, flags, {knot.segments[s], knot.directions[s]});
    if (st.cusp) {
      mu += knot.cusp_down[next_cusp] ? -1 : +1;
      ++next_cusp;
    }
  }
  std::int64_t m = 0;
  for (bool down : knot.cusp_down) m += down ? 1 : -1;
  // Closing the loop changes mu by -m, which is zero in Z/m.
  if (mu != -m) throw ValidationError("inconsistent Maslov potential");
  std::int64_t lo = 0;
  for (const auto& [seg, v] : values) lo = std::min(lo, v);
  for (auto& entry : values) entry.second -= lo;
  return MaslovPotential(m, std::move(values));
}

bool is_maslov(const FrontWord& w, const MaslovPotential& mu, std::size_t crossing) {
  const auto events = w.crossing_events();
  const auto e = events.at(crossing);
  const int k = static_cast<int>(e);
  const int i = w.events[e].position;
  return mu.same_class(mu.at({k, i}), mu.at({k, i + 1}));
}

std::vector<bool> maslov_crossings(const FrontWord& w) {
  const auto mu = maslov_potential(w);
  std::vector<bool> out;
  for (std::size_t j = 0; j < w.crossing_count(); ++j) out.push_back(is_maslov(w, mu, j));
  return out;
}

Decomposition decomposition_from_switchset(const FrontWord& w, std::uint64_t switches) {
  return Decomposition{switches, trace_curves(w, switches)};
}

namespace {

void note(std::optional<std::size_t>& slot, bool& flag, std::size_t event) {
  flag = false;
  if (!slot || event < *slot) slot = event;
}

}  // namespace

AdmissibilityReport check_admissible(const FrontWord& w, const Decomposition& d) {
  AdmissibilityReport r;
  std::map<Segment, std::size_t> owner;
  for (std::size_t c = 0; c < d.curves.size(); ++c)
    for (const auto& s : d.curves[c].segments) owner[s] = c;

  for (const auto& curve : d.curves) {
    if (curve.cusps.size() != 2 && !curve.cusps.empty()) {
      // More cusps means some slice of the bounded region is not a segment.
      note(r.segment_slices, r.condition2, *std::min_element(curve.cusps.begin(), curve.cusps.end()));
    }
  }

  const auto flags = switch_flags(w, d.switches);
  const auto mu = maslov_potential(w);
  // Slice interval [top, bottom] of each curve in an interval.
  auto slice = [&](int k, std::size_t c) {
    int top = 1 << 30, bottom = -1;
    for (const auto& [s, owner_c] : owner) {
      if (s.interval != k || owner_c != c) continue;
      top = std::min(top, s.position);
      bottom = std::max(bottom, s.position);
    }
    return std::pair{top, bottom};
  };

  for (std::size_t e = 0; e < w.events.size(); ++e) {
    const auto& ev = w.events[e];
    if (ev.kind != EventKind::Crossing) continue;
    const int k = static_cast<int>(e);
    const auto a = owner.at({k, ev.position});
    const auto b = owner.at({k, ev.position + 1});
    if (a == b) {
      if (flags[e])
        note(r.segment_slices, r.condition2, e);  // the curve touches itself
      else
        note(r.embedded_disk, r.condition1, e);  // the curve crosses itself
      continue;
    }
    if (!flags[e]) continue;
    if (!mu.same_class(mu.at({k, ev.position}), mu.at({k, ev.position + 1})))
      note(r.maslov_switches, r.condition4, e);
    for (int side : {k, k + 1}) {
      const auto [ta, ba] = slice(side, a);
      const auto [tb, bb] = slice(side, b);
      const bool disjoint = ba < tb || bb < ta;
      const bool nested = (ta <= tb && bb <= ba) || (tb <= ta && ba <= bb);
      if (!disjoint && !nested) {
        note(r.nested_switches, r.condition3, e);
        break;
      }
    }
  }
  if (r.admissible()) {
    const auto switches = static_cast<std::int64_t>(std::count(flags.begin(), flags.end(), true));
    r.theta = static_cast<std::int64_t>(d.curves.size()) - switches;
  }
  return r;
}

Census enumerate_decompositions(const FrontWord& w, int max_crossings) {
  require_valid(w);
  Census census;
  census.crossings = w.crossing_count();
  if (static_cast<int>(census.crossings) > max_crossings || census.crossings >= 63) {
    throw CapExceeded(std::to_string(census.crossings) + " crossings exceed the census cap of " +
                      std::to_string(max_crossings));
  }
  const std::uint64_t total = std::uint64_t{1} << census.crossings;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const auto report = check_admissible(w, decomposition_from_switchset(w, mask));
    if (!report.admissible()) continue;
    census.adm.push_back(mask);
    if (report.graded()) census.adm_graded.push_back(mask);
    census.theta[*report.theta] += 1;
  }
  return census;
}

FrontWord parse_front(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool header = false;
  FrontWord w;
  std::optional<std::pair<std::size_t, CuspDirection>> orient;
  int lineno = 0;
  int labelled = 0, crossings = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    auto fail = [&](const std::string& why) {
      throw ParseError("front line " + std::to_string(lineno) + ": " + why);
    };
    if (!header) {
      if (tag != "front") fail("expected header 'front'");
      header = true;
      continue;
    }
    if (tag == "orient") {
      std::size_t event = 0;
      std::string dir;
      if (!(ls >> event >> dir) || event == 0) fail("expected 'orient <event#> <up|down>'");
      if (dir != "up" && dir != "down") fail("orientation must be 'up' or 'down'");
      orient = std::pair{event - 1, dir == "up" ? CuspDirection::Up : CuspDirection::Down};
    } else if (tag == "L" || tag == "R" || tag == "X") {
      int pos = 0;
      if (!(ls >> pos)) fail("missing strand position");
      const EventKind kind = tag == "L" ? EventKind::LeftCusp : tag == "R" ? EventKind::RightCusp : EventKind::Crossing;
      w.events.push_back({kind, pos});
      std::string label;
      if (kind == EventKind::Crossing && ls >> label) {
        if (label.size() < 2 || label[0] != 'c' || label.find_first_not_of("0123456789", 1) != std::string::npos)
          fail("crossing label must look like c3");
        w.labels.push_back(std::stoi(label.substr(1)));
        ++labelled;
      }
      if (kind == EventKind::Crossing) ++crossings;
    } else {
      fail("unknown event '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing text '" + extra + "'");
  }
  if (!header) throw ParseError("missing 'front' header");
  if (labelled != 0 && labelled != crossings) throw ParseError("either every crossing carries a label or none does");
  if (orient) {
    w.orientation = {orient->first, orient->second};
  } else {
    w.orientation = {0, CuspDirection::Up};
  }
  return w;
}

std::string serialize_front(const FrontWord& w) {
  std::string out = "front\n";
  std::size_t j = 0;
  for (const auto& ev : w.events) {
    out += event_name(ev);
    if (ev.kind == EventKind::Crossing && !w.labels.empty()) out += " c" + std::to_string(w.labels[j++]);
    out += "\n";
  }
  out += "orient " + std::to_string(w.orientation.event + 1) + " " +
         (w.orientation.direction == CuspDirection::Up ? "up" : "down") + "\n";
  return out;
}

}  // namespace leglab
