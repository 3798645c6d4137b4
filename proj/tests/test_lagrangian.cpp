#include <doctest.h>

#include <random>

#include "leglab/errors.hpp"
#include "leglab/geometry.hpp"
#include "leglab/io.hpp"
#include "support/disk_oracle.hpp"
#include "support/fixtures.hpp"

using namespace leglab;

namespace {

std::vector<Point> pts(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<Point> out;
  for (auto [q, p] : xs) out.push_back({q, p});
  return out;
}

std::vector<Point> transformed(std::vector<Point> v, auto f) {
  for (auto& x : v) x = f(x);
  return v;
}

void check_oracle(const LagrangianDiagram& d) {
  for (int c = 0; c < static_cast<int>(d.crossings().size()); ++c) {
    INFO("crossing " << d.crossings()[static_cast<std::size_t>(c)].label);
    CHECK(oracle::walk_disks(d, c, default_max_corners(d)) == oracle::domain_disks(d, c));
  }
}

const auto figure_eight = pts({{1, 1}, {2, 0}, {1, -1}, {-1, 1}, {-2, 0}, {-1, -1}});

}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("3/2") == mpq_class(3, 2));
  CHECK(parse_rational("-4") == mpq_class(-4));
  CHECK(parse_rational("0.25") == mpq_class(1, 4));
  CHECK(parse_rational("-1.5") == mpq_class(-3, 2));
  CHECK_FALSE(parse_rational("1/0"));
  CHECK_FALSE(parse_rational("x"));
  CHECK(to_string(mpq_class(6, 4)) == "3/2");
}

TEST_CASE("the figure-eight unknot") {
  const auto d = build_diagram(figure_eight);
  REQUIRE(d.crossings().size() == 1);
  CHECK(classical_from_lagrangian(d) == Classical{0, -1});
  CHECK(d.faces().size() == 3);
  CHECK(crossing_grading(d, 0) == 1);
  const auto disks = enumerate_disks(d, 0, 8);
  REQUIRE(disks.disks.size() == 2);
  for (const auto& disk : disks.disks) CHECK(disk.corners.size() == 1);
  CHECK_FALSE(disks.truncated);
  const auto built = build_dga(d, 8);
  CHECK(built.dga.diffs[0].is_zero());
  CHECK(invariant_I(built.dga).size() == 1);
  CHECK(invariant_I(built.dga).begin()->to_string() == "t");
}

TEST_CASE("non-generic and non-liftable polylines are rejected") {
  auto message = [](const std::vector<Point>& v) {
    try {
      build_diagram(v);
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  CHECK(message(pts({{0, 0}, {1, 1}, {1, 1}, {2, 0}})).starts_with("non-generic"));
  CHECK(message(pts({{0, 0}, {2, 0}, {1, 0}, {1, 1}})).starts_with("non-generic"));
  CHECK(message(pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}})).starts_with("no Legendrian lift"));
  // Three branches through the origin.
  CHECK(message(pts({{-1, -1}, {1, 1}, {1, -1}, {-1, 1}, {0, 2}, {0, -2}})).starts_with("non-generic"));
  // A vertex sitting on another edge.
  CHECK(message(pts({{0, 0}, {2, 0}, {1, 0}, {1, -1}})).starts_with("non-generic"));
  CHECK(message(figure_eight) == "accepted");
}

TEST_CASE("reversing the curve negates m and keeps beta") {
  const auto d = build_diagram(fixtures::corpus_points("lagrangian-trefoil.txt"));
  const auto r = build_diagram(reversed(fixtures::corpus_points("lagrangian-trefoil.txt")));
  const auto a = classical_from_lagrangian(d), b = classical_from_lagrangian(r);
  CHECK(a.tb == b.tb);
  CHECK(a.maslov == -b.maslov);
}

TEST_CASE("translations, dilations and quarter turns keep the DGA") {
  for (const auto& name : fixtures::corpus_files("lagrangian-")) {
    const auto v = fixtures::corpus_points(name);
    const auto base = build_dga(build_diagram(v), 40).dga;
    const auto shifted = transformed(v, [](Point x) { return Point{x.q + 7, x.p - mpq_class(1, 3)}; });
    const auto scaled = transformed(v, [](Point x) { return Point{x.q * 3, x.p * 3}; });
    const auto turned = transformed(v, [](Point x) { return Point{-x.p, x.q}; });
    CHECK(build_dga(build_diagram(shifted), 40).dga == base);
    CHECK(build_dga(build_diagram(scaled), 40).dga == base);
    CHECK(build_dga(build_diagram(turned), 40).dga == base);
  }
}

TEST_CASE("disk walks satisfy area = energy and close with one turn") {
  for (const auto& name : fixtures::corpus_files("lagrangian-")) {
    const auto d = build_diagram(fixtures::corpus_points(name));
    for (int c = 0; c < static_cast<int>(d.crossings().size()); ++c) {
      for (const auto& disk : enumerate_disks(d, c, default_max_corners(d)).disks) {
        mpq_class area = 0, energy = 0;
        for (std::size_t f = 0; f < d.faces().size(); ++f)
          if (static_cast<int>(f) != d.outer_face()) area += disk.multiplicity[f] * d.faces()[f].area;
        energy = d.crossings()[static_cast<std::size_t>(c)].action;
        for (std::size_t k = 1; k < disk.corners.size(); ++k)
          energy -= d.crossings()[static_cast<std::size_t>(disk.corners[k].crossing)].action;
        CHECK(area == energy);
        CHECK(disk.multiplicity[static_cast<std::size_t>(d.outer_face())] == 0);
        CHECK(d.local(disk.corners[0].crossing).positive[static_cast<std::size_t>(disk.corners[0].quadrant)]);
        for (std::size_t k = 1; k < disk.corners.size(); ++k)
          CHECK_FALSE(d.local(disk.corners[k].crossing).positive[static_cast<std::size_t>(disk.corners[k].quadrant)]);
      }
    }
  }
}

TEST_CASE("walks agree with the face-multiplicity oracle on small corpus diagrams") {
  check_oracle(build_diagram(figure_eight));
  check_oracle(build_diagram(fixtures::corpus_points("lagrangian-trefoil.txt")));
}

TEST_CASE("walks agree with the oracle on random diagrams") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 40; ++i) check_oracle(fixtures::random_diagram(rng, 5));
}

TEST_CASE("random diagrams give DGAs with d^2 = 0") {
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    const auto d = fixtures::random_diagram(rng, 6);
    const auto built = build_dga(d, default_max_corners(d));
    const auto r = validate_dga(built.dga);
    CHECK(r.ok());
    CHECK(built.dga.grading.modulus() == std::abs(classical_from_lagrangian(d).maslov));
  }
}

TEST_CASE("diagram text") {
  const auto v = parse_diagram("lagrangian\n# c\n1/2 -3\n\n0.5 2 # tail\n");
  REQUIRE(v.size() == 2);
  CHECK(v[0] == Point{mpq_class(1, 2), -3});
  CHECK(parse_diagram(serialize_diagram(v)) == v);
  CHECK_THROWS_AS(parse_diagram("1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("lagrangian\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("lagrangian\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("lagrangian\n1 zz\n"), ParseError);
}
