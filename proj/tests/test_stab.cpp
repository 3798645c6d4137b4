#include <doctest.h>

#include "leglab/errors.hpp"
#include "leglab/stab.hpp"
#include "support/fixtures.hpp"

using namespace leglab;

TEST_CASE("a zigzag lowers beta by one and kills the census") {
  for (const auto& name : fixtures::corpus_files("front-")) {
    const auto w = fixtures::corpus_front(name);
    const auto before = classical_from_front(w);
    for (auto kind : {StabilizationKind::Plus, StabilizationKind::Minus}) {
      INFO(name);
      const auto s = stabilize_front(w, kind);
      REQUIRE(validate_front(s).ok());
      const auto after = classical_from_front(s);
      CHECK(after.tb == before.tb - 1);
      // The zigzag adds two cusps traversed the same way.
      CHECK(after.maslov - before.maslov == (kind == StabilizationKind::Plus ? 2 : -2));
      CHECK(enumerate_decompositions(s).adm.empty());
    }
  }
}

TEST_CASE("every strand can carry the zigzag") {
  const auto w = fixtures::corpus_front("front-trefoil.txt");
  for (const auto& site : stabilization_sites(w)) {
    for (auto kind : {StabilizationKind::Plus, StabilizationKind::Minus}) {
      const auto r = verify_collapse(w, kind, site);
      CHECK(r.collapsed());
      CHECK(r.only_disk_conditions);
      CHECK(classical_from_front(r.stabilized).tb == 0);
    }
  }
}

TEST_CASE("labels and orientation survive stabilization") {
  const auto w = fixtures::corpus_front("front-sigma.txt");
  const auto s = stabilize_front(w, StabilizationKind::Plus);
  CHECK(s.labels == w.labels);
  CHECK(s.crossing_count() == w.crossing_count());
}

TEST_CASE("a site off the knot is refused") {
  const auto w = fixtures::corpus_front("front-unknot.txt");
  CHECK_THROWS_AS(stabilize_front(w, StabilizationKind::Plus, Segment{1, 5}), ValidationError);
}

TEST_CASE("the algebra-level stabilization has no augmentation") {
  for (const auto& name : {"dga-1a.json", "dga-1b.json"}) {
    const auto d = stabilize_knot_dga(fixtures::corpus_dga(name));
    CHECK(validate_dga(d).ok());
    CHECK(invariant_I(d).empty());
  }
}
