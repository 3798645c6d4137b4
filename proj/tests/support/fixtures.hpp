#pragma once

#include <random>
#include <string>
#include <vector>

#include "leglab/dga.hpp"
#include "leglab/front.hpp"
#include "leglab/lagrangian.hpp"

namespace fixtures {

std::string corpus_path(const std::string& name);
std::vector<std::string> corpus_files(const std::string& prefix);

leglab::DGA corpus_dga(const std::string& name);
leglab::FrontWord corpus_front(const std::string& name);
std::vector<leglab::Point> corpus_points(const std::string& name);

/// A random closed polyline on a small integer grid with one p adjusted so
/// that the circulation of p dq vanishes.  May still be non-generic.
std::vector<leglab::Point> random_polyline(std::mt19937& rng, int vertices, int span);

/// Draws random polylines until one builds into a diagram with at most
/// max_crossings crossings.
leglab::LagrangianDiagram random_diagram(std::mt19937& rng, int max_crossings = 5);

}  // namespace fixtures

namespace fixtures {

/// One random tame move: an algebraic stabilization or an elementary
/// automorphism a_i -> a_i + v with v a random homogeneous polynomial in the
/// other generators.  Stabilization degrees come from [lo, hi].
leglab::DGA random_tame_step(const leglab::DGA& d, std::mt19937& rng, int lo = -1, int hi = 3);

}  // namespace fixtures
