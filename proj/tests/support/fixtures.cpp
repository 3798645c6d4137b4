#include "fixtures.hpp"

#include <algorithm>
#include <filesystem>

#include "leglab/errors.hpp"
#include "leglab/io.hpp"

using namespace leglab;

namespace fixtures {

std::string corpus_path(const std::string& name) { return std::string(LEGLAB_CORPUS_DIR) + "/" + name; }

std::vector<std::string> corpus_files(const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(LEGLAB_CORPUS_DIR)) {
    const auto name = e.path().filename().string();
    if (name.starts_with(prefix) && !name.ends_with(".expected.json")) out.push_back(name);
  }
  std::sort(out.begin(), out.end());
  return out;
}

DGA corpus_dga(const std::string& name) { return parse_dga(read_file(corpus_path(name))); }
FrontWord corpus_front(const std::string& name) { return parse_front(read_file(corpus_path(name))); }
std::vector<Point> corpus_points(const std::string& name) { return parse_diagram(read_file(corpus_path(name))); }

std::vector<Point> random_polyline(std::mt19937& rng, int vertices, int span) {
  std::uniform_int_distribution<int> coord(-span, span);
  std::vector<Point> pts;
  for (int i = 0; i < vertices; ++i) pts.push_back({coord(rng), coord(rng)});
  // The circulation is sum p_i (q_{i+1} - q_{i-1}) / 2; solve for one p.
  const auto n = pts.size();
  auto coef = [&](std::size_t i) -> mpq_class { return (pts[(i + 1) % n].q - pts[(i + n - 1) % n].q) / 2; };
  std::size_t k = 0;
  while (k < n && coef(k) == 0) ++k;
  if (k == n) return pts;
  mpq_class rest = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (i != k) rest += pts[i].p * coef(i);
  pts[k].p = -rest / coef(k);
  return pts;
}

LagrangianDiagram random_diagram(std::mt19937& rng, int max_crossings) {
  std::uniform_int_distribution<int> size(4, 7);
  while (true) {
    try {
      auto d = build_diagram(random_polyline(rng, size(rng), 4));
      if (static_cast<int>(d.crossings().size()) <= max_crossings) return d;
    } catch (const ValidationError&) {
    }
  }
}

}  // namespace fixtures

namespace fixtures {

DGA random_tame_step(const DGA& d, std::mt19937& rng, int lo, int hi) {
  if (std::uniform_int_distribution<int>(0, 2)(rng) == 0)
    return stabilize_dga(d, std::uniform_int_distribution<int>(lo, hi)(rng));
  const int n = static_cast<int>(d.size());
  std::uniform_int_distribution<int> gen(0, n - 1), len(1, 3);
  const int i = gen(rng);
  Polynomial v;
  for (int tries = 0; tries < 400 && v.terms().size() < 2; ++tries) {
    Monomial m;
    const int l = len(rng);
    for (int k = 0; k < l; ++k) m.push_back(gen(rng));
    if (std::find(m.begin(), m.end(), i) != m.end()) continue;
    if (!d.grading.equal(d.degree_of(m), d.degrees[static_cast<std::size_t>(i)])) continue;
    v.add(m);
  }
  return apply_elementary(d, i, v);
}

}  // namespace fixtures
