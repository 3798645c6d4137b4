// Acceptance run: one PASS/FAIL line per criterion, with the measured values.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "leglab/io.hpp"
#include "leglab/stab.hpp"
#include "support/disk_oracle.hpp"
#include "support/fixtures.hpp"

using namespace leglab;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;
  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (std::find(failures.begin(), failures.end(), what) == failures.end()) failures.push_back(what);
  }
  std::string text() const {
    std::string out = detail.str();
    while (out.ends_with("; ")) out.resize(out.size() - 2);
    for (const auto& f : failures) out += " [failed: " + f + "]";
    return out;
  }
};

std::string join(const Json& j) {
  std::string out = "{";
  for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].get<std::string>();
  return out + "}";
}

Json report(const std::string& name) {
  return run_invariants(read_file(fixtures::corpus_path(name)), name, Caps{}).report;
}

std::vector<DGA> corpus_algebras() {
  std::vector<DGA> out;
  for (const auto& name : fixtures::corpus_files("dga-")) {
    auto d = fixtures::corpus_dga(name);
    if (validate_dga(d).ok()) out.push_back(std::move(d));
  }
  for (const auto& name : fixtures::corpus_files("lagrangian-")) {
    const auto diagram = build_diagram(fixtures::corpus_points(name));
    out.push_back(build_dga(diagram, default_max_corners(diagram)).dga);
  }
  return out;
}

void chekanov_dgas(Outcome& o) {
  const auto a = report("dga-1a.json"), b = report("dga-1b.json");
  const auto verdict = compare_reports(a, b)["verdict"].get<std::string>();
  o.detail << "I(1a) = " << join(a["I"]) << ", I(1b) = " << join(b["I"]) << ", compare: " << verdict;
  o.require(a["I"] == Json::parse(R"(["t^-2+t+t^2"])"), "I(1a)");
  o.require(b["I"] == Json::parse(R"(["2+t"])"), "I(1b)");
  o.require(verdict == "distinguished", "verdict");
}

void chekanov_fronts(Outcome& o) {
  const auto s = report("front-sigma.txt"), t = report("front-sigma-prime.txt");
  for (const auto* r : {&s, &t}) {
    o.detail << (r == &s ? "Sigma" : "Sigma'") << ": (m, beta) = (" << (*r)["m"] << ", " << (*r)["beta"]
             << "), #Adm = " << (*r)["adm"] << ", #Adm+ = " << (*r)["adm_graded"]
             << ", graded sets " << (*r)["switch_sets"]["adm_graded"].dump() << "; ";
    o.require((*r)["m"] == 0 && (*r)["beta"] == 1, "classical invariants");
  }
  o.require(s["adm"] == 2 && s["adm_graded"] == 1, "Sigma counts");
  o.require(t["adm"] == 2 && t["adm_graded"] == 2, "Sigma' counts");
  o.require(s["switch_sets"]["adm_graded"] == Json::parse(R"([["c2","c3","c4","c5"]])"), "Sigma switch sets");
  o.require(t["switch_sets"]["adm_graded"] ==
                Json::parse(R"([["c2","c3","c4","c5"],["c1","c2","c3","c4","c5","c6"]])"),
            "Sigma' switch sets");
}

void unknot(Outcome& o) {
  const auto r = report("lagrangian-unknot.txt");
  o.detail << "(m, beta) = (" << r["m"] << ", " << r["beta"] << "), generators " << r["dga"]["generators"].dump()
           << ", diffs " << r["dga"]["diffs"].dump() << ", I = " << join(r["I"]) << ", P(-1) = " << r["P(-1)"].dump();
  o.require(r["m"] == 0 && r["beta"] == -1, "classical invariants");
  o.require(r["dga"]["generators"].size() == 1 && r["dga"]["generators"][0]["degree"] == 1, "one degree-1 generator");
  o.require(r["dga"]["diffs"].empty(), "d = 0");
  o.require(r["I"] == Json::parse(R"(["t"])"), "I");
  o.require(r["P(-1)"] == Json::parse("[-1]") && r["P(-1)"][0] == r["beta"], "P(-1) = beta");
}

void d_squared(Outcome& o) {
  int corpus = 0, random = 0;
  for (const auto& name : fixtures::corpus_files("lagrangian-")) {
    const auto d = build_diagram(fixtures::corpus_points(name));
    o.require(validate_dga(build_dga(d, default_max_corners(d)).dga).ok(), name);
    ++corpus;
  }
  std::mt19937 rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto d = fixtures::random_diagram(rng, 6);
    const bool ok = validate_dga(build_dga(d, default_max_corners(d)).dga).ok();
    o.require(ok, "random diagram " + std::to_string(i) + ":\n" + serialize_diagram(d.vertices()));
    random += ok;
  }
  o.detail << corpus << " corpus diagrams and " << random << "/100 random diagrams have d^2 = 0 and deg d = -1";
}

void dual_enumerators(Outcome& o) {
  std::size_t disks = 0;
  for (const auto& name : fixtures::corpus_files("lagrangian-")) {
    const auto d = build_diagram(fixtures::corpus_points(name));
    for (int c = 0; c < static_cast<int>(d.crossings().size()); ++c) {
      const auto walks = oracle::walk_disks(d, c, default_max_corners(d));
      const auto domains = oracle::domain_disks(d, c);
      disks += walks.size();
      o.require(walks == domains, name + " " + d.crossings()[static_cast<std::size_t>(c)].label);
    }
  }
  o.detail << disks << " disks over " << fixtures::corpus_files("lagrangian-").size()
           << " corpus diagrams, walk and domain sets equal";
}

void invariance(Outcome& o) {
  const auto algebras = corpus_algebras();
  std::mt19937 rng(6);
  std::uniform_int_distribution<int> length(1, 4);
  std::uniform_int_distribution<std::size_t> pick(0, algebras.size() - 1);
  int sequences = 0;
  for (int s = 0; s < 200; ++s) {
    const auto& base = algebras[pick(rng)];
    DGA d = base;
    const int n = length(rng);
    for (int k = 0; k < n; ++k) d = fixtures::random_tame_step(d, rng);
    const bool same = validate_dga(d).ok() && invariant_I(d) == invariant_I(base);
    o.require(same, "sequence " + std::to_string(s));
    sequences += same;
  }
  int fronts = 0;
  for (const auto& name : fixtures::corpus_files("front-")) {
    const auto w = fixtures::corpus_front(name);
    const auto r = reverse_orientation(w);
    const auto a = enumerate_decompositions(w), b = enumerate_decompositions(r);
    o.require(a.adm == b.adm && a.adm_graded == b.adm_graded && a.theta == b.theta, name + " census");
    o.require(maslov_crossings(w) == maslov_crossings(r), name + " Maslov crossings");
    ++fronts;
  }
  int knots = 0;
  for (const auto& name : fixtures::corpus_files("lagrangian-")) {
    const auto r = report(name);
    if (r["m"] != 0) continue;
    for (const auto& v : r["P(-1)"]) o.require(v == r["beta"], name + " P(-1)");
    ++knots;
  }
  o.detail << sequences << "/200 tame sequences keep I; " << fronts << " fronts keep census and Maslov crossings "
           << "under reversal; P(-1) = beta on " << knots << " knots";
}

void collapse(Outcome& o) {
  int fronts = 0;
  std::set<std::int64_t> dm;
  for (const auto& name : fixtures::corpus_files("front-")) {
    const auto w = fixtures::corpus_front(name);
    const auto before = classical_from_front(w);
    for (auto kind : {StabilizationKind::Plus, StabilizationKind::Minus}) {
      const auto s = stabilize_front(w, kind);
      const auto after = classical_from_front(s);
      o.require(enumerate_decompositions(s).adm.empty(), name + " census");
      o.require(after.tb == before.tb - 1, name + " beta");
      const auto change = std::abs(std::abs(after.maslov) - std::abs(before.maslov));
      dm.insert(change);
      o.require(change == 1, name + (kind == StabilizationKind::Plus ? " S+" : " S-") + " |m| changes by " +
                                  std::to_string(change));
    }
    ++fronts;
  }
  int algebras = 0;
  for (const auto& d : corpus_algebras()) {
    o.require(invariant_I(stabilize_knot_dga(d)).empty(), "DGA-level I");
    ++algebras;
  }
  o.detail << fronts << " fronts x 2 signs: census empty, beta - 1, |m| change in {";
  for (auto it = dm.begin(); it != dm.end(); ++it) o.detail << (it == dm.begin() ? "" : ", ") << *it;
  o.detail << "}; " << algebras << " stabilized algebras with empty I";
}

void fu_check(Outcome& o) {
  int pairs = 0;
  for (const auto& name : fixtures::corpus_files("front-")) {
    const auto lag = "lagrangian-" + name.substr(6);
    const auto files = fixtures::corpus_files(lag);
    if (files.empty() || files.front() != lag) continue;
    const auto f = report(name), l = report(lag);
    o.detail << name.substr(6, name.size() - 10) << ": #Adm+ = " << f["adm_graded"] << ", |I| = " << l["I"].size()
             << "; ";
    o.require(f["adm_graded"] == 0 || !l["I"].empty(), name);
    ++pairs;
  }
  o.require(pairs > 0, "no knot with both presentations");
}

void validator(Outcome& o) {
  const auto out = run_invariants(read_file(fixtures::corpus_path("dga-ng-62.json")), "6_2", Caps{});
  o.detail << "exit " << out.exit_code << ", violations " << out.report["violations"].dump();
  o.require(out.exit_code == 2, "exit code");
  const auto& v = out.report["violations"];
  o.require(v.size() == 1 && v[0]["generator"] == "a4" && v[0]["kind"] == "d^2" &&
                v[0]["witness"] == "a11 a8 a10 a5",
            "a4 and its monomial");
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"Chekanov pair via DGAs", chekanov_dgas},
      {"Chekanov pair via fronts", chekanov_fronts},
      {"unknot end to end", unknot},
      {"d^2 = 0 on built DGAs", d_squared},
      {"walk and domain enumerators agree", dual_enumerators},
      {"invariance suite", invariance},
      {"stabilization collapse", collapse},
      {"graded decompositions imply augmentations", fu_check},
      {"validator regression on 6_2", validator},
  };
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i + 1) != only) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << ", " << ms
              << " ms): " << o.text() << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
