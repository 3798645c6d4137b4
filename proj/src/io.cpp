#include "leglab/io.hpp"

#include <algorithm>
#include <bit>
#include <filesystem>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "leglab/errors.hpp"

namespace leglab {

InputKind sniff_kind(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    if (line[start] == '{') return InputKind::Dga;
    std::istringstream ls(line.substr(start));
    std::string word;
    ls >> word;
    if (word == "lagrangian") return InputKind::Lagrangian;
    if (word == "front") return InputKind::Front;
    break;
  }
  throw ParseError("unrecognized input: expected DGA JSON, 'lagrangian' or 'front'");
}

std::string kind_name(InputKind k) {
  switch (k) {
    case InputKind::Dga:
      return "dga";
    case InputKind::Lagrangian:
      return "lagrangian";
    case InputKind::Front:
      return "front";
  }
  return "?";
}

DGA parse_dga(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("DGA JSON: ") + e.what());
  }
  auto fail = [](const std::string& why) { throw ParseError("DGA JSON: " + why); };
  if (!j.is_object()) fail("top level must be an object");
  DGA d;
  if (j.contains("modulus")) {
    if (!j["modulus"].is_number_integer() || j["modulus"].get<std::int64_t>() < 0)
      fail("modulus must be a nonnegative integer");
    d.grading = GradingGroup(j["modulus"].get<std::int64_t>());
  }
  if (!j.contains("generators") || !j["generators"].is_array()) fail("missing 'generators' array");
  for (const auto& g : j["generators"]) {
    if (!g.is_object() || !g.contains("name") || !g["name"].is_string()) fail("generator needs a string 'name'");
    if (!g.contains("degree") || !g["degree"].is_number_integer()) fail("generator needs an integer 'degree'");
    const auto name = g["name"].get<std::string>();
    if (d.index_of(name)) fail("duplicate generator '" + name + "'");
    d.add_generator(name, g["degree"].get<Degree>());
  }
  if (j.contains("diffs")) {
    if (!j["diffs"].is_object()) fail("'diffs' must be an object");
    for (const auto& [name, terms] : j["diffs"].items()) {
      const auto i = d.index_of(name);
      if (!i) fail("differential for unknown generator '" + name + "'");
      if (!terms.is_array()) fail("differential of " + name + " must be a list of monomials");
      Polynomial p;
      for (const auto& mono : terms) {
        if (!mono.is_array()) fail("monomial in d(" + name + ") must be a list of names");
        Monomial m;
        for (const auto& x : mono) {
          if (!x.is_string()) fail("monomial in d(" + name + ") must be a list of names");
          const auto k = d.index_of(x.get<std::string>());
          if (!k) fail("unknown generator '" + x.get<std::string>() + "' in d(" + name + ")");
          m.push_back(*k);
        }
        p.add(m);
      }
      d.diffs[static_cast<std::size_t>(*i)] = std::move(p);
    }
  }
  return d;
}

namespace {

Json monomial_json(const DGA& d, const Monomial& m) {
  Json out = Json::array();
  for (int g : m) out.push_back(d.names[static_cast<std::size_t>(g)]);
  return out;
}

}  // namespace

Json dga_to_json(const DGA& d) {
  Json out;
  out["modulus"] = d.grading.modulus();
  out["generators"] = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i)
    out["generators"].push_back({{"name", d.names[i]}, {"degree", d.degrees[i]}});
  out["diffs"] = Json::object();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.diffs[i].is_zero()) continue;
    Json terms = Json::array();
    for (const auto& m : d.diffs[i].terms()) terms.push_back(monomial_json(d, m));
    out["diffs"][d.names[i]] = std::move(terms);
  }
  return out;
}

namespace {

std::string list_text(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "]";
}

}  // namespace

// One generator and one differential per line.
std::string serialize_dga(const DGA& d) {
  std::string out = "{\n  \"modulus\": " + std::to_string(d.grading.modulus()) + ",\n  \"generators\": [";
  for (std::size_t i = 0; i < d.size(); ++i) {
    out += std::string(i ? "," : "") + "\n    {\"name\": " + Json(d.names[i]).dump() +
           ", \"degree\": " + std::to_string(d.degrees[i]) + "}";
  }
  out += d.size() ? "\n  ],\n" : "],\n";
  out += "  \"diffs\": {";
  bool first = true;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.diffs[i].is_zero()) continue;
    std::vector<std::string> terms;
    for (const auto& m : d.diffs[i].terms()) {
      std::vector<std::string> names;
      for (int g : m) names.push_back(Json(d.names[static_cast<std::size_t>(g)]).dump());
      terms.push_back(list_text(names));
    }
    out += std::string(first ? "" : ",") + "\n    " + Json(d.names[i]).dump() + ": " + list_text(terms);
    first = false;
  }
  out += first ? "}\n}\n" : "\n  }\n}\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Caps Caps::from_environment() {
  Caps c;
  if (const char* s = std::getenv("LEGLAB_MAX_SUBSETS")) {
    const unsigned long long n = std::strtoull(s, nullptr, 10);
    if (n > 0) {
      const int bits = static_cast<int>(std::bit_width(n)) - 1;  // floor(log2 n)
      c.max_degree_zero = bits;
      c.max_crossings = bits;
    }
  }
  if (const char* s = std::getenv("LEGLAB_MAX_CORNERS")) {
    const long n = std::strtol(s, nullptr, 10);
    if (n > 0) c.max_corners = static_cast<int>(n);
  }
  return c;
}

namespace {

constexpr int kForcedCap = 40;

Json invariant_block(const DGA& d, const Caps& caps, Json& warnings) {
  std::vector<ShiftAutomorphism> shifts;
  try {
    shifts = find_augmentation_shifts(d, caps.max_degree_zero);
  } catch (const CapExceeded& e) {
    if (!caps.force) throw;
    warnings.push_back(std::string("forced past cap: ") + e.what());
    shifts = find_augmentation_shifts(d, kForcedCap);
  }
  InvariantSet set;
  for (const auto& g : shifts) set.insert(linearized_poincare(d, g));
  Json out;
  out["augmentations"] = shifts.size();
  out["I"] = Json::array();
  out["P(-1)"] = Json::array();
  for (const auto& p : set) {
    out["I"].push_back(p.to_string());
    if (auto v = p.at_minus_one())
      out["P(-1)"].push_back(*v);
    else
      out["P(-1)"].push_back("undefined");
  }
  return out;
}

Json violations_json(const DGA& d, const ValidationReport& r) {
  Json out = Json::array();
  for (const auto& v : r.violations) {
    const char* kind = v.kind == Violation::Kind::IndexOutOfRange ? "index"
                       : v.kind == Violation::Kind::NotHomogeneous ? "degree"
                                                                    : "d^2";
    out.push_back({{"generator", d.names[static_cast<std::size_t>(v.generator)]},
                   {"kind", kind},
                   {"message", v.message},
                   {"witness", to_string(d, v.witness)}});
  }
  return out;
}

void merge(Json& into, const Json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

Json dga_report(const std::string& text, Json report, const Caps& caps) {
  const DGA d = parse_dga(text);
  report["modulus"] = d.grading.modulus();
  report["generators"] = d.size();
  const auto check = validate_dga(d);
  if (!check.ok()) {
    report["valid"] = false;
    report["violations"] = violations_json(d, check);
    throw ReportedFailure{report};
  }
  report["valid"] = true;
  merge(report, invariant_block(d, caps, report["warnings"]));
  return report;
}

Json lagrangian_report(const std::string& text, Json report, const Caps& caps) {
  const auto d = build_diagram(parse_diagram(text));
  const auto cl = classical_from_lagrangian(d);
  report["m"] = cl.maslov;
  report["beta"] = cl.tb;
  Json crossings = Json::array();
  for (std::size_t c = 0; c < d.crossings().size(); ++c) {
    const auto& x = d.crossings()[c];
    crossings.push_back({{"label", x.label},
                         {"q", to_string(x.point.q)},
                         {"p", to_string(x.point.p)},
                         {"sign", x.sign},
                         {"action", to_string(x.action)},
                         {"degree", crossing_grading(d, static_cast<int>(c))}});
  }
  report["crossings"] = crossings;
  const int corners = caps.max_corners.value_or(default_max_corners(d));
  const auto built = build_dga(d, corners);
  report["max_corners"] = corners;
  if (built.truncated) {
    report["warnings"].push_back("disk search complete only up to " + std::to_string(corners) +
                                 " corners; longer walks with energy left were cut");
  }
  report["dga"] = dga_to_json(built.dga);
  const auto check = validate_dga(built.dga);
  if (!check.ok()) {
    report["valid"] = false;
    report["violations"] = violations_json(built.dga, check);
    throw ReportedFailure{report};
  }
  report["valid"] = true;
  merge(report, invariant_block(built.dga, caps, report["warnings"]));
  return report;
}

Json front_report(const std::string& text, Json report, const Caps& caps) {
  const FrontWord w = parse_front(text);
  const auto check = validate_front(w);
  if (!check.ok()) {
    report["valid"] = false;
    report["problems"] = check.problems;
    throw ReportedFailure{report};
  }
  report["valid"] = true;
  const auto cl = classical_from_front(w);
  report["m"] = cl.maslov;
  report["beta"] = cl.tb;
  Census census;
  try {
    census = enumerate_decompositions(w, caps.max_crossings);
  } catch (const CapExceeded& e) {
    if (!caps.force) throw;
    report["warnings"].push_back(std::string("forced past cap: ") + e.what());
    census = enumerate_decompositions(w, kForcedCap);
  }
  report["adm"] = census.adm.size();
  report["adm_graded"] = census.adm_graded.size();
  Json theta = Json::object();
  for (const auto& [t, count] : census.theta) theta[std::to_string(t)] = count;
  report["census"] = {{"adm", census.adm}, {"adm_graded", census.adm_graded}, {"theta", theta}};
  auto named = [](const std::vector<std::uint64_t>& masks) {
    Json sets = Json::array();
    for (auto mask : masks) {
      Json set = Json::array();
      for (int j = 0; j < 64; ++j)
        if ((mask >> j) & 1U) set.push_back("c" + std::to_string(j + 1));
      sets.push_back(set);
    }
    return sets;
  };
  report["switch_sets"] = {{"adm", named(census.adm)}, {"adm_graded", named(census.adm_graded)}};
  Json maslov = Json::array();
  const auto flags = maslov_crossings(w);
  for (std::size_t j = 0; j < flags.size(); ++j)
    if (flags[j]) maslov.push_back("c" + std::to_string(j + 1));
  report["maslov_crossings"] = maslov;
  return report;
}

}  // namespace

Json invariant_report(const std::string& text, const std::string& input_id, const Caps& caps) {
  const InputKind kind = sniff_kind(text);
  Json report;
  report["input"] = input_id;
  report["kind"] = kind_name(kind);
  report["warnings"] = Json::array();
  switch (kind) {
    case InputKind::Dga:
      return dga_report(text, std::move(report), caps);
    case InputKind::Lagrangian:
      return lagrangian_report(text, std::move(report), caps);
    case InputKind::Front:
      return front_report(text, std::move(report), caps);
  }
  return report;
}

Json compare_reports(const Json& a, const Json& b) {
  Json out;
  Json compared = Json::array();
  std::optional<std::string> witness;
  auto check = [&](const std::string& name, const std::vector<std::string>& keys) {
    for (const auto& k : keys)
      if (!a.contains(k) || !b.contains(k)) return;
    compared.push_back(name);
    if (witness) return;
    for (const auto& k : keys)
      if (a[k] != b[k]) {
        witness = name;
        return;
      }
  };
  check("classical", {"m", "beta"});
  check("I", {"I"});
  check("adm", {"adm"});
  check("adm_graded", {"adm_graded"});
  if (a.contains("census") && b.contains("census")) {
    compared.push_back("theta");
    if (!witness && a["census"]["theta"] != b["census"]["theta"]) witness = "theta";
  }
  out["verdict"] = witness ? "distinguished" : "not_distinguished";
  out["witness"] = witness ? Json(*witness) : Json(nullptr);
  out["compared"] = compared;
  auto summary = [](const Json& r) {
    Json s;
    for (const char* k : {"input", "kind", "m", "beta", "I", "adm", "adm_graded"})
      if (r.contains(k)) s[k] = r[k];
    if (r.contains("census")) s["theta"] = r["census"]["theta"];
    return s;
  };
  out["a"] = summary(a);
  out["b"] = summary(b);
  return out;
}

ReportOutcome run_invariants(const std::string& text, const std::string& input_id, const Caps& caps) {
  auto error = [&](const std::string& kind, const std::string& msg) {
    Json j;
    j["input"] = input_id;
    j["error"] = kind;
    j["message"] = msg;
    return j;
  };
  try {
    return {0, invariant_report(text, input_id, caps)};
  } catch (const ParseError& e) {
    return {1, error("parse", e.what())};
  } catch (const ReportedFailure& f) {
    return {2, f.report};
  } catch (const ValidationError& e) {
    return {2, error("validation", e.what())};
  } catch (const CapExceeded& e) {
    return {3, error("cap", e.what())};
  }
}

Polynomial parse_polynomial(const DGA& d, const std::string& text) {
  Polynomial p;
  std::string rest = text;
  std::replace(rest.begin(), rest.end(), '+', '\n');
  std::istringstream terms(rest);
  std::string term;
  bool any = false;
  while (std::getline(terms, term)) {
    std::istringstream words(term);
    std::string w;
    Monomial m;
    bool unit = false, zero = false, empty = true;
    while (words >> w) {
      empty = false;
      if (w == "1") {
        unit = true;
      } else if (w == "0") {
        zero = true;
      } else if (auto i = d.index_of(w)) {
        m.push_back(*i);
      } else {
        throw ParseError("unknown generator '" + w + "' in polynomial");
      }
    }
    if (empty) throw ParseError("empty term in polynomial '" + text + "'");
    if ((unit || zero) && !m.empty()) throw ParseError("constants must stand alone in '" + text + "'");
    any = true;
    if (!zero) p.add(m);
  }
  if (!any) throw ParseError("empty polynomial");
  return p;
}

namespace {

// Objects match key by key (extra keys in the report are ignored); anything
// else must be equal.
bool matches(const Json& expected, const Json& actual, const std::string& path, std::string& why) {
  if (expected.is_object()) {
    if (!actual.is_object()) {
      why = path + ": expected an object";
      return false;
    }
    for (const auto& [k, v] : expected.items()) {
      if (!actual.contains(k)) {
        why = path + "/" + k + ": missing";
        return false;
      }
      if (!matches(v, actual[k], path + "/" + k, why)) return false;
    }
    return true;
  }
  if (expected != actual) {
    why = path + ": expected " + expected.dump() + ", got " + actual.dump();
    return false;
  }
  return true;
}

}  // namespace

std::vector<CorpusCheck> verify_corpus(const std::string& dir, const Caps& caps) {
  namespace fs = std::filesystem;
  std::vector<fs::path> sidecars;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (name.size() > 14 && name.ends_with(".expected.json")) sidecars.push_back(entry.path());
  }
  std::sort(sidecars.begin(), sidecars.end());
  std::vector<CorpusCheck> out;
  for (const auto& sc : sidecars) {
    CorpusCheck check{sc.filename().string(), false, ""};
    try {
      const Json spec = Json::parse(read_file(sc.string()));
      const std::string file = spec.at("file").get<std::string>();
      const auto outcome = run_invariants(read_file((fs::path(dir) / file).string()), file, caps);
      const int want_exit = spec.value("exit", 0);
      std::string why;
      if (outcome.exit_code != want_exit) {
        check.detail = "exit " + std::to_string(outcome.exit_code) + ", expected " + std::to_string(want_exit);
      } else if (!matches(spec.at("expect"), outcome.report, "", why)) {
        check.detail = why;
      } else {
        check.ok = true;
      }
    } catch (const std::exception& e) {
      check.detail = e.what();
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace leglab
