// leglab: Legendrian knot invariants from DGA files, Lagrangian polylines and
// front words.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "leglab/errors.hpp"
#include "leglab/io.hpp"
#include "leglab/stab.hpp"

using namespace leglab;

namespace {

bool pretty = false;

void print(const Json& j) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

int fail(int code, const std::string& kind, const std::string& msg) {
  print(Json{{"error", kind}, {"message", msg}});
  return code;
}

// Runs body, mapping library exceptions to exit codes.
template <class F>
int guarded(F body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return fail(1, "parse", e.what());
  } catch (const ValidationError& e) {
    return fail(2, "validation", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(2, "validation", e.what());
  } catch (const CapExceeded& e) {
    return fail(3, "cap", e.what());
  }
}

StabilizationKind parse_sign(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1" || s == "plus") return StabilizationKind::Plus;
  if (s == "-" || s == "-1" || s == "minus") return StabilizationKind::Minus;
  throw ParseError("sign must be + or -");
}

Segment parse_site(const std::string& s) {
  Segment seg{};
  char comma = 0;
  std::istringstream in(s);
  if (!(in >> seg.interval >> comma >> seg.position) || comma != ',')
    throw ParseError("site must be INTERVAL,POSITION");
  return seg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendrian knot invariants"};
  app.require_subcommand(1);
  bool force = false;
  app.add_flag("--pretty", pretty, "indent JSON output");
  app.add_flag("--force", force, "run past exhaustive-search caps with a warning");

  std::string file, file_b, sign, site, dir = "corpus", gen, poly, shift;
  long long degree = 1;

  auto* inv = app.add_subcommand("invariants", "report every invariant computable from the file");
  inv->add_option("file", file)->required();

  auto* cmp = app.add_subcommand("compare", "try to tell two knots apart");
  cmp->add_option("a", file)->required();
  cmp->add_option("b", file_b)->required();

  auto* stab = app.add_subcommand("stabilize", "stabilize a front (or a DGA at the algebra level)");
  stab->add_option("file", file)->required();
  stab->add_option("--sign", sign, "+ or -")->required();
  stab->add_option("--site", site, "INTERVAL,POSITION of the strand to zigzag");

  auto* dga = app.add_subcommand("dga", "transform a DGA file");
  dga->require_subcommand(1);
  auto* d_stab = dga->add_subcommand("stabilize", "add a pair a, b with d(a) = b");
  d_stab->add_option("file", file)->required();
  d_stab->add_option("--degree", degree, "degree of the upper generator");
  auto* d_elem = dga->add_subcommand("elementary", "conjugate by a_i -> a_i + v");
  d_elem->add_option("file", file)->required();
  d_elem->add_option("--gen", gen, "generator name")->required();
  d_elem->add_option("--poly", poly, "v, e.g. \"a2 + a3 a4\"")->required();
  auto* d_mirror = dga->add_subcommand("mirror", "reverse every monomial");
  d_mirror->add_option("file", file)->required();
  auto* d_conj = dga->add_subcommand("conjugate", "conjugate by a shift a_i -> a_i + 1");
  d_conj->add_option("file", file)->required();
  d_conj->add_option("--shift", shift, "comma-separated degree-0 generators to shift");

  auto* corpus = app.add_subcommand("corpus", "corpus maintenance");
  corpus->require_subcommand(1);
  auto* verify = corpus->add_subcommand("verify", "check every corpus entry against its sidecar");
  verify->add_option("--dir", dir, "corpus directory");

  CLI11_PARSE(app, argc, argv);

  Caps caps = Caps::from_environment();
  caps.force = force;

  if (inv->parsed()) {
    return guarded([&] {
      const auto out = run_invariants(read_file(file), file, caps);
      print(out.report);
      return out.exit_code;
    });
  }
  if (cmp->parsed()) {
    return guarded([&] {
      const auto a = run_invariants(read_file(file), file, caps);
      if (a.exit_code != 0) return print(a.report), a.exit_code;
      const auto b = run_invariants(read_file(file_b), file_b, caps);
      if (b.exit_code != 0) return print(b.report), b.exit_code;
      print(compare_reports(a.report, b.report));
      return 0;
    });
  }
  if (stab->parsed()) {
    return guarded([&] {
      const std::string text = read_file(file);
      const auto kind = parse_sign(sign);
      switch (sniff_kind(text)) {
        case InputKind::Front: {
          std::optional<Segment> s;
          if (!site.empty()) s = parse_site(site);
          std::cout << serialize_front(stabilize_front(parse_front(text), kind, s));
          return 0;
        }
        case InputKind::Dga:
          std::cout << serialize_dga(stabilize_knot_dga(parse_dga(text), 1));
          return 0;
        case InputKind::Lagrangian:
          break;
      }
      throw ValidationError("Lagrangian diagrams are stabilized at the DGA level only; pass the DGA");
    });
  }
  if (dga->parsed()) {
    return guarded([&] {
      const DGA d = parse_dga(read_file(file));
      DGA out;
      if (d_stab->parsed()) {
        out = stabilize_dga(d, degree);
      } else if (d_elem->parsed()) {
        const auto i = d.index_of(gen);
        if (!i) throw ParseError("unknown generator '" + gen + "'");
        out = apply_elementary(d, *i, parse_polynomial(d, poly));
      } else if (d_mirror->parsed()) {
        out = mirror_dga(d);
      } else {
        ShiftAutomorphism g{std::vector<bool>(d.size(), false)};
        std::istringstream names(shift);
        std::string name;
        while (std::getline(names, name, ',')) {
          if (name.empty()) continue;
          const auto i = d.index_of(name);
          if (!i) throw ParseError("unknown generator '" + name + "'");
          g.shifts[static_cast<std::size_t>(*i)] = true;
        }
        out = conjugate(d, g);
      }
      std::cout << serialize_dga(out);
      return 0;
    });
  }
  if (verify->parsed()) {
    return guarded([&] {
      bool all = true;
      for (const auto& c : verify_corpus(dir, caps)) {
        std::cout << (c.ok ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
        all = all && c.ok;
      }
      return all ? 0 : 2;
    });
  }
  return 0;
}
