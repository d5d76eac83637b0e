// Command line surface over the cover-family pipeline: every stage prints a
// versioned JSON report, and the process exits 0 only when everything the
// invocation certified actually passed.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hurwitz/error.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/latex_out.hpp"

using namespace hurwitz;
using nlohmann::json;

namespace {

void print_tree(const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      std::printf("%s%s:\n", pad.c_str(), key.c_str());
      print_tree(value, indent + 2);
    } else if (value.is_array()) {
      bool scalars = value.size() <= 16;
      for (const auto& e : value)
        if (e.is_object() || e.is_array()) scalars = false;
      if (scalars)
        std::printf("%s%s: %s\n", pad.c_str(), key.c_str(), value.dump().c_str());
      else
        std::printf("%s%s: [%zu entries]\n", pad.c_str(), key.c_str(), value.size());
    } else {
      std::printf("%s%s: %s\n", pad.c_str(), key.c_str(), value.dump().c_str());
    }
  }
}

// prints the report and pulls out its verdict field
bool emit(const std::string& text, bool as_json, const char* verdict_key) {
  json j = json::parse(text);
  if (as_json)
    std::printf("%s\n", text.c_str());
  else
    print_tree(j, 0);
  return j.value(verdict_key, false);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_parameter("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moduli of four-point covers of the line: enumeration, braid orbits,\n"
               "formal deformation, exact reconstruction and totally real specialization"};
  app.require_subcommand(1);

  int n = 6;
  int prec = 0;
  bool as_json = false;
  bool as_latex = false;
  unsigned long seed = 0;
  std::vector<long> primes;
  app.add_option("--n", n, "cover degree, even and at least 6")->check(CLI::Range(6, 64));
  app.add_option("--prec", prec, "series precision (0 picks a degree-based default)");
  app.add_flag("--json", as_json, "print the full JSON report");
  app.add_flag("--latex", as_latex, "also print the model display in LaTeX");
  app.add_option("--seed", seed, "seed for probe sampling");
  app.add_option("--primes", primes, "primes for modular evidence")->delimiter(',');

  bool oracle = false;
  auto* sc_nielsen = app.add_subcommand("nielsen", "enumerate the classes of degree n");
  sc_nielsen->add_flag("--oracle", oracle, "cross-check against exhaustive enumeration (n = 6, 8)");
  auto* sc_braid = app.add_subcommand("braid-orbit", "monodromy and orbit closure of the class set");
  auto* sc_descent = app.add_subcommand("descent", "real-descent verdicts for every class");
  auto* sc_anlift = app.add_subcommand("an-lift", "index-two lift of the distinguished class");
  auto* sc_degen = app.add_subcommand("degenerate", "the two degenerate members and the starting coefficients");
  auto* sc_deform = app.add_subcommand("deform", "Newton lift of the degenerate member to series precision");
  auto* sc_alg = app.add_subcommand("algebraize", "rational-function reconstruction of the lifted series");
  auto* sc_verify = app.add_subcommand("verify", "full pipeline with exact certification");
  auto* sc_spec = app.add_subcommand("specialize", "totally real fibers at a rational parameter, with evidence");
  std::string t0str, replay_path;
  int probe_count = 5;
  sc_spec->add_option("--t0", t0str, "parameter value p/q (default: auto-search near the degenerate value)");
  sc_spec->add_option("--count", probe_count, "interior probes per interval")->check(CLI::PositiveNumber);
  sc_spec->add_option("--replay", replay_path, "re-check the certificates of a stored report and exit");
  auto* sc_n6 = app.add_subcommand("verify-n6", "compare the degree six family against its closed form");

  for (auto* sc : app.get_subcommands({})) sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    bool pass = false;
    if (sc_nielsen->parsed()) {
      pass = emit(nielsen_json(n, oracle), as_json, "certified");
    } else if (sc_braid->parsed()) {
      pass = emit(braid_orbit_json(n), as_json, "certified");
    } else if (sc_descent->parsed()) {
      pass = emit(descent_json(n), as_json, "certified");
    } else if (sc_anlift->parsed()) {
      pass = emit(an_lift_json(n), as_json, "certified");
    } else if (sc_degen->parsed()) {
      pass = emit(degenerate_json(n), as_json, "certified");
    } else if (sc_deform->parsed()) {
      int p = prec > 0 ? prec : (n == 6 ? 64 : 128);
      pass = emit(to_json(newton_lift(n, p)), as_json, "certified");
    } else if (sc_alg->parsed()) {
      PipelineResult pipe = run_pipeline(n, prec);
      pass = emit(to_json(pipe.normalization, pipe.reconstruction), as_json, "certified");
      if (as_latex) std::printf("%s", latex_model(pipe.reconstruction.model).c_str());
    } else if (sc_verify->parsed()) {
      PipelineResult pipe = run_pipeline(n, prec);
      pass = emit(to_json(pipe), as_json, "certified");
      if (as_latex) std::printf("%s", latex_model(pipe.reconstruction.model).c_str());
    } else if (sc_spec->parsed()) {
      if (!replay_path.empty()) {
        std::string why;
        pass = replay_specialization(read_file(replay_path), &why);
        std::printf("replay: %s\n", pass ? "ok" : why.c_str());
      } else {
        SpecializeOptions opt;
        if (!t0str.empty()) opt.t0 = Rational::from_string(t0str);
        opt.probe.count = probe_count;
        opt.probe.seed = seed;
        opt.primes = primes;
        SpecializationReport rep = specialize_family(run_pipeline(n, prec), opt);
        AnCheckReport an = an_specialization_check(n, rep.t0);
        pass = emit(to_json(rep, an), as_json, "certified");
      }
    } else if (sc_n6->parsed()) {
      PipelineResult pipe = run_pipeline(6, prec);
      pass = emit(verify_n6_json(pipe), as_json, "all_pass");
      if (as_latex) std::printf("%s", latex_model(pipe.reconstruction.model).c_str());
    }
    return pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
