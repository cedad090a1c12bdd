// Acceptance driver: one PASS/FAIL line per criterion with its time limit.
//   acceptance              run every criterion
//   acceptance --criterion N

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include <CLI11.hpp>

#include "cli.hpp"
#include "esgames/errors.hpp"
#include "esgames/fixtures.hpp"
#include "esgames/suite.hpp"
#include "json_schema.hpp"
#include "properties.hpp"

using namespace esgames;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<void(Verdict&)> run;
};

// bang is defined on negative games.
bool negative_game(const Game& g) { return g.es->minimal_events().subset_of(g.es->negative_events()); }

// N ∩ P trivial as sets of automorphisms.
bool trivial_intersection(const Game& g) {
  const EventMap id = identity_map(g.es->size());
  for (const auto& a : g.n_action.act)
    for (const auto& b : g.p_action.act)
      if (a == b && a != id) return false;
  return true;
}

void automorphism_count(Verdict& v) {
  const GamePtr g = pairs_game();
  const auto autos = enumerate_automorphisms(*g->es);
  v.require(autos.size() == 2, "expected 2 automorphisms, got " + std::to_string(autos.size()));
  for (const auto& a : autos) {
    if (a == identity_map(g->es->size())) continue;
    const AutomorphismClass c = classify_automorphism(*g->es, a);
    v.require(c.negative && !c.positive, "swap is not negative-and-not-positive");
  }
  v.detail << "2 automorphisms; swap negative, not positive";
}

void constructor_soundness(Verdict& v) {
  std::size_t games = 0;
  std::size_t skipped = 0;
  const auto fixtures = fixture_games();
  auto check = [&](const std::string& what, const Game& g) {
    ++games;
    const Report r = validate_game(g);
    v.require(r.ok(), what + ": " + r.str());
  };
  for (const auto& [name, g] : fixtures) {
    check("dual " + name, dual_game(*g));
    v.require(dual_game(dual_game(*g)) == *g, "dual of dual differs on " + name);
    check("trivial " + name, trivial_game(g->es));
    check("par " + name + " pairs", parallel_game(*g, *pairs_game()));
    check("par " + name + " " + name, parallel_game(*g, *g));
    if (!negative_game(*g)) continue;
    const double configs = static_cast<double>(g->es->configurations().size());
    for (std::size_t n = 1; n <= 3; ++n) {
      // bang n keeps configurations^n, bounded by the configuration guard.
      if (std::pow(configs, static_cast<double>(n)) > static_cast<double>(Limits::defaults().max_configurations)) {
        ++skipped;
        continue;
      }
      check("bang " + name + " " + std::to_string(n), bang_game(*g, n));
    }
  }
  v.detail << games << " constructed games valid, dual involutive; " << skipped
           << " bangs beyond the configuration guard skipped";
}

void law_oracle(Verdict& v) {
  std::size_t checked = 0;
  for (const auto& [name, g] : fixture_games()) {
    if (!is_faithful(g->n_action) || !is_faithful(g->p_action) || !trivial_intersection(*g)) continue;
    ++checked;
    v.require(derive_law_from_factorization(g->n_action, g->p_action) == g->law, "derived law differs on " + name);
  }
  v.require(checked > 0, "no fixture qualified");
  v.detail << checked << " fixture laws reproduced entry for entry";
}

void copycat_suite(Verdict& v) {
  std::size_t n = 0;
  for (const auto& [name, g] : fixture_games()) {
    ++n;
    v.require(validate_strategy(copycat_strategy(g)).ok(), "copycat strategy invalid on " + name);
    const UniformStrategy u = uniform_copycat(g);
    const Report r = validate_uniform(u);
    v.require(r.ok(), "uniform copycat on " + name + ": " + r.str());
    v.require(is_local(u), "uniform copycat not local on " + name);
  }
  v.detail << n << " fixture games: strategy, uniform, local";
}

void lifting_coherence(Verdict& v) {
  const GamePtr a = pairs_game();
  const LiftWitness w = bang_injection_witness(a);
  try {
    const UniformStrategy u = uniform_lift(w);
    const Report r = validate_uniform(u);
    v.require(r.ok(), "injection lift: " + r.str());
  } catch (const Error& e) {
    v.require(false, std::string("injection lift rejected: ") + e.what());
  }

  LiftWitness corrupted = w;
  corrupted.L[1] = corrupted.L[1] == 0 ? 1 : 0;
  const Report r = validate_lift_witness(corrupted);
  const bool named = r.failed("hexagon") || r.failed("negative-square") || r.failed("positive-square");
  v.require(named, "corrupted L not reported as a square or hexagon violation");

  const Report colift = validate_colift_witness(bang_counit_witness(a));
  if (v.pass) v.detail << "injection lift valid; ";
  else v.detail << "; ";
  v.detail << "corrupted L named (" << (named ? "yes" : "no") << "); counit colift "
           << (colift.ok() && validate_uniform(uniform_colift(bang_counit_witness(a))).ok() ? "valid" : "invalid");
}

void uniformity_decisions(Verdict& v) {
  for (int k : {1, 2}) {
    const SearchResult r = search_uniform_structure(token_strategy(k, 2));
    v.require(r.uniform && validate_uniform(*r.uniform).ok(),
              "no uniform structure for strategy (" + std::to_string(k) + ") at n=2");
  }
  for (int k : {4, 5}) {
    const SearchResult r = search_uniform_structure(token_strategy(k, 3));
    v.require(!r.uniform && r.certificate.exhaustive,
              "strategy (" + std::to_string(k) + ") at n=3 is not a certified none");
  }
  v.detail << "(1),(2) found at n=2; (4),(5) none at n=3, exhaustive";
}

void twin_swap_end_to_end(Verdict& v) {
  const TwinSwap ex = twin_swap();
  v.require(validate_uniform(ex.nonlocal).ok(), "not uniform");
  const auto w = locality_witness(ex.nonlocal);
  v.require(w.has_value(), "locality holds");
  const SimStrategy s{ex.nonlocal.strategy, family_from_uniform(ex.nonlocal),
                      share(tcg_from_game(*ex.game))};
  v.require(check_thin(s).failed("thinness"), "family is thin");
  v.require(check_sim_receptivity(s).failed("sim-receptivity"), "family is ~-receptive");
  try {
    to_sim_strategy(ex.nonlocal);
    v.require(false, "to_sim_strategy accepted");
  } catch (const PreconditionError& e) {
    const std::string what = e.what();
    v.require(what.rfind("uniformity not local", 0) == 0, "wrong rejection: " + what);
    if (w) v.require(what.find(describe(ex.nonlocal, *w)) != std::string::npos, "rejection lacks the witness");
  }
  if (w) v.detail << describe(ex.nonlocal, *w);
}

void bridge_soundness(Verdict& v) {
  std::size_t games = 0;
  for (const auto& [name, g] : fixture_games()) {
    ++games;
    const Report r = validate_thin_game(tcg_from_game(*g));
    v.require(r.ok(), "tcg of " + name + ": " + r.str());
  }
  std::vector<std::pair<std::string, UniformStrategy>> uniforms;
  for (const auto& [name, g] : fixture_games()) uniforms.emplace_back("copycat " + name, uniform_copycat(g));
  for (const auto& [name, bundle] : fixture_catalog())
    for (const Document& d : bundle.documents())
      if (d.kind == DocKind::uniform_strategy)
        uniforms.emplace_back(d.id, *bundle.get<UniformStrategy>(d.id));
  std::size_t local = 0;
  for (const auto& [name, u] : uniforms) {
    if (!validate_uniform(u).ok() || !is_local(u)) continue;
    ++local;
    const SimStrategy s = to_sim_strategy(u);
    v.require(check_thin(s).ok(), "thinness fails on " + name);
    v.require(check_sim_receptivity(s).ok(), "~-receptivity fails on " + name);
    v.require(check_projection_symmetry(s).ok(), "symmetry preservation fails on " + name);
  }
  v.detail << games << " thin games; " << local << " local uniform fixtures are ~-strategies";
}

void random_properties(Verdict& v) {
  const props::Outcome o = props::run(20261016u, 200);
  for (const auto& f : o.failures) v.require(false, f);
  v.detail << o.structures << " structures, " << o.actions << " actions, " << o.triples << " weak-map triples";
}

void cli_contract(Verdict& v) {
  const fs::path dir = fs::path(ESGAMES_DATA_DIR) / "fixtures";
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  std::string all;
  for (const auto& f : files) all += " " + cli::quote(f);

  const cli::Run text = cli::run("validate" + all);
  v.require(text.code == 0, "validate exited " + std::to_string(text.code));

  for (const auto& f : files) {
    const std::string args = "export-dot " + cli::quote(f);
    const cli::Run a = cli::run(args, false), b = cli::run(args, false);
    v.require(a.code == 0 && a.out == b.out, "DOT differs across runs for " + f);
  }

  const cli::Run json = cli::run("validate --report json" + all, false);
  std::ifstream in(fs::path(ESGAMES_DATA_DIR) / "report.schema.json");
  try {
    const auto errors = schema::validate(nlohmann::json::parse(in), nlohmann::json::parse(json.out));
    for (const auto& e : errors) v.require(false, "schema: " + e);
  } catch (const nlohmann::json::exception& e) {
    v.require(false, std::string("report is not JSON: ") + e.what());
  }
  v.detail << files.size() << " catalog files: exit 0, DOT stable, report matches schema";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "automorphism count", 1, automorphism_count},
      {2, "constructor soundness", 10, constructor_soundness},
      {3, "law oracle equivalence", 5, law_oracle},
      {4, "copycat suite", 30, copycat_suite},
      {5, "lifting coherence", 30, lifting_coherence},
      {6, "uniformity decisions", 300, uniformity_decisions},
      {7, "non-local uniformity end to end", 1, twin_swap_end_to_end},
      {8, "bridge soundness", 30, bridge_soundness},
      {9, "randomized properties", 120, random_properties},
      {10, "cli contract", 10, cli_contract},
  };

  bool all_pass = true;
  for (const Criterion& c : criteria) {
    if (only && c.id != only) continue;
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(secs <= c.limit_s, "time limit exceeded");
    all_pass = all_pass && v.pass;
    std::printf("criterion %d [%s]: %s (%.3f s / limit %g s) %s\n", c.id, c.name.c_str(), v.pass ? "PASS" : "FAIL",
                secs, c.limit_s, v.detail.str().c_str());
  }
  return all_pass ? 0 : 1;
}
