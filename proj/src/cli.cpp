#include "ctow/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <stdexcept>

#include "CLI11.hpp"
#include "ctow/bmw.hpp"
#include "ctow/framework.hpp"

namespace ctow {

int default_level_bound(const std::string& algebra) {
  if (algebra == "hecke") return 5;
  if (algebra == "brauer") return 4;
  if (algebra == "tl") return 6;
  if (algebra == "partition") return 6;
  if (algebra == "bmw") return 3;
  throw std::invalid_argument("unknown algebra: " + algebra);
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string algebra = "brauer";
  int n = 1;
  int from = 1;
  std::string format = "json";
  std::string out;
  int jobs = 1;
  bool all = false;
  bool cell = false;
  bool axioms = false;
  bool filtrations = false;
  bool branching = false;
  bool relations = false;
  int corrupt = -1;
};

int level_bound(const Config& cfg) {
  int bound = default_level_bound(cfg.algebra);
  if (const char* env = std::getenv("CELLULAR_TOWERS_MAX_LEVEL")) {
    try {
      bound = std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("CELLULAR_TOWERS_MAX_LEVEL is not an integer: ") + env);
    }
  }
  return std::min(bound, make_tower(cfg.algebra)->max_level());
}

void check_level(const Config& cfg, int n) {
  int bound = level_bound(cfg);
  if (n < 0 || n > bound)
    throw UsageError("level " + std::to_string(n) + " is outside 0.." + std::to_string(bound) + " for " + cfg.algebra);
}

void emit(const Config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
}

int cmd_gen_basis(const Config& cfg, std::ostream& out) {
  check_level(cfg, cfg.n);
  Framework F(make_tower(cfg.algebra));
  CellDatum datum = F.cellular_basis(cfg.n);
  if (static_cast<int>(datum.elements.size()) != F.spec().dim(cfg.n) || F.freeness_certificate(datum) >= 0)
    throw StructuralError("cellular basis is not free at level " + std::to_string(cfg.n));
  nlohmann::json j = F.datum_json(datum);
  if (cfg.format == "text") {
    std::string s = cfg.algebra + " level " + std::to_string(cfg.n) + ": " + std::to_string(datum.elements.size()) +
                    " elements, dimension " + std::to_string(F.spec().dim(cfg.n)) + "\n";
    for (const auto& v : j["vertices"]) s += "  " + v["label"].get<std::string>() + " paths " + std::to_string(v["paths"].size()) + "\n";
    emit(cfg, s, out);
  } else {
    emit(cfg, j.dump(2) + "\n", out);
  }
  return kExitPass;
}

struct CheckResult {
  std::string name;
  bool pass = true;
  nlohmann::json details;
};

std::vector<CheckResult> run_tasks(std::vector<std::function<CheckResult()>> tasks, int jobs) {
  std::vector<CheckResult> results(tasks.size());
  jobs = std::max(1, jobs);
  for (std::size_t start = 0; start < tasks.size(); start += jobs) {
    std::vector<std::future<CheckResult>> batch;
    for (std::size_t k = start; k < std::min(tasks.size(), start + jobs); ++k)
      batch.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, tasks[k]));
    for (std::size_t k = 0; k < batch.size(); ++k) results[start + k] = batch[k].get();
  }
  return results;
}

nlohmann::json sweep_json(const SweepReport& r) {
  return {{"checked", r.checked}, {"failed", r.failed}, {"failures", r.failures}};
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  check_level(cfg, cfg.n);
  if (cfg.n < 1) throw UsageError("verify needs level at least 1");
  auto tower = make_tower(cfg.algebra);
  auto F = std::make_shared<Framework>(tower);
  bool any = cfg.cell || cfg.axioms || cfg.filtrations || cfg.branching || cfg.relations;
  bool cell = cfg.all || cfg.cell || !any;
  bool axioms = (cfg.all && tower->has_idempotents()) || cfg.axioms;
  bool filtrations = cfg.all || cfg.filtrations;
  bool branching = cfg.all || cfg.branching;
  bool relations = (cfg.all && cfg.algebra == "bmw") || cfg.relations;
  if (cfg.axioms && !tower->has_idempotents()) throw UsageError("the hecke tower has no idempotents");
  if (cfg.relations && cfg.algebra != "bmw") throw UsageError("the relation sweep is defined for bmw");
  if (cfg.corrupt >= 0 && !cell) throw UsageError("--corrupt applies to the cell datum check");

  // Bases are built up front so that parallel checks only read caches.
  for (int k = 0; k <= cfg.n; ++k) F->cellular_basis(k);

  std::vector<std::function<CheckResult()>> tasks;
  if (cell) {
    for (int k = 1; k <= cfg.n; ++k)
      tasks.push_back([F, k, &cfg]() {
        CellDatum d = F->cellular_basis(k);
        CheckResult r{"cell_datum level " + std::to_string(k), true, {}};
        if (k == cfg.n && cfg.corrupt >= 0) {
          if (cfg.corrupt >= static_cast<int>(d.elements.size())) throw UsageError("--corrupt index out of range");
          axpy(d.elements[cfg.corrupt], LaurentPoly(1), F->spec().one(k));
          r.details["corrupted_element"] = cfg.corrupt;
        }
        CellDatumReport rep = F->verify_cell_datum(d);
        r.pass = rep.ok() && static_cast<int>(d.elements.size()) == F->spec().dim(k);
        r.details["report"] = rep.to_json();
        r.details["size"] = d.elements.size();
        r.details["dimension"] = F->spec().dim(k);
        return r;
      });
  }
  if (branching) {
    tasks.push_back([F, &cfg]() {
      CheckResult r{"branching agreement", true, {}};
      const BranchingDiagram& A = F->diagram(cfg.n);
      int edges = 0;
      nlohmann::json bad = nlohmann::json::array();
      for (int level = 1; level <= cfg.n; ++level)
        for (int a = 0; a < static_cast<int>(A.level(level - 1).size()); ++a)
          for (int b : A.successors(level - 1, a))
            for (Coefficient kind : {Coefficient::D, Coefficient::U}) {
              const Vertex& from = A.level(level - 1)[a];
              const Vertex& to = A.level(level)[b];
              ++edges;
              if (!F->spec().equal(F->branching_closed_form(level, from, to, kind).value,
                                   F->branching_recursive(level, from, to, kind).value)) {
                r.pass = false;
                bad.push_back(std::string(kind == Coefficient::D ? "d " : "u ") + from.str() + " -> " + to.str() +
                              " at level " + std::to_string(level));
              }
            }
      r.details = {{"coefficients", edges}, {"mismatches", bad}};
      return r;
    });
  }
  if (axioms) {
    for (int k = 1; k <= cfg.n && k + 1 <= tower->max_level(); ++k)
      tasks.push_back([F, k]() {
        AxiomReport rep = F->verify_framework_axioms(k);
        return CheckResult{"axioms level " + std::to_string(k), rep.ok(), rep.to_json()};
      });
  }
  if (filtrations) {
    for (int k = 1; k <= cfg.n; ++k)
      tasks.push_back([F, k]() {
        CheckResult r{"restriction filtrations level " + std::to_string(k), true, {}};
        nlohmann::json reps = nlohmann::json::array();
        for (const Vertex& v : F->diagram(k).level(k)) {
          FiltrationReportA rep = F->restriction_filtration(v, k);
          r.pass = r.pass && rep.ok();
          reps.push_back(rep.to_json());
        }
        r.details = reps;
        return r;
      });
  }
  if (relations) {
    int n = std::max(cfg.n, 2);
    if (n > bmw_max_rank()) throw UsageError("relation sweep rank exceeds the BMW bound");
    tasks.push_back([n]() {
      SweepReport rep = bmw_relation_sweep(n);
      return CheckResult{"bmw relations rank " + std::to_string(n), rep.ok(), sweep_json(rep)};
    });
    tasks.push_back([n]() {
      SweepReport rep = bmw_associativity_sweep(n);
      return CheckResult{"bmw associativity rank " + std::to_string(n), rep.ok(), sweep_json(rep)};
    });
    tasks.push_back([n]() {
      SweepReport rep = bmw_specialisation_sweep(n, 100, 17);
      return CheckResult{"bmw specialisation rank " + std::to_string(n), rep.ok(), sweep_json(rep)};
    });
  }

  std::vector<CheckResult> results = run_tasks(tasks, cfg.jobs);
  bool ok = true;
  nlohmann::json checks = nlohmann::json::array();
  std::string text;
  for (const auto& r : results) {
    ok = ok && r.pass;
    checks.push_back({{"name", r.name}, {"status", r.pass ? "pass" : "fail"}, {"details", r.details}});
    text += std::string(r.pass ? "PASS " : "FAIL ") + r.name + "\n";
  }
  nlohmann::json j{{"algebra", cfg.algebra}, {"n", cfg.n}, {"checks", checks}, {"ok", ok}};
  emit(cfg, cfg.format == "text" ? text : j.dump(2) + "\n", out);
  return ok ? kExitPass : kExitFail;
}

int cmd_dims(const Config& cfg, std::ostream& out) {
  auto tower = make_tower(cfg.algebra);
  if (cfg.from < 0 || cfg.from > cfg.n) throw UsageError("--from must lie in 0..n");
  if (cfg.n > tower->max_level())
    throw UsageError("level " + std::to_string(cfg.n) + " exceeds the bound " + std::to_string(tower->max_level()));
  Framework F(tower);
  bool agree = true;
  nlohmann::json rows = nlohmann::json::array();
  std::string text = "level  dimension  paths_squared\n";
  for (int k = cfg.from; k <= cfg.n; ++k) {
    std::int64_t dim = tower->dim(k), sq = F.path_square_sum(k);
    agree = agree && dim == sq;
    rows.push_back({{"level", k}, {"dimension", dim}, {"paths_squared", sq}});
    text += std::to_string(k) + "  " + std::to_string(dim) + "  " + std::to_string(sq) + "\n";
  }
  nlohmann::json j{{"algebra", cfg.algebra}, {"rows", rows}, {"agree", agree}};
  emit(cfg, cfg.format == "text" ? text : j.dump(2) + "\n", out);
  return agree ? kExitPass : kExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Cellular bases of towers of algebras", "cellular-towers"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key = value file; flags override it");
  app.add_option("--algebra", cfg.algebra, "hecke, brauer, bmw, tl or partition")
      ->check(CLI::IsMember({"hecke", "brauer", "bmw", "tl", "partition"}));
  app.add_option("--n,--level", cfg.n, "Level; partition levels count half steps");
  app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", cfg.out, "Write the result to a file");
  app.add_option("--jobs", cfg.jobs, "Parallel verification tasks")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen-basis", "Cellular basis as JSON");
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_flag("--all", cfg.all, "Every suite that applies (Brauer n=3: about a second)");
  verify->add_flag("--cell", cfg.cell, "Cell datum axioms");
  verify->add_flag("--axioms", cfg.axioms, "Tower axioms by rank certificates");
  verify->add_flag("--filtrations", cfg.filtrations, "Restriction filtrations of cell modules");
  verify->add_flag("--branching", cfg.branching, "Closed-form against recursive branching coefficients");
  verify->add_flag("--relations", cfg.relations, "BMW relations, associativity and specialisation");
  verify->add_option("--corrupt", cfg.corrupt, "Perturb one basis element at the top level (negative control)");
  auto* dims = app.add_subcommand("dims", "Dimensions against squared path counts");
  dims->add_option("--from", cfg.from, "First level of the table");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  try {
    if (gen->parsed()) return cmd_gen_basis(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (dims->parsed()) return cmd_dims(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DivisionError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace ctow
