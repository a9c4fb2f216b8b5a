// sopfault: stuck-at fault dictionaries and diagnostic test minimization for
// two-level sum-of-products circuits.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "sopfault/error.hpp"
#include "sopfault/generator.hpp"
#include "sopfault/pipeline.hpp"
#include "sopfault/report.hpp"

namespace {

using namespace sopfault;

struct RunConfig {
  std::string expression;
  std::string file;
  std::string format;
  std::string output;
  int max_vars = kDefaultMaxVars;
  unsigned jobs = 1;
  bool timing = false;
  std::string fault = "NONE";
  OracleLimits limits;
  GeneratorParams gen;
  std::string bench_dir;
};

class Failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SopExpr load_expression(const RunConfig& cfg) {
  if (!cfg.file.empty() && !cfg.expression.empty()) {
    throw Error(ErrorCode::InvalidArgument, "give either an inline expression or --file, not both");
  }
  if (!cfg.file.empty()) return parse(read_sop_file(cfg.file), cfg.max_vars);
  if (cfg.expression.empty()) throw Error(ErrorCode::InvalidArgument, "no expression given");
  return parse(cfg.expression, cfg.max_vars);
}

PipelineOptions pipeline_options(const RunConfig& cfg) {
  PipelineOptions opts;
  opts.row_cap = std::uint64_t{1} << std::min(cfg.max_vars, 40);
  opts.jobs = cfg.jobs;
  return opts;
}

std::string resolve_format(const RunConfig& cfg, std::initializer_list<std::string> allowed) {
  if (cfg.format.empty()) return *allowed.begin();
  if (std::find(allowed.begin(), allowed.end(), cfg.format) == allowed.end()) {
    std::string list;
    for (const auto& f : allowed) list += (list.empty() ? "" : "|") + f;
    throw Error(ErrorCode::InvalidArgument, "format '" + cfg.format + "' not supported here (" + list + ")");
  }
  return cfg.format;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + cfg.output);
  out << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void cmd_dict(const RunConfig& cfg) {
  const auto format = resolve_format(cfg, {"csv", "json"});
  const auto analysis = analyze_faults(load_expression(cfg), pipeline_options(cfg));
  emit(cfg, format == "csv" ? dictionary_csv(analysis.dictionary) : dump(dictionary_json(analysis)));
}

void cmd_faults(const RunConfig& cfg) {
  const auto format = resolve_format(cfg, {"json", "text"});
  const auto analysis = analyze_faults(load_expression(cfg), pipeline_options(cfg));
  emit(cfg, format == "json" ? dump(faults_json(analysis)) : faults_text(analysis));
}

void cmd_minimize(const RunConfig& cfg) {
  const auto format = resolve_format(cfg, {"json", "text"});
  const auto run = minimize(load_expression(cfg), pipeline_options(cfg));
  emit(cfg, format == "json" ? dump(minimize_json(run, cfg.timing)) : minimize_text(run, cfg.timing));
}

void cmd_tree(const RunConfig& cfg) {
  const auto format = resolve_format(cfg, {"dot", "text"});
  const auto run = minimize(load_expression(cfg), pipeline_options(cfg));
  emit(cfg, format == "dot" ? render_dot(run.build.tree) : render_ascii(run.build.tree, run.report.n));
}

void cmd_simulate(const RunConfig& cfg) {
  const auto format = resolve_format(cfg, {"text", "json"});
  const auto run = minimize(load_expression(cfg), pipeline_options(cfg));

  std::optional<Fault> injected;
  if (cfg.fault != "NONE") {
    std::size_t consumed = 0;
    long long id = -1;
    try {
      id = std::stoll(cfg.fault, &consumed);
    } catch (const std::exception&) {
      consumed = 0;
    }
    if (consumed != cfg.fault.size() || id < 0 || static_cast<std::size_t>(id) >= run.analysis.faults.size()) {
      throw Error(ErrorCode::UnknownFaultId, "'" + cfg.fault + "' is not a fault id in [0, " +
                                                 std::to_string(run.analysis.faults.size()) + ") or NONE");
    }
    injected = run.analysis.faults[static_cast<std::size_t>(id)];
  }

  const auto diagnosis = simulate_diagnosis(run.analysis.expr, run.build.tree, injected);
  emit(cfg, format == "json" ? dump(diagnosis_json(run, injected, diagnosis))
                             : diagnosis_text(run, injected, diagnosis));

  // The leaf must name the injected fault's class (OK when it cannot be seen).
  bool consistent = true;
  if (!injected) {
    consistent = diagnosis.column == FaultTable::kFaultFreeColumn;
  } else if (diagnosis.column == FaultTable::kFaultFreeColumn) {
    const auto& und = run.analysis.collapsed.undetectable.faults;
    consistent = std::find(und.begin(), und.end(), *injected) != und.end();
  } else {
    const auto& members = run.analysis.collapsed.classes[diagnosis.column - 1].members;
    consistent = std::find(members.begin(), members.end(), *injected) != members.end();
  }
  if (!consistent) throw Failure("diagnosis does not match the injected fault");
}

void cmd_verify(const RunConfig& cfg) {
  const auto format = resolve_format(cfg, {"text", "json"});
  const auto run = minimize(load_expression(cfg), pipeline_options(cfg));
  const auto result = verify(run, cfg.limits);
  emit(cfg, format == "json" ? dump(verify_json(result)) : verify_text(result));
  if (!result.ok()) throw Failure("heuristic result failed verification");
}

void cmd_gen(const RunConfig& cfg) {
  resolve_format(cfg, {"text"});
  if (cfg.gen.vars > cfg.max_vars) {
    throw Error(ErrorCode::TooManyVariables, "--vars exceeds --max-vars");
  }
  const auto text = generate_expression(cfg.gen);
  emit(cfg, "# seed=" + std::to_string(cfg.gen.seed) + " vars=" + std::to_string(cfg.gen.vars) +
                " terms=" + std::to_string(cfg.gen.terms) + " literals=" + std::to_string(cfg.gen.min_literals) +
                ".." + std::to_string(cfg.gen.max_literals) + "\n" + text + "\n");
}

void cmd_bench(const RunConfig& cfg) {
  resolve_format(cfg, {"csv"});
  emit(cfg, bench_csv(bench_directory(cfg.bench_dir, cfg.max_vars, pipeline_options(cfg))));
}

void add_input(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("expression", cfg.expression, "Inline sum-of-products expression, e.g. \"ab + c'\"");
  sub->add_option("-f,--file", cfg.file, "Read the expression from a .sop file")->check(CLI::ExistingFile);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Stuck-at fault dictionaries and diagnosing-tree test minimization for SOP circuits"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--format", cfg.format, "Output format: csv|json|text|dot (per subcommand)");
  app.add_option("--max-vars", cfg.max_vars, "Variable cap; 2^max-vars is also the dictionary row cap")
      ->envname("SOPFAULT_MAX_VARS")
      ->check(CLI::Range(1, 26));
  app.add_option("-o,--output", cfg.output, "Write output to a file instead of stdout");
  app.add_option("-j,--jobs", cfg.jobs, "Worker threads (0 = hardware concurrency); output is unaffected");

  auto* dict = app.add_subcommand("dict", "Fault dictionary: x1..xn, z and one output column per fault class");
  add_input(dict, cfg);
  dict->callback([&] { cmd_dict(cfg); });

  auto* faults = app.add_subcommand("faults", "Enumerated stuck-at faults grouped into equivalence classes");
  add_input(faults, cfg);
  faults->callback([&] { cmd_faults(cfg); });

  auto* minimize_cmd = app.add_subcommand("minimize", "Minimized diagnostic test set and statistics");
  add_input(minimize_cmd, cfg);
  minimize_cmd->add_flag("--timing", cfg.timing, "Include wall-clock time of the pipeline");
  minimize_cmd->callback([&] { cmd_minimize(cfg); });

  auto* tree = app.add_subcommand("tree", "Diagnosing tree as Graphviz DOT or ASCII");
  add_input(tree, cfg);
  tree->callback([&] { cmd_tree(cfg); });

  auto* simulate = app.add_subcommand("simulate", "Inject a fault and walk the diagnosing tree");
  add_input(simulate, cfg);
  simulate->add_option("--fault", cfg.fault, "Fault id from `faults`, or NONE for a fault-free circuit");
  simulate->callback([&] { cmd_simulate(cfg); });

  auto* verify_cmd = app.add_subcommand("verify", "Compare the heuristic test set with the exact optimum");
  add_input(verify_cmd, cfg);
  verify_cmd->add_option("--oracle-max-rows", cfg.limits.max_rows, "Largest deduplicated table searched")
      ->check(CLI::Range(1, 64));
  verify_cmd->add_option("--oracle-max-columns", cfg.limits.max_columns, "Most columns searched");
  verify_cmd->add_option("--oracle-max-subset", cfg.limits.max_subset_size, "Largest subset size tried");
  verify_cmd->callback([&] { cmd_verify(cfg); });

  auto* gen = app.add_subcommand("gen", "Generate a random .sop circuit");
  gen->add_option("--seed", cfg.gen.seed, "Random seed")->required();
  gen->add_option("--vars", cfg.gen.vars, "Variable pool size")->check(CLI::Range(1, 26));
  gen->add_option("--terms", cfg.gen.terms, "Number of product terms")->check(CLI::PositiveNumber);
  gen->add_option("--min-literals", cfg.gen.min_literals, "Fewest literals per term");
  gen->add_option("--max-literals", cfg.gen.max_literals, "Most literals per term");
  gen->callback([&] { cmd_gen(cfg); });

  auto* bench = app.add_subcommand("bench", "Minimize every .sop file in a directory; CSV summary");
  bench->add_option("directory", cfg.bench_dir, "Directory of .sop files")->required();
  bench->callback([&] { cmd_bench(cfg); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const Failure& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
