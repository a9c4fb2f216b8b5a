#include "sopfault/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "sopfault/error.hpp"

namespace sopfault {

FaultAnalysis analyze_faults(const SopExpr& expr, const PipelineOptions& options) {
  if (static_cast<std::uint64_t>(expr.num_rows()) > options.row_cap) {
    throw Error(ErrorCode::DimensionOverflow, "2^" + std::to_string(expr.num_vars()) + " rows exceed the cap of " +
                                                  std::to_string(options.row_cap));
  }
  auto faults = enumerate_faults(expr);
  auto collapsed = collapse(expr, faults, options.jobs);
  auto dictionary = build_dictionary(expr, collapsed.classes, options.row_cap);
  auto full_table = detection_matrix(dictionary);
  auto table = dedup(full_table);
  return {expr, std::move(faults), std::move(collapsed), std::move(dictionary), std::move(full_table),
          std::move(table)};
}

Minimization minimize(const SopExpr& expr, const PipelineOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  auto analysis = analyze_faults(expr, options);
  auto build = build_tree(analysis.table);
  EssentialTestSet tests;
  tests.selected = build.selected;
  tests.final = eliminate_redundant(build.selected, analysis.table);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  auto report = minimization_report(expr.num_vars(), analysis.faults.size(), analysis.collapsed.classes.size(),
                                    tests.final.size(), elapsed.count());
  report.undetectable_count = analysis.collapsed.undetectable.faults.size();
  return {std::move(analysis), std::move(build), std::move(tests), report};
}

bool inclusion_minimal(const FaultTable& table, const std::vector<std::uint64_t>& tests) {
  for (std::size_t i = 0; i < tests.size(); ++i) {
    std::vector<std::uint64_t> rest;
    for (std::size_t j = 0; j < tests.size(); ++j) {
      if (j != i) rest.push_back(tests[j]);
    }
    if (is_distinguishing(table, rest)) return false;
  }
  return true;
}

VerifyResult verify(const Minimization& run, const OracleLimits& limits) {
  const auto& table = run.analysis.table;
  VerifyResult v;
  v.heuristic_size = run.tests.final.size();
  v.heuristic_valid = is_distinguishing(table, run.tests.final);
  v.heuristic_minimal = inclusion_minimal(table, run.tests.final);
  const std::size_t m = table.num_classes();
  v.within_bounds = v.heuristic_size >= min_levels_for(m) && v.heuristic_size <= m;
  v.oracle_tests = minimal_distinguishing_set(table, limits);
  v.oracle_size = v.oracle_tests.size();
  v.detection_oracle_size = minimal_detection_set(table, limits).size();
  return v;
}

std::vector<BenchRow> bench_directory(const std::filesystem::path& dir, int max_vars,
                                      const PipelineOptions& options) {
  if (!std::filesystem::is_directory(dir)) throw Error(ErrorCode::Io, dir.string() + " is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".sop") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });

  // Each circuit runs single-threaded; the pool spreads files.
  PipelineOptions per_file = options;
  per_file.jobs = 1;

  std::vector<BenchRow> rows(files.size());
  std::vector<std::exception_ptr> errors(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        const auto expr = parse(read_sop_file(files[i]), max_vars);
        const auto run = minimize(expr, per_file);
        auto& row = rows[i];
        row.circuit = files[i].filename().string();
        row.n = run.report.n;
        row.a = run.report.a;
        row.faults_raw = run.report.fault_count_raw;
        row.fault_classes = run.report.class_count;
        row.b = run.report.b;
        row.elapsed_seconds = run.report.elapsed_seconds;
        row.percentage = format_percentage(row.a, row.b);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    const unsigned workers = std::max(1u, std::min<unsigned>(resolve_jobs(options.jobs),
                                                             static_cast<unsigned>(files.size())));
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const Error& e) {
      throw Error(e.code(), files[i].filename().string() + ": " + e.what());
    }
  }
  return rows;
}

}  // namespace sopfault
