#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "sopfault/diagnosing_tree.hpp"
#include "sopfault/exact_oracle.hpp"
#include "sopfault/fault_model.hpp"
#include "sopfault/fault_table.hpp"
#include "sopfault/sop.hpp"

namespace sopfault {

struct PipelineOptions {
  std::uint64_t row_cap = kDefaultRowCap;
  unsigned jobs = 1;
};

/// Everything from fault enumeration to the deduplicated fault table.
struct FaultAnalysis {
  SopExpr expr;
  std::vector<Fault> faults;
  CollapseResult collapsed;
  FaultDictionary dictionary;
  FaultTable full_table;
  FaultTable table;
};

FaultAnalysis analyze_faults(const SopExpr& expr, const PipelineOptions& options = {});

struct Minimization {
  FaultAnalysis analysis;
  TreeBuild build;
  EssentialTestSet tests;
  MinimizationReport report;
};

/// Complete minimization. The elapsed time covers everything after parsing.
Minimization minimize(const SopExpr& expr, const PipelineOptions& options = {});

struct VerifyResult {
  std::size_t heuristic_size = 0;
  std::size_t oracle_size = 0;
  std::size_t detection_oracle_size = 0;
  std::vector<std::uint64_t> oracle_tests;
  bool heuristic_valid = false;
  bool heuristic_minimal = false;
  bool within_bounds = false;

  long long gap() const { return static_cast<long long>(heuristic_size) - static_cast<long long>(oracle_size); }
  bool ok() const { return heuristic_valid && heuristic_minimal && within_bounds && heuristic_size >= oracle_size; }
};

VerifyResult verify(const Minimization& run, const OracleLimits& limits = {});

/// True iff removing any single test breaks distinguishability.
bool inclusion_minimal(const FaultTable& table, const std::vector<std::uint64_t>& tests);

struct BenchRow {
  std::string circuit;
  int n = 0;
  std::uint64_t a = 0;
  std::size_t faults_raw = 0;
  std::size_t fault_classes = 0;
  std::size_t b = 0;
  double elapsed_seconds = 0.0;
  std::string percentage;
};

/// One row per `.sop` file in `dir`, sorted by file name.
std::vector<BenchRow> bench_directory(const std::filesystem::path& dir, int max_vars,
                                      const PipelineOptions& options = {});

}  // namespace sopfault
