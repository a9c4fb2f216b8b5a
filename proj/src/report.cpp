#include "sopfault/report.hpp"

#include <cstdio>
#include <sstream>

namespace sopfault {

using nlohmann::json;

namespace {

std::string class_label(std::size_t column) {
  return column == FaultTable::kFaultFreeColumn ? "OK" : std::to_string(column - 1);
}

json tests_json(const std::vector<std::uint64_t>& tests, int n) {
  json out = json::array();
  for (auto t : tests) out.push_back({{"test", t}, {"input", InputVector(t, n).to_string()}});
  return out;
}

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

}  // namespace

std::string dictionary_csv(const FaultDictionary& dict) {
  std::string out;
  for (int i = 1; i <= dict.n; ++i) out += "x" + std::to_string(i) + ",";
  out += "z";
  for (std::size_t k = 0; k < dict.num_classes(); ++k) out += ",f" + std::to_string(k);
  out += '\n';
  for (std::uint64_t r = 0; r < dict.num_rows(); ++r) {
    const auto in = dict.input(r);
    for (int i = 0; i < dict.n; ++i) {
      out += in[i] ? '1' : '0';
      out += ',';
    }
    out += dict.z(r) ? '1' : '0';
    for (std::size_t k = 0; k < dict.num_classes(); ++k) {
      out += ',';
      out += dict.output(r, k) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

json dictionary_json(const FaultAnalysis& analysis) {
  const auto& dict = analysis.dictionary;
  json rows = json::array();
  for (std::uint64_t r = 0; r < dict.num_rows(); ++r) {
    std::string faulty;
    for (std::size_t k = 0; k < dict.num_classes(); ++k) faulty += dict.output(r, k) ? '1' : '0';
    rows.push_back({{"row", r}, {"input", dict.input(r).to_string()}, {"z", dict.z(r) ? 1 : 0}, {"faulty", faulty}});
  }
  json groups = json::array();
  const auto& table = analysis.table;
  for (std::size_t i = 0; i < table.num_rows(); ++i) {
    groups.push_back({{"test", table.tests[i]}, {"rows", table.row_groups[i]}});
  }
  return {{"expression", render(analysis.expr)},
          {"n", dict.n},
          {"variables", std::string(analysis.expr.variables().begin(), analysis.expr.variables().end())},
          {"class_count", dict.num_classes()},
          {"rows", std::move(rows)},
          {"row_groups", std::move(groups)},
          {"column_groups", table.column_groups}};
}

json faults_json(const FaultAnalysis& analysis) {
  json classes = json::array();
  for (const auto& cls : analysis.collapsed.classes) {
    json members = json::array();
    for (const auto& f : cls.members) members.push_back({{"fault_id", f.fault_id}, {"site", describe(f)}});
    classes.push_back({{"class_id", cls.class_id},
                       {"representative", describe(cls.representative)},
                       {"members", std::move(members)},
                       {"column", cls.column.to_string()}});
  }
  return classes;
}

std::string faults_text(const FaultAnalysis& analysis) {
  std::ostringstream out;
  out << "expression: " << render(analysis.expr) << '\n';
  out << "faults: " << analysis.faults.size() << ", classes: " << analysis.collapsed.classes.size()
      << ", undetectable: " << analysis.collapsed.undetectable.faults.size() << '\n';
  for (const auto& cls : analysis.collapsed.classes) {
    out << "class " << cls.class_id << ":";
    for (const auto& f : cls.members) out << "  [" << f.fault_id << "] " << describe(f);
    out << '\n';
  }
  if (!analysis.collapsed.undetectable.faults.empty()) {
    out << "undetectable:";
    for (const auto& f : analysis.collapsed.undetectable.faults) out << "  [" << f.fault_id << "] " << describe(f);
    out << '\n';
  }
  return out.str();
}

json minimize_json(const Minimization& run, bool include_timing) {
  const auto& r = run.report;
  const int n = r.n;
  json out = {{"expression", render(run.analysis.expr)},
          {"report",
           {{"n", n},
            {"a", r.a},
            {"fault_count_raw", r.fault_count_raw},
            {"class_count", r.class_count},
            {"undetectable_count", r.undetectable_count},
            {"b", r.b},
            {"percentage", r.percentage},
            {"percentage_display", r.percentage_display()}}},
          {"tree", {{"depth", run.build.tree.depth}, {"min_levels", run.build.tree.min_levels},
                    {"leaves", run.build.tree.leaf_count()}}},
          {"selected", run.tests.selected},
          {"final", tests_json(run.tests.final, n)}};
  if (include_timing) out["report"]["elapsed_seconds"] = r.elapsed_seconds;
  return out;
}

std::string minimize_text(const Minimization& run, bool include_timing) {
  const auto& r = run.report;
  std::ostringstream out;
  out << "expression: " << render(run.analysis.expr) << '\n'
      << "n: " << r.n << '\n'
      << "total tests (a): " << r.a << '\n'
      << "faults: " << r.fault_count_raw << " (" << r.class_count << " classes, " << r.undetectable_count
      << " undetectable)\n"
      << "selected:";
  for (auto t : run.tests.selected) out << ' ' << t;
  out << "\nminimized tests (b): " << r.b << '\n';
  for (auto t : run.tests.final) out << "  T" << t << "  " << InputVector(t, r.n).to_string() << '\n';
  out << "minimization: " << r.percentage_display() << "%\n";
  if (include_timing) out << "elapsed seconds: " << seconds(r.elapsed_seconds) << '\n';
  return out.str();
}

json diagnosis_json(const Minimization& run, const std::optional<Fault>& injected, const Diagnosis& d) {
  json steps = json::array();
  for (const auto& s : d.steps) {
    steps.push_back({{"test", s.test},
                     {"input", s.input.to_string()},
                     {"expected", s.expected ? 1 : 0},
                     {"observed", s.observed ? 1 : 0},
                     {"detection", s.detection() ? 1 : 0}});
  }
  json out = {{"expression", render(run.analysis.expr)},
              {"injected", injected ? json(describe(*injected)) : json("NONE")},
              {"steps", std::move(steps)},
              {"diagnosis", class_label(d.column)}};
  if (injected) out["injected_fault_id"] = injected->fault_id;
  return out;
}

std::string diagnosis_text(const Minimization& run, const std::optional<Fault>& injected, const Diagnosis& d) {
  std::ostringstream out;
  out << "injected: " << (injected ? "[" + std::to_string(injected->fault_id) + "] " + describe(*injected) : "NONE")
      << '\n';
  for (const auto& s : d.steps) {
    out << "T" << s.test << "  " << s.input.to_string() << "  expected " << s.expected << "  observed "
        << s.observed << "  -> " << s.detection() << '\n';
  }
  out << "diagnosis: ";
  if (d.column == FaultTable::kFaultFreeColumn) {
    out << "OK\n";
  } else {
    const auto& cls = run.analysis.collapsed.classes[d.column - 1];
    out << "class " << cls.class_id << " {";
    for (std::size_t i = 0; i < cls.members.size(); ++i) out << (i ? ", " : "") << describe(cls.members[i]);
    out << "}\n";
  }
  return out.str();
}

json verify_json(const VerifyResult& v) {
  return {{"heuristic_size", v.heuristic_size},
          {"oracle_size", v.oracle_size},
          {"gap", v.gap()},
          {"oracle_tests", v.oracle_tests},
          {"detection_oracle_size", v.detection_oracle_size},
          {"heuristic_valid", v.heuristic_valid},
          {"heuristic_minimal", v.heuristic_minimal},
          {"within_bounds", v.within_bounds},
          {"ok", v.ok()}};
}

std::string verify_text(const VerifyResult& v) {
  std::ostringstream out;
  out << std::boolalpha << "heuristic_size: " << v.heuristic_size << '\n'
      << "oracle_size: " << v.oracle_size << '\n'
      << "gap: " << v.gap() << '\n'
      << "detection_oracle_size: " << v.detection_oracle_size << '\n'
      << "heuristic_valid: " << v.heuristic_valid << '\n'
      << "heuristic_minimal: " << v.heuristic_minimal << '\n'
      << "within_bounds: " << v.within_bounds << '\n'
      << "ok: " << v.ok() << '\n';
  return out.str();
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = std::string(kBenchHeader) + "\n";
  for (const auto& r : rows) {
    out += r.circuit + "," + std::to_string(r.n) + "," + std::to_string(r.a) + "," + std::to_string(r.faults_raw) +
           "," + std::to_string(r.fault_classes) + "," + std::to_string(r.b) + "," + seconds(r.elapsed_seconds) +
           "," + r.percentage + "\n";
  }
  return out;
}

}  // namespace sopfault
