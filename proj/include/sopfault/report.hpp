#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sopfault/diagnosing_tree.hpp"
#include "sopfault/pipeline.hpp"

namespace sopfault {

/// Header x1..xn,z,f0..f{m-1}; one line per input vector.
std::string dictionary_csv(const FaultDictionary& dict);
nlohmann::json dictionary_json(const FaultAnalysis& analysis);

nlohmann::json faults_json(const FaultAnalysis& analysis);
std::string faults_text(const FaultAnalysis& analysis);

/// Elapsed time is wall-clock and therefore only emitted on request.
nlohmann::json minimize_json(const Minimization& run, bool include_timing = false);
std::string minimize_text(const Minimization& run, bool include_timing = false);

nlohmann::json diagnosis_json(const Minimization& run, const std::optional<Fault>& injected, const Diagnosis& d);
std::string diagnosis_text(const Minimization& run, const std::optional<Fault>& injected, const Diagnosis& d);

nlohmann::json verify_json(const VerifyResult& v);
std::string verify_text(const VerifyResult& v);

inline constexpr const char* kBenchHeader =
    "circuit,n,a,faults_raw,fault_classes,b,elapsed_seconds,percentage";
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace sopfault
