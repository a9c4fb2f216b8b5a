#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sopfault/fault_table.hpp"

namespace sopfault {

/// Brute-force ground truth. Only usable on desk-sized tables.
struct OracleLimits {
  std::size_t max_rows = 24;  // hard ceiling of 64
  std::size_t max_columns = 16;
  std::size_t max_subset_size = 12;
};

/// All columns (fault-free included) pairwise distinct when restricted to
/// the given original test numbers.
bool is_distinguishing(const FaultTable& table, const std::vector<std::uint64_t>& tests);

/// Every class column has a 1 in at least one given test.
bool is_detecting(const FaultTable& table, const std::vector<std::uint64_t>& tests);

/// Smallest distinguishing test set; lexicographically smallest among ties.
/// Throws LimitExceeded or Infeasible.
std::vector<std::uint64_t> minimal_distinguishing_set(const FaultTable& table, const OracleLimits& limits = {});

/// Smallest detecting test set (exact set cover), same tie-break.
std::vector<std::uint64_t> minimal_detection_set(const FaultTable& table, const OracleLimits& limits = {});

}  // namespace sopfault
