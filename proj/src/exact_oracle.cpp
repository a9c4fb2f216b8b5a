#include "sopfault/exact_oracle.hpp"

#include <algorithm>
#include <optional>

#include "sopfault/error.hpp"

namespace sopfault {

namespace {

using Mask = std::uint64_t;

std::vector<std::size_t> lookup_rows(const FaultTable& table, const std::vector<std::uint64_t>& tests) {
  std::vector<std::size_t> rows;
  for (auto t : tests) {
    const auto it = std::find(table.tests.begin(), table.tests.end(), t);
    if (it == table.tests.end()) {
      throw Error(ErrorCode::InvalidArgument, "test " + std::to_string(t) + " is not a row of the fault table");
    }
    rows.push_back(static_cast<std::size_t>(it - table.tests.begin()));
  }
  return rows;
}

void check_limits(const FaultTable& table, const OracleLimits& limits) {
  const std::size_t row_ceiling = std::min<std::size_t>(limits.max_rows, 64);
  if (table.num_rows() > row_ceiling) {
    throw Error(ErrorCode::LimitExceeded, std::to_string(table.num_rows()) + " rows exceed the oracle limit of " +
                                              std::to_string(row_ceiling));
  }
  if (table.num_columns > limits.max_columns) {
    throw Error(ErrorCode::LimitExceeded, std::to_string(table.num_columns) +
                                              " columns exceed the oracle limit of " +
                                              std::to_string(limits.max_columns));
  }
}

/// Row mask of each column.
std::vector<Mask> column_masks(const FaultTable& table) {
  std::vector<Mask> masks(table.num_columns, 0);
  for (std::size_t r = 0; r < table.num_rows(); ++r) {
    for (std::size_t c = 0; c < table.num_columns; ++c) {
      if (table.bit(r, c)) masks[c] |= Mask{1} << r;
    }
  }
  return masks;
}

/// Enumerates row subsets in increasing size, each size in lexicographic
/// order, and returns the first that hits every requirement mask.
class SubsetSearch {
 public:
  SubsetSearch(std::size_t rows, std::vector<Mask> requirements)
      : rows_(rows), requirements_(std::move(requirements)) {}

  std::optional<std::vector<std::size_t>> first_of_size(std::size_t k) {
    chosen_.clear();
    if (descend(0, k, 0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool hits_all(Mask subset) const {
    for (Mask req : requirements_) {
      if ((req & subset) == 0) return false;
    }
    return true;
  }

  bool descend(std::size_t start, std::size_t remaining, Mask subset) {
    if (remaining == 0) return hits_all(subset);
    for (std::size_t r = start; r + remaining <= rows_; ++r) {
      chosen_.push_back(r);
      if (descend(r + 1, remaining - 1, subset | (Mask{1} << r))) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::size_t rows_;
  std::vector<Mask> requirements_;
  std::vector<std::size_t> chosen_;
};

std::vector<std::uint64_t> smallest_hitting_subset(const FaultTable& table, std::vector<Mask> requirements,
                                                   const OracleLimits& limits, const char* what) {
  for (Mask req : requirements) {
    if (req == 0) throw Error(ErrorCode::Infeasible, std::string("no test set is ") + what);
  }
  SubsetSearch search(table.num_rows(), std::move(requirements));
  const std::size_t largest = std::min(limits.max_subset_size, table.num_rows());
  for (std::size_t k = 0; k <= largest; ++k) {
    if (auto rows = search.first_of_size(k)) {
      std::vector<std::uint64_t> tests;
      for (auto r : *rows) tests.push_back(table.tests[r]);
      std::sort(tests.begin(), tests.end());
      return tests;
    }
  }
  if (largest < table.num_rows()) {
    throw Error(ErrorCode::LimitExceeded, std::string("no ") + what + " set of at most " +
                                              std::to_string(largest) + " tests");
  }
  throw Error(ErrorCode::Infeasible, std::string("no test set is ") + what);
}

}  // namespace

bool is_distinguishing(const FaultTable& table, const std::vector<std::uint64_t>& tests) {
  const auto rows = lookup_rows(table, tests);
  std::vector<BitVector> restricted(table.num_columns, BitVector(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < table.num_columns; ++c) {
      if (table.bit(rows[i], c)) restricted[c].set(i);
    }
  }
  for (std::size_t i = 0; i < restricted.size(); ++i) {
    for (std::size_t j = i + 1; j < restricted.size(); ++j) {
      if (restricted[i] == restricted[j]) return false;
    }
  }
  return true;
}

bool is_detecting(const FaultTable& table, const std::vector<std::uint64_t>& tests) {
  const auto rows = lookup_rows(table, tests);
  for (std::size_t c = 1; c < table.num_columns; ++c) {
    const bool hit = std::any_of(rows.begin(), rows.end(), [&](std::size_t r) { return table.bit(r, c); });
    if (!hit) return false;
  }
  return true;
}

std::vector<std::uint64_t> minimal_distinguishing_set(const FaultTable& table, const OracleLimits& limits) {
  check_limits(table, limits);
  const auto masks = column_masks(table);
  std::vector<Mask> pair_masks;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i + 1; j < masks.size(); ++j) pair_masks.push_back(masks[i] ^ masks[j]);
  }
  return smallest_hitting_subset(table, std::move(pair_masks), limits, "distinguishing");
}

std::vector<std::uint64_t> minimal_detection_set(const FaultTable& table, const OracleLimits& limits) {
  check_limits(table, limits);
  auto masks = column_masks(table);
  masks.erase(masks.begin());  // fault-free column needs no detection
  return smallest_hitting_subset(table, std::move(masks), limits, "detecting");
}

}  // namespace sopfault
