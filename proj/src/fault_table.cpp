#include "sopfault/fault_table.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "sopfault/error.hpp"

namespace sopfault {

FaultDictionary build_dictionary(const SopExpr& expr, const std::vector<FaultClass>& classes,
                                 std::uint64_t row_cap) {
  if (static_cast<std::uint64_t>(expr.num_rows()) > row_cap) {
    throw Error(ErrorCode::DimensionOverflow, "2^" + std::to_string(expr.num_vars()) + " rows exceed the cap of " +
                                                  std::to_string(row_cap));
  }
  FaultDictionary dict;
  dict.n = expr.num_vars();
  dict.fault_free = fault_free_column(expr);
  dict.class_columns.reserve(classes.size());
  for (const auto& cls : classes) dict.class_columns.push_back(cls.column);
  return dict;
}

FaultTable detection_matrix(const FaultDictionary& dict) {
  FaultTable table;
  const std::uint64_t rows = dict.num_rows();
  table.num_columns = dict.num_classes() + 1;

  // Transposing column-major dictionary to row-major detection rows.
  std::vector<BitVector> detection;
  detection.reserve(dict.num_classes());
  for (const auto& col : dict.class_columns) detection.push_back(col ^ dict.fault_free);

  table.tests.resize(rows);
  table.rows.assign(rows, BitVector(table.num_columns));
  table.row_groups.resize(rows);
  for (std::uint64_t r = 0; r < rows; ++r) {
    table.tests[r] = r;
    table.row_groups[r] = {r};
    auto& row = table.rows[r];
    for (std::size_t k = 0; k < detection.size(); ++k) {
      if (detection[k].test(r)) row.set(k + 1);
    }
  }
  return table;
}

FaultTable dedup(const FaultTable& table) {
  // Pattern -> index into `groups`.
  std::unordered_map<BitVector, std::size_t> by_pattern;
  struct Group {
    std::size_t source_row;  // row holding the smallest original index
    std::vector<std::uint64_t> members;
  };
  std::vector<Group> groups;

  for (std::size_t r = 0; r < table.num_rows(); ++r) {
    auto [it, inserted] = by_pattern.try_emplace(table.rows[r], groups.size());
    if (inserted) {
      groups.push_back({r, {}});
    } else if (table.tests[r] < table.tests[groups[it->second].source_row]) {
      groups[it->second].source_row = r;
    }
    auto& members = groups[it->second].members;
    members.insert(members.end(), table.row_groups[r].begin(), table.row_groups[r].end());
  }

  std::sort(groups.begin(), groups.end(), [&](const Group& a, const Group& b) {
    return table.tests[a.source_row] < table.tests[b.source_row];
  });

  FaultTable out;
  out.num_columns = table.num_columns;
  out.column_groups = table.column_groups;
  for (auto& g : groups) {
    std::sort(g.members.begin(), g.members.end());
    out.tests.push_back(table.tests[g.source_row]);
    out.rows.push_back(table.rows[g.source_row]);
    out.row_groups.push_back(std::move(g.members));
  }

  std::map<BitVector, std::size_t> seen;
  for (std::size_t c = 0; c < out.num_columns; ++c) {
    auto [it, inserted] = seen.try_emplace(table_column(out, c), c);
    if (!inserted) {
      throw Error(ErrorCode::InternalInconsistency, "columns " + std::to_string(it->second) + " and " +
                                                        std::to_string(c) + " are identical after collapse");
    }
  }
  return out;
}

BitVector table_column(const FaultTable& table, std::size_t column) {
  BitVector col(table.num_rows());
  for (std::size_t r = 0; r < table.num_rows(); ++r) {
    if (table.rows[r].test(column)) col.set(r);
  }
  return col;
}

}  // namespace sopfault
