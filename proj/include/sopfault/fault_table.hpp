#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sopfault/bit_vector.hpp"
#include "sopfault/fault_model.hpp"
#include "sopfault/sop.hpp"

namespace sopfault {

inline constexpr std::uint64_t kDefaultRowCap = std::uint64_t{1} << 20;

/// Fault-free output z and one output column per fault class over every
/// input vector, in class_id order.
struct FaultDictionary {
  int n = 0;
  BitVector fault_free;
  std::vector<BitVector> class_columns;

  std::uint64_t num_rows() const noexcept { return std::uint64_t{1} << n; }
  std::size_t num_classes() const noexcept { return class_columns.size(); }
  InputVector input(std::uint64_t row) const { return InputVector(row, n); }
  bool z(std::uint64_t row) const noexcept { return fault_free.test(row); }
  bool output(std::uint64_t row, std::size_t cls) const noexcept { return class_columns[cls].test(row); }
};

/// Detection-bit matrix: D[t][k] = z(t) xor z^k(t). Column 0 is the
/// fault-free column (always 0); class k lives in column k + 1.
struct FaultTable {
  /// Original row number of each stored row.
  std::vector<std::uint64_t> tests;
  /// One bit vector of width num_columns per stored row.
  std::vector<BitVector> rows;
  std::size_t num_columns = 1;
  /// Original rows merged into each stored row, sorted, including itself.
  std::vector<std::vector<std::uint64_t>> row_groups;
  /// Column merges found after collapse. Always empty for a sound collapse.
  std::vector<std::vector<std::size_t>> column_groups;

  std::size_t num_rows() const noexcept { return rows.size(); }
  std::size_t num_classes() const noexcept { return num_columns - 1; }
  bool bit(std::size_t row, std::size_t column) const noexcept { return rows[row].test(column); }

  static constexpr std::size_t kFaultFreeColumn = 0;
  static std::size_t column_of_class(int class_id) { return static_cast<std::size_t>(class_id) + 1; }

  friend bool operator==(const FaultTable&, const FaultTable&) = default;
};

/// Throws DimensionOverflow when 2^n exceeds row_cap.
FaultDictionary build_dictionary(const SopExpr& expr, const std::vector<FaultClass>& classes,
                                 std::uint64_t row_cap = kDefaultRowCap);

/// Full 2^n-row table, one singleton row group per row.
FaultTable detection_matrix(const FaultDictionary& dict);

/// Merges rows with identical detection patterns into the smallest original
/// row index. Throws InternalInconsistency if two columns coincide.
FaultTable dedup(const FaultTable& table);

/// Column `column` restricted to the stored rows.
BitVector table_column(const FaultTable& table, std::size_t column);

}  // namespace sopfault
