#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sopfault/bit_vector.hpp"
#include "sopfault/fault_model.hpp"
#include "sopfault/fault_table.hpp"
#include "sopfault/sop.hpp"

namespace sopfault {

/// Zero/one counts of one table row over an active column set.
struct RowScore {
  std::size_t zeros = 0;
  std::size_t ones = 0;
  std::size_t diff = 0;
  std::uint64_t product = 0;  // zeros * ones: number of (0,1) column pairs split

  bool splits() const noexcept { return zeros > 0 && ones > 0; }
  friend bool operator==(const RowScore&, const RowScore&) = default;
};

/// `row` is a position in the table, `active` a mask of width num_columns.
RowScore row_score(const FaultTable& table, std::size_t row, const BitVector& active);

/// Splitting row with the smallest |zeros - ones| on `active`, ties to the
/// smallest original test number. Rows flagged in `path_used` are skipped.
/// Throws NoSplittingRow when nothing splits.
std::size_t select_row(const FaultTable& table, const BitVector& active, const std::vector<bool>& path_used);

struct TreeNode {
  static constexpr int kNone = -1;

  /// Internal nodes: table row position and its original test number.
  std::size_t row = 0;
  std::uint64_t test = 0;
  int zero_child = kNone;
  int one_child = kNone;
  /// Leaves: the single remaining table column (0 = fault-free).
  std::size_t column = 0;

  bool is_leaf() const noexcept { return zero_child == kNone; }
};

struct DiagnosingTree {
  std::vector<TreeNode> nodes;
  int root = 0;
  /// Longest root-to-leaf path, counted in tests.
  std::size_t depth = 0;
  /// ceil(log2(m + 1)): fewest levels any binary tree needs for m + 1 leaves.
  std::size_t min_levels = 0;

  std::size_t leaf_count() const;
  /// Follows the edge given by `column`'s bit at each node; returns the leaf.
  int route(const FaultTable& table, std::size_t column) const;
};

struct EssentialTestSet {
  /// Original test numbers in first-use (pre-order) order.
  std::vector<std::uint64_t> selected;
  /// Inclusion-minimal distinguishing subset of selected.
  std::vector<std::uint64_t> final;
};

struct TreeBuild {
  DiagnosingTree tree;
  std::vector<std::uint64_t> selected;
};

/// Recursive balanced-split construction. A test is excluded only below the
/// node that applied it.
TreeBuild build_tree(const FaultTable& table);

/// True iff all columns restricted to the given original tests are pairwise
/// distinct.
bool tests_distinguish(const FaultTable& table, const std::vector<std::uint64_t>& tests);

/// Drops tests in reverse selection order while the rest still distinguish
/// every column pair. Throws NotDistinguishing if `selected` does not.
std::vector<std::uint64_t> eliminate_redundant(const std::vector<std::uint64_t>& selected, const FaultTable& table);

std::size_t min_levels_for(std::size_t class_count);

struct MinimizationReport {
  int n = 0;
  std::uint64_t a = 0;
  std::size_t fault_count_raw = 0;
  std::size_t class_count = 0;
  std::size_t undetectable_count = 0;
  std::size_t b = 0;
  double percentage = 0.0;
  double elapsed_seconds = 0.0;

  /// One decimal, round half up.
  std::string percentage_display() const;
};

MinimizationReport minimization_report(int n, std::size_t fault_count_raw, std::size_t class_count,
                                       std::size_t b, double elapsed_seconds);

/// (a - b) / a * 100 rounded half up to one decimal, computed exactly.
std::string format_percentage(std::uint64_t a, std::uint64_t b);

/// One tree step applied to a physical (possibly faulty) circuit.
struct DiagnosisStep {
  std::uint64_t test = 0;
  InputVector input{0, 0};
  bool expected = false;
  bool observed = false;
  bool detection() const noexcept { return expected != observed; }
};

struct Diagnosis {
  std::vector<DiagnosisStep> steps;
  /// Leaf column reached; 0 means fault-free.
  std::size_t column = 0;
};

/// Walks the tree evaluating the circuit with `injected` applied (or
/// fault-free when empty).
Diagnosis simulate_diagnosis(const SopExpr& expr, const DiagnosingTree& tree, const std::optional<Fault>& injected);

/// Graphviz rendering: internal nodes "T<row>", edges "0"/"1", leaves
/// "OK" or the class id.
std::string render_dot(const DiagnosingTree& tree);
std::string render_ascii(const DiagnosingTree& tree, int n);

}  // namespace sopfault
