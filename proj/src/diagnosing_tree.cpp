#include "sopfault/diagnosing_tree.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "sopfault/error.hpp"

namespace sopfault {

RowScore row_score(const FaultTable& table, std::size_t row, const BitVector& active) {
  RowScore s;
  s.ones = table.rows[row].count_and(active);
  s.zeros = active.count() - s.ones;
  s.diff = s.zeros > s.ones ? s.zeros - s.ones : s.ones - s.zeros;
  s.product = static_cast<std::uint64_t>(s.zeros) * s.ones;
  return s;
}

std::size_t select_row(const FaultTable& table, const BitVector& active, const std::vector<bool>& path_used) {
  const std::size_t active_count = active.count();
  std::size_t best = table.num_rows();
  std::size_t best_diff = 0;
  for (std::size_t r = 0; r < table.num_rows(); ++r) {
    if (path_used[r]) continue;
    const std::size_t ones = table.rows[r].count_and(active);
    if (ones == 0 || ones == active_count) continue;
    const std::size_t zeros = active_count - ones;
    const std::size_t diff = zeros > ones ? zeros - ones : ones - zeros;
    if (best == table.num_rows() || diff < best_diff ||
        (diff == best_diff && table.tests[r] < table.tests[best])) {
      best = r;
      best_diff = diff;
    }
  }
  if (best == table.num_rows()) {
    throw Error(ErrorCode::NoSplittingRow,
                "no remaining test splits a set of " + std::to_string(active_count) + " columns");
  }
  return best;
}

std::size_t DiagnosingTree::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const TreeNode& n) { return n.is_leaf(); }));
}

int DiagnosingTree::route(const FaultTable& table, std::size_t column) const {
  int at = root;
  while (!nodes[static_cast<std::size_t>(at)].is_leaf()) {
    const auto& node = nodes[static_cast<std::size_t>(at)];
    at = table.bit(node.row, column) ? node.one_child : node.zero_child;
  }
  return at;
}

namespace {

class TreeBuilder {
 public:
  explicit TreeBuilder(const FaultTable& table)
      : table_(table), path_used_(table.num_rows(), false), used_anywhere_(table.num_rows(), false) {}

  TreeBuild run() {
    TreeBuild out;
    BitVector all(table_.num_columns, true);
    out.tree.root = grow(all, 0, out);
    out.tree.min_levels = min_levels_for(table_.num_classes());
    return out;
  }

 private:
  int grow(const BitVector& active, std::size_t level, TreeBuild& out) {
    const int id = static_cast<int>(out.tree.nodes.size());
    out.tree.nodes.emplace_back();
    if (active.count() == 1) {
      std::size_t column = 0;
      while (!active.test(column)) ++column;
      out.tree.nodes[static_cast<std::size_t>(id)].column = column;
      out.tree.depth = std::max(out.tree.depth, level);
      return id;
    }

    const std::size_t row = select_row(table_, active, path_used_);
    if (!used_anywhere_[row]) {
      used_anywhere_[row] = true;
      out.selected.push_back(table_.tests[row]);
    }
    const BitVector ones = active & table_.rows[row];
    const BitVector zeros = active & ~table_.rows[row];

    path_used_[row] = true;
    const int zero_child = grow(zeros, level + 1, out);
    const int one_child = grow(ones, level + 1, out);
    path_used_[row] = false;

    auto& node = out.tree.nodes[static_cast<std::size_t>(id)];
    node.row = row;
    node.test = table_.tests[row];
    node.zero_child = zero_child;
    node.one_child = one_child;
    return id;
  }

  const FaultTable& table_;
  std::vector<bool> path_used_;
  std::vector<bool> used_anywhere_;
};

std::vector<std::size_t> positions_of(const FaultTable& table, const std::vector<std::uint64_t>& tests) {
  std::vector<std::size_t> out;
  out.reserve(tests.size());
  for (auto t : tests) {
    const auto it = std::lower_bound(table.tests.begin(), table.tests.end(), t);
    if (it == table.tests.end() || *it != t) {
      throw Error(ErrorCode::InvalidArgument, "test " + std::to_string(t) + " is not a row of the fault table");
    }
    out.push_back(static_cast<std::size_t>(it - table.tests.begin()));
  }
  return out;
}

bool positions_distinguish(const FaultTable& table, const std::vector<std::size_t>& rows) {
  std::unordered_set<BitVector> signatures;
  signatures.reserve(table.num_columns);
  for (std::size_t c = 0; c < table.num_columns; ++c) {
    BitVector sig(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (table.rows[rows[i]].test(c)) sig.set(i);
    }
    if (!signatures.insert(std::move(sig)).second) return false;
  }
  return true;
}

}  // namespace

TreeBuild build_tree(const FaultTable& table) { return TreeBuilder(table).run(); }

bool tests_distinguish(const FaultTable& table, const std::vector<std::uint64_t>& tests) {
  return positions_distinguish(table, positions_of(table, tests));
}

std::vector<std::uint64_t> eliminate_redundant(const std::vector<std::uint64_t>& selected, const FaultTable& table) {
  if (!tests_distinguish(table, selected)) {
    throw Error(ErrorCode::NotDistinguishing, "selected tests do not separate every column pair");
  }
  std::vector<std::uint64_t> kept = selected;
  for (std::size_t i = selected.size(); i-- > 0;) {
    std::vector<std::uint64_t> trial;
    trial.reserve(kept.size());
    for (auto t : kept) {
      if (t != selected[i]) trial.push_back(t);
    }
    if (tests_distinguish(table, trial)) kept = std::move(trial);
  }
  return kept;
}

std::size_t min_levels_for(std::size_t class_count) {
  return static_cast<std::size_t>(std::bit_width(class_count));  // ceil(log2(m + 1))
}

std::string format_percentage(std::uint64_t a, std::uint64_t b) {
  using Wide = unsigned __int128;
  // tenths = floor(1000 (a - b) / a + 1/2)
  const Wide tenths = (Wide{2000} * (a - b) + a) / (Wide{2} * a);
  const auto whole = static_cast<std::uint64_t>(tenths / 10);
  const auto frac = static_cast<std::uint64_t>(tenths % 10);
  return std::to_string(whole) + "." + std::to_string(frac);
}

std::string MinimizationReport::percentage_display() const { return format_percentage(a, b); }

MinimizationReport minimization_report(int n, std::size_t fault_count_raw, std::size_t class_count, std::size_t b,
                                       double elapsed_seconds) {
  MinimizationReport r;
  r.n = n;
  r.a = std::uint64_t{1} << n;
  if (b > r.a) throw Error(ErrorCode::InvalidArgument, "b exceeds 2^n");
  r.fault_count_raw = fault_count_raw;
  r.class_count = class_count;
  r.b = b;
  r.percentage = static_cast<double>(r.a - b) / static_cast<double>(r.a) * 100.0;
  r.elapsed_seconds = elapsed_seconds;
  return r;
}

Diagnosis simulate_diagnosis(const SopExpr& expr, const DiagnosingTree& tree, const std::optional<Fault>& injected) {
  Diagnosis out;
  int at = tree.root;
  while (!tree.nodes[static_cast<std::size_t>(at)].is_leaf()) {
    const auto& node = tree.nodes[static_cast<std::size_t>(at)];
    DiagnosisStep step;
    step.test = node.test;
    step.input = assignment_from_index(node.test, expr.num_vars());
    step.expected = evaluate(expr, step.input);
    step.observed = injected ? faulty_evaluate(expr, *injected, step.input) : step.expected;
    at = step.detection() ? node.one_child : node.zero_child;
    out.steps.push_back(step);
  }
  out.column = tree.nodes[static_cast<std::size_t>(at)].column;
  return out;
}

}  // namespace sopfault
