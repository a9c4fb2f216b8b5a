#include <sstream>

#include "sopfault/diagnosing_tree.hpp"

namespace sopfault {

namespace {

std::string leaf_label(std::size_t column) {
  return column == FaultTable::kFaultFreeColumn ? "OK" : std::to_string(column - 1);
}

void ascii_node(const DiagnosingTree& tree, int id, int n, const std::string& indent, std::ostringstream& out) {
  const auto& node = tree.nodes[static_cast<std::size_t>(id)];
  if (node.is_leaf()) {
    out << (node.column == FaultTable::kFaultFreeColumn ? "OK" : "class " + leaf_label(node.column)) << '\n';
    return;
  }
  out << 'T' << node.test << " [" << InputVector(node.test, n).to_string() << "]\n";
  out << indent << "+-0- ";
  ascii_node(tree, node.zero_child, n, indent + "|    ", out);
  out << indent << "+-1- ";
  ascii_node(tree, node.one_child, n, indent + "     ", out);
}

}  // namespace

std::string render_dot(const DiagnosingTree& tree) {
  std::ostringstream out;
  out << "digraph diagnosing_tree {\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& node = tree.nodes[i];
    if (node.is_leaf()) {
      out << "  n" << i << " [label=\"" << leaf_label(node.column) << "\", shape=ellipse];\n";
    } else {
      out << "  n" << i << " [label=\"T" << node.test << "\", shape=box];\n";
    }
  }
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& node = tree.nodes[i];
    if (node.is_leaf()) continue;
    out << "  n" << i << " -> n" << node.zero_child << " [label=\"0\"];\n";
    out << "  n" << i << " -> n" << node.one_child << " [label=\"1\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_ascii(const DiagnosingTree& tree, int n) {
  std::ostringstream out;
  ascii_node(tree, tree.root, n, "", out);
  return out.str();
}

}  // namespace sopfault
