#include "sopfault/sop.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "sopfault/error.hpp"

namespace sopfault {

SopExpr::SopExpr(std::vector<char> variables, std::vector<Term> terms, std::string source_text)
    : variables_(std::move(variables)), terms_(std::move(terms)), source_text_(std::move(source_text)) {}

std::size_t SopExpr::literal_count() const noexcept {
  std::size_t total = 0;
  for (const auto& t : terms_) total += t.literals.size();
  return total;
}

std::string InputVector::to_string() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) {
    if ((*this)[i]) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

namespace {

struct RawLiteral {
  char name;
  bool complemented;
};

std::string position(std::size_t pos) { return " at offset " + std::to_string(pos); }

}  // namespace

SopExpr parse(std::string_view text, int max_vars) {
  std::vector<std::vector<RawLiteral>> raw_terms(1);
  // Set when the last token was a product operator that still needs a factor.
  bool pending_operand = false;
  bool saw_content = false;

  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    saw_content = true;
    auto& term = raw_terms.back();

    if (ch >= 'a' && ch <= 'z') {
      term.push_back({ch, false});
      pending_operand = false;
    } else if (ch == '\'') {
      if (term.empty() || pending_operand) {
        throw Error(ErrorCode::InvalidCharacter, "complement without a variable" + position(pos));
      }
      if (term.back().complemented) {
        throw Error(ErrorCode::DoubleComplement, "variable '" + std::string(1, term.back().name) +
                                                     "' complemented twice" + position(pos));
      }
      term.back().complemented = true;
    } else if (ch == '*' || ch == '.') {
      if (term.empty() || pending_operand) {
        throw Error(ErrorCode::InvalidCharacter,
                    std::string("product operator '") + ch + "' without left operand" + position(pos));
      }
      pending_operand = true;
    } else if (ch == '+') {
      if (pending_operand) {
        throw Error(ErrorCode::InvalidCharacter, "product operator without right operand" + position(pos));
      }
      if (term.empty()) throw Error(ErrorCode::EmptyTerm, "empty product term" + position(pos));
      raw_terms.emplace_back();
    } else {
      throw Error(ErrorCode::InvalidCharacter, std::string("unexpected character '") + ch + "'" + position(pos));
    }
  }

  if (!saw_content) throw Error(ErrorCode::EmptyExpression, "expression is empty");
  if (pending_operand) {
    throw Error(ErrorCode::InvalidCharacter, "product operator without right operand at end of input");
  }
  if (raw_terms.back().empty()) throw Error(ErrorCode::EmptyTerm, "empty product term at end of input");

  std::set<char> names;
  for (const auto& term : raw_terms) {
    for (const auto& lit : term) names.insert(lit.name);
  }
  if (static_cast<int>(names.size()) > max_vars) {
    throw Error(ErrorCode::TooManyVariables, std::to_string(names.size()) + " variables exceed the limit of " +
                                                 std::to_string(max_vars));
  }
  std::vector<char> variables(names.begin(), names.end());

  std::vector<Term> terms;
  terms.reserve(raw_terms.size());
  for (std::size_t t = 0; t < raw_terms.size(); ++t) {
    Term term;
    term.term_index = static_cast<int>(t);
    for (const auto& lit : raw_terms[t]) {
      const auto it = std::lower_bound(variables.begin(), variables.end(), lit.name);
      term.literals.push_back({static_cast<int>(it - variables.begin()), lit.complemented});
    }
    std::sort(term.literals.begin(), term.literals.end(),
              [](const Literal& a, const Literal& b) { return a.var_index < b.var_index; });
    for (std::size_t i = 1; i < term.literals.size(); ++i) {
      if (term.literals[i].var_index == term.literals[i - 1].var_index) {
        throw Error(ErrorCode::DuplicateVariableInTerm,
                    "variable '" + std::string(1, variables[static_cast<std::size_t>(term.literals[i].var_index)]) +
                        "' appears twice in term " + std::to_string(t));
      }
    }
    terms.push_back(std::move(term));
  }

  return SopExpr(std::move(variables), std::move(terms), std::string(text));
}

std::string read_sop_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::string line;
  std::string joined;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!joined.empty()) joined += ' ';
    joined += line;
  }
  return joined;
}

std::string render(const SopExpr& expr) {
  std::ostringstream out;
  for (const auto& term : expr.terms()) {
    if (term.term_index > 0) out << " + ";
    for (const auto& lit : term.literals) {
      out << expr.variables()[static_cast<std::size_t>(lit.var_index)];
      if (lit.complemented) out << '\'';
    }
  }
  return out.str();
}

InputVector assignment_from_index(std::uint64_t row, int n) {
  if (n < 0 || n > 63 || row >= (std::uint64_t{1} << n)) {
    throw Error(ErrorCode::RowOutOfRange,
                "row " + std::to_string(row) + " outside [0, 2^" + std::to_string(n) + ")");
  }
  return InputVector(row, n);
}

bool evaluate(const SopExpr& expr, const InputVector& v) {
  for (const auto& term : expr.terms()) {
    const bool product = std::all_of(term.literals.begin(), term.literals.end(),
                                     [&](const Literal& lit) { return literal_value(lit, v); });
    if (product) return true;
  }
  return false;
}

}  // namespace sopfault
