#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace sopfault {

inline constexpr int kDefaultMaxVars = 20;

struct Literal {
  int var_index = 0;
  bool complemented = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// One AND gate. Literals are kept sorted by variable index.
struct Term {
  std::vector<Literal> literals;
  int term_index = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A two-level sum-of-products circuit. Variables are single lowercase
/// letters, sorted alphabetically; variable 0 is x1, the most significant bit
/// of a row index.
class SopExpr {
 public:
  SopExpr(std::vector<char> variables, std::vector<Term> terms, std::string source_text);

  int num_vars() const noexcept { return static_cast<int>(variables_.size()); }
  std::size_t num_rows() const noexcept { return std::size_t{1} << variables_.size(); }
  const std::vector<char>& variables() const noexcept { return variables_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const std::string& source_text() const noexcept { return source_text_; }

  /// Total literal occurrences across all terms.
  std::size_t literal_count() const noexcept;

  /// Structural equality; source text is ignored.
  friend bool operator==(const SopExpr& lhs, const SopExpr& rhs) {
    return lhs.variables_ == rhs.variables_ && lhs.terms_ == rhs.terms_;
  }

 private:
  std::vector<char> variables_;
  std::vector<Term> terms_;
  std::string source_text_;
};

/// An n-bit input assignment. x1 is the most significant bit of row_index,
/// so row 0 is all zeros and row 2^n - 1 is all ones.
class InputVector {
 public:
  InputVector(std::uint64_t row_index, int n) : row_(row_index), n_(n) {}

  std::uint64_t row_index() const noexcept { return row_; }
  int size() const noexcept { return n_; }

  /// Value of variable var (0-based; var 0 is x1).
  bool operator[](int var) const noexcept { return (row_ >> (n_ - 1 - var)) & 1u; }

  /// "x1 x2 ... xn" as a string of '0'/'1'.
  std::string to_string() const;

  friend bool operator==(const InputVector&, const InputVector&) = default;

 private:
  std::uint64_t row_;
  int n_;
};

/// expression := term ('+' term)* ; term := factor ('*'|'.')? factor ... ;
/// factor := [a-z] "'"? . Whitespace is ignored.
SopExpr parse(std::string_view text, int max_vars = kDefaultMaxVars);

/// Reads a `.sop` file: '#' lines are comments, remaining lines are joined.
std::string read_sop_file(const std::filesystem::path& path);

/// Canonical text, e.g. "ab' + c". parse(render(e)) == e.
std::string render(const SopExpr& expr);

/// Throws RowOutOfRange unless 0 <= row < 2^n.
InputVector assignment_from_index(std::uint64_t row, int n);

bool evaluate(const SopExpr& expr, const InputVector& v);

inline bool literal_value(const Literal& lit, const InputVector& v) {
  return v[lit.var_index] != lit.complemented;
}

}  // namespace sopfault
