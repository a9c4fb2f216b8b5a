#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "sopfault/error.hpp"
#include "sopfault/sop.hpp"
#include "test_support.hpp"

namespace sopfault {
namespace {

ErrorCode parse_error(const std::string& text, int max_vars = kDefaultMaxVars) {
  try {
    parse(text, max_vars);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a parse error for \"" << text << "\"";
  return ErrorCode::InternalInconsistency;
}

TEST(Parse, ProductAndSum) {
  const auto e = parse("ab + c");
  EXPECT_EQ(e.num_vars(), 3);
  EXPECT_EQ(e.variables(), (std::vector<char>{'a', 'b', 'c'}));
  ASSERT_EQ(e.terms().size(), 2u);
  EXPECT_EQ(e.terms()[0].literals, (std::vector<Literal>{{0, false}, {1, false}}));
  EXPECT_EQ(e.terms()[1].literals, (std::vector<Literal>{{2, false}}));
  EXPECT_EQ(e.terms()[1].term_index, 1);
}

TEST(Parse, ExplicitOperatorsAndComplements) {
  const auto e = parse("a*b' + c'd");
  EXPECT_EQ(e.num_vars(), 4);
  EXPECT_EQ(e.terms()[0].literals, (std::vector<Literal>{{0, false}, {1, true}}));
  EXPECT_EQ(e.terms()[1].literals, (std::vector<Literal>{{2, true}, {3, false}}));
  EXPECT_EQ(parse("a.b'+c'd"), e);
  EXPECT_EQ(parse("  a * b '  +  c ' d "), e);
}

TEST(Parse, SingleVariableBothPolarities) {
  const auto e = parse("a + a'");
  EXPECT_EQ(e.num_vars(), 1);
  ASSERT_EQ(e.terms().size(), 2u);
  EXPECT_EQ(e.terms()[0].literals, (std::vector<Literal>{{0, false}}));
  EXPECT_EQ(e.terms()[1].literals, (std::vector<Literal>{{0, true}}));
}

TEST(Parse, VariablesSortedAlphabetically) {
  const auto e = parse("zb + a");
  EXPECT_EQ(e.variables(), (std::vector<char>{'a', 'b', 'z'}));
  // Literals within a term follow variable order.
  EXPECT_EQ(e.terms()[0].literals, (std::vector<Literal>{{1, false}, {2, false}}));
}

TEST(Parse, Errors) {
  EXPECT_EQ(parse_error("aa'"), ErrorCode::DuplicateVariableInTerm);
  EXPECT_EQ(parse_error("aa"), ErrorCode::DuplicateVariableInTerm);
  EXPECT_EQ(parse_error("a + + b"), ErrorCode::EmptyTerm);
  EXPECT_EQ(parse_error("+a"), ErrorCode::EmptyTerm);
  EXPECT_EQ(parse_error("a +"), ErrorCode::EmptyTerm);
  EXPECT_EQ(parse_error("a''"), ErrorCode::DoubleComplement);
  EXPECT_EQ(parse_error("A + b"), ErrorCode::InvalidCharacter);
  EXPECT_EQ(parse_error("a & b"), ErrorCode::InvalidCharacter);
  EXPECT_EQ(parse_error("'a"), ErrorCode::InvalidCharacter);
  EXPECT_EQ(parse_error("a* + b"), ErrorCode::InvalidCharacter);
  EXPECT_EQ(parse_error("   "), ErrorCode::EmptyExpression);
  EXPECT_EQ(parse_error(""), ErrorCode::EmptyExpression);
  EXPECT_EQ(parse_error("abc + d", 3), ErrorCode::TooManyVariables);
  EXPECT_NO_THROW(parse("abc + d", 4));
}

TEST(Evaluate, Examples) {
  const auto e = parse("ab + c");
  EXPECT_TRUE(evaluate(e, InputVector(0b110, 3)));
  EXPECT_FALSE(evaluate(e, InputVector(0b000, 3)));
  EXPECT_FALSE(evaluate(parse("a'"), InputVector(1, 1)));
  EXPECT_TRUE(evaluate(parse("a'"), InputVector(0, 1)));
}

TEST(AssignmentFromIndex, MostSignificantBitIsFirstVariable) {
  const auto zero = assignment_from_index(0, 3);
  const auto seven = assignment_from_index(7, 3);
  const auto six = assignment_from_index(6, 3);
  for (int i = 0; i < 3; ++i) {
    EXPECT_FALSE(zero[i]);
    EXPECT_TRUE(seven[i]);
  }
  EXPECT_TRUE(six[0]);
  EXPECT_TRUE(six[1]);
  EXPECT_FALSE(six[2]);
  EXPECT_EQ(six.to_string(), "110");
}

TEST(AssignmentFromIndex, RowOutOfRange) {
  EXPECT_THROW(assignment_from_index(8, 3), Error);
  try {
    assignment_from_index(8, 3);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RowOutOfRange);
  }
}

TEST(AssignmentFromIndex, Bijection) {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> seen;
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); ++r) {
      const auto v = assignment_from_index(r, n);
      std::uint64_t back = 0;
      for (int i = 0; i < n; ++i) back = (back << 1) | (v[i] ? 1u : 0u);
      EXPECT_EQ(back, r);
      seen.insert(v.to_string());
    }
    EXPECT_EQ(seen.size(), std::size_t{1} << n);
  }
}

TEST(Properties, RenderRoundTrip) {
  for (const auto& text : testing::random_expressions(11, 300, 8, 6, 5)) {
    const auto e = parse(text);
    const auto again = parse(render(e));
    EXPECT_EQ(again, e) << text;
    EXPECT_EQ(render(again), render(e));
  }
}

TEST(Properties, EvaluateMatchesNaiveTruthTable) {
  for (const auto& text : testing::random_expressions(5, 200, 8, 6, 5)) {
    const auto e = parse(text);
    for (std::uint64_t r = 0; r < e.num_rows(); ++r) {
      ASSERT_EQ(evaluate(e, assignment_from_index(r, e.num_vars())), testing::naive_evaluate(text, r))
          << text << " row " << r;
    }
  }
}

TEST(SopFile, CommentsAndLines) {
  const auto path = std::filesystem::temp_directory_path() / "sopfault_sop_test.sop";
  {
    std::ofstream out(path);
    out << "# comment\n  # indented comment\nab +\r\n c'";
  }
  EXPECT_EQ(parse(read_sop_file(path)), parse("ab + c'"));
  std::filesystem::remove(path);
  EXPECT_THROW(read_sop_file(path), Error);
}

}  // namespace
}  // namespace sopfault
