#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "sopfault/error.hpp"
#include "sopfault/exact_oracle.hpp"
#include "sopfault/pipeline.hpp"
#include "test_support.hpp"

namespace sopfault {
namespace {

FaultTable table_from(const std::vector<std::string>& rows) {
  FaultTable t;
  t.num_columns = rows.front().size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    BitVector row(t.num_columns);
    for (std::size_t c = 0; c < rows[r].size(); ++c) row.set(c, rows[r][c] == '1');
    t.rows.push_back(row);
    t.tests.push_back(r);
    t.row_groups.push_back({r});
  }
  return t;
}

ErrorCode error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

TEST(IsDistinguishing, Basics) {
  const auto a = analyze_faults(parse("ab + c"));
  EXPECT_TRUE(is_distinguishing(a.table, a.table.tests));
  EXPECT_FALSE(is_distinguishing(a.table, {}));
  EXPECT_TRUE(is_distinguishing(a.table, {1, 2, 4, 6}));
  EXPECT_FALSE(is_distinguishing(a.table, {1, 2, 4}));
}

TEST(MinimalDistinguishingSet, UnitColumns) {
  const auto t = table_from({"01000", "00100", "00010", "00001"});
  EXPECT_EQ(minimal_distinguishing_set(t), (std::vector<std::uint64_t>{0, 1, 2, 3}));
  EXPECT_EQ(minimal_detection_set(t), (std::vector<std::uint64_t>{0, 1, 2, 3}));
}

TEST(MinimalDistinguishingSet, TwoColumns) {
  const auto t = table_from({"00", "01", "00"});
  EXPECT_EQ(minimal_distinguishing_set(t), (std::vector<std::uint64_t>{1}));
}

TEST(MinimalDistinguishingSet, WorkedExampleRegression) {
  // Frozen after an independent enumeration of all 2^6 subsets of the
  // six surviving rows: {1, 2, 4, 6} is the unique size-4 solution.
  const auto a = analyze_faults(parse("ab + c"));
  EXPECT_EQ(minimal_distinguishing_set(a.table), (std::vector<std::uint64_t>{1, 2, 4, 6}));
  EXPECT_EQ(minimal_detection_set(a.table), (std::vector<std::uint64_t>{1, 2, 4, 6}));
}

TEST(MinimalDetectionSet, AllOnesRow) {
  const auto t = table_from({"0100", "0111", "0011"});
  EXPECT_EQ(minimal_detection_set(t), (std::vector<std::uint64_t>{1}));
}

TEST(Limits, Enforced) {
  const auto t = table_from({"01000", "00100", "00010", "00001"});
  EXPECT_EQ(error_of([&] { minimal_distinguishing_set(t, {3, 16, 12}); }), ErrorCode::LimitExceeded);
  EXPECT_EQ(error_of([&] { minimal_distinguishing_set(t, {24, 4, 12}); }), ErrorCode::LimitExceeded);
  EXPECT_EQ(error_of([&] { minimal_distinguishing_set(t, {24, 16, 3}); }), ErrorCode::LimitExceeded);
  EXPECT_EQ(error_of([&] { minimal_detection_set(t, {3, 16, 12}); }), ErrorCode::LimitExceeded);
}

TEST(Infeasible, IdenticalColumns) {
  const auto t = table_from({"011", "000"});
  EXPECT_EQ(error_of([&] { minimal_distinguishing_set(t); }), ErrorCode::Infeasible);
  const auto undetectable = table_from({"010", "000"});
  EXPECT_EQ(error_of([&] { minimal_detection_set(undetectable); }), ErrorCode::Infeasible);
}

TEST(Properties, OracleValidityAndOptimality) {
  OracleLimits limits{64, 64, 12};
  std::mt19937_64 rng(7);
  for (const auto& text : testing::random_expressions(31, 80, 5, 4, 3)) {
    const auto run = minimize(parse(text));
    const auto& t = run.analysis.table;
    const auto best = minimal_distinguishing_set(t, limits);
    const auto detect = minimal_detection_set(t, limits);
    ASSERT_TRUE(is_distinguishing(t, best)) << text;
    ASSERT_TRUE(is_detecting(t, detect)) << text;
    ASSERT_TRUE(is_detecting(t, best)) << text;
    ASSERT_LE(detect.size(), best.size());
    ASSERT_LE(best.size(), run.tests.final.size()) << text;

    // Random smaller subsets never distinguish.
    if (best.empty()) continue;
    for (int trial = 0; trial < 50; ++trial) {
      auto pool = t.tests;
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(std::min(pool.size(), best.size() - 1));
      ASSERT_FALSE(is_distinguishing(t, pool)) << text;
    }
  }
}

}  // namespace
}  // namespace sopfault
