#include "crylift/assign_solver.hpp"
#include "crylift/errors.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace crylift::assign {
namespace {

std::vector<Integer> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

IntegerMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<Integer>> out;
  for (auto r : rows) out.emplace_back(r.begin(), r.end());
  return IntegerMatrix::from_rows(out);
}

struct RandomInstance {
  std::vector<Integer> a, b;
  Integer m, bound;
};

// Random instance with |I|, |J| <= 6, |values| <= 50, m <= 12, C <= 100;
// the last column sum is nudged so the congruence precondition holds.
RandomInstance random_regular(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rows(1, 6), cols(2, 6), value(-50, 50), mod(1, 12), bound(0, 100);
  RandomInstance inst;
  inst.a.resize(rows(rng));
  inst.b.resize(cols(rng));
  for (auto& x : inst.a) x = value(rng);
  for (auto& x : inst.b) x = value(rng);
  inst.m = mod(rng);
  inst.bound = bound(rng);
  Integer gap = 0;
  for (auto& x : inst.a) gap += x;
  for (auto& x : inst.b) gap -= x;
  inst.b.back() += floor_mod(gap, inst.m);
  if (inst.b.back() > 50) inst.b.back() -= inst.m;
  return inst;
}

TEST(Transport, Examples) {
  EXPECT_EQ(transport(ints({5}), ints({2, 3})).entries, mat({{2, 3}}));
  EXPECT_EQ(transport(ints({1, 2}), ints({3, 0})).entries, mat({{1, 0}, {2, 0}}));
  EXPECT_EQ(transport(ints({0, 0}), ints({0, 0})).entries, mat({{0, 0}, {0, 0}}));
}

TEST(Transport, SumsOfLowestIndexExampleByHand) {
  const auto x = transport(ints({1, 2}), ints({3, 0})).entries;
  EXPECT_EQ(x.row_sums(), ints({1, 2}));
  EXPECT_EQ(x.col_sums(), ints({3, 0}));
}

TEST(Transport, Errors) {
  EXPECT_THROW(transport(ints({1}), ints({2})), Infeasible);
  EXPECT_THROW(transport({}, ints({0})), MalformedInput);
  EXPECT_THROW(transport(ints({0}), {}), MalformedInput);
}

TEST(RegularTransport, ZeroRowSpreadsToPlusMinusSix) {
  const auto out = regular_transport(ints({0}), ints({0, 0}), 3, 5);
  EXPECT_EQ(out.entries, mat({{6, -6}}));
  EXPECT_TRUE(verify_assignment(out).ok);
}

TEST(RegularTransport, TwoByTwoOddColumns) {
  // Feasibility oracle: exhaustive search over entries in [-20, 20].
  bool feasible = false;
  for (int x00 = -20; x00 <= 20 && !feasible; ++x00) {
    for (int x10 = -20; x10 <= 20 && !feasible; ++x10) {
      const int x01 = 4 - x00, x11 = 6 - x10;
      if (x01 < -20 || x01 > 20 || x11 < -20 || x11 > 20) continue;
      const std::set<int> distinct{x00, x01, x10, x11};
      feasible = distinct.size() == 4 && (x00 + x10) % 2 != 0 && (x01 + x11) % 2 != 0;
    }
  }
  ASSERT_TRUE(feasible);

  const auto out = regular_transport(ints({4, 6}), ints({1, 1}), 2, 0);
  const auto report = verify_assignment(out);
  EXPECT_TRUE(report.ok) << (report.violations.empty() ? "" : report.violations.front().detail);
  EXPECT_EQ(out.entries.row_sums(), ints({4, 6}));
  for (const auto& c : out.entries.col_sums()) EXPECT_EQ(floor_mod(c, 2), 1);
  EXPECT_TRUE(rows_separated(out.entries));
}

TEST(RegularTransport, ModulusOneIsVacuousOnColumns) {
  const auto out = regular_transport(ints({7}), ints({3, 4}), 1, 0);
  EXPECT_TRUE(verify_assignment(out).ok);
  EXPECT_NE(out.entries(0, 0), out.entries(0, 1));
  EXPECT_EQ(out.entries(0, 0) + out.entries(0, 1), 7);
}

TEST(RegularTransport, Errors) {
  EXPECT_THROW(regular_transport(ints({1}), ints({1}), 2, 0), MalformedInput);
  EXPECT_THROW(regular_transport(ints({1}), ints({0, 0}), 2, 0), Infeasible);
  EXPECT_THROW(regular_transport(ints({1}), ints({1, 0}), 0, 0), MalformedInput);
  EXPECT_THROW(regular_transport(ints({1}), ints({1, 0}), 1, -1), MalformedInput);
}

TEST(RegularTransport, TraceStepsPreserveRowsAndShiftColumnsByMultiplesOfM) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 500; ++iter) {
    const auto inst = random_regular(rng);
    RebalanceTrace trace;
    const auto out = regular_transport(inst.a, inst.b, inst.m, inst.bound, &trace);
    ASSERT_FALSE(trace.empty());
    ASSERT_EQ(trace.front().kind, RebalanceStep::Kind::kInitial);
    ASSERT_EQ(trace.back().after, out.entries);
    for (std::size_t s = 1; s < trace.size(); ++s) {
      const auto& before = trace[s - 1].after;
      const auto& after = trace[s].after;
      ASSERT_EQ(before.row_sums(), after.row_sums());
      const auto cb = before.col_sums();
      const auto ca = after.col_sums();
      for (std::size_t j = 0; j < cb.size(); ++j) ASSERT_EQ(floor_mod(ca[j] - cb[j], inst.m), 0);
      ASSERT_GE(trace[s].n, 1);
    }
  }
}

TEST(RegularTransport, MagnitudeStepUsesSmallestN) {
  std::mt19937_64 rng(11);
  int seen = 0;
  for (int iter = 0; iter < 500; ++iter) {
    const auto inst = random_regular(rng);
    RebalanceTrace trace;
    regular_transport(inst.a, inst.b, inst.m, inst.bound, &trace);
    for (std::size_t s = 1; s < trace.size(); ++s) {
      const auto& step = trace[s];
      if (step.kind != RebalanceStep::Kind::kMagnitude) continue;
      ++seen;
      const std::size_t i = step.row;
      const Integer row_bound = i == 0 ? inst.bound : std::max(inst.bound, step.after.row_max_abs(i - 1));
      // Undo one unit of N and confirm some entry is no longer clear of the bound.
      const std::size_t cols = step.after.cols();
      bool violated = false;
      for (std::size_t j = 0; j < cols; ++j) {
        const bool raised = j == step.raised.front();
        const Integer v = raised ? Integer(step.after(i, j) - inst.m * (cols - 1)) : Integer(step.after(i, j) + inst.m);
        violated = violated || crylift::abs(v) <= row_bound;
      }
      ASSERT_TRUE(violated);
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(RegularTransport, Deterministic) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 200; ++iter) {
    const auto inst = random_regular(rng);
    EXPECT_EQ(regular_transport(inst.a, inst.b, inst.m, inst.bound).entries,
              regular_transport(inst.a, inst.b, inst.m, inst.bound).entries);
  }
}

TEST(RegularTransport, CheckerAcceptsSolverOnRandomInstances) {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 2000; ++iter) {
    const auto inst = random_regular(rng);
    const auto out = regular_transport(inst.a, inst.b, inst.m, inst.bound);
    const auto report = verify_assignment(out);
    ASSERT_TRUE(report.ok) << report.violations.front().constraint;
    ASSERT_TRUE(rows_separated(out.entries));

    Integer total = 0;
    for (const auto& x : inst.a) total += x;
    auto exact_b = inst.b;
    exact_b.back() += total;
    for (const auto& x : inst.b) exact_b.back() -= x;
    ASSERT_TRUE(verify_assignment(transport(inst.a, exact_b)).ok);
  }
}

TEST(RegularTransport, IncongruentInstancesAreRejected) {
  std::mt19937_64 rng(5);
  int rejected = 0;
  for (int iter = 0; iter < 300; ++iter) {
    auto inst = random_regular(rng);
    if (inst.m == 1) continue;
    inst.b.front() += 1;
    EXPECT_THROW(regular_transport(inst.a, inst.b, inst.m, inst.bound), Infeasible);
    ++rejected;
  }
  EXPECT_GT(rejected, 0);
}

TEST(VerifyAssignment, Examples) {
  EXPECT_TRUE(verify_assignment(transport(ints({5}), ints({2, 3}))).ok);

  AssignmentMatrix dup{mat({{1, 1}}), {ints({2}), ints({1, 1}), Integer(1), Integer(0)}};
  auto report = verify_assignment(dup);
  EXPECT_FALSE(report.ok);
  EXPECT_EQ(report.violations.front().constraint, "distinct");

  AssignmentMatrix wrong{mat({{2, 3}}), {ints({4}), ints({2, 3}), std::nullopt, std::nullopt}};
  report = verify_assignment(wrong);
  EXPECT_FALSE(report.ok);
  EXPECT_EQ(report.violations.front().constraint, "row_sum");
}

TEST(VerifyAssignment, ReportsEveryViolation) {
  AssignmentMatrix bad{mat({{0, 0}}), {ints({1}), ints({0, 0}), Integer(3), Integer(2)}};
  const auto report = verify_assignment(bad);
  std::set<std::string> kinds;
  for (const auto& v : report.violations) kinds.insert(v.constraint);
  EXPECT_EQ(kinds, (std::set<std::string>{"row_sum", "distinct", "magnitude"}));
}

}  // namespace
}  // namespace crylift::assign
