#include <gtest/gtest.h>

#include <algorithm>

#include "dagconvex/convexity.hpp"
#include "dagconvex/enumeration.hpp"
#include "dagconvex/error.hpp"
#include "dagconvex/families.hpp"
#include "oracles.hpp"

using namespace dagconvex;

namespace {

std::vector<std::uint64_t> collect_brute(const Digraph& d, SetClass c) {
  std::vector<std::uint64_t> out;
  enumerate_brute(d, c, [&](const VertexSet& s) { out.push_back(s.to_mask()); });
  return out;
}

std::vector<VertexSet> collect_extension(const Digraph& d) {
  std::vector<VertexSet> out;
  enumerate_cc_extension(d, std::nullopt, [&](const VertexSet& s) { out.push_back(s); });
  return out;
}

void expect_report_consistent(const EnumerationReport& r) {
  std::uint64_t count = 0;
  std::uint64_t sum = 0;
  for (std::size_t k = 0; k < r.histogram.size(); ++k) {
    count += r.histogram[k];
    sum += (k + 1) * r.histogram[k];
  }
  EXPECT_EQ(count, r.count);
  EXPECT_EQ(sum, r.size_sum);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::Io;
}

}  // namespace

TEST(EnumerateBrute, P3Convex) {
  Digraph p3 = gen_path(3);
  // Every non-empty subset except {0,2} (mask 5), ascending.
  EXPECT_EQ(collect_brute(p3, SetClass::Convex), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 7}));
  auto r = enumerate_brute(p3, SetClass::Convex);
  EXPECT_EQ(r.count, 6u);
  expect_report_consistent(r);
}

TEST(EnumerateBrute, P3ConnectedConvex) {
  auto r = enumerate_brute(gen_path(3), SetClass::ConnectedConvex);
  EXPECT_EQ(r.count, 6u);
  EXPECT_EQ(r.histogram, (std::vector<std::uint64_t>{3, 2, 1}));
}

TEST(EnumerateBrute, SingleVertex) {
  Digraph one = gen_path(1);
  EXPECT_EQ(enumerate_brute(one, SetClass::Convex).count, 1u);
  EXPECT_EQ(enumerate_brute(one, SetClass::ConnectedConvex).count, 1u);
  EXPECT_EQ(enumerate_cc_extension(one).count, 1u);
}

TEST(EnumerateBrute, DisconnectedGraphIsAllowed) {
  // Two isolated vertices: every subset is convex, only singletons connected.
  Digraph d = build_digraph(2, {});
  EXPECT_EQ(enumerate_brute(d, SetClass::Convex).count, 3u);
  EXPECT_EQ(enumerate_brute(d, SetClass::ConnectedConvex).count, 2u);
}

TEST(EnumerateBrute, OrderCap) {
  Digraph big = gen_path(26);
  EXPECT_EQ(code_of([&] { enumerate_brute(big, SetClass::Convex); }), ErrorCode::OrderTooLarge);
  EXPECT_EQ(enumerate_brute(gen_path(20), SetClass::Convex, {}, 20).count, 210u);
}

TEST(EnumerateExtension, P5) {
  auto r = enumerate_cc_extension(gen_path(5));
  EXPECT_EQ(r.count, 15u);
  EXPECT_EQ(r.histogram, (std::vector<std::uint64_t>{5, 4, 3, 2, 1}));
  expect_report_consistent(r);
}

TEST(EnumerateExtension, G2) {
  GiInstance g2 = gen_gi(2);
  auto oracle_sets = oracle::brute_sets(oracle::plain(g2.graph), true);
  EXPECT_EQ(oracle_sets.size(), 25u);
  EXPECT_EQ(enumerate_cc_extension(g2.graph).count, 25u);
  EXPECT_EQ(closed_form_gi_counts(2).connected_convex, 25u);
}

TEST(EnumerateExtension, D1MatchesBruteOnP5) {
  DtInstance d1 = gen_dt(1);
  std::vector<std::uint64_t> ext;
  for (const auto& s : collect_extension(d1.graph)) ext.push_back(s.to_mask());
  std::sort(ext.begin(), ext.end());
  EXPECT_EQ(ext, collect_brute(gen_path(5), SetClass::ConnectedConvex));
}

TEST(EnumerateExtension, CanonicalOrderAndMaxSize) {
  auto sets = collect_extension(gen_gi(3).graph);
  for (std::size_t i = 1; i < sets.size(); ++i) {
    bool increasing = sets[i - 1].size() < sets[i].size() ||
                      (sets[i - 1].size() == sets[i].size() && sets[i - 1] < sets[i]);
    ASSERT_TRUE(increasing);
  }
  auto capped = enumerate_cc_extension(gen_gi(3).graph, 2);
  auto full = enumerate_cc_extension(gen_gi(3).graph);
  EXPECT_EQ(capped.histogram[0], full.histogram[0]);
  EXPECT_EQ(capped.histogram[1], full.histogram[1]);
  EXPECT_EQ(capped.count, full.histogram[0] + full.histogram[1]);
  EXPECT_EQ(code_of([] { enumerate_cc_extension(gen_path(3), 0); }), ErrorCode::InvalidParameter);
}

TEST(EnumerateExtension, Preconditions) {
  EXPECT_EQ(code_of([] { enumerate_cc_extension(build_digraph(3, {{0, 1}})); }), ErrorCode::DisconnectedInput);
  EXPECT_EQ(code_of([] { enumerate_cc_extension(gen_path(41)); }), ErrorCode::OrderTooLarge);
  EXPECT_EQ(enumerate_cc_extension(gen_path(41), std::nullopt, {}, 41).count, 41u * 42u / 2u);
}

TEST(CountCcWithin, DtInnerSets) {
  // Q ∪ {z} ∪ Q' for all Q ⊆ Y, Q' ⊆ Y' (2^{2r} sets) plus the 2r
  // singletons of Y and Y'; values from the path-definition oracle.
  for (int t : {1, 4}) {
    DtInstance dt = gen_dt(t);
    auto g = oracle::plain(dt.graph);
    std::uint64_t inner = dt.layout.inner_set().to_mask();
    std::uint64_t oracle_count = 0;
    std::uint64_t oracle_with_z = 0;
    for (std::uint64_t m : oracle::brute_sets(g, true)) {
      if ((m & ~inner) != 0) continue;
      ++oracle_count;
      if ((m >> dt.layout.z()) & 1U) ++oracle_with_z;
    }
    const std::uint64_t r = static_cast<std::uint64_t>(dt.layout.r);
    EXPECT_EQ(oracle_with_z, std::uint64_t{1} << (2 * r));
    EXPECT_EQ(oracle_count, (std::uint64_t{1} << (2 * r)) + 2 * r);
    EXPECT_EQ(count_cc_within(dt.graph, dt.layout.inner_set()), oracle_count);
  }
  EXPECT_EQ(count_cc_within(gen_dt(1).graph, gen_dt(1).layout.inner_set()), 6u);
  EXPECT_EQ(count_cc_within(gen_dt(4).graph, gen_dt(4).layout.inner_set()), 20u);
}

TEST(CountCcWithin, SingletonAndErrors) {
  Digraph d = gen_gi(2).graph;
  for (Vertex v = 0; v < d.order(); ++v) EXPECT_EQ(count_cc_within(d, VertexSet(6, {v})), 1u);
  EXPECT_EQ(code_of([&] { count_cc_within(d, VertexSet(6)); }), ErrorCode::EmptySet);
}

TEST(CountCcWithin, ConvexInHostNotInInducedSubgraph) {
  // In P3, {0,2} is convex inside D[{0,2}] but not in P3.
  Digraph p3 = gen_path(3);
  EXPECT_EQ(count_cc_within(p3, VertexSet(3, {0, 2})), 2u);
}

TEST(Statistics, Examples) {
  auto s = statistics(enumerate_cc_extension(gen_path(3)));
  EXPECT_EQ(s.count, 6u);
  EXPECT_EQ(s.size_sum, 10u);
  EXPECT_EQ(s.average, Fraction(5, 3));
  EXPECT_EQ(s.average_decimal, "1.666667");

  auto one = statistics(enumerate_cc_extension(gen_path(1)));
  EXPECT_EQ(one.count, 1u);
  EXPECT_EQ(one.size_sum, 1u);
  EXPECT_EQ(one.average, Fraction(1, 1));

  auto g1 = statistics(enumerate_cc_extension(gen_gi(1).graph));
  EXPECT_EQ(g1.count, 10u);
  EXPECT_EQ(g1.size_sum, 20u);
  EXPECT_EQ(g1.average, Fraction(2, 1));
  EXPECT_EQ(g1.average_decimal, "2.000000");

  EnumerationReport empty;
  empty.histogram = {0};
  empty.order = 1;
  EXPECT_EQ(code_of([&] { statistics(empty); }), ErrorCode::EmptyReport);
}

TEST(VerifySizeLowerBound, PathsAreTight) {
  for (int n = 1; n <= 12; ++n) {
    auto table = verify_size_lower_bound(gen_path(n));
    EXPECT_TRUE(table.pass);
    ASSERT_EQ(table.rows.size(), static_cast<std::size_t>(n));
    for (const auto& row : table.rows) EXPECT_EQ(row.count, row.bound);
  }
}

TEST(VerifySizeLowerBound, G3AndErrors) {
  auto table = verify_size_lower_bound(gen_gi(3).graph);
  EXPECT_TRUE(table.pass);
  EXPECT_EQ(table.rows.back().count, 1u);
  EXPECT_EQ(code_of([] { verify_size_lower_bound(build_digraph(2, {})); }), ErrorCode::DisconnectedInput);
}

// Extension enumerator, brute-force enumerator and the independent oracle
// produce the same family; every emitted set re-checks as connected convex.
TEST(EnumerationProperty, EnumeratorsAgreeWithOracle) {
  for (const auto& e : oracle::corpus(120, 1, 9, {0.2, 0.4, 0.7}, 6000)) {
    Digraph d = gen_random_connected_dag(e.n, e.p, e.seed);
    auto g = oracle::plain(d);
    auto expected_cc = oracle::brute_sets(g, true);
    auto expected_co = oracle::brute_sets(g, false);
    ASSERT_EQ(collect_brute(d, SetClass::ConnectedConvex), expected_cc) << "seed " << e.seed;
    ASSERT_EQ(collect_brute(d, SetClass::Convex), expected_co) << "seed " << e.seed;

    std::vector<std::uint64_t> ext;
    for (const auto& s : collect_extension(d)) ext.push_back(s.to_mask());
    std::sort(ext.begin(), ext.end());
    ASSERT_TRUE(std::adjacent_find(ext.begin(), ext.end()) == ext.end());
    ASSERT_EQ(ext, expected_cc) << "seed " << e.seed;

    auto report = enumerate_cc_extension(d);
    expect_report_consistent(report);
    ASSERT_EQ(report.histogram.back(), 1u);
    ASSERT_EQ(count_cc_within(d, d.all_vertices()), report.count);
    ASSERT_TRUE(size_bound_table(report).pass) << "seed " << e.seed;
  }
}

TEST(EnumerationProperty, BruteOrderStrictlyAscending) {
  for (const auto& e : oracle::corpus(30, 5, 12, {0.3, 0.6}, 7000)) {
    Digraph d = gen_random_connected_dag(e.n, e.p, e.seed);
    auto sets = collect_brute(d, SetClass::Convex);
    ASSERT_TRUE(std::is_sorted(sets.begin(), sets.end()));
    ASSERT_TRUE(std::adjacent_find(sets.begin(), sets.end()) == sets.end());
  }
}
