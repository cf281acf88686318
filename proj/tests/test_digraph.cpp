#include <gtest/gtest.h>

#include <random>

#include "dagconvex/digraph.hpp"
#include "dagconvex/error.hpp"
#include "dagconvex/families.hpp"
#include "oracles.hpp"

using namespace dagconvex;

namespace {

Digraph p3() { return build_digraph(3, {{0, 1}, {1, 2}}); }

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

TEST(BuildDigraph, PathP3) {
  Digraph d = p3();
  EXPECT_EQ(d.order(), 3);
  EXPECT_EQ(d.arcs().size(), 2u);
  EXPECT_TRUE(d.has_arc(0, 1));
  EXPECT_FALSE(d.has_arc(1, 0));
  EXPECT_EQ(d.topological_order(), (std::vector<Vertex>{0, 1, 2}));
}

TEST(BuildDigraph, Errors) {
  EXPECT_EQ(code_of([] { build_digraph(2, {{0, 1}, {1, 0}}); }), ErrorCode::CycleDetected);
  EXPECT_EQ(code_of([] { build_digraph(2, {{0, 2}}); }), ErrorCode::InvalidArc);
  EXPECT_EQ(code_of([] { build_digraph(2, {{1, 1}}); }), ErrorCode::InvalidArc);
  EXPECT_EQ(code_of([] { build_digraph(2, {{0, 1}, {0, 1}}); }), ErrorCode::InvalidArc);
  EXPECT_EQ(code_of([] { build_digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 1}}); }), ErrorCode::CycleDetected);
}

TEST(BuildDigraph, D1IsValidOrderFive) {
  // x1 -> y1 -> z -> y'1 -> x'1
  Digraph d = build_digraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(d.order(), 5);
  EXPECT_EQ(d.order(), 2 * 1 + 2 * 1 + 1);
}

TEST(Reachability, PathExamples) {
  Digraph d = p3();
  EXPECT_EQ(reachable_from(d, VertexSet(3, {0})), VertexSet(3, {0, 1, 2}));
  EXPECT_EQ(reachable_from(d, VertexSet(3, {2})), VertexSet(3, {2}));
  EXPECT_EQ(reaching_to(d, VertexSet(3, {2})), VertexSet(3, {0, 1, 2}));
  EXPECT_EQ(reaching_to(d, VertexSet(3, {0})), VertexSet(3, {0}));
}

TEST(Reachability, D1FromAndToZ) {
  DtInstance d1 = gen_dt(1);
  const auto& l = d1.layout;
  VertexSet z(5, {l.z()});
  EXPECT_EQ(reachable_from(d1.graph, z), VertexSet(5, {l.z(), l.y_prime(1), l.x_prime(1)}));
  EXPECT_EQ(reaching_to(d1.graph, z), VertexSet(5, {l.x(1), l.y(1), l.z()}));
}

TEST(Reachability, LargeGraphUsesTraversal) {
  Digraph d = gen_path(100);
  VertexSet s(100, {97});
  EXPECT_EQ(reachable_from(d, s), VertexSet(100, {97, 98, 99}));
  EXPECT_EQ(reaching_to(d, VertexSet(100, {2})), VertexSet(100, {0, 1, 2}));
  EXPECT_THROW(d.masks(), Error);
}

TEST(Connectivity, Examples) {
  Digraph d = p3();
  EXPECT_TRUE(is_underlying_connected(d, VertexSet(3, {0, 1})));
  EXPECT_FALSE(is_underlying_connected(d, VertexSet(3, {0, 2})));
  EXPECT_THROW(is_underlying_connected(d, VertexSet(3)), Error);

  GiInstance g2 = gen_gi(2);
  const auto& l = g2.layout;
  EXPECT_TRUE(is_underlying_connected(g2.graph, VertexSet(6, {l.s(), l.a(1), l.a(2)})));
}

TEST(SourcesSinks, Examples) {
  auto [src, snk] = sources_and_sinks(p3());
  EXPECT_EQ(src, VertexSet(3, {0}));
  EXPECT_EQ(snk, VertexSet(3, {2}));

  GiInstance g3 = gen_gi(3);
  auto [gs, gt] = sources_and_sinks(g3.graph);
  EXPECT_EQ(gs, VertexSet(8, {g3.layout.s()}));
  EXPECT_EQ(gt, VertexSet(8, {g3.layout.t()}));

  auto [one_s, one_t] = sources_and_sinks(build_digraph(1, {}));
  EXPECT_EQ(one_s, VertexSet(1, {0}));
  EXPECT_EQ(one_t, VertexSet(1, {0}));
}

TEST(CutVertex, Examples) {
  Digraph d = p3();
  EXPECT_TRUE(is_cut_vertex(d, 1));
  EXPECT_FALSE(is_cut_vertex(d, 0));

  // G2 - s keeps a1-b1-t-b2-a2 connected.
  GiInstance g2 = gen_gi(2);
  EXPECT_FALSE(oracle::removal_disconnects(oracle::plain(g2.graph), g2.layout.s()));
  EXPECT_FALSE(is_cut_vertex(g2.graph, g2.layout.s()));
}

TEST(CutVertex, Preconditions) {
  EXPECT_EQ(code_of([] { is_cut_vertex(build_digraph(1, {}), 0); }), ErrorCode::OrderTooSmall);
  EXPECT_EQ(code_of([] { is_cut_vertex(build_digraph(3, {{0, 1}}), 0); }), ErrorCode::DisconnectedInput);
  EXPECT_EQ(code_of([] { cut_vertices(build_digraph(3, {{0, 1}})); }), ErrorCode::DisconnectedInput);
}

// Per-vertex reachability and articulation points agree with the oracles.
TEST(DigraphProperty, ClosureAndCutsMatchOracles) {
  for (const auto& e : oracle::corpus(200, 1, 12, {0.2, 0.4, 0.7}, 1000)) {
    Digraph d = gen_random_connected_dag(e.n, e.p, e.seed);
    auto g = oracle::plain(d);

    const auto& topo = d.topological_order();
    std::vector<int> pos(static_cast<std::size_t>(d.order()));
    for (std::size_t i = 0; i < topo.size(); ++i) pos[topo[i]] = static_cast<int>(i);
    for (const Arc& a : d.arcs()) ASSERT_LT(pos[a.from], pos[a.to]);

    for (Vertex v = 0; v < d.order(); ++v) {
      auto down = oracle::reach_from(g, v);
      auto up = oracle::reach_to(g, v);
      VertexSet single(d.order(), {v});
      VertexSet r = reachable_from(d, single);
      VertexSet t = reaching_to(d, single);
      for (Vertex w = 0; w < d.order(); ++w) {
        ASSERT_EQ(r.contains(w), down[w]) << "seed " << e.seed;
        ASSERT_EQ(t.contains(w), up[w]) << "seed " << e.seed;
      }
    }

    // Union property on a random subset.
    std::mt19937_64 rng(e.seed);
    VertexSet s(d.order());
    VertexSet expect_down(d.order());
    VertexSet expect_up(d.order());
    for (Vertex v = 0; v < d.order(); ++v) {
      if (rng() & 1U) {
        s.insert(v);
        expect_down |= reachable_from(d, VertexSet(d.order(), {v}));
        expect_up |= reaching_to(d, VertexSet(d.order(), {v}));
      }
    }
    ASSERT_EQ(reachable_from(d, s), expect_down);
    ASSERT_EQ(reaching_to(d, s), expect_up);

    if (d.order() >= 2) {
      VertexSet cuts = cut_vertices(d);
      for (Vertex v = 0; v < d.order(); ++v) {
        bool expected = oracle::removal_disconnects(g, v);
        ASSERT_EQ(cuts.contains(v), expected) << "seed " << e.seed << " v " << v;
        ASSERT_EQ(is_cut_vertex(d, v), expected);
      }
    }
  }
}

// Construction accepts exactly the acyclic arc sets.
TEST(DigraphProperty, AcyclicityMatchesBruteForce) {
  std::mt19937_64 rng(77);
  int accepted = 0;
  int rejected = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<std::pair<int, int>> pairs;
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v && rng() % 100 < 18) {
          pairs.emplace_back(u, v);
          arcs.push_back({u, v});
        }
      }
    }
    bool cyclic = oracle::has_cycle(n, pairs);
    try {
      build_digraph(n, arcs);
      ASSERT_FALSE(cyclic);
      ++accepted;
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::CycleDetected);
      ASSERT_TRUE(cyclic);
      ++rejected;
    }
  }
  EXPECT_GT(accepted, 50);
  EXPECT_GT(rejected, 50);
}
