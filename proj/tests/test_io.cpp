#include <gtest/gtest.h>

#include <sstream>

#include "dagconvex/error.hpp"
#include "dagconvex/families.hpp"
#include "dagconvex/io.hpp"

using namespace dagconvex;

namespace {

Digraph parse(const std::string& text) {
  std::istringstream in(text);
  return read_digraph(in);
}

ErrorCode parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorCode::Io;
}

}  // namespace

TEST(EdgeList, CommentsAndBlankLines) {
  Digraph d = parse("# P3\n\n3 2\n0 1\n# middle\n  1   2\n\n");
  EXPECT_EQ(d.order(), 3);
  EXPECT_EQ(d.arcs(), (std::vector<Arc>{{0, 1}, {1, 2}}));
}

TEST(EdgeList, IsolatedVertices) {
  Digraph d = parse("4 0\n");
  EXPECT_EQ(d.order(), 4);
  EXPECT_TRUE(d.arcs().empty());
}

TEST(EdgeList, Errors) {
  EXPECT_EQ(parse_error(""), ErrorCode::Parse);
  EXPECT_EQ(parse_error("3 2\n0 1\n"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("3 1\n0 1\n1 2\n"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("3 1\n0 x\n"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("3 1\n0 1 2\n"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("3 1\n0 3\n"), ErrorCode::InvalidArc);
  EXPECT_EQ(parse_error("2 2\n0 1\n1 0\n"), ErrorCode::CycleDetected);
}

TEST(Dot, RestrictedSubset) {
  Digraph d = parse("// header\ndigraph g {\n  0 -> 1;\n  1 -> 2 -> 3 [color=red];\n  5;\n}\n");
  EXPECT_EQ(d.order(), 6);
  EXPECT_EQ(d.arcs(), (std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(Dot, AnonymousGraphAndErrors) {
  EXPECT_EQ(parse("digraph { 0 -> 1 }").order(), 2);
  EXPECT_EQ(parse_error("digraph { a -> b; }"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("digraph { 0 -> 1;"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("digraph { 0 -> 1; 1 -> 0; }"), ErrorCode::CycleDetected);
}

TEST(EdgeList, WriteIsStableAndRereadable) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Digraph d = gen_random_connected_dag(9, 0.35, seed);
    std::ostringstream out;
    write_edge_list(out, d, {"family: random"});
    Digraph back = parse(out.str());
    ASSERT_EQ(back.order(), d.order());
    ASSERT_EQ(back.arcs(), d.arcs());
    std::ostringstream again;
    write_edge_list(again, back, {"family: random"});
    ASSERT_EQ(again.str(), out.str());
  }
}

TEST(LoadDigraph, MissingFile) {
  try {
    load_digraph("/nonexistent/graph.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Io);
  }
}
