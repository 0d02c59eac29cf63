#include <gtest/gtest.h>

#include <cmath>

#include "lgd/errors.hpp"
#include "lgd/graph.hpp"

namespace lgd {
namespace {

Graph gen(GraphFamily f, const std::string& args, std::uint64_t seed = 0) {
  return generate(f, parse_gen_args(args), seed);
}

TEST(Generate, CycleFourNodes) {
  auto g = gen(GraphFamily::cycle, "n=4");
  EXPECT_EQ(g.node_count(), 4u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(g.max_degree(), 2u);
  EXPECT_TRUE(g.check_invariants());
}

TEST(Generate, CompleteFive) {
  auto g = gen(GraphFamily::complete, "n=5");
  EXPECT_EQ(g.edge_count(), 10u);
  EXPECT_EQ(g.max_degree(), 4u);
}

TEST(Generate, ErdosRenyiIsDeterministic) {
  auto a = gen(GraphFamily::erdos_renyi, "n=20,p=0.1", 7);
  auto b = gen(GraphFamily::erdos_renyi, "n=20,p=0.1", 7);
  EXPECT_EQ(a.edges(), b.edges());
  auto c = gen(GraphFamily::erdos_renyi, "n=20,p=0.1", 8);
  EXPECT_NE(a.edges(), c.edges());
}

TEST(Generate, ErdosRenyiDensity) {
  auto g = gen(GraphFamily::erdos_renyi, "n=200,p=0.03", 1);
  const double expected = 0.03 * 200 * 199 / 2;
  EXPECT_NEAR(static_cast<double>(g.edge_count()), expected, 5 * std::sqrt(expected));
}

TEST(Generate, OtherFamilies) {
  auto path = gen(GraphFamily::path, "n=5");
  EXPECT_EQ(path.edge_count(), 4u);
  auto star = gen(GraphFamily::star, "n=6");
  EXPECT_EQ(star.degree(0), 5u);
  EXPECT_EQ(star.max_degree(), 5u);
  auto grid = gen(GraphFamily::grid2d, "rows=3,cols=4");
  EXPECT_EQ(grid.node_count(), 12u);
  EXPECT_EQ(grid.edge_count(), 17u);
  EXPECT_EQ(grid.max_degree(), 4u);
}

TEST(Generate, RejectsBadParameters) {
  EXPECT_THROW(gen(GraphFamily::cycle, "n=0"), ParameterError);
  EXPECT_THROW(gen(GraphFamily::erdos_renyi, "n=5,p=1.5"), ParameterError);
  EXPECT_THROW(gen(GraphFamily::cycle, ""), ParameterError);
  EXPECT_THROW(parse_family("hypercube"), ParameterError);
  EXPECT_THROW(parse_gen_args("n"), ParameterError);
}

TEST(Generate, FamilyNamesRoundTrip) {
  for (auto f : {GraphFamily::cycle, GraphFamily::path, GraphFamily::complete, GraphFamily::star,
                 GraphFamily::grid2d, GraphFamily::erdos_renyi}) {
    EXPECT_EQ(parse_family(family_name(f)), f);
  }
}

TEST(EdgeList, Path) {
  auto parsed = parse_edge_list("0 1\n1 2");
  EXPECT_EQ(parsed.graph.node_count(), 3u);
  EXPECT_EQ(parsed.graph.max_degree(), 2u);
}

TEST(EdgeList, DuplicateEdgesCollapse) {
  auto parsed = parse_edge_list("0 1\n0 1\n1 0\n");
  EXPECT_EQ(parsed.graph.edge_count(), 1u);
}

TEST(EdgeList, CommentsAndBlankLines) {
  auto parsed = parse_edge_list("# header\n\n0 1\n  \n# x\n2 1\n");
  EXPECT_EQ(parsed.graph.edge_count(), 2u);
}

TEST(EdgeList, SelfLoopRejected) { EXPECT_THROW(parse_edge_list("3 3"), ValidationError); }

TEST(EdgeList, ParseErrorCarriesLine) {
  try {
    parse_edge_list("0 1\n1 x\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_edge_list("0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("-1 2\n"), ParseError);
}

TEST(EdgeList, EmptyInput) { EXPECT_THROW(parse_edge_list("# nothing\n"), ValidationError); }

TEST(EdgeList, CompactIds) {
  auto parsed = parse_edge_list("10 20\n20 30\n", true);
  EXPECT_EQ(parsed.graph.node_count(), 3u);
  EXPECT_EQ(parsed.original_ids, (std::vector<std::int64_t>{10, 20, 30}));
}

TEST(EdgeList, FormatRoundTrips) {
  auto g = gen(GraphFamily::grid2d, "rows=2,cols=3");
  EXPECT_EQ(parse_edge_list(format_edge_list(g)).graph, g);
}

TEST(Neighborhood, Inclusive) {
  auto path = parse_edge_list("0 1\n1 2").graph;
  EXPECT_EQ(neighbors_inclusive(path, 1), (std::vector<NodeId>{0, 1, 2}));
  std::vector<std::pair<NodeId, NodeId>> none;
  Graph isolated(1, none);
  EXPECT_EQ(neighbors_inclusive(isolated, 0), (std::vector<NodeId>{0}));
  auto k3 = gen(GraphFamily::complete, "n=3");
  EXPECT_EQ(neighbors_inclusive(k3, 2), (std::vector<NodeId>{0, 1, 2}));
  EXPECT_THROW(neighbors_inclusive(k3, 3), ParameterError);
}

}  // namespace
}  // namespace lgd
