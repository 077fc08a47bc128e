#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace shallow;

TEST(LowerBounds, DegenerateInputsRejected) {
  EXPECT_THROW(build_grid_hierarchy(1, 1), InputError);
  EXPECT_THROW(build_grid_hierarchy(2, 0), InputError);
  EXPECT_THROW(build_grid_hierarchy(10, 3), ResourceError);
}

TEST(LowerBounds, SmallestInstance) {
  GridHierarchy h = build_grid_hierarchy(2, 1);
  EXPECT_EQ(h.side, 4);
  EXPECT_EQ(h.embedded.graph.vertex_count(), 25);
  HierarchyReport rep = check_hierarchy(h);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.twLower, 5);
  EXPECT_EQ(rep.radiusLimit, 8);
  EXPECT_LE(rep.radius, 8);
  // Level-1 edges span two units.
  EXPECT_TRUE(h.embedded.graph.adjacent(grid_id(0, 0), grid_id(2, 0)));
  EXPECT_EQ(h.level.at(edge_key(grid_id(0, 0), grid_id(2, 0))), 1);
}

TEST(LowerBounds, ChargingIsLowerLevelAndWithinCapacity) {
  GridHierarchy h = build_grid_hierarchy(3, 1);
  ASSERT_EQ(h.charging.charged.size(), h.embedded.crossings.size());
  for (std::size_t i = 0; i < h.embedded.crossings.size(); ++i) {
    const auto& c = h.embedded.crossings[i];
    int low = std::min(h.level.at(c.a), h.level.at(c.b));
    EXPECT_EQ(h.level.at(h.charging.charged[i]), low);
  }
  EXPECT_TRUE(verify_gap_charging(h.embedded, h.charging));
  EXPECT_TRUE(oracle::gap_feasible({path(2), {}}, 1));
}

TEST(LowerBounds, SubdivisionContractsBack) {
  GridHierarchy h = build_grid_hierarchy(2, 1);
  EXPECT_TRUE(contract_subdivisions(h).same_as(h.embedded.graph));
}

TEST(LowerBounds, SubGridTreewidth) {
  GridHierarchy h = build_grid_hierarchy(2, 1);
  std::vector<int> keep;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) keep.push_back(h.embedded.graph.index(grid_id(x, y)));
  Graph sub = induced_subgraph(h.embedded.graph, keep);
  Graph grid = vertex_copy(sub);
  for (auto [u, v] : sub.edges()) {
    if (h.level.at(edge_key(sub.id(u), sub.id(v))) == 0) grid.add_edge(u, v);
  }
  EXPECT_EQ(grid.edge_count(), 24u);
  EXPECT_EQ(exact_treewidth(grid, 16).width, 4);
}

TEST(LowerBounds, TwoLevels) {
  GridHierarchy h = build_grid_hierarchy(2, 2);
  HierarchyReport rep = check_hierarchy(h);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.twLower, 9);
  EXPECT_EQ(rep.radiusLimit, 12);
}
