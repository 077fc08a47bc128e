#include <gtest/gtest.h>

#include "support/random_instances.hpp"

using namespace shallow;

TEST(Products, StrongP3P3) {
  Graph g = strong_product(path(3), path(3));
  EXPECT_EQ(g.vertex_count(), 9);
  EXPECT_EQ(g.edge_count(), 20u);
  EXPECT_EQ(g.degree(g.index("1|1")), 8);
}

TEST(Products, LexWithEdgelessBlowsUpVertices) {
  Graph g = lex_product(path(3), edgeless(2));
  EXPECT_EQ(g.vertex_count(), 6);
  // Every P3 edge becomes K_{2,2}; rows stay independent.
  EXPECT_EQ(g.edge_count(), 8u);
  EXPECT_FALSE(g.adjacent("0|0", "0|1"));
}

TEST(Products, EdgeCountsMatchDefinition) {
  gen::Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    Graph a = gen::random_graph(gen::pick(rng, 1, 5), 0.5, rng);
    Graph b = gen::random_graph(gen::pick(rng, 1, 4), 0.5, rng);
    std::size_t na = a.vertex_count(), nb = b.vertex_count();
    std::size_t strong = na * b.edge_count() + nb * a.edge_count() + 2 * a.edge_count() * b.edge_count();
    std::size_t lex = na * b.edge_count() + a.edge_count() * nb * nb;
    EXPECT_EQ(strong_product(a, b).edge_count(), strong);
    EXPECT_EQ(lex_product(a, b).edge_count(), lex);
  }
}

TEST(Products, RightFactorIdsMayNotContainSeparator) {
  Graph bad;
  bad.add_vertex("x|y");
  EXPECT_THROW(strong_product(path(2), bad), InputError);
}

TEST(Products, PathCubeEmbedsInBlocks) {
  EmbeddingWitness w = path_power_embedding(9, 1);
  Graph guest = graph_power(path(9), 3);
  EXPECT_TRUE(verify_embedding(guest, w));
  EXPECT_TRUE(w.host.same_as(strong_product(path(3), complete_graph(3))));
}

TEST(Products, EmbeddingVerifierRejects) {
  EmbeddingWitness w = path_power_embedding(9, 1);
  Graph guest = graph_power(path(9), 4);
  Verdict v = verify_embedding(guest, w);
  EXPECT_FALSE(v);
  EXPECT_EQ(v.clause, "edge");
  w.injection["1"] = w.injection["0"];
  EXPECT_EQ(verify_embedding(path(9), w).clause, "injective");
}
