#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "support/random_instances.hpp"

using namespace shallow;

namespace {

std::vector<VertexId> natural(int n) {
  std::vector<VertexId> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

Colouring labels(const std::vector<std::string>& c) {
  Colouring out;
  for (std::size_t i = 0; i < c.size(); ++i) out[std::to_string(i)] = c[i];
  return out;
}

}  // namespace

TEST(Colourings, ReachSetsOnAPath) {
  auto r = reach_set(path(3), natural(3), "2", 2, ColMode::strong);
  std::sort(r.begin(), r.end());
  EXPECT_EQ(r, (std::vector<VertexId>{"1", "2"}));
  EXPECT_EQ(reach_set(path(3), natural(3), "0", 2, ColMode::weak), (std::vector<VertexId>{"0"}));
}

TEST(Colourings, ReachSetsMatchPathEnumeration) {
  gen::Rng rng(81);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = gen::random_graph(gen::pick(rng, 1, 8), 0.4, rng);
    std::vector<int> perm(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) perm[i] = i;
    gen::shuffle(perm, rng);
    std::vector<VertexId> order;
    std::vector<int> pos(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) {
      order.push_back(g.id(perm[i]));
      pos[perm[i]] = i;
    }
    int s = gen::pick(rng, 1, 4);
    for (bool strong : {true, false}) {
      for (int v = 0; v < g.vertex_count(); ++v) {
        auto got = reach_set(g, order, g.id(v), s, strong ? ColMode::strong : ColMode::weak);
        std::set<int> idx;
        for (const auto& x : got) idx.insert(g.index(x));
        EXPECT_EQ(idx, oracle::reach(g, pos, v, s, strong));
      }
    }
  }
}

TEST(Colourings, ColouringNumberExamples) {
  EXPECT_EQ(col_of_order(edgeless(4), natural(4), 3, ColMode::strong), 1);
  EXPECT_EQ(col_of_order(cycle(5), natural(5), 1, ColMode::strong), 3);
  EXPECT_EQ(col_of_order(path(4), natural(4), 3, ColMode::strong), 2);
  EXPECT_EQ(exact_col(cycle(5), 2, ColMode::strong).value, 3);
  EXPECT_THROW(exact_col(path(9), 1, ColMode::weak), ResourceError);
}

TEST(Colourings, ExactColMatchesOracle) {
  gen::Rng rng(82);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = gen::random_graph(gen::pick(rng, 1, 6), 0.45, rng);
    int s = gen::pick(rng, 1, 3);
    for (bool strong : {true, false}) {
      ColMode mode = strong ? ColMode::strong : ColMode::weak;
      auto res = exact_col(g, s, mode);
      EXPECT_EQ(res.value, oracle::col(g, s, strong));
      EXPECT_EQ(col_of_order(g, res.order, s, mode), res.value);
    }
    EXPECT_LE(exact_col(g, s, ColMode::strong).value, exact_treewidth(g).width + 1);
  }
}

TEST(Colourings, TransferOnContractedCycle) {
  MinorModel m{cycle(4), cycle(8), {}, {}, 2, false, {}, {}};
  for (int i = 0; i < 4; ++i) {
    m.branch[std::to_string(i)] = {std::to_string(2 * i), std::to_string(2 * i + 1)};
    m.centre[std::to_string(i)] = std::to_string(2 * i);
  }
  ColTransfer t = col_shallow_order(m, natural(8), 1, ColMode::strong);
  EXPECT_EQ(t.sPrime, 5);
  EXPECT_TRUE(t.holds());
  EXPECT_EQ(t.order, natural(4));
}

TEST(Colourings, TransferIdentityModel) {
  Graph g = cycle(6);
  ColTransfer t = col_shallow_order(identity_model(g), natural(6), 2, ColMode::weak);
  EXPECT_EQ(t.order, natural(6));
  EXPECT_EQ(t.sPrime, 2);
  EXPECT_EQ(t.guestCol, t.hostCol);
}

TEST(Colourings, TransferRandomModels) {
  gen::Rng rng(83);
  for (int trial = 0; trial < 60; ++trial) {
    Graph host = gen::random_graph(gen::pick(rng, 2, 8), 0.35, rng);
    MinorModel m = gen::random_model(host, gen::pick(rng, 0, 2), rng);
    auto order = exact_col(host, 1, ColMode::strong).order;
    for (ColMode mode : {ColMode::strong, ColMode::weak}) {
      ColTransfer t = col_shallow_order(m, order, gen::pick(rng, 1, 2), mode);
      EXPECT_TRUE(t.holds()) << t.guestCol << " > " << t.hostCol;
    }
  }
}

TEST(Colourings, Nonrepetitive) {
  ColouringReport bad = verify_nonrepetitive(path(4), labels({"1", "2", "1", "2"}), 2);
  EXPECT_FALSE(bad.verdict);
  EXPECT_EQ(bad.witness.size(), 4u);
  EXPECT_TRUE(verify_nonrepetitive(path(3), labels({"1", "2", "1"}), 2).verdict);
  EXPECT_TRUE(verify_nonrepetitive(complete_graph(5), labels({"a", "b", "c", "d", "e"}), 3).verdict);
}

TEST(Colourings, PCentred) {
  EXPECT_TRUE(verify_p_centred(path(3), labels({"1", "2", "1"}), 2).verdict);
  ColouringReport c4 = verify_p_centred(cycle(4), labels({"a", "b", "a", "b"}), 2);
  EXPECT_FALSE(c4.verdict);
  EXPECT_EQ(c4.witness.size(), 4u);
  EXPECT_TRUE(verify_p_centred(cycle(5), labels({"a", "b", "c", "d", "e"}), 4).verdict);
}
