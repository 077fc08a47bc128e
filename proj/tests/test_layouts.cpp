#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "support/random_instances.hpp"

using namespace shallow;

namespace {

MinorModel c8_to_c4() {
  MinorModel m{cycle(4), cycle(8), {}, {}, 2, false, {}, {}};
  for (int i = 0; i < 4; ++i) {
    VertexId u = std::to_string(i);
    m.branch[u] = {std::to_string(2 * i), std::to_string(2 * i + 1)};
    m.centre[u] = std::to_string(2 * i);
  }
  return m;
}

}  // namespace

TEST(Layouts, PathInOrderIsOneQueue) {
  QueueLayout q = layout_for_order(path(5), {"0", "1", "2", "3", "4"});
  auto rep = verify_layout(path(5), q);
  EXPECT_TRUE(rep.verdict);
  EXPECT_EQ(rep.queues, 1);
}

TEST(Layouts, NestingRejected) {
  QueueLayout q{{"0", "1", "2", "3"}, {{{"0", "1"}, 0}, {{"1", "2"}, 0}, {{"2", "3"}, 0}, {{"0", "3"}, 0}}, false};
  Verdict v = verify_layout(cycle(4), q).verdict;
  EXPECT_FALSE(v);
  EXPECT_EQ(v.clause, "nest");
  q.order.pop_back();
  EXPECT_EQ(verify_layout(cycle(4), q).verdict.clause, "order");
}

TEST(Layouts, CompleteStrictLayouts) {
  QueueLayout k4 = complete_strict_layout(4);
  auto rep = verify_layout(complete_graph(4), k4);
  EXPECT_TRUE(rep.verdict);
  EXPECT_EQ(rep.queues, 3);
  EXPECT_EQ(queue_count(complete_strict_layout(1)), 0);
  EXPECT_EQ(queue_count(complete_strict_layout(2)), 1);
  QueueLayout k5 = complete_strict_layout(5);
  EXPECT_TRUE(k5.strict);
  EXPECT_EQ(verify_layout(complete_graph(5), k5).queues, 4);
  // Merging queues 1 and 2 creates an overlap on a shared left end.
  for (auto& [e, i] : k4.queue)
    if (i == 2) i = 1;
  EXPECT_EQ(verify_layout(complete_graph(4), k4).verdict.clause, "overlap");
}

TEST(Layouts, ExactQueueNumbers) {
  EXPECT_EQ(exact_queue_number(complete_graph(4)).queues, 2);
  EXPECT_EQ(exact_queue_number(complete_graph(6)).queues, 3);
  EXPECT_EQ(exact_queue_number(cycle(6)).queues, 1);
  EXPECT_THROW(exact_queue_number(path(10)), ResourceError);
  gen::Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    Graph t = gen::random_tree(gen::pick(rng, 2, 9), rng);
    auto res = exact_queue_number(t);
    EXPECT_EQ(res.queues, 1);
    EXPECT_TRUE(verify_layout(t, res.layout).verdict);
  }
}

TEST(Layouts, ExactQueueNumberMatchesRainbowOracle) {
  gen::Rng rng(72);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = gen::random_graph(gen::pick(rng, 1, 7), 0.5, rng);
    auto res = exact_queue_number(g);
    EXPECT_EQ(res.queues, oracle::queue_number(g));
    auto rep = verify_layout(g, res.layout);
    EXPECT_TRUE(rep.verdict);
    EXPECT_LE(rep.queues, res.queues);
  }
}

TEST(Layouts, LayoutForOrderIsOptimalForTheOrder) {
  gen::Rng rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = gen::random_graph(gen::pick(rng, 2, 10), 0.4, rng);
    std::vector<int> perm(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) perm[i] = i;
    gen::shuffle(perm, rng);
    std::vector<VertexId> order;
    std::vector<int> pos(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) {
      order.push_back(g.id(perm[i]));
      pos[perm[i]] = i;
    }
    QueueLayout q = layout_for_order(g, order);
    EXPECT_TRUE(verify_layout(g, q).verdict);
    EXPECT_EQ(queue_count(q), oracle::rainbow(g, pos));
  }
}

TEST(Layouts, QueueShallowOnContractedCycle) {
  QueueLayout host = exact_queue_number(cycle(8)).layout;
  ASSERT_EQ(queue_count(host), 1);
  QueueShallowResult res = queue_shallow(c8_to_c4(), host);
  auto rep = verify_layout(cycle(4), res.layout);
  EXPECT_TRUE(rep.verdict);
  EXPECT_LE(BigInt(rep.queues), bounds::queue_shallow(1, 1));
  EXPECT_EQ(bounds::queue_shallow(1, 1), 8);
  EXPECT_EQ(exact_queue_number(cycle(4)).queues, 1);
}

TEST(Layouts, QueueShallowIdentityIsInducedLayout) {
  Graph g = cycle(6);
  QueueLayout host = exact_queue_number(g).layout;
  QueueShallowResult res = queue_shallow(identity_model(g), host);
  EXPECT_EQ(res.layout.order, host.order);
  EXPECT_EQ(queue_count(res.layout), 1);
}

TEST(Layouts, QueueShallowRandomModels) {
  gen::Rng rng(74);
  for (int trial = 0; trial < 60; ++trial) {
    Graph host = gen::random_graph(gen::pick(rng, 2, 9), 0.4, rng);
    int r = gen::pick(rng, 1, 2);
    MinorModel m = gen::random_model(host, r, rng);
    QueueLayout hl = exact_queue_number(host).layout;
    QueueShallowResult res = queue_shallow(m, hl);
    auto rep = verify_layout(m.guest, res.layout);
    EXPECT_TRUE(rep.verdict);
    EXPECT_LE(BigInt(rep.queues), bounds::queue_shallow(r, res.hostQueues));
  }
}
