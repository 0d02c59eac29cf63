#include <gtest/gtest.h>

#include "../support/stats.hpp"
#include "lgd/coupling.hpp"
#include "lgd/errors.hpp"
#include "lgd/graph.hpp"
#include "lgd/random.hpp"

namespace lgd {
namespace {

Graph path(int n) { return generate(GraphFamily::path, {{"n", std::to_string(n)}}); }

TEST(Hamming, Examples) {
  EXPECT_EQ(hamming_distance(Coloring{1, 2, 3}, Coloring{1, 2, 3}), 0u);
  EXPECT_EQ(hamming_distance(Coloring(6, 0), Coloring(6, 1)), 6u);
  EXPECT_EQ(hamming_distance(Coloring{0, 1, 2}, Coloring{0, 2, 2}), 1u);
  EXPECT_THROW(hamming_distance(Coloring{0}, Coloring{0, 1}), ValidationError);
}

TEST(AdjacentPair, Invariants) {
  auto pair = AdjacentPair::from({0, 2, 3}, 0, 1);
  EXPECT_EQ(pair.y, (Coloring{1, 2, 3}));
  EXPECT_EQ(pair.red, 0u);
  EXPECT_THROW(AdjacentPair::from({0, 2, 3}, 0, 0), ValidationError);
  EXPECT_THROW(AdjacentPair::from({0, 2, 3}, 5, 1), ParameterError);
  pair.y[2] = 4;
  EXPECT_THROW(pair.validate(), ValidationError);
}

TEST(Classify, NoRedOrBlue) {
  auto c = classify_nodes(path(4), AdjacentPair::from({0, 2, 3, 4}, 0, 1));
  EXPECT_TRUE(c.b.empty());
  EXPECT_TRUE(c.k.empty());
}

TEST(Classify, SingleRedNeighbor) {
  auto c = classify_nodes(path(4), AdjacentPair::from({0, 0, 3, 4}, 0, 1));
  EXPECT_EQ(c.b, (std::vector<NodeId>{1}));
  EXPECT_EQ(c.k, (std::vector<NodeId>{1, 2}));
}

TEST(Classify, StarWithBlueLeaves) {
  auto g = generate(GraphFamily::star, {{"n", "5"}});
  auto c = classify_nodes(g, AdjacentPair::from({0, 1, 1, 1, 1}, 0, 1));
  EXPECT_EQ(c.b, (std::vector<NodeId>{1, 2, 3, 4}));
  EXPECT_EQ(c.k, (std::vector<NodeId>{1, 2, 3, 4}));
}

TEST(Assign, NoMarks) {
  auto pair = AdjacentPair::from({0, 2, 3}, 0, 1);
  std::vector<std::uint8_t> marked(3, 0);
  auto cp = assign_coupled_proposals(path(3), pair, marked, Coloring{4, 4, 4});
  for (const auto& p : cp.proposals) EXPECT_EQ(p.mode, ProposalMode::unmarked);
  EXPECT_EQ(cp.layers.m.size(), 1u);
  EXPECT_EQ(cp.layers.m[0], (std::vector<NodeId>{0}));
}

TEST(Assign, NeighborDrawingRedIsFlipped) {
  auto pair = AdjacentPair::from({0, 2, 3}, 0, 1);
  std::vector<std::uint8_t> marked{0, 1, 0};
  auto cp = assign_coupled_proposals(path(3), pair, marked, Coloring{4, 0, 4});
  ASSERT_EQ(cp.layers.m.size(), 2u);
  EXPECT_EQ(cp.layers.m[1], (std::vector<NodeId>{1}));
  EXPECT_EQ(cp.layers.f[1], (std::vector<NodeId>{1}));
  EXPECT_EQ(cp.proposals[1].cx, 0u);
  EXPECT_EQ(cp.proposals[1].cy, 1u);
  EXPECT_TRUE(cp.proposals[1].flipped());
}

TEST(Assign, NeighborDrawingOtherColorStopsLayers) {
  auto pair = AdjacentPair::from({0, 2, 3}, 0, 1);
  std::vector<std::uint8_t> marked{0, 1, 1};
  auto cp = assign_coupled_proposals(path(3), pair, marked, Coloring{4, 3, 0});
  ASSERT_EQ(cp.layers.m.size(), 2u);
  EXPECT_EQ(cp.layers.m[1], (std::vector<NodeId>{1}));
  EXPECT_TRUE(cp.layers.f[1].empty());
  EXPECT_EQ(cp.proposals[1].mode, ProposalMode::mirrored);
  EXPECT_FALSE(cp.proposals[1].flipped());
  // Node 2 is never reached and stays consistent.
  EXPECT_EQ(cp.proposals[2].mode, ProposalMode::consistent);
}

TEST(Assign, KNodesAreConsistent) {
  // Node 1 is next to a blue node, so it is in K and never mirrored.
  auto pair = AdjacentPair::from({0, 2, 1}, 0, 1);
  std::vector<std::uint8_t> marked{0, 1, 0};
  auto cp = assign_coupled_proposals(path(3), pair, marked, Coloring{4, 0, 4});
  EXPECT_EQ(cp.proposals[1].mode, ProposalMode::consistent);
  EXPECT_EQ(cp.layers.m.size(), 1u);
}

TEST(CoupledStep, NoMarksDifferOnlyAtV0) {
  auto pair = AdjacentPair::from({0, 2, 3}, 0, 1);
  RoundRandomness rr{{0, 0, 0}, {4, 4, 4}};
  auto step = coupled_step(path(3), pair, rr);
  EXPECT_EQ(step.x_next, pair.x);
  EXPECT_EQ(step.y_next, pair.y);
}

TEST(CoupledStep, V0AcceptsFreeColorInBoth) {
  auto pair = AdjacentPair::from({0, 2, 3}, 0, 1);
  RoundRandomness rr{{1, 0, 0}, {4, 0, 0}};
  auto step = coupled_step(path(3), pair, rr);
  EXPECT_EQ(step.x_next[0], 4u);
  EXPECT_EQ(hamming_distance(step.x_next, step.y_next), 0u);
}

TEST(Lemmas, VacuousPass) {
  auto g = path(3);
  auto pair = AdjacentPair::from({0, 2, 3}, 0, 1);
  RoundRandomness rr{{0, 0, 0}, {0, 0, 0}};
  auto step = coupled_step(g, pair, rr);
  auto report =
      check_flip_path_lemmas(g, pair, rr.marked, step.proposals, step.x_next, step.y_next);
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.differing, 0u);
}

TEST(Lemmas, FlipPathAcceptedInBothChains) {
  auto g = path(3);
  auto pair = AdjacentPair::from({0, 2, 3}, 0, 1);
  RoundRandomness rr{{0, 1, 0}, {0, 1, 0}};
  auto step = coupled_step(g, pair, rr);
  EXPECT_EQ(step.x_next, (Coloring{0, 1, 3}));
  EXPECT_EQ(step.y_next, (Coloring{1, 0, 3}));
  auto report =
      check_flip_path_lemmas(g, pair, rr.marked, step.proposals, step.x_next, step.y_next);
  EXPECT_TRUE(report.pass) << report.violation;
  EXPECT_EQ(report.flip_paths, 1u);
  ASSERT_EQ(report.witnesses.size(), 1u);
  EXPECT_EQ(report.witnesses[0], (std::vector<NodeId>{0, 1}));
}

TEST(Lemmas, AlmostFlipPath) {
  auto g = path(4);
  auto pair = AdjacentPair::from({0, 2, 4, 1}, 0, 1);
  RoundRandomness rr{{0, 1, 1, 0}, {0, 1, 0, 0}};
  auto step = coupled_step(g, pair, rr);
  EXPECT_EQ(step.x_next, (Coloring{0, 1, 0, 1}));
  EXPECT_EQ(step.y_next, (Coloring{1, 2, 4, 1}));
  auto report =
      check_flip_path_lemmas(g, pair, rr.marked, step.proposals, step.x_next, step.y_next);
  EXPECT_TRUE(report.pass) << report.violation;
  EXPECT_EQ(report.flip_paths, 1u);
  EXPECT_EQ(report.almost_paths, 1u);
}

TEST(Lemmas, DetectsUnexplainedDifference) {
  auto g = path(3);
  auto pair = AdjacentPair::from({0, 2, 3}, 0, 1);
  RoundRandomness rr{{0, 0, 0}, {0, 0, 0}};
  auto step = coupled_step(g, pair, rr);
  Coloring tampered = step.y_next;
  tampered[2] = 4;
  auto report = check_flip_path_lemmas(g, pair, rr.marked, step.proposals, step.x_next, tampered);
  EXPECT_FALSE(report.pass);
  EXPECT_NE(report.violation.find("unmarked"), std::string::npos);
}

TEST(Lemmas, HoldOnProperPairs) {
  auto g = generate(GraphFamily::erdos_renyi, {{"n", "50"}, {"p", "0.08"}}, 1);
  const auto q = static_cast<std::uint32_t>(2 * g.max_degree() + 1);
  ChainConfig cfg{q, 0.5, 3};
  auto est = contraction_experiment(g, cfg, 2000, PairSampler::proper_random, true);
  EXPECT_EQ(est.lemma_passed, est.lemma_checked) << est.first_violation.value_or("");
}

TEST(Lemmas, ArbitraryPairViolationsNeedRedOrBlueNeighborOfV0) {
  // Condition (ii) at v0 can reject a K node's non-red/blue proposal in one
  // chain only when a neighbor of v0 already carries red or blue.
  auto g = generate(GraphFamily::cycle, {{"n", "8"}});
  ChainConfig cfg{5, 0.3, 1};
  std::size_t violations = 0;
  for (std::uint64_t t = 0; t < 5000; ++t) {
    auto pair = sample_adjacent_pair(g, 5, PairSampler::uniform_random, 1, t);
    ChainConfig trial = cfg;
    trial.seed = counter_hash(cfg.seed, Stream::trial, t, 0);
    auto rr = draw_round_randomness(trial, 8, 0);
    auto step = coupled_step(g, pair, rr);
    auto report =
        check_flip_path_lemmas(g, pair, rr.marked, step.proposals, step.x_next, step.y_next);
    if (report.pass) continue;
    ++violations;
    bool colored_neighbor = false;
    for (NodeId u : g.neighbors(pair.v0)) {
      colored_neighbor |= pair.x[u] == pair.red || pair.x[u] == pair.blue;
    }
    EXPECT_TRUE(colored_neighbor) << "trial " << t << ": " << report.violation;
  }
  EXPECT_GT(violations, 0u);
}

TEST(Marginals, EachChainProposesUniformly) {
  auto g = generate(GraphFamily::cycle, {{"n", "8"}});
  ChainConfig cfg{5, 0.5, 8};
  std::vector<std::uint64_t> cx(5, 0), cy(5, 0);
  for (std::uint64_t t = 0; t < 20000; ++t) {
    auto pair = sample_adjacent_pair(g, 5, PairSampler::uniform_random, 8, t);
    ChainConfig trial = cfg;
    trial.seed = counter_hash(cfg.seed, Stream::trial, t, 0);
    auto rr = draw_round_randomness(trial, 8, 0);
    auto cp = assign_coupled_proposals(g, pair, rr.marked, rr.proposal);
    for (NodeId v = 0; v < 8; ++v) {
      if (!rr.marked[v]) continue;
      ++cx[cp.proposals[v].cx];
      ++cy[cp.proposals[v].cy];
    }
  }
  EXPECT_GT(test::chi_square_p_value(test::chi_square_uniform(cx), 4), 0.001);
  EXPECT_GT(test::chi_square_p_value(test::chi_square_uniform(cy), 4), 0.001);
}

TEST(PairSampling, Deterministic) {
  auto g = generate(GraphFamily::cycle, {{"n", "8"}});
  for (auto sampler : {PairSampler::uniform_random, PairSampler::proper_random}) {
    auto a = sample_adjacent_pair(g, 5, sampler, 4, 17);
    auto b = sample_adjacent_pair(g, 5, sampler, 4, 17);
    EXPECT_EQ(a.x, b.x);
    EXPECT_EQ(a.v0, b.v0);
    EXPECT_EQ(a.blue, b.blue);
  }
}

TEST(PairSampling, ProperPairsAreProper) {
  auto g = generate(GraphFamily::complete, {{"n", "5"}});
  for (std::uint64_t t = 0; t < 50; ++t) {
    auto pair = sample_adjacent_pair(g, 11, PairSampler::proper_random, 2, t);
    EXPECT_TRUE(is_proper(g, pair.x));
    EXPECT_TRUE(is_proper(g, pair.y));
  }
  EXPECT_THROW(sample_adjacent_pair(g, 4, PairSampler::proper_random, 2, 0), ParameterError);
  EXPECT_THROW(sample_adjacent_pair(g, 1, PairSampler::uniform_random, 2, 0), ParameterError);
}

TEST(PairSampling, Names) {
  EXPECT_EQ(parse_pair_sampler("proper_random"), PairSampler::proper_random);
  EXPECT_EQ(pair_sampler_name(PairSampler::uniform_random), "uniform_random");
  EXPECT_THROW(parse_pair_sampler("worst_case"), ParameterError);
}

TEST(Contraction, ZeroTrials) {
  auto g = generate(GraphFamily::cycle, {{"n", "8"}});
  auto est = contraction_experiment(g, {5, 0.5, 1}, 0, PairSampler::uniform_random);
  EXPECT_EQ(est.trials, 0u);
  EXPECT_EQ(est.lemma_checked, 0u);
}

TEST(Contraction, NoMarksKeepsDistanceOne) {
  auto g = generate(GraphFamily::cycle, {{"n", "8"}});
  auto est = contraction_experiment(g, {5, 1e-6, 1}, 2000, PairSampler::uniform_random);
  EXPECT_NEAR(est.mean, 1.0, 1e-2);
}

TEST(Contraction, CompleteGraphContractsOnProperPairs) {
  auto g = generate(GraphFamily::complete, {{"n", "5"}});
  auto est = contraction_experiment(g, {11, 0.25, 5}, 20000, PairSampler::proper_random);
  EXPECT_LT(est.mean + 3 * est.stderr_mean, 1.0);
  EXPECT_EQ(est.lemma_passed, est.lemma_checked);
}

}  // namespace
}  // namespace lgd
