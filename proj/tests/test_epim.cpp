#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bridgekit/census.hpp"
#include "bridgekit/epim.hpp"
#include "bridgekit/error.hpp"
#include "json.hpp"

using namespace bridgekit;

namespace {

EvenWord ew(std::vector<Entry> v) { return EvenWord(std::move(v)); }
const EvenWord kTrefoil = EvenWord({2, -2});

OrsParams params(EvenWord target, int r, std::vector<int> eps, std::vector<Entry> c) {
  return OrsParams{std::move(target), r, std::move(eps), std::move(c)};
}

std::vector<std::string> image_names(const std::vector<EpiWitness>& ws) {
  std::vector<std::string> out;
  for (const auto& k : image_knots(ws)) out.push_back(display_name(k));
  return out;
}

}  // namespace

TEST(Compose, Examples) {
  EXPECT_EQ(ors_compose(params(kTrefoil, 1, {1, 1, 1}, {1, -1})), ew({2, -2, 2, -2, 2, -2, 2, -2}));
  EXPECT_EQ(ors_compose(params(kTrefoil, 1, {1, 1, 1}, {1, -2})), ew({2, -2, 2, -2, 2, -4, 2, -2}));
  EXPECT_EQ(ors_compose(params(kTrefoil, 1, {1, 1, 1}, {0, -1})), ew({2, -4, 2, -2, 2, -2}));
}

TEST(Compose, SwappedSeparatorsGiveTheSameKnot) {
  const EvenWord a = ors_compose(params(kTrefoil, 1, {1, 1, 1}, {2, -1}));
  const EvenWord b = ors_compose(params(kTrefoil, 1, {1, 1, 1}, {1, -2}));
  EXPECT_EQ(a, rev_neg(b));
  EXPECT_EQ(KnotClass(a), KnotClass(b));
}

TEST(Compose, InvalidParameters) {
  EXPECT_THROW(ors_compose(params(kTrefoil, 1, {-1, 1, 1}, {1, -1})), InvalidParams);
  EXPECT_THROW(ors_compose(params(kTrefoil, 1, {1, 1}, {1, -1})), InvalidParams);
  EXPECT_THROW(ors_compose(params(kTrefoil, 1, {1, 1, 1}, {1})), InvalidParams);
  EXPECT_THROW(ors_compose(params(kTrefoil, 0, {1}, {})), InvalidParams);
  EXPECT_THROW(ors_compose(params(kTrefoil, 1, {1, -1, 1}, {0, 1})), MergeCancellation);
  EXPECT_THROW(params(kTrefoil, 1, {1, -1, 1}, {0, 1}).validate(), InvalidParams);
  EXPECT_THROW(ors_compose(params(kTrefoil, 1, {1, 2, 1}, {1, 1})), InvalidParams);
}

TEST(Targets, Examples) {
  EXPECT_EQ(image_names(epi_targets(KnotClass(ew({2, -2, 2, -2, 2, -2, 2, -2})))), std::vector<std::string>{"3_1"});
  EXPECT_EQ(image_names(epi_targets(KnotClass(ew({2, -2, 2, -2, 2, -2, 2, -2, 2, -2, 2, -2, 2, -2})))),
            (std::vector<std::string>{"3_1", "5_1"}));
  EXPECT_TRUE(epi_targets(KnotClass(ew({2, 2}))).empty());
}

TEST(AdmitsEpi, Examples) {
  const auto w = admits_epi(KnotClass(ew({2, -2, 2, -2, 2, -4, 2, -2})), KnotClass(kTrefoil));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->params.r, 1);
  EXPECT_EQ(w->params.cvec, (std::vector<Entry>{1, -2}));
  EXPECT_FALSE(admits_epi(KnotClass(kTrefoil), KnotClass(kTrefoil)));
  EXPECT_TRUE(admits_epi(KnotClass(ew({2, -4, 4, -2})), KnotClass(kTrefoil)));
  EXPECT_FALSE(admits_epi(KnotClass(ew({2, 2})), KnotClass(kTrefoil)));
}

TEST(AdmitsEpi, ChiralityMatters) {
  // T(9,2) maps onto exactly one of the two trefoils.
  const KnotClass t9(ew({2, -2, 2, -2, 2, -2, 2, -2}));
  const bool right = admits_epi(t9, KnotClass(ew({2, -2}))).has_value();
  const bool left = admits_epi(t9, KnotClass(ew({-2, 2}))).has_value();
  EXPECT_NE(right, left);
}

TEST(Minimal, Examples) {
  EXPECT_TRUE(is_minimal(KnotClass(kTrefoil)));
  EXPECT_FALSE(is_minimal(KnotClass(ew({2, -2, 2, -2, 2, -2, 2, -2}))));
  EXPECT_TRUE(is_minimal(KnotClass(ew({2, -2, 2, -2, 2, -2}))));
}

TEST(Audit, Examples) {
  const auto torus = admits_epi(KnotClass(ew({2, -2, 2, -2, 2, -2, 2, -2})), KnotClass(kTrefoil));
  ASSERT_TRUE(torus);
  EXPECT_EQ(audit_inequality(*torus), (InequalityAudit{0, 0, 0, 0, 0}));

  const auto a1 = admits_epi(KnotClass(ew({2, -2, 2, -2, 2, -4, 2, -2})), KnotClass(kTrefoil));
  ASSERT_TRUE(a1);
  EXPECT_EQ(audit_inequality(*a1), (InequalityAudit{0, 1, 0, 0, 1}));

  const auto b3 = admits_epi(KnotClass(ew({2, -2, -2, 2, -2, 2, -2, 2})), KnotClass(kTrefoil));
  ASSERT_TRUE(b3);
  EXPECT_EQ(audit_inequality(*b3), (InequalityAudit{0, 0, 0, 1, 1}));
}

TEST(Audit, ZeroSeparatorCountsTowardZeroTerm) {
  const auto a = audit_inequality(params(kTrefoil, 1, {1, 1, 1}, {0, -1}));
  EXPECT_EQ(a.term_zero, 1);
  EXPECT_EQ(a.slack, 1);
}

TEST(Properties, InequalityOnRandomParameters) {
  std::mt19937_64 rng(7);
  std::vector<EvenWord> targets;
  for (int c = 3; c <= 9; ++c) {
    for (auto& w : enumerate_words(c)) targets.push_back(std::move(w));
  }
  std::uniform_int_distribution<std::size_t> pick(0, targets.size() - 1);
  std::uniform_int_distribution<int> rdist(1, 2), cdist(-3, 3);
  std::bernoulli_distribution coin(0.5);
  for (int n = 0; n < 10000; ++n) {
    OrsParams p;
    p.target = targets[pick(rng)];
    p.r = rdist(rng);
    p.eps = {1};
    for (int j = 0; j < 2 * p.r; ++j) {
      const Entry c = cdist(rng);
      p.cvec.push_back(c);
      p.eps.push_back(c == 0 ? p.eps.back() : (coin(rng) ? 1 : -1));
    }
    const EvenWord big = ors_compose(p);
    const KnotClass k(big), kp(p.target);
    ASSERT_GE(k.braid(), 3 * kp.braid() - 4) << describe_params(p);
    ASSERT_GE(k.crossing(), 3 * kp.crossing()) << describe_params(p);
    const InequalityAudit a = audit_inequality(p);
    ASSERT_GE(a.term_copies, 0);
    ASSERT_GE(a.term_cbudget, 0);
    ASSERT_GE(a.term_zero, 0);
    ASSERT_GE(a.term_signs, 0);
    ASSERT_EQ(a.slack, k.braid() - 3 * kp.braid() + 4);
    ASSERT_EQ(a.term_copies + a.term_cbudget + a.term_zero + a.term_signs, a.slack);
  }
}

TEST(Properties, WitnessesRecomposeAndRespectBounds) {
  for (int c = 9; c <= 13; ++c) {
    for (const auto& w : enumerate_words(c)) {
      const KnotClass k(w);
      for (const auto& wit : epi_targets(k)) {
        ASSERT_EQ(KnotClass(ors_compose(wit.params)), k);
        ASSERT_EQ(wit.big, k);
        ASSERT_EQ(KnotClass(wit.params.target), wit.small);
        ASSERT_NE(wit.small, k);
        ASSERT_LE(3 * wit.small.crossing(), k.crossing());
        ASSERT_EQ(wit.audit, audit_inequality(wit.params));
      }
    }
  }
}

TEST(Properties, SearchFindsEveryComposition) {
  // Forward generation: each composition of a small target with bounded
  // separators must be detected by the search on the composed knot.
  const std::vector<EvenWord> small = {ew({2, -2}), ew({-2, 2}), ew({2, 2})};
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> cdist(-2, 2);
  std::bernoulli_distribution coin(0.5);
  for (int n = 0; n < 200; ++n) {
    OrsParams p;
    p.target = small[static_cast<std::size_t>(n) % small.size()];
    p.r = 1;
    p.eps = {1};
    for (int j = 0; j < 2; ++j) {
      const Entry c = cdist(rng);
      p.cvec.push_back(c);
      p.eps.push_back(c == 0 ? p.eps.back() : (coin(rng) ? 1 : -1));
    }
    const KnotClass k(ors_compose(p));
    if (k.crossing() > 16) continue;
    ASSERT_TRUE(admits_epi(k, KnotClass(p.target))) << describe_params(p);
  }
}

TEST(Budget, ExceededCarriesPartialResults) {
  const KnotClass k(ew({2, -2, 2, -2, 2, -2, 2, -2, 2, -2, 2, -2, 2, -2}));
  try {
    epi_targets(k, SearchBudget{5});
    FAIL() << "budget not enforced";
  } catch (const BudgetExceeded& e) {
    EXPECT_LE(e.partial().size(), 2u);
  }
}

TEST(Graph, SmallGraphExports) {
  const EpiGraph g = epi_graph(9);
  EXPECT_EQ(g.nodes.size(), 2u + 1 + 4 + 5 + 14 + 21 + 48);
  // Edges at c <= 9: T(9,2), the 3A2 knot and the 4B3 knot, each onto one trefoil.
  std::set<std::pair<EvenWord, EvenWord>> pairs;
  for (const auto& e : g.edges) pairs.emplace(e.big.canon(), e.small.canon());
  EXPECT_EQ(pairs.size(), 6u);
  const std::string dot = graph_to_dot(g);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  const auto j = nlohmann::json::parse(graph_to_json(g));
  EXPECT_EQ(j["nodes"].size(), g.nodes.size());
  EXPECT_EQ(j["edges"].size(), g.edges.size());
  EXPECT_EQ(graph_to_json(g), graph_to_json(epi_graph(9)));
}

TEST(Json, WitnessCarriesParametersAndAudit) {
  const auto w = admits_epi(KnotClass(ew({2, -2, 2, -2, 2, -4, 2, -2})), KnotClass(kTrefoil));
  ASSERT_TRUE(w);
  const auto j = nlohmann::json::parse(witness_to_json(*w));
  EXPECT_EQ(j["cvec"], nlohmann::json::parse("[1,-2]"));
  EXPECT_TRUE(j.contains("audit"));
}
