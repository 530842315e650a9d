#include "doctest.h"
#include "oracles.hpp"
#include "subring_oracle.hpp"

#include "fusion/providers.hpp"
#include "fusion/ring_spec.hpp"
#include "fusion/torsion.hpp"

using namespace fusion;

namespace {

Budget budget_of(std::size_t irreducibles, std::size_t label_size = 8, std::size_t rounds = 32) {
  Budget b;
  b.max_irreducibles = irreducibles;
  b.max_label_size = label_size;
  b.max_rounds = rounds;
  return b;
}

std::set<std::string> ids(const LabelSet& s) {
  std::set<std::string> out;
  for (const auto& u : s) out.insert(u.id);
  return out;
}

bool subset(const LabelSet& a, const LabelSet& b) {
  for (const auto& u : a)
    if (!b.count(u)) return false;
  return true;
}

const std::vector<std::string> kSmallFiniteRings{
    "group:Z2", "group:Z3", "group:Z4", "group:Z5", "group:Z6", "group:Z7", "group:Z8", "group:S3",
    "group:D4", "group:Q8", "char:S3",  "char:D4",  "char:Q8",  "char:A4",  "char:S4",  "prod(group:Z2,group:Z2)",
    "prod(char:S3,group:Z2)"};

}  // namespace

TEST_CASE("generated subrings of finite rings are the smallest closed supersets") {
  for (const auto& spec : kSmallFiniteRings) {
    CAPTURE(spec);
    const auto ring = parse_provider(spec);
    const auto closed = oracle::closed_subsets(*ring);
    const auto all = ring->all_labels();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
      std::vector<IrrLabel> gens;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (mask >> i & 1) gens.push_back(all[i]);
      const Subcategory s = generated_subring(*ring, gens, budget_of(64));
      CHECK(s.saturated());
      LabelSet smallest = LabelSet(all.begin(), all.end());
      for (const auto& c : closed) {
        bool contains_gens = true;
        for (const auto& g : gens) contains_gens = contains_gens && c.count(g);
        if (contains_gens && c.size() < smallest.size()) smallest = c;
      }
      CHECK(s.labels == smallest);
    }
  }
}

TEST_CASE("closure kinds are nested, monotone and idempotent") {
  for (const char* spec : {"group:S3", "group:D4", "group:Q8", "char:S4", "char:D4", "uqsu11", "word:Z2*Z2"}) {
    CAPTURE(spec);
    const auto ring = parse_provider(spec);
    const Budget b = budget_of(16, 4, 16);
    const auto labels = ring->enumerate(8);
    for (std::size_t i = 1; i < labels.size(); ++i) {
      const std::vector<IrrLabel> X{labels[i]};
      const std::vector<IrrLabel> Y{labels[i], labels[(i * 3) % labels.size()]};
      const auto gen = generated_subring(*ring, X, b);
      const auto normal = normal_forcing_closure(*ring, X, b);
      const auto central = central_closure(*ring, X, b);
      CHECK(subset(gen.labels, normal.labels));
      CHECK(subset(normal.labels, central.labels));
      CHECK(subset(gen.labels, generated_subring(*ring, Y, b).labels));
      if (gen.saturated()) {
        const std::vector<IrrLabel> again(gen.labels.begin(), gen.labels.end());
        CHECK(generated_subring(*ring, again, b).labels == gen.labels);
      }
    }
  }
}

TEST_CASE("central and normal-forcing closures in a group ring are normal closures") {
  const auto ring = builtin_group_ring("S3");
  const Budget b = budget_of(64);
  auto conjugation_closure = [&](const std::string& g) {
    std::set<std::string> out{"e"};
    bool grown = true;
    while (grown) {
      grown = false;
      std::vector<std::string> current(out.begin(), out.end());
      for (const auto& x : current)
        for (const auto& h : ring->all_labels()) {
          const auto c = ring->product(ring->product(ring->inverse(h), ring->label(g)), h);
          for (const auto& y : {ring->product(ring->label(x), c).id, c.id}) grown = out.insert(y).second || grown;
        }
    }
    return out;
  };
  for (const char* g : {"(12)", "(123)", "e"}) {
    CAPTURE(g);
    const auto expected = conjugation_closure(g);
    CHECK(ids(central_closure(*ring, {ring->label(g)}, b).labels) == expected);
    CHECK(ids(normal_forcing_closure(*ring, {ring->label(g)}, b).labels) == expected);
  }
  CHECK(generated_subring(*ring, {ring->label("(12)")}, b).labels.size() == 2);
}

TEST_CASE("budget exhaustion is reported with a frontier") {
  const auto ring = suq2_ring();
  const Subcategory s = generated_subring(*ring, {ring->label("u1")}, budget_of(64, 5));
  CHECK(s.status == ClosureStatus::BudgetExceeded);
  CHECK(s.labels.size() == 6);
  CHECK(s.frontier.count(ring->label("u6")));
  const Subcategory r = generated_subring(*ring, {ring->label("u2")}, budget_of(64, 64, 2));
  CHECK(r.status == ClosureStatus::BudgetExceeded);
}

TEST_CASE("torsion in word groups follows element orders") {
  for (const char* spec : {"word:Z2*Z2", "word:Z2*Z", "word:Z3*Z", "word:Z*Z"}) {
    CAPTURE(spec);
    const auto ring = parse_provider(spec);
    const auto* wg = dynamic_cast<const WordGroupRing*>(ring.get());
    oracle::FreeCyclicProduct g;
    for (const auto& f : wg->spec().factors) g.orders.push_back(f ? static_cast<int>(*f) : 0);
    for (const auto& w : g.ball(4)) {
      const IrrLabel u = ring->label(g.render(w));
      const TorsionVerdict v = is_torsion(*ring, u, budget_of(64));
      const auto order = g.order_up_to(w, 64);
      if (order) {
        REQUIRE(v.kind == TorsionVerdict::Kind::Torsion);
        CHECK(v.closure->labels.size() == static_cast<std::size_t>(*order));
      } else {
        CHECK(v.kind == TorsionVerdict::Kind::NonTorsion);
        CHECK_FALSE(v.witness.empty());
      }
    }
  }
}

TEST_CASE("U_q(su(1,1)) torsion set and closures") {
  const auto ring = uq_su11_ring();
  const Budget b = budget_of(20);
  const TorsionReport r = torsion_subcategory(*ring, b);
  std::set<std::string> torsion;
  for (const auto& u : r.torsion) torsion.insert(u.id);
  CHECK(torsion == std::set<std::string>{"iota", "iota-1"});
  CHECK(ids(r.torsion_set.labels) == torsion);
  CHECK(r.non_torsion.empty());
  CHECK(r.unknown.size() == 18);
  CHECK(ids(r.torsion_set.frontier).size() == 18);

  const IrrLabel j = ring->label("iota-1");
  const Subcategory gen = generated_subring(*ring, {j}, b);
  CHECK(gen.saturated());
  CHECK(ids(gen.labels) == torsion);
  CHECK(central_closure(*ring, {j}, b).contains(ring->label("u-2")));
  const Subcategory nf = normal_forcing_closure(*ring, {j}, b);
  CHECK(nf.saturated());
  CHECK(ids(nf.labels) == torsion);
  CHECK(normality_consistency(*ring, gen.labels, 20).empty());
}

TEST_CASE("normality_consistency finds non-normal subsets") {
  const auto ring = builtin_group_ring("S3");
  LabelSet s{ring->label("e"), ring->label("(12)")};
  const auto violations = normality_consistency(*ring, s, 6);
  CHECK_FALSE(violations.empty());
  for (const auto& v : violations) CHECK(v.v.id == "(12)");
}

TEST_CASE("torsion reports are deterministic") {
  const auto ring = parse_provider("free(so3,word:Z2)");
  const auto a = torsion_subcategory(*ring, budget_of(30));
  const auto b = torsion_subcategory(*ring, budget_of(30));
  REQUIRE(a.verdicts.size() == b.verdicts.size());
  for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
    CHECK(a.verdicts[i].first == b.verdicts[i].first);
    CHECK(a.verdicts[i].second.kind == b.verdicts[i].second.kind);
  }
}

TEST_CASE("N-sequences of free products of cyclic groups") {
  struct Case {
    const char* spec;
    std::vector<int> orders;
    std::size_t degree;
    IdentityComponent component;
    std::vector<oracle::FreeCyclicProduct::Word> torsion_seeds;
  };
  const std::vector<Case> cases{
      {"word:Z2*Z2", {2, 2}, 1, IdentityComponent::TotallyDisconnected, {{{0, 1}}, {{1, 1}}}},
      {"word:Z2*Z", {2, 0}, 1, IdentityComponent::Proper, {{{0, 1}}}},
      {"word:Z3*Z", {3, 0}, 1, IdentityComponent::Proper, {{{0, 1}}}},
      {"word:Z*Z", {0, 0}, 0, IdentityComponent::Connected, {}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.spec);
    const auto ring = parse_provider(c.spec);
    const NSequenceReport r = n_sequence_cocommutative(*ring, 3, budget_of(64, 6));
    REQUIRE(r.torsion_degree);
    CHECK(*r.torsion_degree == c.degree);
    CHECK(r.identity_component == c.component);
    REQUIRE(r.stages.size() >= 2);
    CHECK(r.stages[0].trivial);
    oracle::FreeCyclicProduct g{c.orders};
    const auto expected = c.torsion_seeds.empty() ? std::set<std::string>{"1"}
                                                  : g.normal_closure(c.torsion_seeds, 6, 6, 8);
    CHECK(ids(r.stages[1].approximant.labels) == expected);
  }
}

TEST_CASE("N-sequence of a finite group ring") {
  const auto ring = builtin_group_ring("S3");
  const NSequenceReport r = n_sequence_cocommutative(*ring, 3, budget_of(64));
  REQUIRE(r.torsion_degree);
  CHECK(*r.torsion_degree == 1);
  CHECK(r.stages[1].whole_group);
  CHECK(r.identity_component == IdentityComponent::TotallyDisconnected);
  CHECK_THROWS_AS(n_sequence_cocommutative(*suq2_ring(), 3, budget_of(64)), UnsupportedProvider);
}

TEST_CASE("dimension ideals recover every subring of the small finite rings") {
  std::size_t checked = 0;
  for (const auto& spec : kSmallFiniteRings) {
    CAPTURE(spec);
    const auto ring = parse_provider(spec);
    REQUIRE(*ring->cardinality() <= 8);
    for (const auto& closed : oracle::closed_subsets(*ring)) {
      const Subcategory A = generated_subring(*ring, std::vector<IrrLabel>(closed.begin(), closed.end()), budget_of(64));
      REQUIRE(A.labels == closed);
      CHECK(dimension_ideal_recover(*ring, A) == closed);
      ++checked;
    }
  }
  CHECK(checked > 50);
  const auto s3 = builtin_character_ring("S3");
  const Subcategory A = generated_subring(*s3, {s3->label("sgn")}, budget_of(64));
  CHECK(ids(dimension_ideal_recover(*s3, A)) == std::set<std::string>{"1", "sgn"});
  CHECK_THROWS_AS(dimension_ideal_recover(*suq2_ring(), A), NotFinite);
}

TEST_CASE("A_u ascending chain for d = 1..4") {
  const auto ring = au_ring();
  const Budget b = budget_of(64);
  const ChainReport r = ascending_chain_probe(*ring, au_balanced_sequence(*ring), 4, b);
  REQUIRE(r.steps.size() == 4);
  CHECK(r.strictly_increasing_up_to == 4);
  const auto X = au_balanced_sequence(*ring);
  for (std::size_t d = 1; d <= 4; ++d) {
    const ChainStep& s = r.steps[d - 1];
    CHECK(s.length_cap == d + 3);
    REQUIRE(s.witness);
    CHECK(s.witness->id == std::string(d + 1, 'U') + std::string(d + 1, 'u'));
    CHECK(s.witness_absent);
    CHECK(s.witness_in_next_generators);
    // Independent balance check: count letters in the truncated closure.
    Budget capped = b;
    capped.max_label_size = d + 3;
    const Subcategory closure = generated_subring(*ring, X(d), capped);
    CHECK(closure.labels.size() == s.closure_size);
    CHECK_FALSE(closure.contains(*s.witness));
    for (const auto& u : closure.labels) {
      const auto up = std::count(u.id.begin(), u.id.end(), 'u');
      const auto down = std::count(u.id.begin(), u.id.end(), 'U');
      CHECK(up == down);
    }
    REQUIRE(s.balanced);
    CHECK(*s.balanced);
  }
}
