#include "doctest.h"
#include "oracles.hpp"

#include "fusion/axioms.hpp"
#include "fusion/providers.hpp"
#include "fusion/ring_spec.hpp"

#include <fstream>
#include <random>

using namespace fusion;

namespace {

Budget budget_with(std::size_t n) {
  Budget b;
  b.max_irreducibles = n;
  return b;
}

std::string fixture(const std::string& name) { return std::string(FUSION_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("every builtin ring satisfies the fusion axioms") {
  for (const char* spec : {"suq2", "so3", "uqsu11", "au", "au:3", "word:Z2*Z2", "word:Z3*Z", "word:Z*Z",
                           "free(so3,word:Z2)", "free(word:Z2,word:Z3)", "prod(suq2,word:Z2)", "prod(so3,uqsu11)",
                           "group:S3", "group:D4", "group:Q8", "group:Z5", "char:S3", "char:D4", "char:Q8",
                           "char:A4", "char:S4"}) {
    CAPTURE(spec);
    const auto ring = parse_provider(spec);
    const AxiomReport r = check_axioms(*ring, budget_with(24));
    CHECK(r.total_violations == 0);
    CHECK(r.labels_checked > 0);
  }
}

namespace {

// Shifts one fusion multiplicity of SU_q(2) so that the harness has something to find.
class BrokenRing final : public FusionProvider {
 public:
  using FusionProvider::conj;
  using FusionProvider::decompose;
  std::string name() const override { return "broken"; }
  IrrLabel unit() const override { return base_->unit(); }
  std::optional<IrrLabel> find(std::string_view id) const override { return base_->find(id); }
  IrrLabel conj(const IrrLabel& u) const override { return base_->conj(u); }
  Decomposition decompose(const IrrLabel& u, const IrrLabel& v) const override {
    Decomposition d = base_->decompose(u, v);
    if (u.id == "u1" && v.id == "u2") d.add(base_->label("u1"), 1);
    return d;
  }
  std::size_t label_size(const IrrLabel& u) const override { return base_->label_size(u); }
  std::vector<IrrLabel> labels_up_to_size(std::size_t s) const override { return base_->labels_up_to_size(s); }
  std::vector<IrrLabel> generators() const override { return base_->generators(); }

 private:
  ProviderPtr base_ = suq2_ring();
};

}  // namespace

TEST_CASE("the axiom harness reports a planted multiplicity error") {
  BrokenRing ring;
  const AxiomReport r = check_axioms(ring, budget_with(8));
  CHECK_FALSE(r.ok());
  bool dimension = false, frobenius = false;
  for (const auto& v : r.violations) {
    dimension = dimension || v.identity == "dimension";
    frobenius = frobenius || v.identity == "frobenius";
  }
  CHECK(dimension);
  CHECK(frobenius);
}

TEST_CASE("axiom checks are deterministic for a fixed seed") {
  const auto ring = parse_provider("free(so3,word:Z2)");
  AxiomCheckOptions o;
  o.seed = 99;
  const auto a = check_axioms(*ring, budget_with(20), o);
  const auto b = check_axioms(*ring, budget_with(20), o);
  CHECK(a.associativity_checked == b.associativity_checked);
  CHECK(a.total_violations == b.total_violations);
}

TEST_CASE("enumerate(n) is a prefix of enumerate(n+1)") {
  for (const char* spec : {"suq2", "uqsu11", "au", "word:Z2*Z", "free(so3,word:Z2)", "prod(suq2,word:Z2)"}) {
    CAPTURE(spec);
    const auto ring = parse_provider(spec);
    const auto big = ring->enumerate(40);
    for (std::size_t n : {1, 5, 17, 39}) {
      const auto small = ring->enumerate(n);
      REQUIRE(small.size() == n);
      for (std::size_t i = 0; i < n; ++i) CHECK(small[i] == big[i]);
    }
    CHECK(big.front() == ring->unit());
  }
}

TEST_CASE("SU_q(2) fusion matches weight peeling") {
  const auto ring = suq2_ring();
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= 8; ++m) {
      const auto expected = oracle::su2_tensor(n, m);
      const Decomposition d = ring->decompose(ring->make(n), ring->make(m));
      CHECK(d.size() == expected.size());
      for (const auto& [k, mult] : expected) CHECK(d.multiplicity(ring->make(k)) == mult);
    }
  CHECK(ring->label("u3").dim == 4);
  CHECK_FALSE(ring->find("u01"));
}

TEST_CASE("SO(3) is the even part of SU_q(2)") {
  const auto so3 = so3_ring();
  const auto su = suq2_ring();
  for (std::size_t k = 0; k <= 5; ++k)
    for (std::size_t l = 0; l <= 5; ++l) {
      const Decomposition a = so3->decompose(so3->make(k), so3->make(l));
      const Decomposition b = su->decompose(su->make(2 * k), su->make(2 * l));
      CHECK(a.size() == b.size());
      for (const auto& [w, mult] : b) CHECK(a.multiplicity(so3->make(su->weight(w) / 2)) == mult);
    }
  CHECK(so3->label("v2").dim == 5);
}

TEST_CASE("U_q(su(1,1)) fusion: sign rule and forgetful map to SU_q(2)") {
  const auto ring = uq_su11_ring();
  const auto su = suq2_ring();
  // Worked by hand from the sign rule.
  auto d = ring->decompose(ring->label("u+1"), ring->label("u+1"));
  CHECK(d == [&] {
    Decomposition e;
    e.add(ring->label("iota-1"), 1);
    e.add(ring->label("u-2"), 1);
    return e;
  }());
  d = ring->decompose(ring->label("u+1"), ring->label("u-1"));
  CHECK(d.multiplicity(ring->label("iota")) == 1);
  CHECK(d.multiplicity(ring->label("u+2")) == 1);
  CHECK(ring->conj(ring->label("u+1")).id == "u-1");
  CHECK(ring->conj(ring->label("u+2")).id == "u+2");
  CHECK(ring->conj(ring->label("iota-1")).id == "iota-1");
  const auto labels = ring->enumerate(30);
  for (const auto& u : labels)
    for (const auto& v : labels) {
      const auto k1 = ring->key(u), k2 = ring->key(v);
      const Decomposition uv = ring->decompose(u, v);
      const auto expected = oracle::su2_tensor(static_cast<int>(k1.level), static_cast<int>(k2.level));
      CHECK(uv.size() == expected.size());
      for (const auto& [w, mult] : uv) {
        CHECK(mult == expected.at(static_cast<int>(ring->key(w).level)));
        CHECK(ring->key(w).sign == UqSU11Ring::product_sign(k1, k2));
      }
    }
}

TEST_CASE("A_u fusion rules on small words") {
  const auto ring = au_ring(2);
  auto dec = [&](const char* x, const char* y) { return ring->decompose(ring->label(x), ring->label(y)); };
  // uU ⊗ uU = uUuU + u ⊗ U = uUuU + uU + 1.
  const Decomposition d = dec("uU", "uU");
  CHECK(d.size() == 3);
  CHECK(d.multiplicity(ring->label("uUuU")) == 1);
  CHECK(d.multiplicity(ring->label("uU")) == 1);
  CHECK(d.multiplicity(ring->label("1")) == 1);
  CHECK(ring->label("u").dim == 2);
  CHECK(ring->label("uU").dim == 3);
  CHECK(ring->label("uu").dim == 4);
  CHECK(ring->label("uUuU").dim == 5);
  CHECK(dec("u", "u").as_single()->id == "uu");
  CHECK(ring->conj(ring->label("uuU")).id == "uUU");
  // The letter-counting dimension of a word built only from u is d^length.
  const auto ring3 = au_ring(3);
  CHECK(ring3->label("uuuu").dim == 81);
  CHECK(ring3->label("Uu").dim == 8);
}

TEST_CASE("word groups agree with a rewriting enumerator") {
  for (const std::vector<int>& orders : {std::vector<int>{2, 2}, std::vector<int>{2, 0}, std::vector<int>{0, 0},
                                          std::vector<int>{3, 0}}) {
    oracle::FreeCyclicProduct g{orders};
    WordGroupSpec spec;
    for (int m : orders) spec.factors.push_back(m ? std::optional<std::uint64_t>(m) : std::nullopt);
    const auto ring = word_group(spec);
    CAPTURE(spec.to_string());
    const auto ball = g.ball(4);
    std::set<std::string> expected;
    for (const auto& w : ball) expected.insert(g.render(w));
    std::set<std::string> enumerated;
    for (const auto& u : ring->labels_up_to_size(4)) enumerated.insert(u.id);
    CHECK(enumerated == expected);
    for (std::size_t i = 0; i < ball.size(); i += 3)
      for (std::size_t j = 0; j < ball.size(); j += 5) {
        const auto product = ring->decompose(ring->label(g.render(ball[i])), ring->label(g.render(ball[j])));
        REQUIRE(product.as_single());
        CHECK(product.as_single()->id == g.render(g.mul(ball[i], ball[j])));
      }
    for (const auto& w : ball) {
      CHECK(ring->conj(ring->label(g.render(w))).id == g.render(g.inv(w)));
      const auto order = ring->order_oracle(ring->label(g.render(w)));
      REQUIRE(order);
      const auto brute = g.order_up_to(w, 64);
      if (brute)
        CHECK(std::get<std::uint64_t>(*order) == static_cast<std::uint64_t>(*brute));
      else
        CHECK(is_infinite(*order));
    }
  }
}

TEST_CASE("(ab)^k is never the unit in Z2*Z2 for k <= 64") {
  const auto ring = parse_provider("word:Z2*Z2");
  const IrrLabel ab = ring->label("ab");
  IrrLabel p = ab;
  for (int k = 1; k <= 64; ++k) {
    CHECK_FALSE(p == ring->unit());
    p = *ring->decompose(p, ab).as_single();
  }
  CHECK(is_infinite(*ring->order_oracle(ab)));
  CHECK(std::get<std::uint64_t>(*ring->order_oracle(ring->label("bab"))) == 2);
}

TEST_CASE("free product fusion") {
  const auto ring = parse_provider("free(so3,word:Z2)");
  auto dec = [&](const char* x, const char* y) { return ring->decompose(ring->label(x), ring->label(y)); };
  CHECK(dec("v1.a", "v1").as_single()->id == "v1.a.v1");
  CHECK(ring->label("v1.a.v1").dim == 9);
  // v1.a ⊗ a.v1 = v1 ⊗ v1 = 1 + v1 + v2.
  const Decomposition d = dec("v1.a", "a.v1");
  CHECK(d.size() == 3);
  CHECK(d.multiplicity(ring->unit()) == 1);
  CHECK(d.multiplicity(ring->label("v1")) == 1);
  CHECK(d.multiplicity(ring->label("v2")) == 1);
  CHECK(ring->conj(ring->label("v2.a.v1")).id == "v1.a.v2");
  CHECK_FALSE(ring->find("v1.v2"));
  CHECK_FALSE(ring->find("a.a"));
  // A letter that is ambiguous between the factors is written with its factor index.
  const auto twin = parse_provider("free(word:Z2,word:Z3)");
  CHECK(twin->find("1[a].2[a]"));
  CHECK_FALSE(twin->find("a"));
}

TEST_CASE("direct product fusion is componentwise") {
  const auto ring = parse_provider("prod(suq2,word:Z2)");
  const auto su = suq2_ring();
  const Decomposition d = ring->decompose(ring->label("(u1,a)"), ring->label("(u2,a)"));
  const Decomposition e = su->decompose(su->label("u1"), su->label("u2"));
  CHECK(d.size() == e.size());
  for (const auto& [w, mult] : e) CHECK(d.multiplicity(ring->label("(" + w.id + ",1)")) == mult);
  CHECK(ring->label("(u3,a)").dim == 4);
  const auto finite = parse_provider("prod(group:S3,group:Z2)");
  CHECK(*finite->cardinality() == 12);
}

TEST_CASE("the S3 character ring matches brute-force characters") {
  const auto ring = builtin_character_ring("S3");
  const std::vector<std::string> irreps{"1", "sgn", "V"};
  for (const auto& u : irreps)
    for (const auto& v : irreps) {
      const Decomposition d = ring->decompose(ring->label(u), ring->label(v));
      for (const auto& w : irreps) CHECK(d.multiplicity(ring->label(w)) == oracle::s3_multiplicity(w, u, v));
    }
  CHECK(ring->label("V").dim == 2);
}

TEST_CASE("character rings have Σ dim² = |G|") {
  for (auto [name, order] : {std::pair{"S3", 6}, {"D4", 8}, {"Q8", 8}, {"A4", 12}, {"S4", 24}}) {
    const auto ring = builtin_character_ring(name);
    Integer total = 0;
    for (const auto& u : ring->all_labels()) total += u.dim * u.dim;
    CHECK(total == order);
  }
}

TEST_CASE("finite group rings") {
  const auto s3 = builtin_group_ring("S3");
  CHECK(*s3->cardinality() == 6);
  CHECK(std::get<std::uint64_t>(*s3->order_oracle(s3->label("(123)"))) == 3);
  CHECK(std::get<std::uint64_t>(*s3->order_oracle(s3->label("(12)"))) == 2);
  const auto q8 = builtin_group_ring("Q8");
  CHECK(std::get<std::uint64_t>(*q8->order_oracle(q8->label("i"))) == 4);
  CHECK(q8->product(q8->label("i"), q8->label("j")).id == "k");
  CHECK(q8->product(q8->label("j"), q8->label("i")).id == "-k");
  CHECK_THROWS(builtin_group_ring("S7"));
}

TEST_CASE("JSON rings: builtin text round-trips and bad tables are rejected") {
  const auto ring = load_fusion_ring_json(builtin_character_ring_json("D4"), "d4");
  CHECK(*ring->cardinality() == 5);
  CHECK(ring->label("E").dim == 2);

  const auto good = load_fusion_ring_file(fixture("z2.json"));
  CHECK(good->decompose(good->label("g"), good->label("g")).as_single()->id == "1");

  try {
    load_fusion_ring_file(fixture("bad_z2.json"));
    FAIL("expected RingRejected");
  } catch (const RingRejected& e) {
    CHECK(e.report().total_violations > 0);
    CHECK(e.report().violations.front().identity == "dimension");
  }
  CHECK_THROWS_AS(load_fusion_ring_json("{\"unit\": \"1\"}", "x"), RingRejected);
  CHECK_THROWS_AS(load_fusion_ring_json("not json", "x"), RingRejected);
  CHECK_THROWS_AS(load_fusion_ring_file(fixture("does-not-exist.json")), std::runtime_error);
}

TEST_CASE("ring-spec parser") {
  CHECK(parse_provider("word:Z2*Z2")->name() == "word:Z2*Z2");
  CHECK(parse_provider("word:Z2*Z*Z5")->name() == "word:Z2*Z*Z5");
  CHECK(parse_provider("au:3")->label("u").dim == 3);
  CHECK(parse_provider("free(so3,word:Z2)")->find("v1.a.v1"));
  CHECK(parse_provider("free(prod(so3,word:Z2),word:Z)")->find("(v1,a).a"));
  CHECK(parse_provider("prod(json:" + fixture("z2.json") + ",so3)")->find("(g,v1)"));
  CHECK(parse_provider("group:D4")->cardinality() == 8u);
  CHECK(parse_provider("char:A4")->cardinality() == 4u);

  auto position = [](const std::string& spec) -> std::optional<std::size_t> {
    try {
      parse_provider(spec);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::nullopt;
  };
  CHECK(position("free(so3,") == 9u);
  CHECK(position("word:Z1") == 6u);
  CHECK(position("word:") == 5u);
  CHECK(position("suq2x") == 4u);
  CHECK(position("prod(so3 suq2)") == 8u);
  CHECK(position("") == 0u);
  CHECK(position("au:1") == 3u);
  CHECK(position("group:S9") == 0u);
  CHECK_FALSE(position("so3"));
  CHECK_THROWS_AS(parse_provider("json:" + fixture("bad_z2.json")), RingRejected);
}
