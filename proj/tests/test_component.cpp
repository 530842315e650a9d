#include "doctest.h"

#include "fusion/component.hpp"
#include "fusion/providers.hpp"
#include "fusion/ring_spec.hpp"

#include <random>

using namespace fusion;

namespace {

Budget default_budget() { return Budget{}; }

}  // namespace

TEST_CASE("restriction to {iota, iota-1} matches SU_q(2) hom dimensions") {
  const auto ring = uq_su11_ring();
  const auto su = suq2_ring();
  const LabelSet S{ring->label("iota"), ring->label("iota-1")};
  std::vector<std::pair<IrrLabel, std::size_t>> labels;
  for (int n = 0; n <= 6; ++n)
    for (int sign : {+1, -1}) labels.emplace_back(ring->make({sign, static_cast<std::size_t>(n)}), n);
  std::size_t entries = 0;
  for (const auto& [u, n] : labels)
    for (const auto& [v, m] : labels) {
      // dim Hom_{SU_q(2)}(u_n, u_m) = N^{u0}_{u_n u_m}, both self-conjugate.
      const Integer expected = su->multiplicity(su->unit(), su->make(n), su->make(m));
      CHECK(restriction_hom_dim(*ring, S, u, v) == expected);
      ++entries;
    }
  CHECK(entries == 196);
}

TEST_CASE("restriction_hom_dim is symmetric and torsion restricts trivially") {
  const auto ring = uq_su11_ring();
  const LabelSet S{ring->label("iota"), ring->label("iota-1")};
  const auto labels = ring->enumerate(20);
  for (const auto& u : labels)
    for (const auto& v : labels) CHECK(restriction_hom_dim(*ring, S, u, v) == restriction_hom_dim(*ring, S, v, u));
  for (const auto& t : S) CHECK(restriction_hom_dim(*ring, S, ring->unit(), t) == t.dim);

  const auto fp = parse_provider("free(so3,word:Z2)");
  const LabelSet T{fp->unit(), fp->label("a")};
  const auto fl = fp->enumerate(15);
  for (const auto& u : fl)
    for (const auto& v : fl) CHECK(restriction_hom_dim(*fp, T, u, v) == restriction_hom_dim(*fp, T, v, u));
  CHECK(restriction_hom_dim(*fp, T, fp->unit(), fp->label("a")) == 1);
}

TEST_CASE("factor_restriction is multiplicative on random word pairs") {
  const auto ptr = free_product(so3_ring(), word_group({{2}}));
  const FreeProductRing& ring = *ptr;
  const auto labels = ring.labels_up_to_size(4);
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    const IrrLabel& w = labels[pick(rng)];
    const IrrLabel& x = labels[pick(rng)];
    for (std::size_t f : {0u, 1u}) {
      VirtualElement lhs;
      for (const auto& [c, n] : ring.decompose(w, x)) lhs += n * factor_restriction(ring, c, f);
      const VirtualElement rhs =
          ring.factor(f).multiply(factor_restriction(ring, w, f), factor_restriction(ring, x, f));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("factor_restriction of v1.a.v1") {
  const auto ptr = free_product(so3_ring(), word_group({{2}}));
  const VirtualElement r = factor_restriction(*ptr, ptr->label("v1.a.v1"), 0);
  const auto so3 = so3_ring();
  CHECK(r == VirtualElement(so3->decompose(so3->make(1), so3->make(1))));
  CHECK(r.coefficient(so3->unit()) == 1);
  CHECK(r.dimension() == 9);
  const VirtualElement t = factor_restriction(*ptr, ptr->label("v1.a.v1"), 1);
  CHECK(t == VirtualElement::of(ptr->factor(1).label("a"), 9));
}

TEST_CASE("s_part of a product contains the product of s_parts") {
  const auto ring = uq_su11_ring();
  const LabelSet S{ring->label("iota"), ring->label("iota-1")};
  const auto labels = ring->enumerate(16);
  for (const auto& u : labels)
    for (const auto& v : labels) {
      const Decomposition uv = s_part(*ring, u, S);
      const Decomposition vv = s_part(*ring, v, S);
      const Decomposition prod_part = s_part(ring->decompose(u, v), S);
      const VirtualElement product = ring->multiply(VirtualElement(uv), VirtualElement(vv));
      const Decomposition from_parts = s_part(product, S);
      for (const auto& [w, n] : from_parts) CHECK(prod_part.multiplicity(w) >= n);
    }
  CHECK_THROWS_AS(s_part(VirtualElement::of(ring->unit(), -1), S), std::invalid_argument);
}

TEST_CASE("identity component of U_q(su(1,1))") {
  const auto ring = uq_su11_ring();
  const ComponentReport r = identity_component_report(*ring, {}, default_budget());
  CHECK(r.verdict == ComponentReport::Verdict::NormalWithFiniteComponentGroup);
  REQUIRE(r.component_group_order);
  CHECK(*r.component_group_order == 2);
  CHECK(r.tensorial);
  CHECK(r.finite == true);
  CHECK(r.normality_violations.empty());
  CHECK(r.hom_dims.size() == 196);
  REQUIRE(r.torsion_degree_bound);
  CHECK(*r.torsion_degree_bound == 1);
}

TEST_CASE("non-normal identity component of so3 * Z2") {
  const auto ring = parse_provider("free(so3,word:Z2)");
  const ComponentReport r = identity_component_report(*ring, {}, default_budget());
  CHECK(r.verdict == ComponentReport::Verdict::NonNormalWitness);
  REQUIRE(r.witness);
  CHECK(r.witness->id == "v1.a.v1");
  CHECK(r.witness_factor == 0);
  CHECK(to_string(r.witness_restriction) == "v0 + v1 + v2");
  CHECK(r.invariant_multiplicity == 1);
  CHECK(r.trivial_multiplicity == 9);
  REQUIRE(r.torsion_degree_bound);
  CHECK(*r.torsion_degree_bound == 1);
  CHECK_FALSE(r.torsion_degree_note.empty());
  CHECK_FALSE(r.normality_violations.empty());
}

TEST_CASE("component reports of connected and finite rings") {
  const auto su = suq2_ring();
  const ComponentReport c = identity_component_report(*su, {}, default_budget());
  CHECK(c.verdict == ComponentReport::Verdict::NormalWithFiniteComponentGroup);
  CHECK(*c.component_group_order == 1);

  const auto s3 = builtin_group_ring("S3");
  const ComponentReport f = identity_component_report(*s3, {}, default_budget());
  CHECK(f.verdict == ComponentReport::Verdict::NormalWithFiniteComponentGroup);
  CHECK(*f.component_group_order == 6);

  const auto dih = parse_provider("word:Z2*Z2");
  CHECK(identity_component_report(*dih, {}, default_budget()).verdict == ComponentReport::Verdict::Inconclusive);
}

TEST_CASE("connectedness probe") {
  const auto zz = parse_provider("word:Z*Z");
  const ConnectednessReport a = connectedness_probe(*zz, 30, default_budget());
  CHECK(a.verdict == ConnectednessReport::Verdict::NoTorsionFound);
  CHECK(a.certified());

  const auto su11 = uq_su11_ring();
  const ConnectednessReport b = connectedness_probe(*su11, 20, default_budget());
  CHECK(b.verdict == ConnectednessReport::Verdict::TorsionFound);
  CHECK(b.torsion_label->id == "iota-1");

  const ConnectednessReport c = connectedness_probe(*suq2_ring(), 20, default_budget());
  CHECK(c.verdict == ConnectednessReport::Verdict::NoTorsionFound);
  CHECK_FALSE(c.certified());
  CHECK(c.unknowns.size() == 19);
}
