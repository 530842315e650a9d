#include "fusion/component.hpp"

#include <algorithm>
#include <future>

namespace fusion {

std::string to_string(ConnectednessReport::Verdict v) {
  return v == ConnectednessReport::Verdict::TorsionFound ? "TorsionFound" : "NoTorsionFound";
}

std::string to_string(ComponentReport::Verdict v) {
  switch (v) {
    case ComponentReport::Verdict::NormalWithFiniteComponentGroup: return "NormalWithFiniteComponentGroup";
    case ComponentReport::Verdict::NonNormalWitness: return "NonNormalWitness";
    case ComponentReport::Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Decomposition s_part(const Decomposition& d, const LabelSet& S) {
  Decomposition out;
  for (const auto& [w, n] : d)
    if (S.count(w)) out.add(w, n);
  return out;
}

Decomposition s_part(const VirtualElement& x, const LabelSet& S) {
  if (!x.is_zero() && !x.is_effective())
    throw std::invalid_argument("s_part needs non-negative coefficients: " + to_string(x));
  return s_part(x.to_decomposition(), S);
}

Decomposition s_part(const FusionProvider& ring, const IrrLabel& u, const LabelSet& S) {
  return s_part(Decomposition::single(ring.label(u.id)), S);
}

Integer restriction_hom_dim(const FusionProvider& ring, const LabelSet& S, const IrrLabel& u, const IrrLabel& v) {
  Integer total = 0;
  for (const auto& [w, n] : ring.decompose(ring.conj(ring.label(u.id)), ring.label(v.id)))
    if (S.count(w)) total += n * w.dim;
  return total;
}

ConnectednessReport connectedness_probe(const FusionProvider& ring, std::size_t bound, const Budget& budget) {
  ConnectednessReport report;
  const IrrLabel unit = ring.unit();
  for (const auto& u : ring.enumerate(bound)) {
    if (u == unit) continue;
    const auto verdict = is_torsion(ring, u, budget);
    switch (verdict.kind) {
      case TorsionVerdict::Kind::Torsion:
        if (!report.torsion_label) report.torsion_label = u;
        break;
      case TorsionVerdict::Kind::NonTorsion: report.non_torsion.push_back(u); break;
      case TorsionVerdict::Kind::Unknown: report.unknowns.push_back(u); break;
    }
  }
  if (report.torsion_label) report.verdict = ConnectednessReport::Verdict::TorsionFound;
  return report;
}

VirtualElement factor_restriction(const FreeProductRing& ring, const IrrLabel& w, std::size_t factor_index) {
  if (factor_index > 1) throw std::invalid_argument("free products have factors 0 and 1");
  const FusionProvider& target = ring.factor(factor_index);
  VirtualElement out = VirtualElement::of(target.unit());
  for (const auto& letter : ring.letters(w)) {
    if (letter.factor == factor_index)
      out = target.multiply(out, VirtualElement::of(letter.label));
    else
      out *= letter.label.dim;
  }
  return out;
}

namespace {

// Searches conj(u) ⊗ v ⊗ u, v torsion, for a single irreducible outside the
// torsion set whose restriction to a torsion-free factor is not trivial.
bool find_non_normal_witness(const FreeProductRing& ring, const LabelSet& T, std::size_t probes,
                             ComponentReport& report) {
  std::optional<std::size_t> connected_factor;
  for (std::size_t f = 0; f < 2 && !connected_factor; ++f) {
    bool torsion_letter = false;
    for (const auto& t : T) {
      const auto letters = ring.letters(t);
      torsion_letter = torsion_letter || std::any_of(letters.begin(), letters.end(),
                                                     [&](const auto& l) { return l.factor == f; });
    }
    if (!torsion_letter) connected_factor = f;
  }
  if (!connected_factor) {
    report.reasons.push_back("both free factors carry torsion letters; no torsion-free factor to restrict to");
    return false;
  }
  const IrrLabel unit = ring.unit();
  const IrrLabel factor_unit = ring.factor(*connected_factor).unit();
  for (const auto& u : ring.enumerate(probes)) {
    const IrrLabel ubar = ring.conj(u);
    for (const auto& v : T) {
      if (v == unit) continue;
      const auto w = ring.decompose(ubar, v, u).as_single();
      if (!w || T.count(*w)) continue;
      const VirtualElement r = factor_restriction(ring, *w, *connected_factor);
      if (r == VirtualElement::of(factor_unit, w->dim)) continue;
      report.witness = *w;
      report.witness_u = u;
      report.witness_v = v;
      report.witness_factor = *connected_factor;
      report.witness_restriction = r;
      report.invariant_multiplicity = r.coefficient(factor_unit);
      report.trivial_multiplicity = w->dim;
      return true;
    }
  }
  report.reasons.push_back("no irreducible conj(u) v u outside the torsion set with non-trivial restriction");
  return false;
}

}  // namespace

ComponentReport identity_component_report(const FusionProvider& ring, const ComponentBounds& bounds,
                                          const Budget& budget) {
  ComponentReport report;
  report.bounds = bounds;
  report.torsion = torsion_subcategory(ring, budget);
  const LabelSet& T = report.torsion.torsion_set.labels;
  const std::vector<IrrLabel> Tv(T.begin(), T.end());

  // Independent sub-analyses run concurrently; each result lands in its own slot.
  auto generated = std::async(std::launch::async, [&] { return generated_subring(ring, Tv, budget); });
  auto violations = std::async(std::launch::async, [&] { return normality_consistency(ring, T, bounds.normality); });

  report.tensorial = true;
  report.commutative = true;
  for (const auto& a : T) {
    report.tensorial = report.tensorial && T.count(ring.conj(a));
    for (const auto& b : T) {
      const Decomposition ab = ring.decompose(a, b);
      for (const auto& [w, n] : ab) report.tensorial = report.tensorial && T.count(w);
      report.commutative = report.commutative && ab == ring.decompose(b, a);
    }
  }
  report.generated = generated.get();
  if (report.generated.saturated()) report.finite = true;
  report.normality_violations = violations.get();

  if (!report.tensorial) report.reasons.push_back("torsion set is not closed under tensor products");
  if (!report.finite) report.reasons.push_back("generated ring of the torsion set did not saturate within budget");
  if (!report.normality_violations.empty())
    report.reasons.push_back(std::to_string(report.normality_violations.size()) +
                             " normality violations at bound " + std::to_string(bounds.normality));

  if (report.tensorial && report.finite && report.normality_violations.empty()) {
    report.verdict = ComponentReport::Verdict::NormalWithFiniteComponentGroup;
    Integer order = 0;
    for (const auto& w : T) order += w.dim * w.dim;
    report.component_group_order = order;
    const auto axis = ring.enumerate(bounds.hom_table);
    for (const auto& u : axis)
      for (const auto& v : axis) report.hom_dims.push_back({u, v, restriction_hom_dim(ring, T, u, v)});
    report.torsion_degree_bound = 1;
    report.torsion_degree_note =
        "torsion set is tensorial, finite and passes the fusion-level normality conditions: torsion degree <= 1";
    if (!report.torsion.unknown.empty())
      report.reasons.push_back(std::to_string(report.torsion.unknown.size()) +
                               " labels with Unknown torsion status (listed, not counted as torsion)");
    return report;
  }

  if (const auto* fp = dynamic_cast<const FreeProductRing*>(&ring)) {
    if (find_non_normal_witness(*fp, T, budget.max_irreducibles, report)) {
      report.verdict = ComponentReport::Verdict::NonNormalWitness;
      const Subcategory forced = normal_forcing_closure(ring, Tv, budget);
      const auto gens = ring.generators();
      const bool everything =
          std::all_of(gens.begin(), gens.end(), [&](const IrrLabel& g) { return forced.contains(g); });
      if (everything) {
        report.torsion_degree_bound = 1;
        report.torsion_degree_note =
            "the normal-forcing closure of the torsion set contains every generator, so N_1 is the whole "
            "ring: torsion degree 1";
      } else {
        report.torsion_degree_note = "normal-forcing closure of the torsion set misses a generator within budget";
      }
      return report;
    }
  }
  report.verdict = ComponentReport::Verdict::Inconclusive;
  return report;
}

}  // namespace fusion
