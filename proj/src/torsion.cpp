#include "fusion/torsion.hpp"

#include "fusion/lattice.hpp"
#include "fusion/providers.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>
#include <thread>

namespace fusion {

std::string to_string(ClosureKind k) {
  switch (k) {
    case ClosureKind::TensorGenerated: return "TensorGenerated";
    case ClosureKind::CentralClosure: return "CentralClosure";
    case ClosureKind::NormalForcingClosure: return "NormalForcingClosure";
    case ClosureKind::TorsionSet: return "TorsionSet";
  }
  return "?";
}

std::string to_string(ClosureStatus s) { return s == ClosureStatus::Saturated ? "Saturated" : "BudgetExceeded"; }

std::string to_string(TorsionVerdict::Kind k) {
  switch (k) {
    case TorsionVerdict::Kind::Torsion: return "Torsion";
    case TorsionVerdict::Kind::NonTorsion: return "NonTorsion";
    case TorsionVerdict::Kind::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(IdentityComponent c) {
  switch (c) {
    case IdentityComponent::Connected: return "Connected";
    case IdentityComponent::Proper: return "Proper";
    case IdentityComponent::TotallyDisconnected: return "TotallyDisconnected";
  }
  return "?";
}

namespace {

// With stop_on_overflow the computation ends as soon as one label exceeds
// the size cap; the result is then BudgetExceeded with a partial frontier.
Subcategory closure(const FusionProvider& ring, const std::vector<IrrLabel>& X, const Budget& budget,
                    ClosureKind kind, bool stop_on_overflow = false) {
  budget.validate();
  Subcategory out;
  out.kind = kind;
  out.budget = budget;

  std::vector<std::pair<IrrLabel, IrrLabel>> probes;  // (conj u, u)
  if (kind != ClosureKind::TensorGenerated)
    for (auto& u : ring.enumerate(budget.max_irreducibles)) probes.emplace_back(ring.conj(u), u);

  LabelSet& S = out.labels;
  LabelSet pending;
  auto admit = [&](const IrrLabel& w, std::vector<IrrLabel>& next, bool seed) {
    if (S.count(w)) return;
    if (!seed && ring.label_size(w) > budget.max_label_size) {
      pending.insert(w);
      return;
    }
    pending.erase(w);
    S.insert(w);
    next.push_back(w);
  };

  std::vector<IrrLabel> fresh;
  admit(ring.unit(), fresh, true);
  for (const auto& x : X) {
    const IrrLabel canonical = ring.label(x.id);
    admit(canonical, fresh, true);
    admit(ring.conj(canonical), fresh, true);
  }

  auto overflowed = [&] { return stop_on_overflow && !pending.empty(); };
  while (!fresh.empty() && out.rounds < budget.max_rounds && !overflowed()) {
    ++out.rounds;
    std::vector<IrrLabel> next;
    const std::vector<IrrLabel> current(S.begin(), S.end());
    for (const auto& b : fresh) {
      if (overflowed()) break;
      admit(ring.conj(b), next, false);
      for (const auto& a : current) {
        if (overflowed()) break;
        for (const auto& [w, n] : ring.decompose(a, b)) admit(w, next, false);
        for (const auto& [w, n] : ring.decompose(b, a)) admit(w, next, false);
      }
      if (kind == ClosureKind::CentralClosure) {
        for (const auto& [ubar, u] : probes)
          for (const auto& [w, n] : ring.decompose(ubar, b, u)) admit(w, next, false);
      } else if (kind == ClosureKind::NormalForcingClosure) {
        for (const auto& [ubar, u] : probes) {
          const auto left = ring.decompose(ubar, b).as_single();
          if (!left) continue;
          if (const auto w = ring.decompose(*left, u).as_single()) admit(*w, next, false);
        }
      }
    }
    fresh = std::move(next);
  }

  out.frontier = pending;
  out.frontier.insert(fresh.begin(), fresh.end());
  out.status = out.frontier.empty() ? ClosureStatus::Saturated : ClosureStatus::BudgetExceeded;

  if (out.saturated() && kind == ClosureKind::TensorGenerated) {
    for (const auto& a : S) {
      if (!S.count(ring.conj(a))) throw std::logic_error("saturated closure is not conjugation closed");
      for (const auto& b : S)
        for (const auto& [w, n] : ring.decompose(a, b))
          if (!S.count(w)) throw std::logic_error("saturated closure is not tensor closed at " + w.id);
    }
  }
  return out;
}

}  // namespace

Subcategory generated_subring(const FusionProvider& ring, const std::vector<IrrLabel>& X, const Budget& budget) {
  return closure(ring, X, budget, ClosureKind::TensorGenerated);
}

Subcategory central_closure(const FusionProvider& ring, const std::vector<IrrLabel>& X, const Budget& budget) {
  return closure(ring, X, budget, ClosureKind::CentralClosure);
}

Subcategory normal_forcing_closure(const FusionProvider& ring, const std::vector<IrrLabel>& X,
                                   const Budget& budget) {
  return closure(ring, X, budget, ClosureKind::NormalForcingClosure);
}

TorsionVerdict is_torsion(const FusionProvider& ring, const IrrLabel& u, const Budget& budget) {
  TorsionVerdict v;
  v.budget = budget;
  const IrrLabel x = ring.label(u.id);
  const auto order = ring.order_oracle(x);
  if (order && is_infinite(*order)) {
    v.kind = TorsionVerdict::Kind::NonTorsion;
    v.witness = "order_oracle: " + x.id + " has infinite order";
    return v;
  }
  if (order) {
    if (const auto* group = dynamic_cast<const GroupRing*>(&ring)) {
      // The closure of a finite-order group element is its cyclic subgroup.
      const auto k = std::get<std::uint64_t>(*order);
      Subcategory c;
      c.budget = budget;
      IrrLabel p = ring.unit();
      for (std::uint64_t j = 0; j < k; ++j) {
        c.labels.insert(p);
        p = group->product(p, x);
      }
      if (!(p == ring.unit())) throw std::logic_error("order_oracle disagrees with the group law at " + x.id);
      v.kind = TorsionVerdict::Kind::Torsion;
      v.witness = "order_oracle: " + x.id + " has order " + std::to_string(k);
      v.closure = std::move(c);
      return v;
    }
  }
  Subcategory c = closure(ring, {x}, budget, ClosureKind::TensorGenerated, true);
  if (c.saturated()) {
    v.kind = TorsionVerdict::Kind::Torsion;
    v.closure = std::move(c);
  }
  return v;
}

TorsionReport torsion_subcategory(const FusionProvider& ring, const Budget& budget) {
  budget.validate();
  const auto labels = ring.enumerate(budget.max_irreducibles);
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t chunk = (labels.size() + workers - 1) / workers;
  std::vector<std::future<std::vector<TorsionVerdict>>> jobs;
  for (std::size_t begin = 0; begin < labels.size(); begin += chunk) {
    const std::size_t end = std::min(labels.size(), begin + chunk);
    jobs.push_back(std::async(std::launch::async, [&, begin, end] {
      std::vector<TorsionVerdict> out;
      for (std::size_t i = begin; i < end; ++i) out.push_back(is_torsion(ring, labels[i], budget));
      return out;
    }));
  }
  TorsionReport report;
  report.torsion_set.kind = ClosureKind::TorsionSet;
  report.torsion_set.budget = budget;
  std::size_t i = 0;
  for (auto& job : jobs) {
    for (auto& verdict : job.get()) {
      const IrrLabel& u = labels[i++];
      switch (verdict.kind) {
        case TorsionVerdict::Kind::Torsion:
          report.torsion.push_back(u);
          report.torsion_set.labels.insert(u);
          break;
        case TorsionVerdict::Kind::NonTorsion: report.non_torsion.push_back(u); break;
        case TorsionVerdict::Kind::Unknown:
          report.unknown.push_back(u);
          report.torsion_set.frontier.insert(u);
          break;
      }
      report.verdicts.emplace_back(u, std::move(verdict));
    }
  }
  report.torsion_set.status =
      report.unknown.empty() ? ClosureStatus::Saturated : ClosureStatus::BudgetExceeded;
  return report;
}

std::vector<NormalityViolation> normality_consistency(const FusionProvider& ring, const LabelSet& S,
                                                      std::size_t bound) {
  std::vector<NormalityViolation> out;
  const auto probes = ring.enumerate(bound);
  for (const auto& v : S) {
    for (const auto& u : probes) {
      const Decomposition d = ring.decompose(ring.conj(u), v, u);
      bool meets = false;
      for (const auto& [w, n] : d) meets = meets || S.count(w) != 0;
      if (!meets) out.push_back({u, v, d.labels()});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// N-sequence

namespace {

NStage trivial_stage(const FusionProvider& ring, const Budget& budget) {
  NStage s;
  s.index = 0;
  s.approximant.budget = budget;
  s.approximant.kind = ClosureKind::NormalForcingClosure;
  s.approximant.labels.insert(ring.unit());
  s.trivial = true;
  s.whole_group = ring.cardinality() == std::size_t{1};
  s.certificate = "N_0 is the trivial subgroup";
  return s;
}

void finish(NSequenceReport& report) {
  if (!report.torsion_degree) return;
  const NStage& last = report.stages[*report.torsion_degree];
  if (last.trivial)
    report.identity_component = IdentityComponent::Connected;
  else if (last.whole_group)
    report.identity_component = IdentityComponent::TotallyDisconnected;
  else
    report.identity_component = IdentityComponent::Proper;
}

NSequenceReport word_group_sequence(const WordGroupRing& ring, std::size_t max_stage, const Budget& budget,
                                    std::uint64_t exponent_bound) {
  NSequenceReport report;
  report.stages.push_back(trivial_stage(ring, budget));

  std::size_t z_factors = 0, finite_factors = 0;
  for (std::size_t f = 0; f < ring.spec().factors.size(); ++f) (ring.factor_is_finite(f) ? finite_factors : z_factors)++;

  const std::size_t cap = budget.max_label_size;
  const auto labels = ring.labels_up_to_size(cap);
  auto in_kernel = [&](const IrrLabel& g) { return ring.kill_finite_factors(ring.parse(g.id)).empty(); };

  if (max_stage == 0) return report;
  NStage n1;
  n1.index = 1;
  n1.approximant.kind = ClosureKind::NormalForcingClosure;
  n1.approximant.budget = budget;
  for (const auto& g : labels) {
    if (in_kernel(g)) n1.approximant.labels.insert(g);
    const auto order = ring.order_oracle(g);
    if (order && !is_infinite(*order) && !in_kernel(g))
      throw std::logic_error("torsion element " + g.id + " outside the kernel of the finite-factor quotient");
  }
  for (const auto& g : ring.labels_up_to_size(cap + 1))
    if (ring.label_size(g) == cap + 1 && in_kernel(g)) n1.approximant.frontier.insert(g);
  n1.approximant.status = n1.approximant.frontier.empty() ? ClosureStatus::Saturated : ClosureStatus::BudgetExceeded;
  n1.trivial = finite_factors == 0;
  n1.whole_group = z_factors == 0;
  n1.certificate =
      "g in N_1 iff its image under the homomorphism killing every finite factor is trivial; "
      "the finite-factor letters are torsion and generate this kernel as a normal subgroup";
  report.stages.push_back(std::move(n1));

  std::string quotient;
  for (std::size_t i = 0; i < z_factors; ++i) quotient += i ? "*Z" : "Z";
  report.quotient = z_factors == 0 ? "trivial" : quotient;

  if (finite_factors == 0) {
    report.torsion_degree = 0;
    report.notes.push_back("no finite factors: the group is torsion-free and N_1 = N_0");
    finish(report);
    return report;
  }
  if (max_stage < 2) {
    report.notes.push_back("stage cap reached before N_2 could be compared with N_1");
    return report;
  }

  // N_2: elements with a power in N_1. The quotient is a free product of
  // copies of Z; confirm on every enumerated element outside N_1 that no
  // power up to the exponent bound dies in it.
  std::vector<std::string> escaped;
  for (const auto& g : labels) {
    if (in_kernel(g)) continue;
    const auto image = ring.kill_finite_factors(ring.parse(g.id));
    auto power = image;
    for (std::uint64_t n = 1; n <= exponent_bound; ++n) {
      if (power.empty()) {
        escaped.push_back(g.id);
        break;
      }
      power = ring.multiply(power, image);
    }
  }
  NStage n2 = report.stages[1];
  n2.index = 2;
  n2.certificate = "the quotient by N_1 is " + report.quotient +
                   ", which is torsion-free; no enumerated element outside N_1 has a power (n <= " +
                   std::to_string(exponent_bound) + ") in N_1";
  if (!escaped.empty()) {
    report.notes.push_back("elements with a power in N_1 found outside N_1: " + escaped.front());
    report.stages.push_back(std::move(n2));
    return report;
  }
  report.stages.push_back(std::move(n2));
  report.torsion_degree = 1;
  report.notes.push_back("N_2 = N_1: torsion degree 1");
  finish(report);
  return report;
}

NSequenceReport finite_group_sequence(const FiniteGroupRing& ring, std::size_t max_stage, const Budget& budget,
                                      std::uint64_t exponent_bound) {
  NSequenceReport report;
  report.stages.push_back(trivial_stage(ring, budget));
  const auto elements = ring.all_labels();

  auto normal_closure = [&](const LabelSet& T) {
    LabelSet S{ring.unit()};
    S.insert(T.begin(), T.end());
    bool grew = true;
    while (grew) {
      grew = false;
      const std::vector<IrrLabel> current(S.begin(), S.end());
      for (const auto& a : current) {
        for (const auto& b : current) grew |= S.insert(ring.product(a, b)).second;
        for (const auto& g : elements) grew |= S.insert(ring.product(ring.product(ring.inverse(g), a), g)).second;
      }
    }
    return S;
  };

  for (std::size_t r = 1; r <= max_stage; ++r) {
    const LabelSet& prev = report.stages.back().approximant.labels;
    LabelSet T;
    for (const auto& g : elements) {
      if (r == 1) {
        T.insert(g);  // every element of a finite group is torsion
        continue;
      }
      IrrLabel p = g;
      for (std::uint64_t n = 1; n <= exponent_bound; ++n, p = ring.product(p, g)) {
        if (prev.count(p)) {
          T.insert(g);
          break;
        }
      }
    }
    NStage stage;
    stage.index = r;
    stage.approximant.kind = ClosureKind::NormalForcingClosure;
    stage.approximant.budget = budget;
    stage.approximant.labels = normal_closure(T);
    stage.whole_group = stage.approximant.labels.size() == elements.size();
    stage.trivial = stage.approximant.labels.size() == 1;
    stage.certificate = "exact normal closure in the finite group";
    const bool same = stage.approximant.labels == prev;
    report.stages.push_back(std::move(stage));
    if (same) {
      report.torsion_degree = r - 1;
      break;
    }
  }
  if (report.torsion_degree) {
    const NStage& last = report.stages[*report.torsion_degree];
    report.quotient = "finite group of order " +
                      std::to_string(elements.size() / last.approximant.labels.size());
  } else {
    report.notes.push_back("not stabilized within the stage cap");
  }
  finish(report);
  return report;
}

}  // namespace

NSequenceReport n_sequence_cocommutative(const FusionProvider& ring, std::size_t max_stage, const Budget& budget,
                                         std::uint64_t exponent_bound) {
  budget.validate();
  if (const auto* w = dynamic_cast<const WordGroupRing*>(&ring))
    return word_group_sequence(*w, max_stage, budget, exponent_bound);
  if (const auto* g = dynamic_cast<const FiniteGroupRing*>(&ring))
    return finite_group_sequence(*g, max_stage, budget, exponent_bound);
  throw UnsupportedProvider(ring.name() + " is not a word group or finite group ring");
}

// ---------------------------------------------------------------------------
// Dimension ideals

LabelSet dimension_ideal_recover(const FusionProvider& ring, const Subcategory& A) {
  if (!ring.cardinality()) throw NotFinite(ring.name() + " is not a finite fusion ring");
  if (!A.saturated()) throw NotSaturated("the sub-representation ring is not saturated");
  const auto irr = ring.all_labels();
  const std::size_t n = irr.size();
  std::map<IrrLabel, std::size_t, LabelOrder> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(irr[i], i);
  const IrrLabel unit = ring.unit();
  const std::size_t iota = index.at(unit);

  auto coordinates = [&](const VirtualElement& x) {
    IntVector v(n);
    for (const auto& [w, c] : x) {
      auto it = index.find(w);
      if (it == index.end()) throw UnknownLabel(w.id);
      v[it->second] = c;
    }
    return v;
  };

  std::vector<VirtualElement> kernel_basis;
  for (const auto& a : A.labels) {
    const IrrLabel canonical = ring.label(a.id);
    if (canonical == unit) continue;
    kernel_basis.push_back(VirtualElement::of(canonical) - VirtualElement::of(unit, canonical.dim));
  }
  IntegerLattice J(n);
  for (const auto& r : irr)
    for (const auto& b : kernel_basis) J.add(coordinates(ring.multiply(VirtualElement::of(r), b)));

  LabelSet out;
  for (const auto& u : irr) {
    IntVector v(n);
    v[index.at(u)] += 1;
    v[iota] -= u.dim;
    if (J.contains(std::move(v))) out.insert(u);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ascending chains

GeneratorSequence au_balanced_sequence(const FusionProvider& ring) {
  if (!dynamic_cast<const AuRing*>(&ring)) throw UnsupportedProvider(ring.name() + " is not an A_u ring");
  return [&ring](std::size_t d) {
    std::vector<IrrLabel> out;
    for (std::size_t r = 1; r <= d; ++r) out.push_back(ring.label(std::string(r, 'U') + std::string(r, 'u')));
    return out;
  };
}

GeneratorSequence prefix_sequence(std::vector<IrrLabel> gens) {
  return [gens = std::move(gens)](std::size_t d) {
    return std::vector<IrrLabel>(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(std::min(d, gens.size())));
  };
}

namespace {

bool balanced(const IrrLabel& u) {
  return std::count(u.id.begin(), u.id.end(), 'u') == std::count(u.id.begin(), u.id.end(), 'U');
}

}  // namespace

ChainReport ascending_chain_probe(const FusionProvider& ring, const GeneratorSequence& X, std::size_t d_max,
                                  const Budget& budget, bool cap_from_d) {
  budget.validate();
  const bool au = dynamic_cast<const AuRing*>(&ring) != nullptr;
  ChainReport report;
  LabelSet previous;
  bool increasing = true;
  for (std::size_t d = 1; d <= d_max; ++d) {
    ChainStep step;
    step.d = d;
    step.generators = X(d);
    const auto next = X(d + 1);
    for (const auto& g : next) {
      if (std::find(step.generators.begin(), step.generators.end(), g) == step.generators.end()) {
        step.witness = g;
        break;
      }
    }
    step.length_cap = cap_from_d ? d + 3 : budget.max_label_size;
    Budget b = budget;
    b.max_label_size = step.length_cap;
    const Subcategory c = generated_subring(ring, step.generators, b);
    step.closure_size = c.labels.size();
    step.status = c.status;
    for (const auto& u : c.labels) step.new_irreducibles += previous.count(u) ? 0 : 1;
    previous = c.labels;
    auto all_balanced = [&](const Subcategory& s) {
      return std::all_of(s.labels.begin(), s.labels.end(), balanced);
    };
    if (au) step.balanced = all_balanced(c);
    step.extended_cap = step.length_cap;
    if (step.witness) {
      step.witness_absent = !c.contains(*step.witness);
      step.witness_in_next_generators = true;
      step.extended_cap = std::max(step.length_cap, ring.label_size(*step.witness));
      if (step.extended_cap == step.length_cap) {
        step.witness_absent_extended = step.witness_absent;
      } else {
        Budget e = budget;
        e.max_label_size = step.extended_cap;
        const Subcategory ce = generated_subring(ring, step.generators, e);
        step.witness_absent_extended = !ce.contains(*step.witness);
        if (au) step.balanced = *step.balanced && all_balanced(ce);
      }
    }
    const bool grows = step.witness && step.witness_absent && step.witness_absent_extended;
    if (increasing && grows) report.strictly_increasing_up_to = d;
    if (increasing && !grows) {
      increasing = false;
      report.stabilized_at = d;
    }
    report.steps.push_back(std::move(step));
  }
  return report;
}

}  // namespace fusion
