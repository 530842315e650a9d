#include "fusion/axioms.hpp"

#include <map>
#include <random>
#include <utility>

namespace fusion {

void AxiomReport::record(Violation v) {
  ++total_violations;
  if (violations.size() < 200) violations.push_back(std::move(v));
}

namespace {

class DecompositionCache {
 public:
  DecompositionCache(const FusionProvider& ring, AxiomReport& report) : ring_(ring), report_(report) {}

  // nullptr when the provider rejected the pair; the failure is recorded once.
  const Decomposition* get(const IrrLabel& u, const IrrLabel& v) {
    auto key = std::make_pair(u.id, v.id);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second ? &*it->second : nullptr;
    std::optional<Decomposition> d;
    try {
      d = ring_.decompose(u, v);
    } catch (const std::exception& e) {
      report_.record({"decompose", {u.id, v.id}, e.what()});
    }
    auto [it, _] = cache_.emplace(std::move(key), std::move(d));
    return it->second ? &*it->second : nullptr;
  }

 private:
  const FusionProvider& ring_;
  AxiomReport& report_;
  std::map<std::pair<std::string, std::string>, std::optional<Decomposition>> cache_;
};

std::string str(const Integer& x) { return x.str(); }

}  // namespace

AxiomReport check_axioms(const FusionProvider& ring, const Budget& budget, const AxiomCheckOptions& options) {
  budget.validate();
  AxiomReport report;
  std::vector<IrrLabel> labels;
  IrrLabel unit;
  try {
    labels = ring.enumerate(budget.max_irreducibles);
    unit = ring.unit();
  } catch (const std::exception& e) {
    report.record({"enumerate", {}, e.what()});
    return report;
  }
  report.labels_checked = labels.size();
  DecompositionCache cache(ring, report);

  std::vector<IrrLabel> conjs;
  conjs.reserve(labels.size());
  for (const auto& u : labels) {
    IrrLabel c;
    try {
      c = ring.conj(u);
    } catch (const std::exception& e) {
      report.record({"conj_involution", {u.id}, e.what()});
      c = u;
    }
    if (!(ring.conj(c) == u)) report.record({"conj_involution", {u.id}, "conj(conj(u)) = " + ring.conj(c).id});
    if (c.dim != u.dim)
      report.record({"conj_dimension", {u.id}, "dim(conj) = " + str(c.dim) + ", dim = " + str(u.dim)});
    conjs.push_back(std::move(c));
  }
  if (!(ring.conj(unit) == unit)) report.record({"conj_unit", {unit.id}, "conj(unit) = " + ring.conj(unit).id});
  if (unit.dim != 1) report.record({"unit_law", {unit.id}, "unit has dimension " + str(unit.dim)});

  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& u = labels[i];
    for (const auto* d : {cache.get(unit, u), cache.get(u, unit)}) {
      if (d && !(*d == Decomposition::single(u)))
        report.record({"unit_law", {u.id}, "unit ⊗ u or u ⊗ unit = " + to_string(*d)});
    }
    for (std::size_t j = 0; j < labels.size(); ++j) {
      const auto& v = labels[j];
      const auto* d = cache.get(u, v);
      if (!d) continue;
      const Integer expected = u.dim * v.dim;
      if (d->total_dimension() != expected)
        report.record({"dimension", {u.id, v.id},
                       "Σ N dim = " + str(d->total_dimension()) + ", dim u · dim v = " + str(expected)});
      const Integer unit_mult = d->multiplicity(unit);
      const Integer pairing = (v == conjs[i]) ? 1 : 0;
      if (unit_mult != pairing)
        report.record({"conj_pairing", {u.id, v.id},
                       "N^unit = " + str(unit_mult) + ", expected " + str(pairing)});
    }
  }

  // Frobenius reciprocity and the conjugation symmetry over all enumerated triples.
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& u = labels[i];
    for (std::size_t j = 0; j < labels.size(); ++j) {
      const auto& v = labels[j];
      const auto* uv = cache.get(u, v);
      const auto* vbar_ubar = cache.get(conjs[j], conjs[i]);
      if (!uv || !vbar_ubar) continue;
      for (std::size_t k = 0; k < labels.size(); ++k) {
        const auto& w = labels[k];
        ++report.triples_checked;
        const Integer n_uv = uv->multiplicity(w);
        const auto* ubar_w = cache.get(conjs[i], w);
        const auto* w_vbar = cache.get(w, conjs[j]);
        if (ubar_w && ubar_w->multiplicity(v) != n_uv)
          report.record({"frobenius", {w.id, u.id, v.id},
                         "N^w_{uv} = " + str(n_uv) + " but N^v_{conj(u) w} = " + str(ubar_w->multiplicity(v))});
        if (w_vbar && w_vbar->multiplicity(u) != n_uv)
          report.record({"frobenius", {w.id, u.id, v.id},
                         "N^w_{uv} = " + str(n_uv) + " but N^u_{w conj(v)} = " + str(w_vbar->multiplicity(u))});
        if (vbar_ubar->multiplicity(conjs[k]) != n_uv)
          report.record({"conj_symmetry", {w.id, u.id, v.id},
                         "N^w_{uv} = " + str(n_uv) + " but N^{conj w}_{conj v conj u} = " +
                             str(vbar_ubar->multiplicity(conjs[k]))});
      }
    }
  }

  // Associativity of iterated decomposition, compared as exact multisets.
  auto check_assoc = [&](const IrrLabel& a, const IrrLabel& b, const IrrLabel& c) {
    ++report.associativity_checked;
    const auto* ab = cache.get(a, b);
    const auto* bc = cache.get(b, c);
    if (!ab || !bc) return;
    Decomposition left, right;
    for (const auto& [x, n] : *ab)
      if (const auto* xc = cache.get(x, c)) left.add(*xc, n);
    for (const auto& [y, n] : *bc)
      if (const auto* ay = cache.get(a, y)) right.add(*ay, n);
    if (!(left == right))
      report.record({"associativity", {a.id, b.id, c.id},
                     "(ab)c = " + to_string(left) + " but a(bc) = " + to_string(right)});
  };
  const std::size_t n = labels.size();
  if (ring.cardinality() && n == *ring.cardinality() && n * n * n <= options.exhaustive_triple_limit) {
    for (const auto& a : labels)
      for (const auto& b : labels)
        for (const auto& c : labels) check_assoc(a, b, c);
  } else if (n > 0) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t t = 0; t < options.associativity_triples; ++t) {
      const auto& a = labels[pick(rng)];
      const auto& b = labels[pick(rng)];
      const auto& c = labels[pick(rng)];
      check_assoc(a, b, c);
    }
  }
  return report;
}

}  // namespace fusion
