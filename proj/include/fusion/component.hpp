#pragma once

#include "fusion/providers.hpp"
#include "fusion/torsion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fusion {

/// Constituents of `d` that lie in S, with their multiplicities.
Decomposition s_part(const Decomposition& d, const LabelSet& S);
/// s_part of an element with non-negative coefficients; throws std::invalid_argument otherwise.
Decomposition s_part(const VirtualElement& x, const LabelSet& S);
Decomposition s_part(const FusionProvider& ring, const IrrLabel& u, const LabelSet& S);

/// Σ_{w ∈ S} N^w_{conj(u) v} dim(w).
Integer restriction_hom_dim(const FusionProvider& ring, const LabelSet& S, const IrrLabel& u, const IrrLabel& v);

struct ConnectednessReport {
  enum class Verdict { NoTorsionFound, TorsionFound };
  Verdict verdict = Verdict::NoTorsionFound;
  std::optional<IrrLabel> torsion_label;  ///< first non-unit torsion label in enumeration order
  std::vector<IrrLabel> non_torsion;
  std::vector<IrrLabel> unknowns;
  /// TorsionFound is always certified; NoTorsionFound only when nothing is Unknown.
  bool certified() const { return verdict == Verdict::TorsionFound || unknowns.empty(); }
};

std::string to_string(ConnectednessReport::Verdict v);

ConnectednessReport connectedness_probe(const FusionProvider& ring, std::size_t bound, const Budget& budget);

/// Restriction of a free-product label to factor `factor_index` (0 or 1):
/// letters of that factor are tensored in order, every other letter
/// contributes its dimension as a scalar.
VirtualElement factor_restriction(const FreeProductRing& ring, const IrrLabel& w, std::size_t factor_index);

struct ComponentBounds {
  std::size_t normality = 20;  ///< probes for normality_consistency
  std::size_t hom_table = 14;  ///< labels in each axis of the hom-dimension table
};

struct HomDimEntry {
  IrrLabel u;
  IrrLabel v;
  Integer value;
};

struct ComponentReport {
  enum class Verdict { NormalWithFiniteComponentGroup, NonNormalWitness, Inconclusive };

  TorsionReport torsion;
  Subcategory generated;  ///< generated_subring of the torsion set
  bool tensorial = false;
  bool commutative = false;
  std::optional<bool> finite;  ///< nullopt when the generated ring did not saturate
  std::vector<NormalityViolation> normality_violations;
  ComponentBounds bounds;

  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> reasons;

  // NormalWithFiniteComponentGroup
  std::optional<Integer> component_group_order;  ///< Σ_{w ∈ S} dim(w)^2
  std::vector<HomDimEntry> hom_dims;

  // NonNormalWitness
  std::optional<IrrLabel> witness;
  std::optional<IrrLabel> witness_u;
  std::optional<IrrLabel> witness_v;
  std::size_t witness_factor = 0;  ///< the torsion-free factor restricted to
  VirtualElement witness_restriction;
  Integer invariant_multiplicity = 0;  ///< coefficient of the unit in witness_restriction
  Integer trivial_multiplicity = 0;    ///< dim(witness): the coefficient if the restriction were trivial

  std::optional<std::size_t> torsion_degree_bound;
  std::string torsion_degree_note;
};

std::string to_string(ComponentReport::Verdict v);

ComponentReport identity_component_report(const FusionProvider& ring, const ComponentBounds& bounds,
                                          const Budget& budget);

}  // namespace fusion
