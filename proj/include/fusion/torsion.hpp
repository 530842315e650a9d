#pragma once

#include "fusion/provider.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace fusion {

using LabelSet = std::set<IrrLabel, LabelOrder>;

enum class ClosureKind { TensorGenerated, CentralClosure, NormalForcingClosure, TorsionSet };
enum class ClosureStatus { Saturated, BudgetExceeded };

std::string to_string(ClosureKind k);
std::string to_string(ClosureStatus s);

/// Finite set of irreducibles approximating a full tensor subcategory.
///
/// BudgetExceeded records the labels that were produced but could not be
/// adjoined (size cap) or still awaited processing when the rounds ran out.
struct Subcategory {
  ClosureKind kind = ClosureKind::TensorGenerated;
  LabelSet labels;
  ClosureStatus status = ClosureStatus::Saturated;
  LabelSet frontier;
  Budget budget;
  std::size_t rounds = 0;

  bool saturated() const { return status == ClosureStatus::Saturated; }
  bool contains(const IrrLabel& u) const { return labels.count(u) != 0; }
};

class UnsupportedProvider : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NotFinite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NotSaturated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Smallest set containing X and the unit that is closed under tensor
/// products (all constituents) and conjugation. Labels larger than
/// budget.max_label_size are never adjoined; seeds always are.
Subcategory generated_subring(const FusionProvider& ring, const std::vector<IrrLabel>& X, const Budget& budget);

/// generated_subring plus every constituent of conj(u) ⊗ v ⊗ u for v in the
/// set and u in enumerate(max_irreducibles).
Subcategory central_closure(const FusionProvider& ring, const std::vector<IrrLabel>& X, const Budget& budget);

/// generated_subring plus conj(u) ⊗ v ⊗ u whenever that product is a single
/// irreducible, for v in the set and u in enumerate(max_irreducibles).
Subcategory normal_forcing_closure(const FusionProvider& ring, const std::vector<IrrLabel>& X,
                                   const Budget& budget);

struct TorsionVerdict {
  enum class Kind { Torsion, NonTorsion, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<Subcategory> closure;  ///< the saturated closure for Torsion
  std::string witness;                 ///< certificate for NonTorsion
  Budget budget;
};

std::string to_string(TorsionVerdict::Kind k);

TorsionVerdict is_torsion(const FusionProvider& ring, const IrrLabel& u, const Budget& budget);

struct TorsionReport {
  Subcategory torsion_set;  ///< kind TorsionSet; frontier = the Unknown labels
  std::vector<std::pair<IrrLabel, TorsionVerdict>> verdicts;
  std::vector<IrrLabel> torsion;
  std::vector<IrrLabel> non_torsion;
  std::vector<IrrLabel> unknown;
};

/// Verdicts for every label of enumerate(max_irreducibles), evaluated concurrently.
TorsionReport torsion_subcategory(const FusionProvider& ring, const Budget& budget);

struct NormalityViolation {
  IrrLabel u;
  IrrLabel v;
  std::vector<IrrLabel> constituents;  ///< of conj(u) ⊗ v ⊗ u
};

/// Pairs (u, v) with v in S, u in enumerate(bound) and no constituent of
/// conj(u) ⊗ v ⊗ u in S.
std::vector<NormalityViolation> normality_consistency(const FusionProvider& ring, const LabelSet& S,
                                                      std::size_t bound);

// ---------------------------------------------------------------------------
// Cocommutative N-sequence

enum class IdentityComponent { Connected, Proper, TotallyDisconnected };
std::string to_string(IdentityComponent c);

struct NStage {
  std::size_t index = 0;
  Subcategory approximant;  ///< stage members among labels_up_to_size(max_label_size)
  bool whole_group = false;
  bool trivial = false;
  std::string certificate;  ///< how membership was decided
};

struct NSequenceReport {
  std::vector<NStage> stages;             ///< N_0, N_1, ...
  std::optional<std::size_t> torsion_degree;  ///< nullopt: not stabilized within max_stage
  IdentityComponent identity_component = IdentityComponent::Connected;
  std::string quotient;  ///< description of the quotient by the final stage
  std::vector<std::string> notes;
};

/// N_0 = {e}; N_1 = normal closure of the torsion elements; N_{r+1} = normal
/// closure of {g : g^n in N_r for some n <= exponent_bound}. Supports word
/// groups (membership by the kill-finite-factors homomorphism) and finite
/// group rings (exact closures). Throws UnsupportedProvider otherwise.
NSequenceReport n_sequence_cocommutative(const FusionProvider& ring, std::size_t max_stage, const Budget& budget,
                                         std::uint64_t exponent_bound = 64);

// ---------------------------------------------------------------------------
// Dimension ideals

/// {u in Irr(R) : u - dim(u) ι in J_A}, J_A = R · ker(dim restricted to the span of A).
/// Throws NotFinite or NotSaturated.
LabelSet dimension_ideal_recover(const FusionProvider& ring, const Subcategory& A);

// ---------------------------------------------------------------------------
// Ascending chains

struct ChainStep {
  std::size_t d = 0;
  std::vector<IrrLabel> generators;          ///< X_d
  std::optional<IrrLabel> witness;           ///< first label of X_{d+1} not in X_d
  std::size_t length_cap = 0;
  std::size_t closure_size = 0;
  ClosureStatus status = ClosureStatus::Saturated;
  std::size_t new_irreducibles = 0;          ///< labels of the closure not in the previous one
  bool witness_absent = false;               ///< witness not in the closure at length_cap
  std::size_t extended_cap = 0;              ///< max(length_cap, size of the witness)
  bool witness_absent_extended = false;      ///< same check at extended_cap
  bool witness_in_next_generators = false;
  std::optional<bool> balanced;              ///< A_u rings: every closure label balanced
};

struct ChainReport {
  std::vector<ChainStep> steps;
  std::size_t strictly_increasing_up_to = 0;
  std::optional<std::size_t> stabilized_at;
};

using GeneratorSequence = std::function<std::vector<IrrLabel>(std::size_t d)>;

/// The sequence d ↦ {conj(u)^r u^r : r <= d} of an A_u ring.
GeneratorSequence au_balanced_sequence(const FusionProvider& ring);
/// d ↦ the first min(d, |gens|) labels of gens.
GeneratorSequence prefix_sequence(std::vector<IrrLabel> gens);

/// For d = 1..d_max computes generated_subring(X_d) with label-size cap
/// d + 3 (or budget.max_label_size when cap_from_d is false) and checks
/// whether the new generator of X_{d+1} lies in it.
ChainReport ascending_chain_probe(const FusionProvider& ring, const GeneratorSequence& X, std::size_t d_max,
                                  const Budget& budget, bool cap_from_d = true);

}  // namespace fusion
