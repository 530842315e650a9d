#pragma once

#include "fusion/provider.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fusion {

/// One failed fusion-ring identity. `identity` is a stable machine name:
/// dimension, unit_law, conj_involution, conj_unit, conj_dimension,
/// conj_pairing, frobenius, conj_symmetry, associativity, decompose, or a
/// loader-specific structural name.
struct Violation {
  std::string identity;
  std::vector<std::string> labels;
  std::string detail;
};

struct AxiomReport {
  std::vector<Violation> violations;
  std::size_t total_violations = 0;  ///< only the first 200 are kept in `violations`
  std::size_t labels_checked = 0;
  std::size_t triples_checked = 0;
  std::size_t associativity_checked = 0;

  bool ok() const { return total_violations == 0; }
  void record(Violation v);
};

struct AxiomCheckOptions {
  std::size_t associativity_triples = 200;
  std::uint64_t seed = 20240601;
  /// Finite rings with at most this many label triples are checked exhaustively.
  std::size_t exhaustive_triple_limit = 4096;
};

/// Runs the fusion-ring identities over enumerate(budget.max_irreducibles)
/// plus seeded random associativity triples. Violations are data, never thrown.
AxiomReport check_axioms(const FusionProvider& ring, const Budget& budget,
                         const AxiomCheckOptions& options = {});

}  // namespace fusion
