#pragma once

#include "fusion/core.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fusion {

struct Infinite {
  friend bool operator==(Infinite, Infinite) { return true; }
};

/// Order of a group-like irreducible: a positive integer or Infinite.
using ElementOrder = std::variant<std::uint64_t, Infinite>;

inline bool is_infinite(const ElementOrder& o) { return std::holds_alternative<Infinite>(o); }

/// Truncation of the (generally infinite) set of irreducibles.
///
/// `max_irreducibles` bounds every "for all irreducible u" quantifier to
/// enumerate(max_irreducibles); `max_label_size` caps the provider-specific
/// size of labels a closure may adjoin; `max_rounds` caps saturation rounds.
struct Budget {
  std::size_t max_irreducibles = 64;
  std::size_t max_rounds = 32;
  std::size_t max_label_size = 8;

  void validate() const;
  friend bool operator==(const Budget&, const Budget&) = default;
};

/// A fusion ring: irreducibles, dimensions, conjugation and tensor decomposition.
///
/// Implementations are immutable after construction. Labels are enumerated
/// by (label_size, provider order); `labels_up_to_size(s)` must be finite and
/// already sorted that way, which makes enumerate(n) a prefix of enumerate(n+1).
class FusionProvider {
 public:
  virtual ~FusionProvider() = default;

  /// Construction string understood by the ring-spec parser.
  virtual std::string name() const = 0;

  virtual IrrLabel unit() const = 0;
  /// Canonical label for `id`, or nullopt when the id is not a label of this ring.
  virtual std::optional<IrrLabel> find(std::string_view id) const = 0;
  virtual IrrLabel conj(const IrrLabel& u) const = 0;
  virtual Decomposition decompose(const IrrLabel& u, const IrrLabel& v) const = 0;

  /// Provider-specific size (highest weight, word length, ...). Only finitely
  /// many labels have size <= s for every s.
  virtual std::size_t label_size(const IrrLabel& u) const = 0;
  virtual std::vector<IrrLabel> labels_up_to_size(std::size_t s) const = 0;

  /// Number of irreducibles when the ring is finite.
  virtual std::optional<std::size_t> cardinality() const { return std::nullopt; }
  /// Only group-like rings know element orders.
  virtual std::optional<ElementOrder> order_oracle(const IrrLabel&) const { return std::nullopt; }
  /// A set of labels generating the whole ring as a tensor category with conjugates.
  virtual std::vector<IrrLabel> generators() const = 0;

  /// Throws UnknownLabel.
  IrrLabel label(std::string_view id) const;
  std::vector<IrrLabel> enumerate(std::size_t n) const;
  /// All irreducibles of a finite ring; throws std::logic_error otherwise.
  std::vector<IrrLabel> all_labels() const;

  Integer multiplicity(const IrrLabel& w, const IrrLabel& u, const IrrLabel& v) const;
  VirtualElement multiply(const VirtualElement& a, const VirtualElement& b) const;
  /// Involution of the representation ring: conj label-wise, coefficients unchanged.
  VirtualElement conj(const VirtualElement& a) const;
  /// Constituents of u ⊗ v ⊗ w, associated left to right.
  Decomposition decompose(const IrrLabel& u, const IrrLabel& v, const IrrLabel& w) const;
};

using ProviderPtr = std::shared_ptr<const FusionProvider>;

}  // namespace fusion
