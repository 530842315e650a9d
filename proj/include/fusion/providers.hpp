#pragma once

#include "fusion/axioms.hpp"
#include "fusion/provider.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fusion {

// ---------------------------------------------------------------------------
// Group-like rings: every irreducible is one-dimensional, g ⊗ h = gh.

class GroupRing : public FusionProvider {
 public:
  using FusionProvider::conj;
  using FusionProvider::decompose;

  virtual IrrLabel product(const IrrLabel& g, const IrrLabel& h) const = 0;

  Decomposition decompose(const IrrLabel& u, const IrrLabel& v) const final {
    return Decomposition::single(product(u, v));
  }
  IrrLabel inverse(const IrrLabel& g) const { return conj(g); }
  IrrLabel power(const IrrLabel& g, std::int64_t n) const;
};

class NotAGroup : public std::invalid_argument {
 public:
  NotAGroup(std::string axiom, const std::string& detail)
      : std::invalid_argument("not a group (" + axiom + "): " + detail), axiom_(std::move(axiom)) {}
  const std::string& axiom() const noexcept { return axiom_; }

 private:
  std::string axiom_;
};

/// Group algebra of a finite group given by its multiplication table.
/// table[i][j] is the index of element_i * element_j.
class FiniteGroupRing final : public GroupRing {
 public:
  using FusionProvider::conj;
  using FusionProvider::decompose;

  /// Throws NotAGroup naming the failed axiom (closure, associativity, identity, inverses).
  FiniteGroupRing(std::string name, std::vector<std::string> elements,
                  std::vector<std::vector<std::size_t>> table);

  std::string name() const override { return name_; }
  IrrLabel unit() const override { return make(identity_); }
  std::optional<IrrLabel> find(std::string_view id) const override;
  IrrLabel conj(const IrrLabel& u) const override { return make(inverse_[index(u)]); }
  IrrLabel product(const IrrLabel& g, const IrrLabel& h) const override {
    return make(table_[index(g)][index(h)]);
  }
  std::size_t label_size(const IrrLabel& u) const override;
  std::vector<IrrLabel> labels_up_to_size(std::size_t s) const override;
  std::optional<std::size_t> cardinality() const override { return elements_.size(); }
  std::optional<ElementOrder> order_oracle(const IrrLabel& u) const override;
  std::vector<IrrLabel> generators() const override { return labels_up_to_size(0); }

  std::size_t index(const IrrLabel& u) const;
  std::size_t size() const { return elements_.size(); }

 private:
  IrrLabel make(std::size_t i) const { return {elements_[i], 1}; }

  std::string name_;
  std::vector<std::string> elements_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

/// Builtin finite groups: Z<n> (n >= 1), S3, D4, Q8.
std::shared_ptr<const FiniteGroupRing> builtin_group_ring(std::string_view name);

/// Factor orders of a free product of cyclic groups; nullopt stands for Z.
struct WordGroupSpec {
  std::vector<std::optional<std::uint64_t>> factors;
  std::string to_string() const;  ///< e.g. "Z2*Z"
};

/// Free product of cyclic groups (no amalgamation).
///
/// Factor i is written with the letter 'a' + i; a label is a reduced
/// alternating word such as "ab^-1a" and the identity is "1". Exponents of a
/// Z_m letter are normalized to 1..m-1. The size of a word is its length over
/// the generators: a Z_m letter counts 1, the letter b^k of a Z factor counts |k|.
class WordGroupRing final : public GroupRing {
 public:
  using FusionProvider::conj;
  using FusionProvider::decompose;

  struct Letter {
    std::size_t factor;
    std::int64_t exponent;
    friend bool operator==(const Letter&, const Letter&) = default;
  };
  using Word = std::vector<Letter>;

  explicit WordGroupRing(WordGroupSpec spec);

  std::string name() const override { return "word:" + spec_.to_string(); }
  IrrLabel unit() const override { return {"1", 1}; }
  std::optional<IrrLabel> find(std::string_view id) const override;
  IrrLabel conj(const IrrLabel& u) const override { return make(invert(parse(u.id))); }
  IrrLabel product(const IrrLabel& g, const IrrLabel& h) const override {
    return make(multiply(parse(g.id), parse(h.id)));
  }
  std::size_t label_size(const IrrLabel& u) const override { return length(parse(u.id)); }
  std::vector<IrrLabel> labels_up_to_size(std::size_t s) const override;
  std::optional<std::size_t> cardinality() const override;
  std::optional<ElementOrder> order_oracle(const IrrLabel& u) const override;
  std::vector<IrrLabel> generators() const override;

  const WordGroupSpec& spec() const { return spec_; }
  bool factor_is_finite(std::size_t f) const { return spec_.factors[f].has_value(); }

  Word parse(std::string_view id) const;  ///< throws UnknownLabel
  IrrLabel make(const Word& w) const;
  std::string render(const Word& w) const;
  Word multiply(Word a, const Word& b) const;
  Word invert(const Word& w) const;
  std::size_t length(const Word& w) const;

  /// Image under the homomorphism onto the free product of the Z factors
  /// that sends every finite-factor letter to the identity.
  Word kill_finite_factors(const Word& w) const;
  IrrLabel kill_finite_factors(const IrrLabel& u) const { return make(kill_finite_factors(parse(u.id))); }

 private:
  std::int64_t normalize(std::size_t factor, std::int64_t e) const;
  void push(Word& w, Letter l) const;

  WordGroupSpec spec_;
};

/// Clebsch–Gordan ring of SU_q(2) (labels u0, u1, ...; dim n+1) or its even
/// part, the SO(3) ring (labels v0, v1, ...; v_k = u_{2k}, dim 2k+1).
class ClebschGordanRing final : public FusionProvider {
 public:
  using FusionProvider::conj;
  using FusionProvider::decompose;

  enum class Kind { SUq2, SO3 };
  explicit ClebschGordanRing(Kind kind) : kind_(kind) {}

  std::string name() const override { return kind_ == Kind::SUq2 ? "suq2" : "so3"; }
  IrrLabel unit() const override { return make(0); }
  std::optional<IrrLabel> find(std::string_view id) const override;
  IrrLabel conj(const IrrLabel& u) const override { return label(u.id); }
  Decomposition decompose(const IrrLabel& u, const IrrLabel& v) const override;
  std::size_t label_size(const IrrLabel& u) const override { return weight(u); }
  std::vector<IrrLabel> labels_up_to_size(std::size_t s) const override;
  std::vector<IrrLabel> generators() const override { return {make(1)}; }

  IrrLabel make(std::size_t k) const;
  std::size_t weight(const IrrLabel& u) const;  ///< the index k of u_k / v_k

 private:
  Kind kind_;
};

/// Fusion ring of the compact real form of U_q(sl2) for q < 0.
///
/// Labels are u+n / u-n for n >= 1, the unit "iota" = (+,0) and "iota-1" = (-,0),
/// all of dimension n+1. The product of (ε,n) and (δ,m) is the Clebsch–Gordan
/// range |n-m|, ..., n+m with the single sign σ = εδ, negated when n and m
/// are both odd. conj flips the sign exactly for odd n.
class UqSU11Ring final : public FusionProvider {
 public:
  using FusionProvider::conj;
  using FusionProvider::decompose;

  struct Key {
    int sign;  ///< +1 or -1
    std::size_t level;
  };

  std::string name() const override { return "uqsu11"; }
  IrrLabel unit() const override { return make({+1, 0}); }
  std::optional<IrrLabel> find(std::string_view id) const override;
  IrrLabel conj(const IrrLabel& u) const override;
  Decomposition decompose(const IrrLabel& u, const IrrLabel& v) const override;
  std::size_t label_size(const IrrLabel& u) const override { return key(u).level; }
  std::vector<IrrLabel> labels_up_to_size(std::size_t s) const override;
  std::vector<IrrLabel> generators() const override { return {make({+1, 1}), make({-1, 1})}; }

  static int product_sign(Key a, Key b);
  IrrLabel make(Key k) const;
  Key key(const IrrLabel& u) const;  ///< throws UnknownLabel
};

/// Fusion ring of Wang–Van Daele's free unitary quantum group A_u(F).
///
/// Labels are words over {u, U} (U stands for the conjugate generator),
/// the empty word is "1". The tensor product of x·a and b·y is the
/// concatenation x·a·b·y plus x ⊗ y whenever b is the conjugate letter of a.
/// Dimensions follow from the same recursion with dim(u) = dim(U) = d.
class AuRing final : public FusionProvider {
 public:
  using FusionProvider::conj;
  using FusionProvider::decompose;

  explicit AuRing(std::uint64_t generator_dim = 2);

  std::string name() const override;
  IrrLabel unit() const override { return {"1", 1}; }
  std::optional<IrrLabel> find(std::string_view id) const override;
  IrrLabel conj(const IrrLabel& u) const override;
  Decomposition decompose(const IrrLabel& x, const IrrLabel& y) const override;
  std::size_t label_size(const IrrLabel& u) const override { return word(u).size(); }
  std::vector<IrrLabel> labels_up_to_size(std::size_t s) const override;
  std::vector<IrrLabel> generators() const override { return {make("u"), make("U")}; }

  IrrLabel make(std::string_view word) const;
  Integer dimension(std::string_view word) const;
  std::uint64_t generator_dim() const { return d_; }

 private:
  std::string word(const IrrLabel& u) const;  ///< validated letters, "" for the unit
  void accumulate(std::string_view x, std::string_view y, Decomposition& out) const;

  std::uint64_t d_;
};

/// Free product of two fusion rings. Labels are alternating words of
/// non-unit letters of the factors, joined by '.'; the unit is "1". A letter
/// is written "k[id]" (k = 1 or 2) when its id is ambiguous between the
/// factors or contains one of ".[]".
class FreeProductRing final : public FusionProvider {
 public:
  using FusionProvider::conj;
  using FusionProvider::decompose;

  struct Letter {
    std::size_t factor;  ///< 0 or 1
    IrrLabel label;
  };
  using Word = std::vector<Letter>;

  FreeProductRing(ProviderPtr left, ProviderPtr right);

  std::string name() const override;
  IrrLabel unit() const override { return {"1", 1}; }
  std::optional<IrrLabel> find(std::string_view id) const override;
  IrrLabel conj(const IrrLabel& u) const override;
  Decomposition decompose(const IrrLabel& u, const IrrLabel& v) const override;
  std::size_t label_size(const IrrLabel& u) const override;
  std::vector<IrrLabel> labels_up_to_size(std::size_t s) const override;
  std::vector<IrrLabel> generators() const override;

  const FusionProvider& factor(std::size_t i) const { return i == 0 ? *left_ : *right_; }
  ProviderPtr factor_ptr(std::size_t i) const { return i == 0 ? left_ : right_; }
  Word letters(const IrrLabel& u) const;  ///< throws UnknownLabel
  IrrLabel make(const Word& w) const;

 private:
  std::optional<Word> parse(std::string_view id) const;
  std::string render_letter(const Letter& l) const;
  void accumulate(const Word& x, const Word& y, const Integer& scale, Decomposition& out) const;

  ProviderPtr left_, right_;
};

/// Direct product of two fusion rings; labels "(x,y)", componentwise fusion.
/// The size of a pair is the sum of the component sizes.
class DirectProductRing final : public FusionProvider {
 public:
  using FusionProvider::conj;
  using FusionProvider::decompose;

  DirectProductRing(ProviderPtr left, ProviderPtr right);

  std::string name() const override;
  IrrLabel unit() const override { return make(left_->unit(), right_->unit()); }
  std::optional<IrrLabel> find(std::string_view id) const override;
  IrrLabel conj(const IrrLabel& u) const override;
  Decomposition decompose(const IrrLabel& u, const IrrLabel& v) const override;
  std::size_t label_size(const IrrLabel& u) const override;
  std::vector<IrrLabel> labels_up_to_size(std::size_t s) const override;
  std::optional<std::size_t> cardinality() const override;
  std::vector<IrrLabel> generators() const override;

  std::pair<IrrLabel, IrrLabel> components(const IrrLabel& u) const;  ///< throws UnknownLabel
  IrrLabel make(const IrrLabel& a, const IrrLabel& b) const;

 private:
  ProviderPtr left_, right_;
};

/// A finite fusion ring given explicitly by its multiplication table
/// (the JSON ring format). Every label has size 0.
class TableFusionRing final : public FusionProvider {
 public:
  using FusionProvider::conj;
  using FusionProvider::decompose;

  struct Irreducible {
    std::string id;
    Integer dim;
    std::string conj;
  };

  /// No validation beyond what is needed to index the table; use
  /// load_fusion_ring_json to obtain a checked ring.
  TableFusionRing(std::string name, std::string unit, std::vector<Irreducible> irreducibles,
                  std::vector<std::vector<Decomposition>> table);

  std::string name() const override { return name_; }
  IrrLabel unit() const override { return make(unit_); }
  std::optional<IrrLabel> find(std::string_view id) const override;
  IrrLabel conj(const IrrLabel& u) const override;
  Decomposition decompose(const IrrLabel& u, const IrrLabel& v) const override;
  std::size_t label_size(const IrrLabel& u) const override;
  std::vector<IrrLabel> labels_up_to_size(std::size_t s) const override;
  std::optional<std::size_t> cardinality() const override { return irreducibles_.size(); }
  std::vector<IrrLabel> generators() const override { return labels_up_to_size(0); }

 private:
  std::size_t index(std::string_view id) const;
  IrrLabel make(std::size_t i) const { return {irreducibles_[i].id, irreducibles_[i].dim}; }

  std::string name_;
  std::size_t unit_ = 0;
  std::vector<Irreducible> irreducibles_;
  std::vector<std::vector<Decomposition>> table_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Thrown when a JSON ring file is malformed or fails the axiom harness.
class RingRejected : public std::runtime_error {
 public:
  RingRejected(const std::string& what, AxiomReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const AxiomReport& report() const noexcept { return report_; }

 private:
  AxiomReport report_;
};

/// Parses the JSON fusion-ring format
///   {"unit": id, "irreducibles": [{"id", "dim", "conj"}],
///    "fusion": [{"left", "right", "result": {id: mult}}]}
/// where every ordered pair appears exactly once, then runs check_axioms over
/// all labels. Throws RingRejected on any structural problem or violation.
std::shared_ptr<const TableFusionRing> load_fusion_ring_json(std::string_view text, std::string name);
std::shared_ptr<const TableFusionRing> load_fusion_ring_file(const std::filesystem::path& path);

/// Builtin character rings of small finite groups: S3, D4, Q8, A4, S4.
std::shared_ptr<const TableFusionRing> builtin_character_ring(std::string_view group);
/// JSON text of a builtin character ring.
std::string_view builtin_character_ring_json(std::string_view group);

std::shared_ptr<const ClebschGordanRing> suq2_ring();
std::shared_ptr<const ClebschGordanRing> so3_ring();
std::shared_ptr<const UqSU11Ring> uq_su11_ring();
std::shared_ptr<const AuRing> au_ring(std::uint64_t generator_dim = 2);
std::shared_ptr<const WordGroupRing> word_group(WordGroupSpec spec);
std::shared_ptr<const FreeProductRing> free_product(ProviderPtr a, ProviderPtr b);
std::shared_ptr<const DirectProductRing> direct_product(ProviderPtr a, ProviderPtr b);

}  // namespace fusion
