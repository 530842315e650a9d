#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fusion {

/// Exact integer used for dimensions, multiplicities and ring coefficients.
using Integer = boost::multiprecision::cpp_int;

/// Canonical name of an irreducible object together with its dimension.
///
/// Two labels are equal iff their ids are equal; providers are responsible
/// for normalizing ids, so the dimension is carried along as data only.
struct IrrLabel {
  std::string id;
  Integer dim{1};

  friend bool operator==(const IrrLabel& a, const IrrLabel& b) { return a.id == b.id; }
};

/// Shortlex order on ids (length first, then bytes). This is the canonical
/// order of every label-keyed container in the library.
struct LabelOrder {
  bool operator()(const IrrLabel& a, const IrrLabel& b) const {
    if (a.id.size() != b.id.size()) return a.id.size() < b.id.size();
    return a.id < b.id;
  }
};

class UnknownLabel : public std::invalid_argument {
 public:
  explicit UnknownLabel(std::string_view id)
      : std::invalid_argument("unknown label '" + std::string(id) + "'"), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

/// Finite multiset of irreducibles with positive multiplicities.
class Decomposition {
 public:
  using Map = std::map<IrrLabel, Integer, LabelOrder>;
  using const_iterator = Map::const_iterator;

  Decomposition() = default;

  static Decomposition single(IrrLabel label) {
    Decomposition d;
    d.add(std::move(label), 1);
    return d;
  }

  /// Adds `mult` copies of `label`; a zero multiplicity is ignored.
  void add(IrrLabel label, const Integer& mult);
  void add(const Decomposition& other, const Integer& scale = 1);

  Integer multiplicity(const IrrLabel& label) const;
  bool contains(const IrrLabel& label) const { return entries_.count(label) != 0; }

  /// Σ N^w dim(w).
  Integer total_dimension() const;
  /// Σ N^w.
  Integer total_multiplicity() const;

  /// The label when the decomposition is exactly one irreducible with multiplicity 1.
  std::optional<IrrLabel> as_single() const;

  std::vector<IrrLabel> labels() const;

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }
  const Map& entries() const { return entries_; }

  friend bool operator==(const Decomposition& a, const Decomposition& b);

 private:
  Map entries_;
};

/// Integer-coefficient formal sum of irreducibles: an element of the
/// representation ring. Zero coefficients are never stored.
class VirtualElement {
 public:
  using Map = std::map<IrrLabel, Integer, LabelOrder>;
  using const_iterator = Map::const_iterator;

  VirtualElement() = default;
  explicit VirtualElement(const Decomposition& d);

  static VirtualElement of(IrrLabel label, const Integer& coeff = 1) {
    VirtualElement v;
    v.add(std::move(label), coeff);
    return v;
  }

  void add(IrrLabel label, const Integer& coeff);
  Integer coefficient(const IrrLabel& label) const;

  VirtualElement& operator+=(const VirtualElement& other);
  VirtualElement& operator-=(const VirtualElement& other);
  VirtualElement& operator*=(const Integer& scalar);
  friend VirtualElement operator+(VirtualElement a, const VirtualElement& b) { return a += b; }
  friend VirtualElement operator-(VirtualElement a, const VirtualElement& b) { return a -= b; }
  friend VirtualElement operator*(const Integer& s, VirtualElement a) { return a *= s; }

  /// Σ c_w dim(w): the ring homomorphism to the integers.
  Integer dimension() const;
  bool is_zero() const { return coeffs_.empty(); }
  /// True when every coefficient is positive, i.e. the element is an honest object.
  bool is_effective() const;
  /// Decomposition view of an effective element.
  Decomposition to_decomposition() const;

  std::size_t size() const { return coeffs_.size(); }
  const_iterator begin() const { return coeffs_.begin(); }
  const_iterator end() const { return coeffs_.end(); }

  friend bool operator==(const VirtualElement& a, const VirtualElement& b);

 private:
  Map coeffs_;
};

std::string to_string(const Decomposition& d);
std::string to_string(const VirtualElement& v);

}  // namespace fusion
