#pragma once

#include "fusion/core.hpp"

#include <cstddef>
#include <vector>

namespace fusion {

using IntVector = std::vector<Integer>;

/// Sublattice of Z^n kept in row-echelon (Hermite) form. Generators are
/// inserted one at a time with extended-gcd row operations, so membership
/// is decided exactly by reduction against the pivot rows.
class IntegerLattice {
 public:
  explicit IntegerLattice(std::size_t ambient_dim) : n_(ambient_dim) {}

  void add(IntVector v);
  bool contains(IntVector v) const;

  std::size_t ambient_dim() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  /// Echelon basis, pivot columns strictly increasing, pivots positive.
  const std::vector<IntVector>& basis() const { return rows_; }

 private:
  std::size_t pivot(const IntVector& row) const;

  std::size_t n_;
  std::vector<IntVector> rows_;
};

}  // namespace fusion
