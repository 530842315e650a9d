#include "fusion/lattice.hpp"

#include <stdexcept>

namespace fusion {

namespace {

// s*a + t*b = g = gcd(a, b) >= 0.
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  Integer old_r = a, r = b, old_s = 1, s1 = 0, old_t = 0, t1 = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s1;
    old_s = s1;
    s1 = tmp;
    tmp = old_t - q * t1;
    old_t = t1;
    t1 = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  s = old_s;
  t = old_t;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

std::size_t IntegerLattice::pivot(const IntVector& row) const {
  for (std::size_t c = 0; c < n_; ++c)
    if (row[c] != 0) return c;
  return n_;
}

void IntegerLattice::add(IntVector v) {
  if (v.size() != n_) throw std::invalid_argument("lattice vector has wrong dimension");
  std::size_t i = 0;
  while (!is_zero(v)) {
    const std::size_t c = pivot(v);
    while (i < rows_.size() && pivot(rows_[i]) < c) ++i;
    if (i == rows_.size() || pivot(rows_[i]) > c) {
      if (v[c] < 0)
        for (auto& x : v) x = -x;
      rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(i), std::move(v));
      return;
    }
    IntVector& r = rows_[i];
    Integer g, s, t;
    extended_gcd(r[c], v[c], g, s, t);
    const Integer rc = r[c] / g, vc = v[c] / g;
    IntVector combined(n_), rest(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      combined[k] = s * r[k] + t * v[k];
      rest[k] = vc * r[k] - rc * v[k];
    }
    r = std::move(combined);
    v = std::move(rest);
    ++i;
  }
}

bool IntegerLattice::contains(IntVector v) const {
  if (v.size() != n_) throw std::invalid_argument("lattice vector has wrong dimension");
  for (const auto& r : rows_) {
    const std::size_t c = pivot(r);
    for (std::size_t k = 0; k < c; ++k)
      if (v[k] != 0) return false;
    if (v[c] % r[c] != 0) return false;
    const Integer f = v[c] / r[c];
    if (f != 0)
      for (std::size_t k = c; k < n_; ++k) v[k] -= f * r[k];
  }
  return is_zero(v);
}

}  // namespace fusion
