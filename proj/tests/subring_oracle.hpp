#pragma once

// Brute-force fusion subrings of a finite ring: every subset that contains the
// unit and is closed under conj and all tensor constituents.

#include "fusion/torsion.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

inline std::vector<fusion::LabelSet> closed_subsets(const fusion::FusionProvider& ring) {
  const auto all = ring.all_labels();
  std::vector<fusion::LabelSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    fusion::LabelSet s;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1) s.insert(all[i]);
    if (!s.count(ring.unit())) continue;
    bool closed = true;
    for (const auto& u : s) {
      closed = closed && s.count(ring.conj(u));
      for (const auto& v : s)
        for (const auto& [w, n] : ring.decompose(u, v)) closed = closed && s.count(w);
    }
    if (closed) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace oracle
