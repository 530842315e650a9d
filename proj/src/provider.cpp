#include "fusion/provider.hpp"

namespace fusion {

void Budget::validate() const {
  if (max_irreducibles < 1 || max_rounds < 1 || max_label_size < 1)
    throw std::invalid_argument("budget fields must all be >= 1");
}

IrrLabel FusionProvider::label(std::string_view id) const {
  if (auto found = find(id)) return *found;
  throw UnknownLabel(id);
}

std::vector<IrrLabel> FusionProvider::enumerate(std::size_t n) const {
  if (n == 0) return {};
  const auto card = cardinality();
  // Label sizes of every builtin ring grow at least linearly, so this loop
  // terminates long before the guard.
  for (std::size_t s = 0; s < (std::size_t{1} << 20); ++s) {
    auto labels = labels_up_to_size(s);
    if (labels.size() >= n) {
      labels.resize(n);
      return labels;
    }
    if (card && labels.size() == *card) return labels;
  }
  throw std::logic_error(name() + ": enumerate did not reach " + std::to_string(n) + " labels");
}

std::vector<IrrLabel> FusionProvider::all_labels() const {
  const auto card = cardinality();
  if (!card) throw std::logic_error(name() + " is not a finite fusion ring");
  return enumerate(*card);
}

Integer FusionProvider::multiplicity(const IrrLabel& w, const IrrLabel& u, const IrrLabel& v) const {
  label(w.id);
  return decompose(u, v).multiplicity(w);
}

VirtualElement FusionProvider::multiply(const VirtualElement& a, const VirtualElement& b) const {
  VirtualElement out;
  for (const auto& [x, cx] : a) {
    for (const auto& [y, cy] : b) {
      const Integer c = cx * cy;
      for (const auto& [w, n] : decompose(x, y)) out.add(w, c * n);
    }
  }
  return out;
}

VirtualElement FusionProvider::conj(const VirtualElement& a) const {
  VirtualElement out;
  for (const auto& [x, c] : a) out.add(conj(x), c);
  return out;
}

Decomposition FusionProvider::decompose(const IrrLabel& u, const IrrLabel& v, const IrrLabel& w) const {
  Decomposition out;
  for (const auto& [x, n] : decompose(u, v)) out.add(decompose(x, w), n);
  return out;
}

}  // namespace fusion
