#include "fusion/providers.hpp"

#include <charconv>

namespace fusion {

int UqSU11Ring::product_sign(Key a, Key b) {
  const int sign = a.sign * b.sign;
  return (a.level % 2 == 1 && b.level % 2 == 1) ? -sign : sign;
}

IrrLabel UqSU11Ring::make(Key k) const {
  if (k.level == 0) return {k.sign > 0 ? "iota" : "iota-1", 1};
  return {std::string(k.sign > 0 ? "u+" : "u-") + std::to_string(k.level), Integer(k.level + 1)};
}

UqSU11Ring::Key UqSU11Ring::key(const IrrLabel& u) const {
  const std::string_view id = u.id;
  if (id == "iota") return {+1, 0};
  if (id == "iota-1") return {-1, 0};
  if (id.size() >= 3 && id[0] == 'u' && (id[1] == '+' || id[1] == '-') && id[2] != '0') {
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(id.data() + 2, id.data() + id.size(), n);
    if (ec == std::errc() && ptr == id.data() + id.size() && n >= 1) return {id[1] == '+' ? +1 : -1, n};
  }
  throw UnknownLabel(id);
}

std::optional<IrrLabel> UqSU11Ring::find(std::string_view id) const {
  try {
    return make(key(IrrLabel{std::string(id), 1}));
  } catch (const UnknownLabel&) {
    return std::nullopt;
  }
}

IrrLabel UqSU11Ring::conj(const IrrLabel& u) const {
  const Key k = key(u);
  return make({k.level % 2 == 1 ? -k.sign : k.sign, k.level});
}

Decomposition UqSU11Ring::decompose(const IrrLabel& u, const IrrLabel& v) const {
  const Key a = key(u), b = key(v);
  const int sigma = product_sign(a, b);
  const std::size_t lo = a.level > b.level ? a.level - b.level : b.level - a.level;
  Decomposition d;
  for (std::size_t k = lo; k <= a.level + b.level; k += 2) d.add(make({sigma, k}), 1);
  return d;
}

std::vector<IrrLabel> UqSU11Ring::labels_up_to_size(std::size_t s) const {
  std::vector<IrrLabel> out;
  for (std::size_t n = 0; n <= s; ++n) {
    out.push_back(make({+1, n}));
    out.push_back(make({-1, n}));
  }
  return out;
}

std::shared_ptr<const UqSU11Ring> uq_su11_ring() { return std::make_shared<UqSU11Ring>(); }

}  // namespace fusion
