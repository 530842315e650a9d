#include "fusion/providers.hpp"

#include <charconv>

namespace fusion {

namespace {

// Parses a non-negative decimal without leading zeros.
std::optional<std::size_t> parse_index(std::string_view s) {
  if (s.empty() || (s.size() > 1 && s[0] == '0')) return std::nullopt;
  std::size_t k = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return k;
}

}  // namespace

IrrLabel ClebschGordanRing::make(std::size_t k) const {
  if (kind_ == Kind::SUq2) return {"u" + std::to_string(k), Integer(k + 1)};
  return {"v" + std::to_string(k), Integer(2 * k + 1)};
}

std::optional<IrrLabel> ClebschGordanRing::find(std::string_view id) const {
  const char prefix = kind_ == Kind::SUq2 ? 'u' : 'v';
  if (id.empty() || id[0] != prefix) return std::nullopt;
  if (auto k = parse_index(id.substr(1))) return make(*k);
  return std::nullopt;
}

std::size_t ClebschGordanRing::weight(const IrrLabel& u) const {
  const char prefix = kind_ == Kind::SUq2 ? 'u' : 'v';
  if (!u.id.empty() && u.id[0] == prefix)
    if (auto k = parse_index(std::string_view(u.id).substr(1))) return *k;
  throw UnknownLabel(u.id);
}

Decomposition ClebschGordanRing::decompose(const IrrLabel& u, const IrrLabel& v) const {
  const std::size_t m = weight(u), n = weight(v);
  const std::size_t lo = m > n ? m - n : n - m;
  const std::size_t step = kind_ == Kind::SUq2 ? 2 : 1;
  Decomposition d;
  for (std::size_t k = lo; k <= m + n; k += step) d.add(make(k), 1);
  return d;
}

std::vector<IrrLabel> ClebschGordanRing::labels_up_to_size(std::size_t s) const {
  std::vector<IrrLabel> out;
  for (std::size_t k = 0; k <= s; ++k) out.push_back(make(k));
  return out;
}

std::shared_ptr<const ClebschGordanRing> suq2_ring() {
  return std::make_shared<ClebschGordanRing>(ClebschGordanRing::Kind::SUq2);
}

std::shared_ptr<const ClebschGordanRing> so3_ring() {
  return std::make_shared<ClebschGordanRing>(ClebschGordanRing::Kind::SO3);
}

}  // namespace fusion
