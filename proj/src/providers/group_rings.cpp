#include "fusion/providers.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <set>

namespace fusion {

IrrLabel GroupRing::power(const IrrLabel& g, std::int64_t n) const {
  const IrrLabel base = n < 0 ? inverse(g) : g;
  IrrLabel acc = unit();
  for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) acc = product(acc, base);
  return acc;
}

FiniteGroupRing::FiniteGroupRing(std::string name, std::vector<std::string> elements,
                                 std::vector<std::vector<std::size_t>> table)
    : name_(std::move(name)), elements_(std::move(elements)), table_(std::move(table)) {
  const std::size_t n = elements_.size();
  if (n == 0) throw NotAGroup("identity", "empty element list");
  if (std::set<std::string>(elements_.begin(), elements_.end()).size() != n)
    throw NotAGroup("closure", "duplicate element names");
  if (table_.size() != n) throw NotAGroup("closure", "table has wrong number of rows");
  for (const auto& row : table_) {
    if (row.size() != n) throw NotAGroup("closure", "table row has wrong length");
    for (auto x : row)
      if (x >= n) throw NotAGroup("closure", "product index out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw NotAGroup("associativity",
                          "(" + elements_[a] + elements_[b] + ")" + elements_[c] + " differs");
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    found = true;
    for (std::size_t x = 0; x < n && found; ++x) found = table_[e][x] == x && table_[x][e] == x;
    if (found) identity_ = e;
  }
  if (!found) throw NotAGroup("identity", "no two-sided identity element");
  inverse_.assign(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y)
      if (table_[x][y] == identity_ && table_[y][x] == identity_) inverse_[x] = y;
    if (inverse_[x] == n) throw NotAGroup("inverses", elements_[x] + " has no inverse");
  }
}

std::optional<IrrLabel> FiniteGroupRing::find(std::string_view id) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == id) return make(i);
  return std::nullopt;
}

std::size_t FiniteGroupRing::index(const IrrLabel& u) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == u.id) return i;
  throw UnknownLabel(u.id);
}

std::size_t FiniteGroupRing::label_size(const IrrLabel& u) const {
  index(u);
  return 0;
}

std::vector<IrrLabel> FiniteGroupRing::labels_up_to_size(std::size_t) const {
  std::vector<IrrLabel> out;
  for (std::size_t i = 0; i < elements_.size(); ++i) out.push_back(make(i));
  return out;
}

std::optional<ElementOrder> FiniteGroupRing::order_oracle(const IrrLabel& u) const {
  const std::size_t g = index(u);
  std::size_t x = g;
  std::uint64_t k = 1;
  while (x != identity_) {
    x = table_[x][g];
    ++k;
  }
  return ElementOrder{k};
}

namespace {

using Perm = std::vector<std::size_t>;

std::shared_ptr<const FiniteGroupRing> from_permutations(std::string name,
                                                         const std::vector<std::pair<std::string, Perm>>& elems) {
  std::vector<std::string> names;
  for (const auto& [n, p] : elems) names.push_back(n);
  auto lookup = [&](const Perm& p) {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (elems[i].second == p) return i;
    throw NotAGroup("closure", "permutation product leaves the element list");
  };
  std::vector<std::vector<std::size_t>> table(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const Perm& a = elems[i].second;
      const Perm& b = elems[j].second;
      Perm c(a.size());
      for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];  // (ab)(x) = a(b(x))
      table[i][j] = lookup(c);
    }
  }
  return std::make_shared<FiniteGroupRing>(std::move(name), std::move(names), std::move(table));
}

std::shared_ptr<const FiniteGroupRing> cyclic(std::size_t n) {
  std::vector<std::string> names{"e"};
  for (std::size_t k = 1; k < n; ++k) names.push_back(k == 1 ? "g" : "g^" + std::to_string(k));
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return std::make_shared<FiniteGroupRing>("group:Z" + std::to_string(n), std::move(names), std::move(table));
}

std::shared_ptr<const FiniteGroupRing> quaternion() {
  // Units 1, i, j, k as 0..3; unit_product[a][b] = {sign, unit}.
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> unit_product{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  const std::array<const char*, 4> unit_names{"1", "i", "j", "k"};
  std::vector<std::string> names;
  for (int u = 0; u < 4; ++u) {
    names.push_back(unit_names[u]);
    names.push_back(std::string("-") + unit_names[u]);
  }
  auto idx = [](int sign, int u) { return static_cast<std::size_t>(2 * u + (sign < 0 ? 1 : 0)); };
  std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int sa = a % 2 ? -1 : 1, sb = b % 2 ? -1 : 1;
      const auto [s, u] = unit_product[a / 2][b / 2];
      table[a][b] = idx(sa * sb * s, u);
    }
  }
  return std::make_shared<FiniteGroupRing>("group:Q8", std::move(names), std::move(table));
}

}  // namespace

std::shared_ptr<const FiniteGroupRing> builtin_group_ring(std::string_view name) {
  if (name.size() > 1 && name[0] == 'Z') {
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
    if (ec == std::errc() && ptr == name.data() + name.size() && n >= 1 && n <= 4096) return cyclic(n);
  }
  if (name == "S3") {
    return from_permutations("group:S3", {{"e", {0, 1, 2}},
                                          {"(12)", {1, 0, 2}},
                                          {"(13)", {2, 1, 0}},
                                          {"(23)", {0, 2, 1}},
                                          {"(123)", {1, 2, 0}},
                                          {"(132)", {2, 0, 1}}});
  }
  if (name == "D4") {
    std::vector<std::pair<std::string, Perm>> elems;
    for (std::size_t k = 0; k < 4; ++k) {
      Perm r(4);
      for (std::size_t x = 0; x < 4; ++x) r[x] = (x + k) % 4;
      elems.emplace_back(k == 0 ? "e" : (k == 1 ? "r" : "r" + std::to_string(k)), r);
    }
    for (std::size_t k = 0; k < 4; ++k) {
      Perm sr(4);
      for (std::size_t x = 0; x < 4; ++x) sr[x] = (4 - (x + k) % 4) % 4;  // s ∘ r^k, s(x) = -x
      elems.emplace_back(k == 0 ? "s" : (k == 1 ? "sr" : "sr" + std::to_string(k)), sr);
    }
    return from_permutations("group:D4", elems);
  }
  if (name == "Q8") return quaternion();
  throw std::invalid_argument("unknown builtin group '" + std::string(name) + "'");
}

}  // namespace fusion
