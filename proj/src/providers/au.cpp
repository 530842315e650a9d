#include "fusion/providers.hpp"

#include <algorithm>

namespace fusion {

namespace {

char bar(char c) { return c == 'u' ? 'U' : 'u'; }

bool valid_word(std::string_view w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) { return c == 'u' || c == 'U'; });
}

}  // namespace

AuRing::AuRing(std::uint64_t generator_dim) : d_(generator_dim) {
  if (d_ < 2) throw std::invalid_argument("A_u generator dimension must be >= 2");
}

std::string AuRing::name() const { return d_ == 2 ? "au" : "au:" + std::to_string(d_); }

Integer AuRing::dimension(std::string_view w) const {
  // dim(x a) = d dim(x) - [x ends with conj(a)] dim(x minus its last letter)
  Integer prev = 1, cur = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Integer next = Integer(d_) * cur;
    if (i > 0 && w[i - 1] == bar(w[i])) next -= prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

IrrLabel AuRing::make(std::string_view w) const {
  if (w.empty() || w == "1") return unit();
  return {std::string(w), dimension(w)};
}

std::optional<IrrLabel> AuRing::find(std::string_view id) const {
  if (id == "1") return unit();
  if (!valid_word(id)) return std::nullopt;
  return make(id);
}

std::string AuRing::word(const IrrLabel& u) const {
  if (u.id == "1") return {};
  if (!valid_word(u.id)) throw UnknownLabel(u.id);
  return u.id;
}

IrrLabel AuRing::conj(const IrrLabel& u) const {
  std::string w = word(u);
  std::reverse(w.begin(), w.end());
  for (auto& c : w) c = bar(c);
  return make(w);
}

void AuRing::accumulate(std::string_view x, std::string_view y, Decomposition& out) const {
  out.add(make(std::string(x) + std::string(y)), 1);
  if (!x.empty() && !y.empty() && x.back() == bar(y.front()))
    accumulate(x.substr(0, x.size() - 1), y.substr(1), out);
}

Decomposition AuRing::decompose(const IrrLabel& x, const IrrLabel& y) const {
  const std::string a = word(x), b = word(y);
  Decomposition out;
  accumulate(a, b, out);
  return out;
}

std::vector<IrrLabel> AuRing::labels_up_to_size(std::size_t s) const {
  std::vector<IrrLabel> out{unit()};
  std::vector<std::string> level{""};
  for (std::size_t len = 1; len <= s; ++len) {
    std::vector<std::string> next;
    for (const auto& w : level)
      for (char c : {'U', 'u'}) next.push_back(w + c);
    for (const auto& w : next) out.push_back(make(w));
    level = std::move(next);
  }
  return out;
}

std::shared_ptr<const AuRing> au_ring(std::uint64_t generator_dim) {
  return std::make_shared<AuRing>(generator_dim);
}

}  // namespace fusion
