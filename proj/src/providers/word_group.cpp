#include "fusion/providers.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace fusion {

std::string WordGroupSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += '*';
    out += factors[i] ? "Z" + std::to_string(*factors[i]) : "Z";
  }
  return out;
}

WordGroupRing::WordGroupRing(WordGroupSpec spec) : spec_(std::move(spec)) {
  if (spec_.factors.empty()) throw std::invalid_argument("word group needs at least one factor");
  if (spec_.factors.size() > 26) throw std::invalid_argument("word group supports at most 26 factors");
  for (const auto& f : spec_.factors)
    if (f && *f < 2) throw std::invalid_argument("finite factor orders must be >= 2");
}

std::int64_t WordGroupRing::normalize(std::size_t factor, std::int64_t e) const {
  if (const auto& m = spec_.factors[factor]) {
    const auto mod = static_cast<std::int64_t>(*m);
    return ((e % mod) + mod) % mod;
  }
  return e;
}

void WordGroupRing::push(Word& w, Letter l) const {
  l.exponent = normalize(l.factor, l.exponent);
  if (l.exponent == 0) return;
  if (!w.empty() && w.back().factor == l.factor) {
    const auto e = normalize(l.factor, w.back().exponent + l.exponent);
    if (e == 0)
      w.pop_back();
    else
      w.back().exponent = e;
    return;
  }
  w.push_back(l);
}

WordGroupRing::Word WordGroupRing::parse(std::string_view id) const {
  Word w;
  if (id == "1") return w;
  if (id.empty()) throw UnknownLabel(id);
  std::size_t i = 0;
  while (i < id.size()) {
    const char c = id[i];
    if (c < 'a' || static_cast<std::size_t>(c - 'a') >= spec_.factors.size()) throw UnknownLabel(id);
    ++i;
    std::int64_t e = 1;
    if (i < id.size() && id[i] == '^') {
      ++i;
      const char* begin = id.data() + i;
      const char* end = id.data() + id.size();
      auto [ptr, ec] = std::from_chars(begin, end, e);
      if (ec != std::errc() || ptr == begin) throw UnknownLabel(id);
      i += static_cast<std::size_t>(ptr - begin);
    }
    push(w, {static_cast<std::size_t>(c - 'a'), e});
  }
  return w;
}

std::string WordGroupRing::render(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w) {
    out += static_cast<char>('a' + l.factor);
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

IrrLabel WordGroupRing::make(const Word& w) const { return {render(w), 1}; }

std::optional<IrrLabel> WordGroupRing::find(std::string_view id) const {
  try {
    return make(parse(id));
  } catch (const UnknownLabel&) {
    return std::nullopt;
  }
}

WordGroupRing::Word WordGroupRing::multiply(Word a, const Word& b) const {
  for (const auto& l : b) push(a, l);
  return a;
}

WordGroupRing::Word WordGroupRing::invert(const Word& w) const {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) push(out, {it->factor, -it->exponent});
  return out;
}

std::size_t WordGroupRing::length(const Word& w) const {
  std::size_t n = 0;
  for (const auto& l : w) n += factor_is_finite(l.factor) ? 1 : static_cast<std::size_t>(std::abs(l.exponent));
  return n;
}

WordGroupRing::Word WordGroupRing::kill_finite_factors(const Word& w) const {
  Word out;
  for (const auto& l : w)
    if (!factor_is_finite(l.factor)) push(out, l);
  return out;
}

std::vector<IrrLabel> WordGroupRing::labels_up_to_size(std::size_t s) const {
  struct Candidate {
    Letter letter;
    std::size_t weight;
    std::int64_t order_key;
  };
  std::vector<Candidate> letters;
  for (std::size_t f = 0; f < spec_.factors.size(); ++f) {
    if (const auto& m = spec_.factors[f]) {
      for (std::int64_t e = 1; e < static_cast<std::int64_t>(*m); ++e) letters.push_back({{f, e}, 1, e});
    } else {
      for (std::int64_t k = 1; k <= static_cast<std::int64_t>(s); ++k) {
        letters.push_back({{f, k}, static_cast<std::size_t>(k), 2 * k - 1});
        letters.push_back({{f, -k}, static_cast<std::size_t>(k), 2 * k});
      }
    }
  }
  // Lexicographic keys: (factor, order_key) per letter.
  std::vector<std::pair<std::size_t, std::vector<std::pair<std::size_t, std::int64_t>>>> words;
  std::vector<std::pair<std::size_t, std::int64_t>> key;
  Word current;
  std::function<void(std::size_t)> extend = [&](std::size_t used) {
    words.emplace_back(used, key);
    for (const auto& c : letters) {
      if (used + c.weight > s) continue;
      if (!current.empty() && current.back().factor == c.letter.factor) continue;
      current.push_back(c.letter);
      key.emplace_back(c.letter.factor, c.order_key);
      extend(used + c.weight);
      current.pop_back();
      key.pop_back();
    }
  };
  extend(0);
  std::sort(words.begin(), words.end());
  std::vector<IrrLabel> out;
  out.reserve(words.size());
  for (const auto& [len, k] : words) {
    Word w;
    for (const auto& [f, ok] : k) {
      std::int64_t e;
      if (factor_is_finite(f))
        e = ok;
      else
        e = (ok % 2 == 1) ? (ok + 1) / 2 : -(ok / 2);
      w.push_back({f, e});
    }
    out.push_back(make(w));
  }
  return out;
}

std::optional<std::size_t> WordGroupRing::cardinality() const {
  if (spec_.factors.size() == 1 && spec_.factors[0]) return static_cast<std::size_t>(*spec_.factors[0]);
  return std::nullopt;
}

std::optional<ElementOrder> WordGroupRing::order_oracle(const IrrLabel& u) const {
  Word w = parse(u.id);
  if (w.empty()) return ElementOrder{std::uint64_t{1}};
  // Cyclic reduction: conjugate the last letter onto the front while the
  // first and last letters share a factor.
  while (w.size() >= 2 && w.front().factor == w.back().factor) {
    const auto e = normalize(w.front().factor, w.front().exponent + w.back().exponent);
    w.pop_back();
    if (e == 0)
      w.erase(w.begin());
    else
      w.front().exponent = e;
  }
  if (w.empty()) return ElementOrder{std::uint64_t{1}};
  if (w.size() == 1) {
    if (const auto& m = spec_.factors[w.front().factor]) {
      const auto e = static_cast<std::uint64_t>(w.front().exponent);
      return ElementOrder{*m / std::gcd(*m, e)};
    }
  }
  return ElementOrder{Infinite{}};
}

std::vector<IrrLabel> WordGroupRing::generators() const {
  std::vector<IrrLabel> out;
  for (std::size_t f = 0; f < spec_.factors.size(); ++f) out.push_back(make({{f, 1}}));
  return out;
}

std::shared_ptr<const WordGroupRing> word_group(WordGroupSpec spec) {
  return std::make_shared<WordGroupRing>(std::move(spec));
}

}  // namespace fusion
