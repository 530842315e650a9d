#include "fusion/providers.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace fusion {

// ---------------------------------------------------------------------------
// Free product

FreeProductRing::FreeProductRing(ProviderPtr left, ProviderPtr right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (!left_ || !right_) throw std::invalid_argument("free product of a null ring");
}

std::string FreeProductRing::name() const { return "free(" + left_->name() + "," + right_->name() + ")"; }

std::string FreeProductRing::render_letter(const Letter& l) const {
  const std::string& id = l.label.id;
  const bool plain = id != "1" && id.find_first_of(".[]") == std::string::npos &&
                     !factor(1 - l.factor).find(id);
  if (plain) return id;
  return std::to_string(l.factor + 1) + "[" + id + "]";
}

IrrLabel FreeProductRing::make(const Word& w) const {
  if (w.empty()) return unit();
  std::string id;
  Integer dim = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) id += '.';
    id += render_letter(w[i]);
    dim *= w[i].label.dim;
  }
  return {std::move(id), std::move(dim)};
}

std::optional<FreeProductRing::Word> FreeProductRing::parse(std::string_view id) const {
  Word w;
  if (id == "1") return w;
  std::size_t i = 0;
  while (true) {
    std::optional<Letter> letter;
    if (i + 1 < id.size() && (id[i] == '1' || id[i] == '2') && id[i + 1] == '[') {
      const std::size_t f = static_cast<std::size_t>(id[i] - '1');
      std::size_t depth = 0, j = i + 1;
      for (; j < id.size(); ++j) {
        if (id[j] == '[') ++depth;
        if (id[j] == ']' && --depth == 0) break;
      }
      if (j >= id.size()) return std::nullopt;
      if (auto l = factor(f).find(id.substr(i + 2, j - i - 2))) letter = Letter{f, *l};
      i = j + 1;
    } else {
      std::size_t j = i;
      while (j < id.size() && id[j] != '.' && id[j] != '[' && id[j] != ']') ++j;
      const std::string_view token = id.substr(i, j - i);
      auto a = left_->find(token);
      auto b = right_->find(token);
      if (a && !b) letter = Letter{0, *a};
      if (b && !a) letter = Letter{1, *b};
      i = j;
    }
    if (!letter || letter->label == factor(letter->factor).unit()) return std::nullopt;
    if (!w.empty() && w.back().factor == letter->factor) return std::nullopt;
    w.push_back(std::move(*letter));
    if (i == id.size()) return w;
    if (id[i] != '.') return std::nullopt;
    ++i;
  }
}

std::optional<IrrLabel> FreeProductRing::find(std::string_view id) const {
  if (auto w = parse(id)) return make(*w);
  return std::nullopt;
}

FreeProductRing::Word FreeProductRing::letters(const IrrLabel& u) const {
  if (auto w = parse(u.id)) return *w;
  throw UnknownLabel(u.id);
}

IrrLabel FreeProductRing::conj(const IrrLabel& u) const {
  Word w = letters(u);
  std::reverse(w.begin(), w.end());
  for (auto& l : w) l.label = factor(l.factor).conj(l.label);
  return make(w);
}

void FreeProductRing::accumulate(const Word& x, const Word& y, const Integer& scale, Decomposition& out) const {
  if (x.empty() || y.empty() || x.back().factor != y.front().factor) {
    Word xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    out.add(make(xy), scale);
    return;
  }
  const std::size_t f = x.back().factor;
  const Word head(x.begin(), x.end() - 1), tail(y.begin() + 1, y.end());
  for (const auto& [c, n] : factor(f).decompose(x.back().label, y.front().label)) {
    if (c == factor(f).unit()) {
      accumulate(head, tail, scale * n, out);
    } else {
      Word w = head;
      w.push_back({f, c});
      w.insert(w.end(), tail.begin(), tail.end());
      out.add(make(w), scale * n);
    }
  }
}

Decomposition FreeProductRing::decompose(const IrrLabel& u, const IrrLabel& v) const {
  Decomposition out;
  accumulate(letters(u), letters(v), 1, out);
  return out;
}

std::size_t FreeProductRing::label_size(const IrrLabel& u) const {
  std::size_t s = 0;
  for (const auto& l : letters(u)) s += std::max<std::size_t>(1, factor(l.factor).label_size(l.label));
  return s;
}

std::vector<IrrLabel> FreeProductRing::labels_up_to_size(std::size_t s) const {
  struct Candidate {
    Letter letter;
    std::size_t weight;
    std::size_t rank;
  };
  std::vector<Candidate> candidates;
  for (std::size_t f = 0; f < 2; ++f) {
    const auto& ring = factor(f);
    const IrrLabel unit = ring.unit();
    std::size_t rank = 0;
    for (auto& l : ring.labels_up_to_size(s)) {
      if (l == unit) continue;
      const std::size_t weight = std::max<std::size_t>(1, ring.label_size(l));
      candidates.push_back({{f, std::move(l)}, weight, rank++});
    }
  }
  std::vector<std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>> keys;
  std::vector<std::pair<std::size_t, std::size_t>> key;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t used, std::size_t last_factor) {
    keys.emplace_back(used, key);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const auto& cand = candidates[c];
      if (cand.letter.factor == last_factor || used + cand.weight > s) continue;
      key.emplace_back(cand.letter.factor, c);
      extend(used + cand.weight, cand.letter.factor);
      key.pop_back();
    }
  };
  extend(0, 2);
  std::sort(keys.begin(), keys.end());
  std::vector<IrrLabel> out;
  out.reserve(keys.size());
  for (const auto& [used, k] : keys) {
    Word w;
    for (const auto& [f, c] : k) w.push_back(candidates[c].letter);
    out.push_back(make(w));
  }
  return out;
}

std::vector<IrrLabel> FreeProductRing::generators() const {
  std::vector<IrrLabel> out;
  for (std::size_t f = 0; f < 2; ++f) {
    const IrrLabel unit = factor(f).unit();
    for (const auto& g : factor(f).generators())
      if (!(g == unit)) out.push_back(make({{f, g}}));
  }
  return out;
}

std::shared_ptr<const FreeProductRing> free_product(ProviderPtr a, ProviderPtr b) {
  return std::make_shared<FreeProductRing>(std::move(a), std::move(b));
}

// ---------------------------------------------------------------------------
// Direct product

DirectProductRing::DirectProductRing(ProviderPtr left, ProviderPtr right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (!left_ || !right_) throw std::invalid_argument("direct product of a null ring");
}

std::string DirectProductRing::name() const { return "prod(" + left_->name() + "," + right_->name() + ")"; }

IrrLabel DirectProductRing::make(const IrrLabel& a, const IrrLabel& b) const {
  return {"(" + a.id + "," + b.id + ")", a.dim * b.dim};
}

std::pair<IrrLabel, IrrLabel> DirectProductRing::components(const IrrLabel& u) const {
  const std::string_view id = u.id;
  if (id.size() < 3 || id.front() != '(' || id.back() != ')') throw UnknownLabel(id);
  // The separating comma is the only one at nesting depth zero.
  int depth = 0;
  std::optional<std::size_t> split;
  for (std::size_t i = 1; i + 1 < id.size(); ++i) {
    const char c = id[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      if (split) throw UnknownLabel(id);
      split = i;
    }
  }
  if (!split) throw UnknownLabel(id);
  auto a = left_->find(id.substr(1, *split - 1));
  auto b = right_->find(id.substr(*split + 1, id.size() - *split - 2));
  if (!a || !b) throw UnknownLabel(id);
  return {*a, *b};
}

std::optional<IrrLabel> DirectProductRing::find(std::string_view id) const {
  try {
    auto [a, b] = components(IrrLabel{std::string(id), 1});
    return make(a, b);
  } catch (const UnknownLabel&) {
    return std::nullopt;
  }
}

IrrLabel DirectProductRing::conj(const IrrLabel& u) const {
  auto [a, b] = components(u);
  return make(left_->conj(a), right_->conj(b));
}

Decomposition DirectProductRing::decompose(const IrrLabel& u, const IrrLabel& v) const {
  auto [a1, b1] = components(u);
  auto [a2, b2] = components(v);
  const Decomposition left = left_->decompose(a1, a2);
  const Decomposition right = right_->decompose(b1, b2);
  Decomposition out;
  for (const auto& [x, n] : left)
    for (const auto& [y, m] : right) out.add(make(x, y), n * m);
  return out;
}

std::size_t DirectProductRing::label_size(const IrrLabel& u) const {
  auto [a, b] = components(u);
  return left_->label_size(a) + right_->label_size(b);
}

std::vector<IrrLabel> DirectProductRing::labels_up_to_size(std::size_t s) const {
  const auto as = left_->labels_up_to_size(s);
  const auto bs = right_->labels_up_to_size(s);
  std::vector<std::size_t> asize, bsize;
  for (const auto& a : as) asize.push_back(left_->label_size(a));
  for (const auto& b : bs) bsize.push_back(right_->label_size(b));
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> keys;
  for (std::size_t i = 0; i < as.size(); ++i)
    for (std::size_t j = 0; j < bs.size(); ++j)
      if (asize[i] + bsize[j] <= s) keys.emplace_back(asize[i] + bsize[j], i, j);
  std::sort(keys.begin(), keys.end());
  std::vector<IrrLabel> out;
  out.reserve(keys.size());
  for (const auto& [sz, i, j] : keys) out.push_back(make(as[i], bs[j]));
  return out;
}

std::optional<std::size_t> DirectProductRing::cardinality() const {
  const auto a = left_->cardinality(), b = right_->cardinality();
  if (a && b) return *a * *b;
  return std::nullopt;
}

std::vector<IrrLabel> DirectProductRing::generators() const {
  std::vector<IrrLabel> out;
  for (const auto& g : left_->generators()) out.push_back(make(g, right_->unit()));
  for (const auto& g : right_->generators()) out.push_back(make(left_->unit(), g));
  return out;
}

std::shared_ptr<const DirectProductRing> direct_product(ProviderPtr a, ProviderPtr b) {
  return std::make_shared<DirectProductRing>(std::move(a), std::move(b));
}

}  // namespace fusion
