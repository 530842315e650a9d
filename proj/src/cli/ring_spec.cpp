#include "fusion/ring_spec.hpp"

#include "fusion/providers.hpp"

#include <cctype>
#include <charconv>

namespace fusion {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ProviderPtr parse() {
    ProviderPtr p = spec(0);
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint64_t number() {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == text_.data() + start) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  std::string word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  ProviderPtr spec(int depth) {
    const std::size_t start = pos_;
    if (consume("word:")) {
      WordGroupSpec ws;
      do {
        if (!consume("Z")) fail("expected a factor Z or Z<m>");
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          const std::size_t at = pos_;
          const auto m = number();
          if (m < 2) throw ParseError("finite factor orders must be >= 2", at);
          ws.factors.push_back(m);
        } else {
          ws.factors.push_back(std::nullopt);
        }
      } while (consume("*"));
      if (ws.factors.size() > 26) throw ParseError("at most 26 factors", start);
      return word_group(std::move(ws));
    }
    if (consume("free(") || consume("prod(")) {
      const bool free = text_.substr(start, 4) == "free";
      ProviderPtr a = spec(depth + 1);
      expect(',');
      ProviderPtr b = spec(depth + 1);
      expect(')');
      if (free) return free_product(std::move(a), std::move(b));
      return direct_product(std::move(a), std::move(b));
    }
    if (consume("json:")) {
      std::size_t end = pos_;
      if (depth == 0)
        end = text_.size();
      else
        while (end < text_.size() && text_[end] != ',' && text_[end] != ')') ++end;
      if (end == pos_) fail("expected a path");
      const std::string path(text_.substr(pos_, end - pos_));
      pos_ = end;
      return load_fusion_ring_file(path);
    }
    if (consume("group:")) {
      const std::string name = word();
      try {
        return builtin_group_ring(name);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), start);
      }
    }
    if (consume("char:")) {
      const std::string name = word();
      try {
        return builtin_character_ring(name);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), start);
      }
    }
    if (consume("suq2")) return suq2_ring();
    if (consume("so3")) return so3_ring();
    if (consume("uqsu11")) return uq_su11_ring();
    if (consume("au")) {
      if (consume(":")) {
        const std::size_t at = pos_;
        const auto d = number();
        if (d < 2) throw ParseError("A_u generator dimension must be >= 2", at);
        return au_ring(d);
      }
      return au_ring();
    }
    fail("unknown ring");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ProviderPtr parse_provider(std::string_view spec) { return Parser(spec).parse(); }

}  // namespace fusion
