#include "gtmm/dsl.hpp"

#include <cctype>
#include <cstdint>
#include <optional>

namespace gtmm {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Group parse() {
    Group g = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return g;
  }

 private:
  Group parse_expr() {
    Group g = parse_term();
    while (true) {
      skip_ws();
      if (!consume('x')) return g;
      g = Group::direct_product(g, parse_term());
    }
  }

  Group parse_term() {
    Group g = parse_atom();
    skip_ws();
    if (consume('^')) {
      return Group::direct_power(g, parse_uint());
    }
    return g;
  }

  Group parse_atom() {
    skip_ws();
    if (consume_word("cyc")) {
      expect('(');
      const std::uint64_t n = parse_uint();
      expect(')');
      return Group::cyclic(n);
    }
    if (consume_word("sym")) {
      expect('(');
      const std::uint64_t n = parse_uint();
      expect(')');
      return Group::symmetric(check_degree(n));
    }
    if (consume_word("wr")) {
      expect('(');
      Group h = parse_expr();
      expect(',');
      const std::uint64_t n = parse_uint();
      expect(')');
      return Group::wreath_product(h, check_degree(n));
    }
    if (consume('(')) {
      Group g = parse_expr();
      expect(')');
      return g;
    }
    fail("expected cyc(...), sym(...), wr(...), or '('");
  }

  std::uint32_t check_degree(std::uint64_t n) {
    if (n > 20) fail("degree too large for 64-bit element codes");
    return static_cast<std::uint32_t>(n);
  }

  std::uint64_t parse_uint() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected integer");
    }
    std::uint64_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (UINT64_MAX - digit) / 10) fail("integer overflow");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // Matches a keyword not followed by an identifier character.
  bool consume_word(const std::string& word) {
    skip_ws();
    if (text_.compare(pos_, word.size(), word) != 0) return false;
    const std::size_t end = pos_ + word.size();
    if (end < text_.size() &&
        std::isalnum(static_cast<unsigned char>(text_[end]))) {
      return false;
    }
    pos_ = end;
    return true;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("group DSL error at offset " + std::to_string(pos_) +
                     " in \"" + text_ + "\": " + why);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Group parse_group(const std::string& text) { return Parser(text).parse(); }

}  // namespace gtmm
