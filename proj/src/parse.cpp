#include "surfres/parse.hpp"

#include <cctype>
#include <vector>

namespace surfres {

namespace {

constexpr unsigned kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view text) : size_(text.size()) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      chars_.push_back(text[i]);
      offsets_.push_back(i);
    }
  }

  TriPoly parse() {
    if (chars_.empty()) fail("empty expression");
    TriPoly p = expr();
    if (pos_ != chars_.size()) fail(std::string("unexpected '") + chars_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    std::size_t offset = pos_ < offsets_.size() ? offsets_[pos_] : size_;
    throw ParseError(offset, message);
  }

  bool at_end() const { return pos_ >= chars_.size(); }
  char peek() const { return at_end() ? '\0' : chars_[pos_]; }

  static bool is_var(char c) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return c == 'X' || c == 'Y' || c == 'Z';
  }

  static bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || is_var(c) || c == '(';
  }

  TriPoly expr() {
    TriPoly acc;
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    TriPoly t = term();
    acc += negate ? -t : t;
    while (peek() == '+' || peek() == '-') {
      bool minus = peek() == '-';
      ++pos_;
      TriPoly next = term();
      acc += minus ? -next : next;
    }
    return acc;
  }

  TriPoly term() {
    if (!starts_factor(peek())) fail(at_end() ? "expected a term" : std::string("expected a term, found '") + peek() + "'");
    TriPoly acc = factor();
    for (;;) {
      if (peek() == '*') {
        ++pos_;
        if (!starts_factor(peek())) fail("expected a factor after '*'");
        acc = acc * factor();
      } else if (starts_factor(peek())) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  TriPoly factor() {
    TriPoly base = primary();
    if (peek() != '^') return base;
    ++pos_;
    return base.pow(exponent());
  }

  unsigned exponent() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a nonnegative integer exponent");
    unsigned e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + static_cast<unsigned>(peek() - '0');
      if (e > kMaxExponent) fail("exponent too large");
      ++pos_;
    }
    return e;
  }

  std::string digits() {
    std::string s;
    while (std::isdigit(static_cast<unsigned char>(peek()))) s.push_back(chars_[pos_++]);
    return s;
  }

  TriPoly primary() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num(digits());
      if (peek() != '/') return TriPoly(Rat(num));
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator after '/'");
      std::size_t den_pos = pos_;
      BigInt den(digits());
      if (den == 0) {
        pos_ = den_pos;
        fail("zero denominator");
      }
      Rat q(num, den);
      q.canonicalize();
      return TriPoly(q);
    }
    if (is_var(c)) {
      ++pos_;
      switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'X': return TriPoly::X();
        case 'Y': return TriPoly::Y();
        default: return TriPoly::Z();
      }
    }
    if (c == '(') {
      ++pos_;
      TriPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    fail("expected a number, a variable or '('");
  }

  std::vector<char> chars_;
  std::vector<std::size_t> offsets_;
  std::size_t size_;
  std::size_t pos_ = 0;
};

}  // namespace

TriPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace surfres
