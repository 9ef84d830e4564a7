#include "distprof/regex.hpp"

#include <stdexcept>

namespace distprof {

Regex Regex::atom(Symbol s) {
  Node n;
  n.kind = Kind::atom;
  n.symbol = s;
  n.nullable = false;
  return Regex(std::make_shared<const Node>(std::move(n)));
}

Regex Regex::epsilon() { return Regex(std::make_shared<const Node>(Node{})); }

Regex Regex::concat(std::vector<Regex> parts) {
  if (parts.empty()) return epsilon();
  if (parts.size() == 1) return parts.front();
  Node n;
  n.kind = Kind::concat;
  n.nullable = true;
  for (const auto& p : parts) n.nullable = n.nullable && p.accepts_empty();
  n.children = std::move(parts);
  return Regex(std::make_shared<const Node>(std::move(n)));
}

Regex Regex::alt(std::vector<Regex> options) {
  if (options.empty()) throw std::invalid_argument("alternation needs at least one option");
  if (options.size() == 1) return options.front();
  Node n;
  n.kind = Kind::alt;
  n.nullable = false;
  for (const auto& o : options) n.nullable = n.nullable || o.accepts_empty();
  n.children = std::move(options);
  return Regex(std::make_shared<const Node>(std::move(n)));
}

Regex Regex::star(Regex child) {
  if (child.accepts_empty())
    throw std::invalid_argument("star over an expression that accepts the empty string: " +
                                child.to_string());
  Node n;
  n.kind = Kind::star;
  n.children.push_back(std::move(child));
  return Regex(std::make_shared<const Node>(std::move(n)));
}

Regex Regex::repeat(Regex child, std::uint32_t min, std::uint32_t max) {
  if (min > max)
    throw std::invalid_argument("repetition bounds {" + std::to_string(min) + "," +
                                std::to_string(max) + "} are inverted");
  Node n;
  n.kind = Kind::repeat;
  n.min = min;
  n.max = max;
  n.nullable = min == 0 || child.accepts_empty();
  n.children.push_back(std::move(child));
  return Regex(std::make_shared<const Node>(std::move(n)));
}

std::string Regex::to_string() const {
  auto wrap = [](const Regex& r) {
    auto s = r.to_string();
    if (r.kind() == Kind::concat || r.kind() == Kind::alt) return "(" + s + ")";
    return s;
  };
  switch (kind()) {
    case Kind::atom: return symbol() == Symbol::E ? "E" : symbol() == Symbol::B ? "B" : "R";
    case Kind::epsilon: return "ε";
    case Kind::concat: {
      std::string s;
      for (const auto& c : children()) s += c.kind() == Kind::alt ? "(" + c.to_string() + ")" : c.to_string();
      return s;
    }
    case Kind::alt: {
      std::string s;
      for (const auto& c : children()) s += (s.empty() ? "" : "|") + c.to_string();
      return s;
    }
    case Kind::star: return wrap(children()[0]) + "*";
    case Kind::repeat: {
      auto s = wrap(children()[0]);
      if (min() == max()) return s + "{" + std::to_string(min()) + "}";
      return s + "{" + std::to_string(min()) + "," + std::to_string(max()) + "}";
    }
  }
  return {};
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Regex parse() {
    Regex r = parse_alt();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("regex column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool at_epsilon() const { return text_.substr(pos_).starts_with("ε"); }

  Regex parse_alt() {
    std::vector<Regex> options{parse_concat()};
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == '|') {
      ++pos_;
      options.push_back(parse_concat());
      skip_ws();
    }
    return Regex::alt(std::move(options));
  }

  Regex parse_concat() {
    std::vector<Regex> parts;
    for (;;) {
      skip_ws();
      if (pos_ == text_.size()) break;
      char c = text_[pos_];
      if (c == 'E' || c == 'B' || c == 'R' || c == '(' || c == '[' || at_epsilon())
        parts.push_back(parse_postfix());
      else
        break;
    }
    return Regex::concat(std::move(parts));
  }

  std::uint32_t parse_number() {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      v = v * 10 + std::uint64_t(text_[pos_] - '0');
      if (v > 1'000'000) fail("repetition bound too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return std::uint32_t(v);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Regex parse_postfix() {
    Regex r = parse_primary();
    for (;;) {
      skip_ws();
      if (pos_ == text_.size()) break;
      if (text_[pos_] == '*') {
        ++pos_;
        if (r.accepts_empty()) fail("star over an expression that accepts the empty string");
        r = Regex::star(r);
      } else if (text_[pos_] == '{') {
        ++pos_;
        auto lo = parse_number();
        auto hi = lo;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          hi = parse_number();
        }
        expect('}');
        if (lo > hi) fail("repetition bounds are inverted");
        r = Regex::repeat(r, lo, hi);
      } else {
        break;
      }
    }
    return r;
  }

  Regex parse_primary() {
    skip_ws();
    if (at_epsilon()) {
      pos_ += std::string_view("ε").size();
      return Regex::epsilon();
    }
    char c = text_[pos_++];
    switch (c) {
      case 'E': return Regex::atom(Symbol::E);
      case 'B': return Regex::atom(Symbol::B);
      case 'R': return Regex::atom(Symbol::R);
      case '(':
      case '[': {
        Regex inner = parse_alt();
        expect(c == '(' ? ')' : ']');
        return inner;
      }
      default: --pos_; fail("unexpected character");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Regex parse_regex(std::string_view text) { return Parser(text).parse(); }

}  // namespace distprof
