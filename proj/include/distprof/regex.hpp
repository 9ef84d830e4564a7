#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace distprof {

// One vertex of a path read left to right: empty, blue or red.
enum class Symbol : std::uint8_t { E, B, R };

// Immutable regular-expression tree over {E, B, R}. Nodes are shared.
class Regex {
 public:
  enum class Kind { atom, epsilon, concat, alt, star, repeat };

  static Regex atom(Symbol s);
  static Regex epsilon();
  // A single-element list collapses to that element; an empty concat is
  // epsilon and an empty alt is rejected.
  static Regex concat(std::vector<Regex> parts);
  static Regex alt(std::vector<Regex> options);
  // Throws std::invalid_argument if the child accepts the empty string.
  static Regex star(Regex child);
  // child{min,max}; throws std::invalid_argument if min > max.
  static Regex repeat(Regex child, std::uint32_t min, std::uint32_t max);

  Kind kind() const { return node_->kind; }
  Symbol symbol() const { return node_->symbol; }
  const std::vector<Regex>& children() const { return node_->children; }
  std::uint32_t min() const { return node_->min; }
  std::uint32_t max() const { return node_->max; }

  bool accepts_empty() const { return node_->nullable; }
  std::string to_string() const;

 private:
  struct Node {
    Kind kind = Kind::epsilon;
    Symbol symbol = Symbol::E;
    std::vector<Regex> children;
    std::uint32_t min = 0, max = 0;
    bool nullable = true;
  };
  explicit Regex(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Convenience builders.
inline Regex E() { return Regex::atom(Symbol::E); }
inline Regex B() { return Regex::atom(Symbol::B); }
inline Regex R() { return Regex::atom(Symbol::R); }
// r^k
inline Regex power(const Regex& r, std::uint32_t k) { return Regex::repeat(r, k, k); }

// Grammar (whitespace ignored):
//   alt    := concat ('|' concat)*
//   concat := postfix*            (empty concat is epsilon)
//   postfix:= primary ('*' | '{' n '}' | '{' n ',' m '}')*
//   primary:= 'E' | 'B' | 'R' | 'ε' | '(' alt ')' | '[' alt ']'
// Throws std::invalid_argument with the offending column.
Regex parse_regex(std::string_view text);

}  // namespace distprof
