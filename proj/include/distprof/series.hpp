#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distprof/poly.hpp"
#include "distprof/regex.hpp"

namespace distprof {

// Polynomial in t with TriPoly coefficients; entry i is the coefficient of t^i.
using TPoly = std::vector<TriPoly>;

// numerator / denominator with the denominator's t^0 coefficient equal to 1,
// so the quotient is a formal power series in t.
class RationalSeries {
 public:
  RationalSeries() : den_{TriPoly::constant(1)} {}
  // Throws std::invalid_argument unless den[0] == 1.
  RationalSeries(TPoly num, TPoly den);

  static RationalSeries constant(const TriPoly& c) { return {{c}, {TriPoly::constant(1)}}; }
  static RationalSeries one() { return constant(TriPoly::constant(1)); }

  const TPoly& numerator() const { return num_; }
  const TPoly& denominator() const { return den_; }

 private:
  void normalize();
  TPoly num_;
  TPoly den_;
};

RationalSeries rs_add(const RationalSeries& a, const RationalSeries& b);
RationalSeries rs_mul(const RationalSeries& a, const RationalSeries& b);
// 1 / (1 - f); throws std::domain_error if f has a nonzero t^0 coefficient.
RationalSeries rs_star(const RationalSeries& f);
// f / (m t) for a monomial m in (e, x, y); throws std::domain_error when the
// numerator is not divisible.
RationalSeries rs_divide_monomial(const RationalSeries& f, const TriPoly::Exponent& m);

// Substitutes numeric values for e, x and y.
RationalSeries substitute(const RationalSeries& f, const BigInt& e, const BigInt& x,
                          const BigInt& y);
// Sets e = 1, keeping x and y.
RationalSeries specialize_e(const RationalSeries& f);
// Exact equality as rational functions (cross-multiplication).
bool same_function(const RationalSeries& a, const RationalSeries& b);

// Coefficients of t^0..t^n, computed by the recurrence the denominator induces.
std::vector<TriPoly> expand_tri(const RationalSeries& f, std::size_t n);
// As expand_tri, then e = 1. Throws std::domain_error on a negative coefficient.
std::vector<Profile> expand(const RationalSeries& f, std::size_t n);
// Coefficients at e = x = y = 1.
std::vector<BigInt> expand_counts(const RationalSeries& f, std::size_t n);

// "1 + xt + yt / 1 - t - xt^2 - yt^2" style text, each side a polynomial in
// e, x, y, t sorted by t-degree.
std::string to_string(const TPoly& p);
std::string to_string(const RationalSeries& f);

// Atom weights E -> et, B -> xt, R -> yt; concatenation multiplies,
// alternation adds, star is 1/(1 - f), epsilon is 1.
RationalSeries regex_to_series(const Regex& r);

// Regular languages of legal path positions, read left to right.
Regex encis_path_regex(std::uint32_t k);
Regex ensnort_path_regex(std::uint32_t k);
Regex cis2_path_regex();
// Cycle C_n as P_{n+1} with equal end vertices, split on the first vertex:
// empty, blue, red.
std::array<Regex, 3> cis_cycle_case_regexes();

enum class GfFamily { col_path, snort_path, cis_path, cis2_path, encis_path, ensnort_path, cis_cycle };

struct GfSpec {
  GfFamily family;
  std::optional<std::uint32_t> k;
};

// "col_path", "snort_path", "cis_path", "cis2_path", "cis_cycle", "encis:k",
// "ensnort:k". Bare game names ("col", "cis2", ...) mean the path family.
GfSpec parse_gf_spec(std::string_view text);
std::string to_string(const GfSpec& spec);

// Series whose t^n coefficient is the profile on P_n (or C_n for cis_cycle;
// only n >= 3 is meaningful there).
RationalSeries builtin_gf(GfFamily family, std::optional<std::uint32_t> k = std::nullopt);
inline RationalSeries builtin_gf(const GfSpec& s) { return builtin_gf(s.family, s.k); }

// Closed form for EnCis(k) on paths with empty vertices already set to 1:
// (1 - t + (x+y)t - (x+y)t^{k+1}) / ((1 - t)(1 - t - (x+y)t^{k+1})).
RationalSeries encis_closed_form_gf(std::uint32_t k);

}  // namespace distprof
