#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace distprof {

using BigInt = mpz_class;

// Sparse polynomial in N variables with big-integer coefficients. Zero
// coefficients are never stored.
template <std::size_t N>
class SparsePoly {
 public:
  using Exponent = std::array<std::uint32_t, N>;
  using TermMap = std::map<Exponent, BigInt>;

  SparsePoly() = default;

  static SparsePoly constant(const BigInt& c) { return monomial(Exponent{}, c); }
  static SparsePoly monomial(const Exponent& e, const BigInt& c = 1) {
    SparsePoly p;
    p.add_term(e, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  BigInt coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(const Exponent& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::uint32_t max_degree(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

// Trivariate polynomial in (e, x, y): e marks empty vertices, x blue pieces,
// y red pieces. Signed coefficients.
using TriPoly = SparsePoly<3>;

inline TriPoly tri_monomial(std::uint32_t e, std::uint32_t x, std::uint32_t y,
                            const BigInt& c = 1) {
  return TriPoly::monomial({e, x, y}, c);
}

std::string to_string(const TriPoly& p);

// Polynomial profile: bivariate in x (blue count) and y (red count) with
// nonnegative coefficients.
class Profile {
 public:
  using Poly = SparsePoly<2>;

  Profile() = default;
  // Throws std::domain_error if any coefficient is negative.
  explicit Profile(Poly p);

  static Profile one() { return monomial(0, 0); }
  static Profile monomial(std::uint32_t blue, std::uint32_t red, const BigInt& c = 1);
  // x + y
  static Profile single_piece() { return monomial(1, 0) + monomial(0, 1); }

  const Poly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  BigInt coefficient(std::uint32_t blue, std::uint32_t red) const {
    return poly_.coefficient({blue, red});
  }
  // Adds c to the (blue, red) coefficient; c must be nonnegative.
  void add_count(std::uint32_t blue, std::uint32_t red, const BigInt& c);

  // x <-> y
  Profile swapped() const;

  Profile& operator+=(const Profile& o) {
    poly_ += o.poly_;
    return *this;
  }
  friend Profile operator+(Profile a, const Profile& b) { return a += b; }
  friend Profile operator*(const Profile& a, const Profile& b) { return Profile(a.poly_ * b.poly_); }
  friend bool operator==(const Profile& a, const Profile& b) = default;

 private:
  Poly poly_;
};

BigInt evaluate(const Profile& p, const BigInt& x, const BigInt& y);
inline BigInt total(const Profile& p) { return evaluate(p, 1, 1); }

// c_i = sum of coefficients with blue + red = i. Empty for the zero profile.
std::vector<BigInt> univariate_collapse(const Profile& p);
// Terms with |blue - red| <= 1.
Profile alternating_part(const Profile& p);
// Sets e = 1. Throws std::domain_error if a resulting coefficient is negative.
Profile specialize_e(const TriPoly& p);

// "1 + 4x + 4y + 3x^2 + 6xy + 3y^2": total degree ascending, then x-degree
// descending.
std::string to_string(const Profile& p);
std::string univariate_to_string(const std::vector<BigInt>& coeffs);

// Inverse of to_string; accepts any term order and repeated monomials
// ("1+x+y+2xy", "x^2 + y^2 + 2xy"). Throws std::invalid_argument.
Profile parse_profile(std::string_view text);

}  // namespace distprof
