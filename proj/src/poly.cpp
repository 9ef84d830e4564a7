#include "distprof/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace distprof {

namespace {

void append_power(std::string& s, char var, std::uint32_t d) {
  if (d == 0) return;
  s += var;
  if (d > 1) s += "^" + std::to_string(d);
}

// Joins signed terms: "a + b - c". `mono` is empty for the constant monomial.
void append_term(std::string& out, const BigInt& c, const std::string& mono) {
  BigInt mag = abs(c);
  if (out.empty()) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (mono.empty() || mag != 1) out += mag.get_str();
  out += mono;
}

}  // namespace

std::string to_string(const TriPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<TriPoly::Exponent, BigInt>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    auto key = [](const TriPoly::Exponent& e) {
      return std::make_tuple(e[0] + e[1] + e[2], -std::int64_t(e[0]), -std::int64_t(e[1]));
    };
    return key(a.first) < key(b.first);
  });
  std::string out;
  for (const auto& [e, c] : terms) {
    std::string mono;
    append_power(mono, 'e', e[0]);
    append_power(mono, 'x', e[1]);
    append_power(mono, 'y', e[2]);
    append_term(out, c, mono);
  }
  return out;
}

Profile::Profile(Poly p) : poly_(std::move(p)) {
  for (const auto& [e, c] : poly_.terms())
    if (c < 0) throw std::domain_error("profile coefficient is negative: " + c.get_str());
}

Profile Profile::monomial(std::uint32_t blue, std::uint32_t red, const BigInt& c) {
  Profile p;
  p.add_count(blue, red, c);
  return p;
}

void Profile::add_count(std::uint32_t blue, std::uint32_t red, const BigInt& c) {
  if (c < 0) throw std::domain_error("profile coefficient is negative: " + c.get_str());
  poly_.add_term({blue, red}, c);
}

Profile Profile::swapped() const {
  Poly out;
  for (const auto& [e, c] : poly_.terms()) out.add_term({e[1], e[0]}, c);
  return Profile(std::move(out));
}

BigInt evaluate(const Profile& p, const BigInt& x, const BigInt& y) {
  BigInt sum = 0;
  for (const auto& [e, c] : p.poly().terms()) {
    BigInt xp, yp;
    mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), e[0]);
    mpz_pow_ui(yp.get_mpz_t(), y.get_mpz_t(), e[1]);
    sum += c * xp * yp;
  }
  return sum;
}

std::vector<BigInt> univariate_collapse(const Profile& p) {
  std::vector<BigInt> out;
  for (const auto& [e, c] : p.poly().terms()) {
    std::size_t d = e[0] + e[1];
    if (out.size() <= d) out.resize(d + 1, BigInt(0));
    out[d] += c;
  }
  return out;
}

Profile alternating_part(const Profile& p) {
  Profile out;
  for (const auto& [e, c] : p.poly().terms()) {
    std::int64_t diff = std::int64_t(e[0]) - std::int64_t(e[1]);
    if (diff >= -1 && diff <= 1) out.add_count(e[0], e[1], c);
  }
  return out;
}

Profile specialize_e(const TriPoly& p) {
  Profile::Poly out;
  for (const auto& [e, c] : p.terms()) out.add_term({e[1], e[2]}, c);
  return Profile(std::move(out));
}

std::string to_string(const Profile& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Profile::Poly::Exponent, BigInt>> terms(p.poly().terms().begin(),
                                                                p.poly().terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    auto da = a.first[0] + a.first[1], db = b.first[0] + b.first[1];
    if (da != db) return da < db;
    return a.first[0] > b.first[0];
  });
  std::string out;
  for (const auto& [e, c] : terms) {
    std::string mono;
    append_power(mono, 'x', e[0]);
    append_power(mono, 'y', e[1]);
    append_term(out, c, mono);
  }
  return out;
}

std::string univariate_to_string(const std::vector<BigInt>& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    std::string mono;
    append_power(mono, 'x', std::uint32_t(i));
    append_term(out, coeffs[i], mono);
  }
  return out.empty() ? "0" : out;
}

Profile parse_profile(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto fail = [&](const char* what) -> void {
    throw std::invalid_argument("profile column " + std::to_string(pos + 1) + ": " + what);
  };
  auto digits = [&](std::string& out) {
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') out += text[pos++];
  };
  Profile p;
  bool any = false;
  for (;;) {
    skip_ws();
    std::string coeff;
    digits(coeff);
    std::uint32_t deg[2] = {0, 0};
    bool has_var = false;
    for (int v = 0; v < 2; ++v) {
      skip_ws();
      if (pos < text.size() && text[pos] == (v == 0 ? 'x' : 'y')) {
        ++pos;
        has_var = true;
        deg[v] = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          std::string d;
          digits(d);
          if (d.empty() || d.size() > 6) fail("bad exponent");
          deg[v] = std::uint32_t(std::stoul(d));
        }
      }
    }
    if (coeff.empty() && !has_var) fail("expected a term");
    p.add_count(deg[0], deg[1], coeff.empty() ? BigInt(1) : BigInt(coeff));
    any = true;
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '+') fail("expected '+'");
    ++pos;
  }
  if (!any) fail("empty profile");
  return p;
}

}  // namespace distprof
