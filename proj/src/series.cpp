#include "distprof/series.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace distprof {

namespace {

void trim(TPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

TPoly tp_add(const TPoly& a, const TPoly& b) {
  TPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

TPoly tp_sub(const TPoly& a, const TPoly& b) {
  TPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

TPoly tp_mul(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

TPoly tp_pow(const TPoly& a, std::uint32_t k) {
  TPoly out{TriPoly::constant(1)};
  for (std::uint32_t i = 0; i < k; ++i) out = tp_mul(out, a);
  return out;
}

// c * t^deg
TPoly tp_term(const TriPoly& c, std::size_t deg) {
  TPoly out(deg + 1);
  out[deg] = c;
  trim(out);
  return out;
}

TPoly tp_one() { return {TriPoly::constant(1)}; }

bool is_one(const TriPoly& p) { return p == TriPoly::constant(1); }

BigInt power(const BigInt& base, std::uint32_t k) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
  return r;
}

TriPoly substitute(const TriPoly& p, const BigInt& e, const BigInt& x, const BigInt& y) {
  BigInt sum = 0;
  for (const auto& [ex, c] : p.terms()) sum += c * power(e, ex[0]) * power(x, ex[1]) * power(y, ex[2]);
  return TriPoly::constant(sum);
}

}  // namespace

RationalSeries::RationalSeries(TPoly num, TPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalSeries::normalize() {
  trim(num_);
  trim(den_);
  if (den_.empty() || !is_one(den_[0]))
    throw std::invalid_argument("series denominator must have constant term 1");
}

RationalSeries rs_add(const RationalSeries& a, const RationalSeries& b) {
  if (a.denominator() == b.denominator())
    return {tp_add(a.numerator(), b.numerator()), a.denominator()};
  return {tp_add(tp_mul(a.numerator(), b.denominator()), tp_mul(b.numerator(), a.denominator())),
          tp_mul(a.denominator(), b.denominator())};
}

RationalSeries rs_mul(const RationalSeries& a, const RationalSeries& b) {
  return {tp_mul(a.numerator(), b.numerator()), tp_mul(a.denominator(), b.denominator())};
}

RationalSeries rs_star(const RationalSeries& f) {
  if (!f.numerator().empty() && !f.numerator()[0].is_zero())
    throw std::domain_error("star of a series with nonzero constant term");
  // 1 / (1 - a/b) = b / (b - a)
  return {f.denominator(), tp_sub(f.denominator(), f.numerator())};
}

RationalSeries rs_divide_monomial(const RationalSeries& f, const TriPoly::Exponent& m) {
  const TPoly& num = f.numerator();
  if (!num.empty() && !num[0].is_zero())
    throw std::domain_error("numerator has a t^0 term; not divisible by a multiple of t");
  TPoly out;
  for (std::size_t i = 1; i < num.size(); ++i) {
    TriPoly q;
    for (const auto& [e, c] : num[i].terms()) {
      if (e[0] < m[0] || e[1] < m[1] || e[2] < m[2])
        throw std::domain_error("numerator term is not divisible by the monomial");
      q.add_term({e[0] - m[0], e[1] - m[1], e[2] - m[2]}, c);
    }
    out.push_back(std::move(q));
  }
  return {std::move(out), f.denominator()};
}

RationalSeries substitute(const RationalSeries& f, const BigInt& e, const BigInt& x,
                          const BigInt& y) {
  auto sub = [&](const TPoly& p) {
    TPoly out;
    for (const auto& c : p) out.push_back(substitute(c, e, x, y));
    return out;
  };
  return {sub(f.numerator()), sub(f.denominator())};
}

RationalSeries specialize_e(const RationalSeries& f) {
  auto sub = [](const TPoly& p) {
    TPoly out;
    for (const auto& c : p) {
      TriPoly q;
      for (const auto& [e, v] : c.terms()) q.add_term({0, e[1], e[2]}, v);
      out.push_back(std::move(q));
    }
    return out;
  };
  return {sub(f.numerator()), sub(f.denominator())};
}

bool same_function(const RationalSeries& a, const RationalSeries& b) {
  return tp_mul(a.numerator(), b.denominator()) == tp_mul(b.numerator(), a.denominator());
}

std::vector<TriPoly> expand_tri(const RationalSeries& f, std::size_t n) {
  const TPoly& num = f.numerator();
  const TPoly& den = f.denominator();
  std::vector<TriPoly> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    TriPoly v = i < num.size() ? num[i] : TriPoly{};
    for (std::size_t j = 1; j < den.size() && j <= i; ++j)
      if (!den[j].is_zero()) v -= den[j] * c[i - j];
    c[i] = std::move(v);
  }
  return c;
}

std::vector<Profile> expand(const RationalSeries& f, std::size_t n) {
  std::vector<Profile> out;
  out.reserve(n + 1);
  std::size_t i = 0;
  for (const auto& c : expand_tri(f, n)) {
    try {
      out.push_back(specialize_e(c));
    } catch (const std::domain_error&) {
      throw std::domain_error("series coefficient of t^" + std::to_string(i) +
                              " has a negative term: " + to_string(c));
    }
    ++i;
  }
  return out;
}

std::vector<BigInt> expand_counts(const RationalSeries& f, std::size_t n) {
  const auto g = substitute(f, 1, 1, 1);
  auto scalar = [](const TPoly& p, std::size_t i) {
    return i < p.size() ? p[i].coefficient({0, 0, 0}) : BigInt(0);
  };
  std::vector<BigInt> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    BigInt v = scalar(g.numerator(), i);
    for (std::size_t j = 1; j < g.denominator().size() && j <= i; ++j)
      v -= scalar(g.denominator(), j) * c[i - j];
    c[i] = v;
  }
  return c;
}

std::string to_string(const TPoly& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    std::string tpow = i == 0 ? "" : i == 1 ? "t" : "t^" + std::to_string(i);
    // Re-render each e/x/y term with the t power appended.
    std::vector<std::pair<TriPoly::Exponent, BigInt>> terms(p[i].terms().begin(),
                                                            p[i].terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
      auto da = a.first[0] + a.first[1] + a.first[2], db = b.first[0] + b.first[1] + b.first[2];
      if (da != db) return da < db;
      return a.first > b.first;
    });
    for (const auto& [e, c] : terms) {
      std::string mono = to_string(TriPoly::monomial(e, 1));
      if (mono == "1") mono.clear();
      mono += tpow;
      BigInt mag = abs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mono.empty() || mag != 1) out += mag.get_str();
      out += mono;
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const RationalSeries& f) {
  return "(" + to_string(f.numerator()) + ") / (" + to_string(f.denominator()) + ")";
}

RationalSeries regex_to_series(const Regex& r) {
  using Kind = Regex::Kind;
  switch (r.kind()) {
    case Kind::atom: {
      TriPoly w = r.symbol() == Symbol::E   ? tri_monomial(1, 0, 0)
                  : r.symbol() == Symbol::B ? tri_monomial(0, 1, 0)
                                            : tri_monomial(0, 0, 1);
      return {tp_term(w, 1), tp_one()};
    }
    case Kind::epsilon: return RationalSeries::one();
    case Kind::concat: {
      RationalSeries acc = RationalSeries::one();
      for (const auto& c : r.children()) acc = rs_mul(acc, regex_to_series(c));
      return acc;
    }
    case Kind::alt: {
      RationalSeries acc = regex_to_series(r.children().front());
      for (std::size_t i = 1; i < r.children().size(); ++i)
        acc = rs_add(acc, regex_to_series(r.children()[i]));
      return acc;
    }
    case Kind::star: return rs_star(regex_to_series(r.children().front()));
    case Kind::repeat: {
      // sum_{i=min}^{max} (a/b)^i = (sum_i a^i b^{max-i}) / b^max
      const auto f = regex_to_series(r.children().front());
      const TPoly& a = f.numerator();
      const TPoly& b = f.denominator();
      TPoly num;
      for (std::uint32_t i = r.min(); i <= r.max(); ++i)
        num = tp_add(num, tp_mul(tp_pow(a, i), tp_pow(b, r.max() - i)));
      return {num, tp_pow(b, r.max())};
    }
  }
  throw std::logic_error("unhandled regex node");
}

Regex encis_path_regex(std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  const Regex piece = Regex::alt({B(), R()});
  // A piece followed by at least k empty vertices.
  const Regex block = Regex::concat({piece, power(E(), k), Regex::star(E())});
  // A final piece followed by fewer than k empty vertices, or nothing.
  std::vector<Regex> tail;
  for (Regex c : {B(), R()})
    for (std::uint32_t i = 0; i < k; ++i) tail.push_back(Regex::concat({c, power(E(), i)}));
  tail.push_back(Regex::epsilon());
  return Regex::concat({Regex::star(E()), Regex::star(block), Regex::alt(std::move(tail))});
}

Regex ensnort_path_regex(std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  // A maximal run of one colour: consecutive pieces separated by fewer than k
  // empty vertices.
  auto run = [k](const Regex& c) {
    return Regex::concat({c, Regex::star(Regex::concat({Regex::repeat(E(), 0, k - 1), c}))});
  };
  const Regex runs = Regex::alt({run(B()), run(R())});
  const Regex block = Regex::concat({runs, power(E(), k), Regex::star(E())});
  const Regex tail = Regex::alt({Regex::concat({run(B()), Regex::repeat(E(), 0, k - 1)}),
                                 Regex::concat({run(R()), Regex::repeat(E(), 0, k - 1)}),
                                 Regex::epsilon()});
  return Regex::concat({Regex::star(E()), Regex::star(block), tail});
}

Regex cis2_path_regex() {
  const Regex u = Regex::alt({Regex::concat({B(), B()}), Regex::concat({B(), R()}),
                              Regex::concat({R(), B()}), Regex::concat({R(), R()}), B(), R()});
  const Regex block = Regex::concat({u, E(), E(), Regex::star(E())});
  return Regex::concat({Regex::star(E()), Regex::star(block),
                        Regex::alt({u, Regex::concat({u, E()}), Regex::epsilon()})});
}

std::array<Regex, 3> cis_cycle_case_regexes() {
  const Regex gap = Regex::concat({E(), Regex::star(E())});
  const Regex items = Regex::star(Regex::alt({Regex::concat({B(), gap}), Regex::concat({R(), gap})}));
  return {Regex::concat({gap, items}), Regex::concat({B(), gap, items, B()}),
          Regex::concat({R(), gap, items, R()})};
}

namespace {

struct FamilyName {
  GfFamily family;
  const char* name;
  bool takes_k;
};

constexpr FamilyName kFamilies[] = {
    {GfFamily::col_path, "col_path", false},     {GfFamily::snort_path, "snort_path", false},
    {GfFamily::cis_path, "cis_path", false},     {GfFamily::cis2_path, "cis2_path", false},
    {GfFamily::cis_cycle, "cis_cycle", false},   {GfFamily::encis_path, "encis", true},
    {GfFamily::ensnort_path, "ensnort", true},
};

}  // namespace

GfSpec parse_gf_spec(std::string_view text) {
  std::string_view head = text;
  std::optional<std::uint32_t> k;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    head = text.substr(0, colon);
    auto tail = text.substr(colon + 1);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), v);
    if (tail.empty() || ec != std::errc() || ptr != tail.data() + tail.size() || v == 0)
      throw std::invalid_argument("bad family parameter in '" + std::string(text) + "'");
    k = v;
  }
  std::string h(head);
  if (h == "col" || h == "snort" || h == "cis" || h == "cis2") h += "_path";
  for (const auto& f : kFamilies) {
    if (h != f.name) continue;
    if (f.takes_k != k.has_value())
      throw std::invalid_argument(std::string("family '") + f.name +
                                  (f.takes_k ? "' needs :k" : "' takes no parameter"));
    return {f.family, k};
  }
  throw std::invalid_argument("unknown series family '" + std::string(text) + "'");
}

std::string to_string(const GfSpec& spec) {
  for (const auto& f : kFamilies)
    if (f.family == spec.family)
      return std::string(f.name) + (spec.k ? ":" + std::to_string(*spec.k) : "");
  return "?";
}

RationalSeries encis_closed_form_gf(std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  const TriPoly one = TriPoly::constant(1);
  const TriPoly xy = tri_monomial(0, 1, 0) + tri_monomial(0, 0, 1);
  const TPoly one_minus_t = {one, -one};
  TPoly num = tp_add(tp_add(one_minus_t, tp_term(xy, 1)), tp_term(-xy, k + 1));
  TPoly den = tp_mul(one_minus_t, tp_add(one_minus_t, tp_term(-xy, k + 1)));
  return {num, den};
}

RationalSeries builtin_gf(GfFamily family, std::optional<std::uint32_t> k) {
  const bool needs_k = family == GfFamily::encis_path || family == GfFamily::ensnort_path;
  if (needs_k != k.has_value())
    throw std::invalid_argument(needs_k ? "family needs k" : "family takes no parameter");
  if (k && *k == 0) throw std::invalid_argument("k must be positive");

  const TriPoly one = TriPoly::constant(1);
  const TriPoly e = tri_monomial(1, 0, 0), x = tri_monomial(0, 1, 0), y = tri_monomial(0, 0, 1);
  const TriPoly xy = tri_monomial(0, 1, 1);
  switch (family) {
    case GfFamily::col_path: {
      // (1+xt)(1+yt) / (1 - (xyt^2 + t(1+xt)(1+yt)))
      TPoly prod = tp_mul({one, x}, {one, y});
      TPoly inner = tp_add(tp_term(xy, 2), tp_mul({TriPoly{}, one}, prod));
      return {prod, tp_sub(tp_one(), inner)};
    }
    case GfFamily::snort_path: {
      // (1 - xyt^2) / (1 - (xt + yt - xyt^2 + t(1 - xyt^2)))
      TPoly num = tp_sub(tp_one(), tp_term(xy, 2));
      TPoly inner = tp_add(tp_sub(tp_term(x + y, 1), tp_term(xy, 2)), tp_mul({TriPoly{}, one}, num));
      return {num, tp_sub(tp_one(), inner)};
    }
    case GfFamily::cis_path:
      // (1 + xt + yt) / (1 - t - xt^2 - yt^2)
      return {{one, x + y}, {one, -one, -(x + y)}};
    case GfFamily::cis2_path: {
      // u = xt + yt + (xt + yt)^2
      // (1 + u + etu) / (1 - et - e^2 t^2 u)
      TPoly s = tp_term(x + y, 1);
      TPoly u = tp_add(s, tp_mul(s, s));
      TPoly num = tp_add(tp_add(tp_one(), u), tp_mul(tp_term(e, 1), u));
      TPoly den = tp_sub(tp_sub(tp_one(), tp_term(e, 1)), tp_mul(tp_term(e * e, 2), u));
      return {num, den};
    }
    case GfFamily::encis_path: return regex_to_series(encis_path_regex(*k));
    case GfFamily::ensnort_path: return regex_to_series(ensnort_path_regex(*k));
    case GfFamily::cis_cycle: {
      // The first and last path vertex are the same cycle vertex; divide each
      // case by the weight of that duplicated vertex.
      const auto cases = cis_cycle_case_regexes();
      const std::array<TriPoly::Exponent, 3> first = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
      RationalSeries sum;
      for (std::size_t i = 0; i < cases.size(); ++i)
        sum = rs_add(sum, rs_divide_monomial(regex_to_series(cases[i]), first[i]));
      return sum;
    }
  }
  throw std::invalid_argument("unknown series family");
}

}  // namespace distprof
