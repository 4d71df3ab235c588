#pragma once

// Staircase and lcm oracles for monomial ideals, independent of Groebner
// bases: membership is divisibility by a generator, colength is a lattice
// point count.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hilbertkit/ideal.hpp"

namespace oracle {

using Exps = std::vector<unsigned>;

struct MonoIdeal {
  std::size_t nvars = 0;
  std::vector<Exps> gens;
};

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool member(const Exps& m, const MonoIdeal& I) {
  return std::any_of(I.gens.begin(), I.gens.end(), [&](const Exps& g) { return divides(g, m); });
}

/// Exponent of the pure power of variable i in I; 0 when there is none.
inline unsigned pure_power(const MonoIdeal& I, std::size_t i) {
  unsigned best = 0;
  for (const auto& g : I.gens) {
    bool pure = g[i] > 0;
    for (std::size_t j = 0; j < g.size() && pure; ++j) pure = j == i || g[j] == 0;
    if (pure && (best == 0 || g[i] < best)) best = g[i];
  }
  return best;
}

inline void box(const std::vector<unsigned>& bound, const std::function<void(const Exps&)>& visit) {
  Exps e(bound.size(), 0);
  for (;;) {
    visit(e);
    std::size_t i = 0;
    while (i < e.size() && ++e[i] == bound[i]) e[i++] = 0;
    if (i == e.size()) return;
  }
}

inline std::size_t colength(const MonoIdeal& I) {
  if (member(Exps(I.nvars, 0), I)) return 0;
  std::vector<unsigned> bound(I.nvars);
  for (std::size_t i = 0; i < I.nvars; ++i) bound[i] = pure_power(I, i);
  std::size_t n = 0;
  box(bound, [&](const Exps& e) { n += !member(e, I); });
  return n;
}

inline MonoIdeal intersect(const MonoIdeal& A, const MonoIdeal& B) {
  MonoIdeal out{A.nvars, {}};
  for (const auto& a : A.gens)
    for (const auto& b : B.gens) {
      Exps l(A.nvars);
      for (std::size_t i = 0; i < A.nvars; ++i) l[i] = std::max(a[i], b[i]);
      out.gens.push_back(l);
    }
  return out;
}

inline MonoIdeal product(const MonoIdeal& A, const MonoIdeal& B) {
  MonoIdeal out{A.nvars, {}};
  for (const auto& a : A.gens)
    for (const auto& b : B.gens) {
      Exps p(A.nvars);
      for (std::size_t i = 0; i < A.nvars; ++i) p[i] = a[i] + b[i];
      out.gens.push_back(p);
    }
  return out;
}

inline MonoIdeal colon(const MonoIdeal& A, const Exps& f) {
  MonoIdeal out{A.nvars, {}};
  for (const auto& a : A.gens) {
    Exps q(A.nvars);
    for (std::size_t i = 0; i < A.nvars; ++i) q[i] = a[i] > f[i] ? a[i] - f[i] : 0;
    out.gens.push_back(q);
  }
  return out;
}

inline MonoIdeal colon(const MonoIdeal& A, const MonoIdeal& B) {
  MonoIdeal out = colon(A, B.gens.front());
  for (std::size_t k = 1; k < B.gens.size(); ++k) out = intersect(out, colon(A, B.gens[k]));
  return out;
}

inline std::string monomial_text(const Exps& e) {
  static const char* names[] = {"x", "y", "z", "w"};
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

inline hk::RingPtr ring(std::size_t nvars, std::uint32_t p = 32003) {
  static const char* names[] = {"x", "y", "z", "w"};
  return hk::make_ring(p, std::vector<std::string>(names, names + nvars));
}

inline hk::Polynomial poly(const hk::RingPtr& R, const Exps& e) { return hk::parse_poly(monomial_text(e), R->base()); }

inline hk::Ideal to_ideal(const hk::RingPtr& R, const MonoIdeal& I) {
  std::vector<hk::Polynomial> ps;
  for (const auto& g : I.gens) ps.push_back(poly(R, g));
  return hk::Ideal(R, std::move(ps));
}

/// Random m-primary monomial ideal: pure powers plus up to four monomials.
inline MonoIdeal random_ideal(std::size_t nvars, std::mt19937_64& rng, unsigned max_exp = 5) {
  MonoIdeal I{nvars, {}};
  std::uniform_int_distribution<unsigned> pure(1, max_exp + 1), ex(0, max_exp), extra(0, 4);
  for (std::size_t i = 0; i < nvars; ++i) {
    Exps e(nvars, 0);
    e[i] = pure(rng);
    I.gens.push_back(e);
  }
  for (unsigned k = extra(rng); k > 0; --k) {
    Exps e(nvars);
    for (auto& v : e) v = ex(rng);
    if (std::any_of(e.begin(), e.end(), [](unsigned v) { return v > 0; })) I.gens.push_back(e);
  }
  return I;
}

/// Agreement of a computed ideal with an oracle ideal: the oracle generators
/// lie in it and the colengths match.
inline bool agrees(const hk::Ideal& computed, const MonoIdeal& expected) {
  const hk::RingPtr& R = computed.ring();
  for (const auto& g : expected.gens)
    if (!hk::contains_poly(computed, poly(R, g))) return false;
  return hk::colength(computed) == colength(expected);
}

}  // namespace oracle
