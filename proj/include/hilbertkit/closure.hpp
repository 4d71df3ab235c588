#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilbertkit/hilbert.hpp"
#include "hilbertkit/ladder.hpp"
#include "hilbertkit/reduction.hpp"

namespace hk {

// ---------------------------------------------------------------------------
// Ratliff-Rush closure

struct RatliffRushOptions {
  unsigned cap = 20;
};

/// (A : I^n) as n successive colons by I.
inline Ideal colon_by_power(const Ideal& A, const Ideal& I, unsigned n) {
  Ideal c = A;
  for (unsigned k = 0; k < n && !c.is_unit(); ++k) c = colon_ideal(c, I);
  return c;
}

/// Stable member of the ascending chain (I^(n+1) : I^n), n = 1, 2, ...
inline Ideal ratliff_rush(const PowerLadder& L, const RatliffRushOptions& opt = {}) {
  const Ideal& I = L.base();
  Ideal prev = colon_by_power(L.power(2), I, 1);
  std::string chain = std::to_string(colength(prev));
  for (unsigned n = 2; n <= opt.cap; ++n) {
    Ideal next = colon_by_power(L.power(n + 1), I, n);
    chain += ", " + std::to_string(colength(next));
    if (ideal_equals(prev, next)) return detail::tightened(next.with_corner(*I.corner()));
    prev = std::move(next);
  }
  throw cap_error("Ratliff-Rush chain did not stabilise by n = " + std::to_string(opt.cap) +
                  "; colengths: [" + chain + "]");
}

inline Ideal ratliff_rush(const Ideal& I, const RatliffRushOptions& opt = {}) {
  return ratliff_rush(PowerLadder(I), opt);
}

// ---------------------------------------------------------------------------
// Monomial integral closure

namespace detail {

using Exps = std::array<std::int64_t, 3>;

struct Halfspace {
  Exps normal;  // non-negative
  std::int64_t bound;
  bool holds(const Exps& a) const { return normal[0] * a[0] + normal[1] * a[1] + normal[2] * a[2] >= bound; }
};

inline Exps cross(const Exps& u, const Exps& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline Exps minus(const Exps& a, const Exps& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

/// Valid inequalities c.x >= b (c >= 0) of conv(points) + orthant, one per
/// spanning choice of n - 1 edge directions; the facets are among them, so
/// their intersection is the polyhedron. Unused coordinates stay zero.
inline std::vector<Halfspace> newton_halfspaces(const std::vector<Exps>& pts, std::size_t n) {
  std::vector<Exps> dirs;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) dirs.push_back(minus(pts[j], pts[i]));
  for (std::size_t k = 0; k < n; ++k) {
    Exps e{0, 0, 0};
    e[k] = 1;
    dirs.push_back(e);
  }
  std::vector<Exps> normals;
  if (n == 1) {
    normals.push_back({1, 0, 0});
  } else if (n == 2) {
    for (const auto& d : dirs) normals.push_back({d[1], -d[0], 0});
  } else {
    for (std::size_t a = 0; a < dirs.size(); ++a)
      for (std::size_t b = a + 1; b < dirs.size(); ++b) normals.push_back(cross(dirs[a], dirs[b]));
  }
  std::vector<Halfspace> out;
  for (auto c : normals) {
    bool any_pos = false, any_neg = false;
    for (std::size_t k = 0; k < n; ++k) {
      any_pos |= c[k] > 0;
      any_neg |= c[k] < 0;
    }
    if (any_pos && any_neg) continue;
    if (!any_pos && !any_neg) continue;
    if (any_neg)
      for (auto& v : c) v = -v;
    std::int64_t b = INT64_MAX;
    for (const auto& p : pts) b = std::min(b, c[0] * p[0] + c[1] * p[1] + c[2] * p[2]);
    out.push_back({c, b});
  }
  return out;
}

inline Exps exps_of(const Monomial& m) {
  Exps e{0, 0, 0};
  for (std::size_t i = 0; i < m.size(); ++i) e[i] = m[i];
  return e;
}

inline bool all_monomial_gens(const Ideal& I) {
  for (const auto& g : I.gens())
    if (!g.is_monomial()) return false;
  return true;
}

}  // namespace detail

/// Monomials whose exponents lie in the Newton polyhedron of I (at most three
/// variables, monomial generators).
inline Ideal monomial_integral_closure(const Ideal& I) {
  if (!detail::all_monomial_gens(I)) throw precondition_error("monomial_integral_closure: non-monomial generator");
  const std::size_t n = I.ring()->nvars();
  if (n > 3) throw precondition_error("monomial_integral_closure supports at most three variables");
  if (!I.ring()->relations().empty()) throw precondition_error("monomial_integral_closure needs a polynomial ring");
  const Ideal Ic = I.corner() ? I : with_exact_corner(I);
  std::vector<detail::Exps> pts;
  for (const auto& g : detail::local_generators(Ic)) pts.push_back(detail::exps_of(g.leading().mono));
  const auto hs = detail::newton_halfspaces(pts, n);
  const std::uint32_t K = *Ic.corner();
  std::vector<Polynomial> gens;
  for (std::uint32_t deg = 0; deg <= K; ++deg)
    detail::monomials_of_degree(n, I.base()->all_vars_mask(), deg, [&](const Monomial& m) {
      const auto e = detail::exps_of(m);
      for (const auto& h : hs)
        if (!h.holds(e)) return;
      gens.push_back(Polynomial::monomial(I.base(), m));
    });
  return Ideal(I.ring(), std::move(gens), K);
}

// ---------------------------------------------------------------------------
// Integrality witnesses

struct IntegralityWitness {
  Polynomial g;
  unsigned r = 0;  // I is a reduction of I + (g) with this index
};

namespace detail {

/// Necessary condition for g to be integral over I: v(g) >= v(I) for the
/// monomial valuations with weights in {1, 2, 3}^n.
inline bool passes_valuations(const Monomial& g, const Ideal& I) {
  const std::size_t n = I.ring()->nvars();
  std::vector<unsigned> w(n, 1);
  for (;;) {
    auto value = [&](const Monomial& m) {
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < n; ++i) v += static_cast<std::uint64_t>(w[i]) * m[i];
      return v;
    };
    std::uint64_t vi = UINT64_MAX;
    for (const auto& f : I.gens())
      for (const auto& t : f.terms()) vi = std::min(vi, value(t.mono));
    if (I.corner()) vi = std::min<std::uint64_t>(vi, std::uint64_t{*I.corner()} * *std::min_element(w.begin(), w.end()));
    if (value(g) < vi) return false;
    std::size_t k = 0;
    while (k < n && w[k] == 3) w[k++] = 1;
    if (k == n) return true;
    ++w[k];
  }
}

}  // namespace detail

/// First monomial g (by degree, then descending degrevlex) of degree at most
/// deg_bound with g outside I and I a reduction of I + (g). Candidates whose
/// multiplicity differs from that of I are discarded before the reduction
/// test; in a regular ring equal multiplicity already forces integrality.
inline std::optional<IntegralityWitness> integrality_witness_search(const Ideal& I, unsigned deg_bound,
                                                                    unsigned r_max = 30,
                                                                    const HilbertOptions& hopt = {}) {
  const Ideal Ic = I.corner() ? I : with_exact_corner(I);
  const std::size_t n = I.ring()->nvars();
  const auto ord = TermOrder::degrevlex();
  std::optional<std::int64_t> e0;
  for (unsigned deg = 1; deg <= deg_bound; ++deg) {
    std::vector<Monomial> cands;
    detail::monomials_of_degree(n, I.base()->all_vars_mask(), deg, [&](const Monomial& m) { cands.push_back(m); });
    std::sort(cands.begin(), cands.end(), [&](const Monomial& a, const Monomial& b) { return ord.less(b, a); });
    for (const auto& m : cands) {
      Polynomial g = Polynomial::monomial(I.base(), m);
      if (contains_poly(Ic, g)) continue;
      if (!detail::passes_valuations(m, Ic)) continue;
      Ideal bigger = ideal_sum(Ic, Ideal(I.ring(), {g}));
      PowerLadder LB(bigger);
      if (!e0) e0 = hilbert_coefficients(PowerLadder(Ic), hopt).e(0);
      if (hilbert_coefficients(LB, hopt).e(0) != *e0) continue;
      auto rd = reduction_index(LB, Ideal(I.ring(), Ic.gens()), r_max);
      if (rd) return IntegralityWitness{g, rd->r};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Verdicts

struct ClosureReport {
  enum class Verdict { Closed, NotClosed, Unknown };
  enum class Method { MonomialExact, RrProxy, WitnessSearch };

  Ideal input;
  Ideal rr_closure;
  Verdict verdict = Verdict::Unknown;
  Method method = Method::WitnessSearch;
  std::optional<Polynomial> witness;
  std::optional<unsigned> witness_r;  // reduction index of I in I + (witness)
  std::string note;
};

inline const char* to_string(ClosureReport::Verdict v) {
  switch (v) {
    case ClosureReport::Verdict::Closed: return "closed";
    case ClosureReport::Verdict::NotClosed: return "not-closed";
    case ClosureReport::Verdict::Unknown: return "unknown";
  }
  return "?";
}

inline const char* to_string(ClosureReport::Method m) {
  switch (m) {
    case ClosureReport::Method::MonomialExact: return "monomial-exact";
    case ClosureReport::Method::RrProxy: return "rr-proxy";
    case ClosureReport::Method::WitnessSearch: return "witness-search";
  }
  return "?";
}

struct ClosureOptions {
  unsigned deg_bound = 0;  // 0: order of I plus one
  unsigned r_max = 30;
  RatliffRushOptions rr;
  /// Known lower bound on depth G(I); at least 1 means every power of I is
  /// Ratliff-Rush closed, so the chain need not be run.
  std::optional<unsigned> depth_lower;
};

namespace detail {

inline unsigned ideal_order(const Ideal& I) {
  unsigned o = UINT32_MAX;
  for (const auto& g : I.gens()) o = std::min(o, g.order());
  return o == UINT32_MAX ? 0 : o;
}

inline std::optional<Polynomial> first_outside(const Ideal& big, const Ideal& small) {
  for (const auto& g : hk::detail::preimage_generators(big))
    if (!contains_poly(small, g)) return g;
  return std::nullopt;
}

}  // namespace detail

inline ClosureReport is_integrally_closed(const PowerLadder& L, const ClosureOptions& opt = {}) {
  const Ideal& I = L.base();
  ClosureReport rep;
  rep.input = I;
  const unsigned bound = opt.deg_bound ? opt.deg_bound : detail::ideal_order(I) + 1;
  if (opt.depth_lower && *opt.depth_lower >= 1) {
    rep.rr_closure = I;
    rep.note = "Ratliff-Rush closed: depth G(I) >= 1";
  } else {
    rep.rr_closure = ratliff_rush(L, opt.rr);
  }
  if (detail::all_monomial_gens(I) && I.ring()->nvars() <= 3 && I.ring()->relations().empty()) {
    rep.method = ClosureReport::Method::MonomialExact;
    Ideal bar = monomial_integral_closure(I);
    if (ideal_equals(bar, I)) {
      rep.verdict = ClosureReport::Verdict::Closed;
      return rep;
    }
    rep.verdict = ClosureReport::Verdict::NotClosed;
    rep.witness = detail::first_outside(bar, I);
    auto rd = reduction_index(PowerLadder(ideal_sum(I, Ideal(I.ring(), {*rep.witness}))),
                              Ideal(I.ring(), I.gens()), opt.r_max);
    if (rd) rep.witness_r = rd->r;
    return rep;
  }
  if (!ideal_equals(rep.rr_closure, I)) {
    rep.method = ClosureReport::Method::RrProxy;
    rep.verdict = ClosureReport::Verdict::NotClosed;
    rep.witness = detail::first_outside(rep.rr_closure, I);
    return rep;
  }
  rep.method = ClosureReport::Method::WitnessSearch;
  if (auto w = integrality_witness_search(I, bound, opt.r_max)) {
    rep.verdict = ClosureReport::Verdict::NotClosed;
    rep.witness = w->g;
    rep.witness_r = w->r;
  } else {
    rep.verdict = ClosureReport::Verdict::Unknown;
    rep.note += (rep.note.empty() ? "" : "; ") + std::string("no witness up to degree ") + std::to_string(bound);
  }
  return rep;
}

}  // namespace hk
