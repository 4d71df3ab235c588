#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hilbertkit/ring.hpp"

namespace hk {

/// Declares that every monomial whose degree in the `mask` variables reaches
/// `degree` lies in the ideal being computed (m^degree is contained in it,
/// where m is generated by the masked variables). The engine then discards such
/// terms on sight, which is what keeps powers of m-primary ideals cheap.
struct Corner {
  std::uint32_t degree = 0;
  std::uint32_t mask = 0;

  bool kills(const Monomial& m) const noexcept { return m.degree_in(mask) >= degree; }
};

/// Reduced Groebner basis: monic elements, no term of an element divisible by
/// another element's leading monomial, sorted by ascending leading monomial.
/// With a corner, the basis lives in the truncated ring: terms the corner
/// kills are zero. Under a local order the corner monomials are implicit.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(PolyRingPtr ring, TermOrder order) : ring_(std::move(ring)), order_(order) {}

  const PolyRingPtr& ring() const noexcept { return ring_; }
  const TermOrder& order() const noexcept { return order_; }
  const std::optional<Corner>& corner() const noexcept { return corner_; }
  std::size_t size() const noexcept { return work_.size(); }
  bool is_zero_ideal() const noexcept { return work_.empty(); }
  bool is_unit() const noexcept { return work_.size() == 1 && work_[0].front().mono.is_one(); }

  /// Elements in canonical (degrevlex-sorted) polynomial form.
  std::vector<Polynomial> elements() const {
    std::vector<Polynomial> out;
    out.reserve(work_.size());
    for (const auto& w : work_) out.push_back(Polynomial::from_terms(ring_, w));
    return out;
  }

  /// Leading monomials under this basis' order, ascending.
  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(work_.size());
    for (const auto& w : work_) out.push_back(w.front().mono);
    return out;
  }

  /// Terms sorted descending under `order()`.
  const std::vector<std::vector<Term>>& working_elements() const noexcept { return work_; }

  bool all_monomial() const noexcept {
    return std::all_of(work_.begin(), work_.end(), [](const auto& w) { return w.size() == 1; });
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return same_ring(a.ring_, b.ring_) && a.order_ == b.order_ && a.work_ == b.work_ &&
           a.corner_.has_value() == b.corner_.has_value() &&
           (!a.corner_ || (a.corner_->degree == b.corner_->degree && a.corner_->mask == b.corner_->mask));
  }

 private:
  friend class BuchbergerEngine;
  friend GroebnerBasis basis_from_reduced(PolyRingPtr, TermOrder, std::vector<std::vector<Term>>,
                                          std::optional<Corner>);

  PolyRingPtr ring_;
  TermOrder order_;
  std::optional<Corner> corner_;
  std::vector<std::vector<Term>> work_;
};

namespace detail {

/// Cheap necessary condition for divisibility: bit i*4+k set when the exponent
/// of variable i exceeds 0, 1, 3 or 7.
inline std::uint32_t divmask(const Monomial& m) noexcept {
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    unsigned e = m[i];
    std::uint32_t bits = (e > 0) | (e > 1) << 1 | (e > 3) << 2 | (e > 7) << 3;
    r |= bits << (4 * i);
  }
  return r;
}

inline std::vector<Term> sorted_terms(const Polynomial& f, const TermOrder& ord) {
  std::vector<Term> t = f.terms();
  if (ord.kind != TermOrder::Kind::DegRevLex)
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  return t;
}

/// Shared division machinery over term vectors sorted by a fixed order.
class Divider {
 public:
  Divider(const PrimeField& field, TermOrder order, std::optional<Corner> corner)
      : F_(field), ord_(order), corner_(corner) {}

  const TermOrder& order() const noexcept { return ord_; }
  const std::optional<Corner>& corner() const noexcept { return corner_; }

  bool dead(const Monomial& m) const noexcept { return corner_ && corner_->kills(m); }

  /// h[from..] - c * u * g, dropping corner-dead terms; g's leading term is
  /// assumed to cancel h[from] and is skipped together with it.
  std::vector<Term> subtract_multiple(const std::vector<Term>& h, std::size_t from, Coeff c, const Monomial& u,
                                      const std::vector<Term>& g) const {
    std::vector<Term> out;
    out.reserve(h.size() - from + g.size());
    std::size_t i = from + 1, j = 1;
    while (i < h.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(h[i++]);
        continue;
      }
      Monomial m = g[j].mono * u;
      if (dead(m)) {
        ++j;
        continue;
      }
      if (i == h.size()) {
        out.push_back({m, F_.neg(F_.mul(c, g[j].coeff))});
        ++j;
        continue;
      }
      auto cmp = ord_.compare(h[i].mono, m);
      if (cmp > 0) {
        out.push_back(h[i++]);
      } else if (cmp < 0) {
        out.push_back({m, F_.neg(F_.mul(c, g[j].coeff))});
        ++j;
      } else {
        Coeff s = F_.sub(h[i].coeff, F_.mul(c, g[j].coeff));
        if (s) out.push_back({m, s});
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<Term> truncate(std::vector<Term> h) const {
    if (corner_) std::erase_if(h, [&](const Term& t) { return dead(t.mono); });
    return h;
  }

  /// Full reduction of h by `basis` (elements monic). `lms`/`masks` cache the
  /// leading monomials; `active` optionally filters usable elements.
  std::vector<Term> reduce(std::vector<Term> h, const std::vector<std::vector<Term>>& basis,
                           const std::vector<Monomial>& lms, const std::vector<std::uint32_t>& masks,
                           const std::vector<char>* active = nullptr, std::size_t skip = SIZE_MAX) const {
    h = truncate(std::move(h));
    std::vector<Term> rem;
    std::size_t pos = 0;
    while (pos < h.size()) {
      const Term& lt = h[pos];
      std::uint32_t m = divmask(lt.mono);
      std::size_t hit = SIZE_MAX;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (k == skip || (active && !(*active)[k])) continue;
        if ((masks[k] & ~m) != 0) continue;
        if (lms[k].divides(lt.mono)) {
          hit = k;
          break;
        }
      }
      if (hit == SIZE_MAX) {
        rem.push_back(lt);
        ++pos;
        continue;
      }
      Monomial u = lt.mono / lms[hit];
      h = subtract_multiple(h, pos, lt.coeff, u, basis[hit]);
      pos = 0;
    }
    return rem;
  }

  void make_monic(std::vector<Term>& h) const {
    if (h.empty() || h.front().coeff == 1) return;
    Coeff inv = F_.inv(h.front().coeff);
    for (auto& t : h) t.coeff = F_.mul(t.coeff, inv);
  }

  /// S-polynomial of two monic polynomials.
  std::vector<Term> spoly(const std::vector<Term>& f, const std::vector<Term>& g) const {
    Monomial L = lcm(f.front().mono, g.front().mono);
    std::vector<Term> a;
    Monomial uf = L / f.front().mono;
    a.reserve(f.size());
    for (std::size_t i = 1; i < f.size(); ++i) {
      Monomial m = f[i].mono * uf;
      if (!dead(m)) a.push_back({m, f[i].coeff});
    }
    // a - ug * g, where the leading terms already cancelled
    std::vector<Term> fake;
    fake.reserve(a.size() + 1);
    fake.push_back({L, 0});
    fake.insert(fake.end(), a.begin(), a.end());
    return subtract_multiple(fake, 0, 1, L / g.front().mono, g);
  }

  const PrimeField& field() const noexcept { return F_; }

 private:
  const PrimeField& F_;
  TermOrder ord_;
  std::optional<Corner> corner_;
};

/// All monomials in the `mask` variables of exactly degree `deg`.
inline void monomials_of_degree(std::size_t nvars, std::uint32_t mask, std::uint32_t deg,
                                const std::function<void(const Monomial&)>& visit) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < nvars; ++i)
    if (mask >> i & 1u) vars.push_back(i);
  if (vars.empty()) return;
  Monomial m(nvars);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t k, std::uint32_t left) {
    if (k + 1 == vars.size()) {
      m.set(vars[k], left);
      visit(m);
      m.set(vars[k], 0);
      return;
    }
    for (std::uint32_t e = left + 1; e-- > 0;) {
      m.set(vars[k], e);
      rec(k + 1, left - e);
    }
    m.set(vars[k], 0);
  };
  rec(0, deg);
}

}  // namespace detail

inline GroebnerBasis basis_from_reduced(PolyRingPtr ring, TermOrder order, std::vector<std::vector<Term>> work,
                                        std::optional<Corner> corner = std::nullopt) {
  GroebnerBasis g(std::move(ring), order);
  g.work_ = std::move(work);
  g.corner_ = corner;
  return g;
}

/// Counters from the last basis computation, for diagnostics and tests.
struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t corner_spolys = 0;
};

/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer-Moeller installation of the product and chain criteria.
class BuchbergerEngine {
 public:
  BuchbergerEngine(PolyRingPtr ring, TermOrder order, std::optional<Corner> corner)
      : ring_(std::move(ring)), div_(ring_->field(), order, corner) {
    if (corner && corner->mask == 0) throw precondition_error("corner with empty variable mask");
  }

  GroebnerBasis run(const std::vector<Polynomial>& gens) {
    const TermOrder& ord = div_.order();
    std::vector<std::vector<Term>> input;
    bool monomial_only = true;
    for (const auto& g : gens) {
      if (!same_ring(g.ring(), ring_)) throw structural_error("generator from a different ring");
      auto t = div_.truncate(detail::sorted_terms(g, ord));
      if (t.empty()) continue;
      div_.make_monic(t);
      monomial_only = monomial_only && t.size() == 1;
      input.push_back(std::move(t));
    }
    // Canonical generator order, so the same ideal input gives the same run.
    std::sort(input.begin(), input.end(), [&](const auto& a, const auto& b) { return less_poly(a, b); });
    input.erase(std::unique(input.begin(), input.end()), input.end());

    if (div_.corner() && div_.corner()->degree == 0) return unit_basis();

    if (monomial_only) {
      for (auto& t : input) add_element(std::move(t), /*with_pairs=*/false);
    } else {
      for (auto& t : input) {
        auto r = div_.reduce(std::move(t), basis_, lms_, masks_, &active_);
        if (r.empty()) continue;
        div_.make_monic(r);
        if (r.front().mono.is_one()) return unit_basis();
        add_element(std::move(r), true);
      }
      main_loop();
    }
    return finish();
  }

  const BuchbergerStats& stats() const noexcept { return stats_; }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;  // == kCorner for the corner job of element i
    Monomial lcm;
  };
  static constexpr std::size_t kCorner = SIZE_MAX;

  bool less_poly(const std::vector<Term>& a, const std::vector<Term>& b) const {
    const TermOrder& ord = div_.order();
    for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) {
      auto c = ord.compare(a[k].mono, b[k].mono);
      if (c != 0) return c < 0;
      if (a[k].coeff != b[k].coeff) return a[k].coeff < b[k].coeff;
    }
    return a.size() < b.size();
  }

  GroebnerBasis unit_basis() {
    Monomial one(ring_->nvars());
    return basis_from_reduced(ring_, div_.order(), {{Term{one, 1}}}, div_.corner());
  }

  bool pair_less(const Pair& a, const Pair& b) const {
    auto c = div_.order().compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  auto heap_cmp() const {
    return [this](const Pair& a, const Pair& b) { return pair_less(b, a); };
  }

  bool needs_corner_job(const std::vector<Term>& h) const {
    const auto& c = div_.corner();
    if (!c) return false;
    std::uint32_t lead = h.front().mono.degree_in(c->mask);
    for (std::size_t k = 1; k < h.size(); ++k)
      if (h[k].mono.degree_in(c->mask) < lead) return true;
    return false;
  }

  void add_element(std::vector<Term> h, bool with_pairs) {
    const Monomial lm = h.front().mono;
    std::size_t hidx = basis_.size();
    basis_.push_back(std::move(h));
    lms_.push_back(lm);
    masks_.push_back(detail::divmask(lm));
    active_.push_back(1);
    if (!with_pairs) {
      // monomial input: just keep the minimal generators
      for (std::size_t k = 0; k < hidx; ++k) {
        if (!active_[k]) continue;
        if (lms_[k].divides(lm)) {
          active_[hidx] = 0;
          return;
        }
      }
      for (std::size_t k = 0; k < hidx; ++k)
        if (active_[k] && lm.divides(lms_[k])) active_[k] = 0;
      return;
    }

    // Gebauer-Moeller update.
    std::vector<Pair> C;
    for (std::size_t k = 0; k < hidx; ++k)
      if (active_[k]) C.push_back({k, hidx, lcm(lms_[k], lm)});
    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p = C[a];
      bool keep = coprime(lms_[p.i], lm);
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < C.size() && keep; ++b)
          if (b > a && C[b].lcm.divides(p.lcm)) keep = false;
        for (std::size_t b = 0; b < D.size() && keep; ++b)
          if (D[b].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> E;
    for (auto& p : D) {
      if (coprime(lms_[p.i], lm)) {
        ++stats_.pairs_considered;
        continue;
      }
      E.push_back(p);
    }
    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + E.size());
    for (auto& p : pairs_) {
      if (p.j != kCorner && lm.divides(p.lcm) && lcm(lms_[p.i], lm) != p.lcm && lcm(lm, lms_[p.j]) != p.lcm) {
        ++stats_.pairs_considered;
        continue;
      }
      kept.push_back(std::move(p));
    }
    for (auto& p : E) kept.push_back(std::move(p));
    pairs_ = std::move(kept);
    if (needs_corner_job(basis_[hidx])) {
      Monomial pseudo(ring_->nvars());
      // sorts after ordinary pairs of lower degree
      pseudo.set(first_masked_var(), div_.corner()->degree);
      pairs_.push_back({hidx, kCorner, pseudo});
    }
    for (std::size_t k = 0; k < hidx; ++k)
      if (active_[k] && lm.divides(lms_[k])) active_[k] = 0;
    std::make_heap(pairs_.begin(), pairs_.end(), heap_cmp());
  }

  std::size_t first_masked_var() const {
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
      if (div_.corner()->mask >> i & 1u) return i;
    return 0;
  }

  void insert_reduced(std::vector<Term> r) {
    if (r.empty()) {
      ++stats_.zero_reductions;
      return;
    }
    div_.make_monic(r);
    add_element(std::move(r), true);
  }

  void main_loop() {
    while (!pairs_.empty()) {
      // smallest lcm first (normal strategy)
      std::pop_heap(pairs_.begin(), pairs_.end(), heap_cmp());
      Pair p = std::move(pairs_.back());
      pairs_.pop_back();
      ++stats_.pairs_considered;
      ++stats_.pairs_reduced;
      if (p.j == kCorner) {
        run_corner_job(p.i);
        continue;
      }
      auto s = div_.spoly(basis_[p.i], basis_[p.j]);
      auto r = div_.reduce(std::move(s), basis_, lms_, masks_, &active_);
      if (!r.empty() && r.front().mono.is_one()) {
        unit_ = true;
        return;
      }
      insert_reduced(std::move(r));
    }
  }

  /// S-polynomials of element i against the implicit corner monomials: for
  /// every multiplier u of masked degree K - deg(lm), the product u*tail.
  void run_corner_job(std::size_t i) {
    const Corner& c = *div_.corner();
    const auto h = basis_[i];
    std::uint32_t lead = h.front().mono.degree_in(c.mask);
    if (lead >= c.degree) return;
    std::vector<Term> low;
    for (std::size_t k = 1; k < h.size(); ++k)
      if (h[k].mono.degree_in(c.mask) < lead) low.push_back(h[k]);
    std::vector<std::vector<Term>> todo;
    detail::monomials_of_degree(ring_->nvars(), c.mask, c.degree - lead, [&](const Monomial& u) {
      std::vector<Term> s;
      for (const auto& t : low) {
        Monomial m = t.mono * u;
        if (!c.kills(m)) s.push_back({m, t.coeff});
      }
      if (!s.empty()) todo.push_back(std::move(s));
    });
    for (auto& s : todo) {
      ++stats_.corner_spolys;
      auto r = div_.reduce(std::move(s), basis_, lms_, masks_, &active_);
      if (!r.empty() && r.front().mono.is_one()) {
        unit_ = true;
        return;
      }
      insert_reduced(std::move(r));
      if (unit_) return;
    }
  }

  GroebnerBasis finish() {
    if (unit_) return unit_basis();
    std::vector<std::vector<Term>> G;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) G.push_back(basis_[k]);
    if (const auto& c = div_.corner(); c && !div_.order().is_local()) {
      std::vector<Monomial> lm;
      for (auto& g : G) lm.push_back(g.front().mono);
      detail::monomials_of_degree(ring_->nvars(), c->mask, c->degree, [&](const Monomial& m) {
        for (const auto& l : lm)
          if (l.divides(m)) return;
        G.push_back({Term{m, 1}});
      });
    }
    // interreduce tails
    std::vector<Monomial> lms;
    std::vector<std::uint32_t> masks;
    for (auto& g : G) {
      lms.push_back(g.front().mono);
      masks.push_back(detail::divmask(g.front().mono));
    }
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (G[k].size() == 1) continue;
      std::vector<Term> tail(G[k].begin() + 1, G[k].end());
      auto r = div_.reduce(std::move(tail), G, lms, masks, nullptr, k);
      r.insert(r.begin(), G[k].front());
      G[k] = std::move(r);
    }
    const TermOrder& ord = div_.order();
    std::sort(G.begin(), G.end(),
              [&](const auto& a, const auto& b) { return ord.compare(a.front().mono, b.front().mono) < 0; });
    return basis_from_reduced(ring_, ord, std::move(G), div_.corner());
  }

  PolyRingPtr ring_;
  detail::Divider div_;
  std::vector<std::vector<Term>> basis_;
  std::vector<Monomial> lms_;
  std::vector<std::uint32_t> masks_;
  std::vector<char> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
  BuchbergerStats stats_;
};

/// Reduced Groebner basis of the ideal generated by `gens`. An empty (or
/// all-zero) generator list yields the basis of the zero ideal.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& order = TermOrder::degrevlex(),
                                std::optional<Corner> corner = std::nullopt, PolyRingPtr ring = nullptr) {
  if (!ring) {
    for (const auto& g : gens)
      if (g.ring()) {
        ring = g.ring();
        break;
      }
  }
  if (!ring) return GroebnerBasis{};
  BuchbergerEngine engine(ring, order, corner);
  return engine.run(gens);
}

/// Remainder of full multivariate division of f by G.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  if (f.is_zero()) return f;
  if (G.is_zero_ideal() && !G.corner()) return f;
  if (!same_ring(f.ring(), G.ring())) throw structural_error("normal form across different rings");
  detail::Divider div(G.ring()->field(), G.order(), G.corner());
  const auto& W = G.working_elements();
  std::vector<Monomial> lms;
  std::vector<std::uint32_t> masks;
  for (const auto& w : W) {
    lms.push_back(w.front().mono);
    masks.push_back(detail::divmask(w.front().mono));
  }
  auto r = div.reduce(detail::sorted_terms(f, G.order()), W, lms, masks);
  return Polynomial::from_terms(G.ring(), std::move(r));
}

/// True when every S-polynomial of the basis reduces to zero (Buchberger's
/// criterion), checked without any pair elimination. With a corner, the
/// S-polynomials against the corner monomials are checked as well.
inline bool satisfies_buchberger_criterion(const GroebnerBasis& G) {
  if (G.size() == 0) return true;
  detail::Divider div(G.ring()->field(), G.order(), G.corner());
  const auto& W = G.working_elements();
  std::vector<Monomial> lms;
  std::vector<std::uint32_t> masks;
  for (const auto& w : W) {
    lms.push_back(w.front().mono);
    masks.push_back(detail::divmask(w.front().mono));
  }
  for (std::size_t i = 0; i < W.size(); ++i)
    for (std::size_t j = i + 1; j < W.size(); ++j) {
      if (W[i].size() == 1 && W[j].size() == 1) continue;  // monomial pairs are trivially zero
      if (!div.reduce(div.spoly(W[i], W[j]), W, lms, masks).empty()) return false;
    }
  if (const auto& c = G.corner()) {
    const std::size_t n = G.ring()->nvars();
    for (const auto& h : W) {
      const std::uint32_t lead = h.front().mono.degree_in(c->mask);
      if (lead >= c->degree) continue;
      bool ok = true;
      detail::monomials_of_degree(n, c->mask, c->degree - lead, [&](const Monomial& u) {
        if (!ok) return;
        std::vector<Term> s;
        for (const auto& t : h) {
          Monomial m = t.mono * u;
          if (!c->kills(m)) s.push_back({m, t.coeff});
        }
        if (!div.reduce(std::move(s), W, lms, masks).empty()) ok = false;
      });
      if (!ok) return false;
    }
  }
  return true;
}

/// True when G is monic, interreduced and sorted.
inline bool is_reduced(const GroebnerBasis& G) {
  const auto& W = G.working_elements();
  for (std::size_t i = 0; i < W.size(); ++i) {
    if (W[i].front().coeff != 1) return false;
    if (i && !G.order().less(W[i - 1].front().mono, W[i].front().mono)) return false;
    for (std::size_t j = 0; j < W.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : W[i])
        if (W[j].front().mono.divides(t.mono)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Standard monomials

/// Standard monomials of a basis (a vector-space basis of R/I), or
/// std::nullopt when there are infinitely many.
struct StaircaseBounds {
  std::vector<unsigned> pure_power;  // 0 when the variable has no pure power
  bool finite = true;
};

inline StaircaseBounds staircase_bounds(const std::vector<Monomial>& lms, std::size_t nvars) {
  StaircaseBounds b;
  b.pure_power.assign(nvars, 0);
  for (const auto& m : lms) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i]) {
        ++support;
        var = i;
      }
    if (support == 0) return {std::vector<unsigned>(nvars, 0), true};  // unit ideal
    if (support == 1 && (b.pure_power[var] == 0 || m[var] < b.pure_power[var])) b.pure_power[var] = m[var];
  }
  for (unsigned p : b.pure_power)
    if (p == 0) b.finite = false;
  return b;
}

namespace detail {

inline void walk_staircase(const std::vector<Monomial>& lms, std::size_t nvars, const std::vector<unsigned>& bound,
                           const std::function<void(const Monomial&)>& visit) {
  if (lms.size() == 1 && lms[0].is_one()) return;
  std::vector<std::uint32_t> masks;
  for (const auto& l : lms) masks.push_back(divmask(l));
  auto in_ideal = [&](const Monomial& m) {
    std::uint32_t mm = divmask(m);
    for (std::size_t k = 0; k < lms.size(); ++k)
      if ((masks[k] & ~mm) == 0 && lms[k].divides(m)) return true;
    return false;
  };
  Monomial m(nvars);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == nvars) {
      visit(m);
      return;
    }
    for (unsigned e = 0; e < bound[i]; ++e) {
      m.set(i, e);
      if (in_ideal(m)) break;  // raising exponent i further stays inside the ideal
      rec(i + 1);
    }
    m.set(i, 0);
  };
  rec(0);
}

}  // namespace detail

namespace detail {

/// Monomials of masked degree below the corner and outside the leading ideal.
inline void walk_truncated(const std::vector<Monomial>& lms, std::size_t nvars, const Corner& c,
                           const std::function<void(const Monomial&)>& visit) {
  if (lms.size() == 1 && lms[0].is_one()) return;
  for (std::size_t i = 0; i < nvars; ++i)
    if (!(c.mask >> i & 1u)) throw precondition_error("standard monomials of a corner not covering every variable");
  std::vector<std::uint32_t> masks;
  for (const auto& l : lms) masks.push_back(divmask(l));
  auto in_ideal = [&](const Monomial& m) {
    std::uint32_t mm = divmask(m);
    for (std::size_t k = 0; k < lms.size(); ++k)
      if ((masks[k] & ~mm) == 0 && lms[k].divides(m)) return true;
    return false;
  };
  Monomial m(nvars);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t deg) {
    if (i == nvars) {
      visit(m);
      return;
    }
    for (std::uint32_t e = 0; deg + e < c.degree; ++e) {
      m.set(i, e);
      if (in_ideal(m)) break;
      rec(i + 1, deg + e);
    }
    m.set(i, 0);
  };
  if (c.degree > 0) rec(0, 0);
}

inline bool walk_standard(const GroebnerBasis& G, const std::function<void(const Monomial&)>& visit) {
  auto lms = G.leading_monomials();
  const std::size_t n = G.ring()->nvars();
  if (G.corner()) {
    walk_truncated(lms, n, *G.corner(), visit);
    return true;
  }
  auto b = staircase_bounds(lms, n);
  if (!b.finite) return false;
  walk_staircase(lms, n, b.pure_power, visit);
  return true;
}

}  // namespace detail

using StandardMonomials = std::optional<std::vector<Monomial>>;

inline StandardMonomials standard_monomials(const GroebnerBasis& G) {
  if (!G.ring()) throw precondition_error("standard monomials of an empty basis without ring");
  std::vector<Monomial> out;
  if (!detail::walk_standard(G, [&](const Monomial& m) { out.push_back(m); })) return std::nullopt;
  const TermOrder& ord = G.order();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& c) { return ord.less(a, c); });
  return out;
}

/// Number of standard monomials, or std::nullopt when infinite.
inline std::optional<std::size_t> count_standard_monomials(const GroebnerBasis& G) {
  std::size_t n = 0;
  if (!detail::walk_standard(G, [&](const Monomial&) { ++n; })) return std::nullopt;
  return n;
}

}  // namespace hk
