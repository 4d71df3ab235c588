#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hilbertkit/groebner.hpp"
#include "hilbertkit/parse.hpp"
#include "hilbertkit/ring.hpp"

namespace hk {

// ---------------------------------------------------------------------------
// Ambient rings

/// F_p[vars] / (relations). Relations are only ever added by dimension
/// reduction, where they form a regular sequence, so the Krull dimension is
/// the variable count minus the number of relations.
class AmbientRing {
 public:
  explicit AmbientRing(PolyRingPtr base, std::vector<Polynomial> relations = {})
      : base_(std::move(base)), relations_(std::move(relations)) {
    for (const auto& r : relations_)
      if (!same_ring(r.ring(), base_)) throw structural_error("relation from a different ring");
  }

  const PolyRingPtr& base() const noexcept { return base_; }
  const std::vector<Polynomial>& relations() const noexcept { return relations_; }
  std::size_t nvars() const noexcept { return base_->nvars(); }
  std::uint32_t characteristic() const noexcept { return base_->characteristic(); }
  const PrimeField& field() const noexcept { return base_->field(); }

  std::size_t dimension() const noexcept {
    return relations_.size() >= nvars() ? 0 : nvars() - relations_.size();
  }

  friend bool operator==(const AmbientRing& a, const AmbientRing& b) {
    return same_ring(a.base_, b.base_) && a.relations_ == b.relations_;
  }

 private:
  PolyRingPtr base_;
  std::vector<Polynomial> relations_;
};

using RingPtr = std::shared_ptr<const AmbientRing>;

inline RingPtr make_ring(std::uint32_t p, std::vector<std::string> names) {
  return std::make_shared<const AmbientRing>(make_poly_ring(p, std::move(names)));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

// ---------------------------------------------------------------------------
// Ideals

/// An ideal of an AmbientRing, stored as its preimage in the free polynomial
/// ring. When `corner` is set the ideal is (gens) + m^corner; the operations
/// below only attach a corner K when m^K lies in the ideal generated by the
/// gens locally at the origin, so the value is the contraction of that local
/// ideal. Immutable; the Groebner basis is filled at most once.
class Ideal {
 public:
  Ideal() = default;

  Ideal(RingPtr ring, std::vector<Polynomial> gens, std::optional<std::uint32_t> corner = std::nullopt)
      : s_(std::make_shared<State>()) {
    s_->ring = std::move(ring);
    for (auto& g : gens) {
      if (!same_ring(g.ring(), s_->ring->base()) && !g.is_zero())
        throw structural_error("generator from a different ring");
      if (!g.is_zero()) s_->gens.push_back(std::move(g));
    }
    s_->corner = corner;
  }

  /// Adopts a reduced basis; it is installed as is when it has the shape
  /// basis() would produce for this corner.
  static Ideal from_basis(RingPtr ring, GroebnerBasis basis, std::optional<std::uint32_t> corner = std::nullopt) {
    auto gens = basis.elements();
    if (corner && !basis.is_unit()) {
      // corner monomials outside the leading ideal are needed to generate locally
      const auto lms = basis.leading_monomials();
      detail::monomials_of_degree(ring->nvars(), ring->base()->all_vars_mask(), *corner, [&](const Monomial& m) {
        for (const auto& l : lms)
          if (l.divides(m)) return;
        gens.push_back(Polynomial::monomial(ring->base(), m));
      });
    }
    Ideal I(std::move(ring), std::move(gens), corner);
    const bool shaped = corner ? basis.order() == TermOrder::local() && basis.corner() &&
                                     basis.corner()->degree == *corner &&
                                     basis.corner()->mask == I.base()->all_vars_mask()
                               : basis.order() == TermOrder::degrevlex() && !basis.corner();
    if (shaped) std::call_once(I.s_->once, [&] { I.s_->basis = std::move(basis); });
    return I;
  }

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

  static Ideal unit(RingPtr ring) {
    auto one = Polynomial::constant(ring->base(), 1);
    return Ideal(std::move(ring), {one}, 0);
  }

  /// m^k, the k-th power of the ideal generated by all variables.
  static Ideal maximal_power(RingPtr ring, std::uint32_t k) {
    std::vector<Polynomial> gens;
    detail::monomials_of_degree(ring->nvars(), ring->base()->all_vars_mask(), k,
                                [&](const Monomial& m) { gens.push_back(Polynomial::monomial(ring->base(), m)); });
    return Ideal(std::move(ring), std::move(gens), k);
  }

  static Ideal parse(RingPtr ring, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(parse_poly(g, ring->base()));
    return Ideal(std::move(ring), std::move(ps));
  }

  const RingPtr& ring() const { return state().ring; }
  const PolyRingPtr& base() const { return state().ring->base(); }
  const std::vector<Polynomial>& gens() const { return state().gens; }
  std::optional<std::uint32_t> corner() const { return state().corner; }

  /// Reduced basis of the preimage (relations included): degrevlex without a
  /// corner, otherwise the local order on the ring truncated at the corner.
  const GroebnerBasis& basis() const {
    const State& s = state();
    std::call_once(s.once, [&s] {
      std::vector<Polynomial> all = s.gens;
      for (const auto& r : s.ring->relations()) all.push_back(r);
      if (s.corner)
        s.basis = buchberger(all, TermOrder::local(), Corner{*s.corner, s.ring->base()->all_vars_mask()},
                             s.ring->base());
      else
        s.basis = buchberger(all, TermOrder::degrevlex(), std::nullopt, s.ring->base());
    });
    return s.basis;
  }

  bool is_zero() const { return !corner() && basis().is_zero_ideal(); }
  bool is_unit() const { return basis().is_unit(); }

  /// Same ideal with a corner attached; the caller vouches for m^k in it.
  Ideal with_corner(std::uint32_t k) const {
    if (corner() && *corner() <= k) return *this;
    return Ideal(ring(), gens(), k);
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens().size(); ++i) {
      if (i) s += ", ";
      s += gens()[i].to_string();
    }
    s += ")";
    if (corner()) s += " + m^" + std::to_string(*corner());
    return s;
  }

 private:
  struct State {
    RingPtr ring;
    std::vector<Polynomial> gens;
    std::optional<std::uint32_t> corner;
    mutable std::once_flag once;
    mutable GroebnerBasis basis;
  };

  const State& state() const {
    if (!s_) throw precondition_error("use of an empty Ideal handle");
    return *s_;
  }

  std::shared_ptr<State> s_;
};

// ---------------------------------------------------------------------------
// Basic operations

namespace detail {

inline void check_same(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw structural_error("ideals from different rings");
}

inline std::optional<std::uint32_t> min_corner(std::optional<std::uint32_t> a, std::optional<std::uint32_t> b) {
  if (a && b) return std::min(*a, *b);
  return a ? a : b;
}

/// Smallest k with every monomial of degree k in the ideal; nullopt when the
/// colength is infinite or the ideal is supported away from the origin. With
/// a corner this is one more than the top standard degree, since the local
/// order reduces a monomial only to terms of no smaller degree.
inline std::optional<std::uint32_t> find_corner(const Ideal& I) {
  const auto& G = I.basis();
  if (G.is_unit()) return 0;
  auto std_monos = standard_monomials(G);
  if (!std_monos) return std::nullopt;
  std::uint32_t k = 0;
  for (const auto& m : *std_monos) k = std::max(k, m.degree() + 1);
  if (G.corner()) return k;
  const std::size_t cap = std_monos->size() + 1;  // m^length lies in an m-primary ideal
  for (; k <= cap; ++k) {
    bool all = true;
    monomials_of_degree(I.ring()->nvars(), I.ring()->base()->all_vars_mask(), k, [&](const Monomial& m) {
      if (all && !normal_form(Polynomial::monomial(I.base(), m), G).is_zero()) all = false;
    });
    if (all) return k;
  }
  return std::nullopt;
}

/// Keeps the ideal but shrinks its corner to the smallest valid one. The
/// truncated basis stays reduced after cutting at the smaller corner.
inline Ideal tightened(const Ideal& I) {
  if (!I.corner()) return I;
  auto k = find_corner(I);
  if (!k || *k >= *I.corner()) return I;
  if (*k == 0) return Ideal::unit(I.ring());
  const Corner c{*k, I.base()->all_vars_mask()};
  std::vector<std::vector<Term>> work;
  for (const auto& w : I.basis().working_elements()) {
    if (c.kills(w.front().mono)) continue;
    std::vector<Term> t;
    for (const auto& term : w)
      if (!c.kills(term.mono)) t.push_back(term);
    work.push_back(std::move(t));
  }
  return Ideal::from_basis(I.ring(), basis_from_reduced(I.base(), TermOrder::local(), std::move(work), c), *k);
}

/// Monomials of degree K outside the leading ideal of a truncated basis.
inline std::vector<Polynomial> missing_corner_monomials(const Ideal& I) {
  std::vector<Polynomial> out;
  const auto lms = I.basis().leading_monomials();
  monomials_of_degree(I.ring()->nvars(), I.base()->all_vars_mask(), *I.corner(), [&](const Monomial& m) {
    for (const auto& l : lms)
      if (l.divides(m)) return;
    out.push_back(Polynomial::monomial(I.base(), m));
  });
  return out;
}

/// Generators of a cornered ideal in the local ring: the truncated basis is
/// a standard basis once the uncovered corner monomials are added.
inline std::vector<Polynomial> local_generators(const Ideal& I) {
  if (I.basis().is_unit()) return I.basis().elements();
  auto out = I.basis().elements();
  auto extra = missing_corner_monomials(I);
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

/// Generators of the ideal itself in the free ring.
inline std::vector<Polynomial> preimage_generators(const Ideal& I) {
  auto out = I.basis().elements();
  if (I.corner() && !I.basis().is_unit())
    monomials_of_degree(I.ring()->nvars(), I.base()->all_vars_mask(), *I.corner(),
                        [&](const Monomial& m) { out.push_back(Polynomial::monomial(I.base(), m)); });
  return out;
}

inline Polynomial exact_divide(const Polynomial& h, const Polynomial& f) {
  const auto& F = f.field();
  Polynomial rest = h;
  std::vector<Term> q;
  const Term& lf = f.leading();
  Coeff inv = F.inv(lf.coeff);
  while (!rest.is_zero()) {
    const Term& lt = rest.leading();
    if (!lf.mono.divides(lt.mono)) throw structural_error("inexact division in colon computation");
    Term t{lt.mono / lf.mono, F.mul(lt.coeff, inv)};
    q.push_back(t);
    rest = rest - f.times(t.mono, t.coeff);
  }
  return Polynomial::from_terms(h.ring(), std::move(q));
}

}  // namespace detail

inline Ideal ideal_sum(const Ideal& A, const Ideal& B) {
  detail::check_same(A, B);
  std::vector<Polynomial> gens = A.gens();
  gens.insert(gens.end(), B.gens().begin(), B.gens().end());
  // a corner on one side keeps its meaning in the sum
  return Ideal(A.ring(), std::move(gens), detail::min_corner(A.corner(), B.corner()));
}

/// Product; with corners on both sides it is computed in the local ring and
/// tightened.
inline Ideal ideal_product(const Ideal& A, const Ideal& B) {
  detail::check_same(A, B);
  if (A.is_zero() || B.is_zero()) return Ideal::zero(A.ring());
  std::optional<std::uint32_t> corner;
  std::vector<Polynomial> left, right;
  if (A.corner() && B.corner()) {
    corner = *A.corner() + *B.corner();
    auto pick = [](const Ideal& X) {
      auto loc = detail::local_generators(X);
      return X.gens().size() <= loc.size() ? X.gens() : loc;
    };
    left = pick(A);
    right = pick(B);
  } else {
    left = A.corner() ? detail::preimage_generators(A) : A.gens();
    right = B.corner() ? detail::preimage_generators(B) : B.gens();
  }
  std::vector<Polynomial> gens;
  gens.reserve(left.size() * right.size());
  for (const auto& a : left)
    for (const auto& b : right) gens.push_back(a * b);
  Ideal P(A.ring(), std::move(gens), corner);
  if (corner) return detail::tightened(P);
  return Ideal::from_basis(P.ring(), P.basis());
}

inline Ideal ideal_power(const Ideal& A, unsigned n) {
  if (n == 0) return Ideal::unit(A.ring());
  Ideal r = A;
  for (unsigned k = 1; k < n; ++k) r = ideal_product(r, A);
  return r;
}

inline bool contains_poly(const Ideal& A, const Polynomial& f) { return normal_form(f, A.basis()).is_zero(); }

/// B is a subset of A.
inline bool contains(const Ideal& A, const Ideal& B) {
  detail::check_same(A, B);
  if (B.is_zero()) return true;
  for (const auto& g : B.basis().elements())
    if (!contains_poly(A, g)) return false;
  if (B.corner() && !B.basis().is_unit() && !(A.corner() && *A.corner() <= *B.corner())) {
    bool all = true;
    detail::monomials_of_degree(B.ring()->nvars(), B.base()->all_vars_mask(), *B.corner(), [&](const Monomial& m) {
      if (all && !contains_poly(A, Polynomial::monomial(A.base(), m))) all = false;
    });
    return all;
  }
  return true;
}

inline std::size_t colength(const Ideal& I);

inline bool ideal_equals(const Ideal& A, const Ideal& B) {
  detail::check_same(A, B);
  if (!A.corner() && !B.corner()) return A.basis() == B.basis();
  if (A.corner() && B.corner()) return colength(A) == colength(B) && contains(A, B);
  return contains(A, B) && contains(B, A);
}

inline std::size_t colength(const Ideal& I) {
  if (I.is_unit()) return 0;
  auto n = count_standard_monomials(I.basis());
  if (!n) throw not_m_primary_error("not m-primary: infinite colength of " + I.to_string());
  return *n;
}

// ---------------------------------------------------------------------------
// Elimination-based operations

namespace detail {

/// F_p[t, vars]: the auxiliary variable is placed first so that the block
/// order eliminates it.
inline PolyRingPtr with_aux_variable(const PolyRingPtr& base) {
  std::vector<std::string> names{"__aux_t"};
  names.insert(names.end(), base->names().begin(), base->names().end());
  return make_poly_ring(base->characteristic(), std::move(names));
}

inline Polynomial lift(const Polynomial& f, const PolyRingPtr& big, unsigned t_power) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(big->nvars());
    m.set(0, t_power);
    for (std::size_t i = 0; i < t.mono.size(); ++i) m.set(i + 1, t.mono[i]);
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(big, std::move(terms));
}

inline Polynomial drop_aux(const Polynomial& f, const PolyRingPtr& base) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m(base->nvars());
    for (std::size_t i = 0; i < m.size(); ++i) m.set(i, t.mono[i + 1]);
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(base, std::move(terms));
}

/// Basis of A ∩ B by eliminating t from t*A + (1-t)*B. With a corner the
/// computation runs in the truncated ring under the local order.
inline GroebnerBasis intersect_preimages(const PolyRingPtr& base, const std::vector<Polynomial>& a,
                                         const std::vector<Polynomial>& b, std::optional<std::uint32_t> corner) {
  auto big = with_aux_variable(base);
  std::vector<Polynomial> gens;
  Polynomial one_minus_t = lift(Polynomial::constant(base, 1), big, 0) - lift(Polynomial::constant(base, 1), big, 1);
  for (const auto& f : a) gens.push_back(lift(f, big, 1));
  for (const auto& f : b) gens.push_back(one_minus_t * lift(f, big, 0));
  std::optional<Corner> c;
  if (corner) c = Corner{*corner, big->all_vars_mask() & ~1u};
  auto G = buchberger(gens, corner ? TermOrder::local_elimination(1) : TermOrder::elimination(1), c, big);
  std::vector<Polynomial> kept;
  for (const auto& g : G.elements()) {
    bool t_free = std::all_of(g.terms().begin(), g.terms().end(), [](const Term& t) { return t.mono[0] == 0; });
    if (t_free) kept.push_back(drop_aux(g, base));
  }
  if (corner) return buchberger(kept, TermOrder::local(), Corner{*corner, base->all_vars_mask()}, base);
  return buchberger(kept, TermOrder::degrevlex(), std::nullopt, base);
}

}  // namespace detail

inline Ideal ideal_intersect(const Ideal& A, const Ideal& B) {
  detail::check_same(A, B);
  if (A.is_zero() || B.is_zero()) return Ideal::zero(A.ring());
  if (A.is_unit()) return B;
  if (B.is_unit()) return A;
  std::optional<std::uint32_t> corner;
  if (A.corner() && B.corner()) corner = std::max(*A.corner(), *B.corner());
  auto G = detail::intersect_preimages(A.base(), detail::preimage_generators(A), detail::preimage_generators(B),
                                       corner);
  return detail::tightened(Ideal::from_basis(A.ring(), std::move(G), corner));
}

/// (A : f) = {g : g f in A}, as (A ∩ (f)) / f.
inline Ideal colon_poly(const Ideal& A, const Polynomial& f) {
  if (f.is_zero()) throw precondition_error("colon by the zero polynomial");
  if (!same_ring(f.ring(), A.base())) throw structural_error("colon by a polynomial from a different ring");
  if (contains_poly(A, f)) return Ideal::unit(A.ring());
  auto G = detail::intersect_preimages(A.base(), detail::preimage_generators(A), {f}, std::nullopt);
  std::vector<Polynomial> q;
  for (const auto& h : G.elements()) q.push_back(detail::exact_divide(h, f));
  std::optional<std::uint32_t> corner;
  if (A.corner()) {
    std::uint32_t o = f.order();
    corner = *A.corner() > o ? *A.corner() - o : 0;
  }
  return Ideal(A.ring(), std::move(q), corner);
}

/// (A : B) as the intersection of (A : g) over generators g of B. When both
/// carry corners, R/A is local and the generators of B already generate it
/// there, so the corner monomials of B can be skipped.
inline Ideal colon_ideal(const Ideal& A, const Ideal& B) {
  detail::check_same(A, B);
  if (B.is_zero()) throw precondition_error("colon by the zero ideal");
  if (contains(A, B)) return Ideal::unit(A.ring());
  const bool local = A.corner() && B.corner() && !B.gens().empty();
  std::optional<Ideal> acc;
  for (const auto& g : local ? B.gens() : B.basis().elements()) {
    if (contains_poly(A, g)) continue;
    Ideal c = colon_poly(A, g);
    acc = acc ? ideal_intersect(*acc, c) : c;
  }
  return *acc;
}

/// λ(R/(A : f)) from 0 -> R/(A:f) -f-> R/A -> R/(A + (f)) -> 0, without
/// forming the colon.
inline std::size_t colon_colength(const Ideal& A, const Polynomial& f) {
  Ideal sum = ideal_sum(A, Ideal(A.ring(), {f}));
  return colength(A) - colength(sum);
}

/// λ(R/(A ∩ B)) from 0 -> R/(A∩B) -> R/A ⊕ R/B -> R/(A + B) -> 0.
inline std::size_t intersection_colength(const Ideal& A, const Ideal& B) {
  return colength(A) + colength(B) - colength(ideal_sum(A, B));
}

// ---------------------------------------------------------------------------
// m-primary ideals and localisation

/// True when every generator vanishes at the origin and R/A has finite length
/// with support only at the origin (a power of every variable lies in A).
inline bool is_m_primary(const Ideal& A) {
  if (A.is_unit()) throw precondition_error("is_m_primary: unit ideal");
  for (const auto& g : A.gens())
    if (g.constant_term() != 0) return false;
  auto len = count_standard_monomials(A.basis());
  if (!len) return false;
  for (std::size_t i = 0; i < A.ring()->nvars(); ++i) {
    Monomial m(A.ring()->nvars());
    m.set(i, static_cast<unsigned>(std::max<std::size_t>(*len, 1)));
    if (!contains_poly(A, Polynomial::monomial(A.base(), m))) return false;
  }
  return true;
}

/// Attaches the tight corner to an m-primary ideal.
inline Ideal with_exact_corner(const Ideal& A) {
  if (A.corner()) return detail::tightened(A);
  auto k = detail::find_corner(A);
  if (!k) throw not_m_primary_error("not m-primary: " + A.to_string());
  return A.with_corner(*k);
}

/// Contraction of the ideal generated by A in the local ring at the origin:
/// A + m^K for the least K with m^K inside A locally. K is found from below
/// starting at `start`: once colength(A + m^K) = colength(A + m^(K+1)),
/// Nakayama gives m^K inside A locally.
inline Ideal localize(const Ideal& A, std::uint32_t start = 1, std::uint32_t cap = 400) {
  if (A.corner()) return A;
  std::optional<std::size_t> prev;
  for (std::uint32_t k = std::max<std::uint32_t>(start, 1); k <= cap + 1; ++k) {
    Ideal trial(A.ring(), A.gens(), k);
    std::size_t len = colength(trial);
    if (prev && *prev == len) return detail::tightened(Ideal(A.ring(), A.gens(), k - 1));
    prev = len;
  }
  throw cap_error("localize: ideal is not m-primary at the origin up to degree " + std::to_string(cap));
}

/// Image of A in R/(relations): A plus the relations, over a ring whose
/// relation list is extended.
inline Ideal quotient_push(const Ideal& A, const std::vector<Polynomial>& relations) {
  if (relations.empty()) return A;
  std::vector<Polynomial> rels = A.ring()->relations();
  rels.insert(rels.end(), relations.begin(), relations.end());
  auto ring = std::make_shared<const AmbientRing>(A.base(), std::move(rels));
  return Ideal(ring, A.gens(), A.corner());
}

/// Moves an ideal of the free ring into a quotient ring with the same base.
inline Ideal rebase(const Ideal& A, const RingPtr& ring) {
  if (!same_ring(A.base(), ring->base())) throw structural_error("rebase across different polynomial rings");
  return Ideal(ring, A.gens(), A.corner());
}

}  // namespace hk
