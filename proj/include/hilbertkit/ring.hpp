#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hilbertkit/error.hpp"
#include "hilbertkit/field.hpp"

namespace hk {

// ---------------------------------------------------------------------------
// Monomials

/// Exponent vector of fixed capacity. The number of live variables is part of
/// the value, so monomials from rings of different sizes never compare equal.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 8;
  using Exponent = std::uint16_t;

  Monomial() = default;

  explicit Monomial(std::size_t nvars) : nvars_(checked_size(nvars)) {}

  Monomial(std::initializer_list<unsigned> exps) : nvars_(checked_size(exps.size())) {
    std::size_t i = 0;
    for (unsigned e : exps) set(i++, e);
  }

  explicit Monomial(std::span<const unsigned> exps) : nvars_(checked_size(exps.size())) {
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  std::size_t size() const noexcept { return nvars_; }
  std::uint32_t degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const noexcept { return exp_[i]; }

  void set(std::size_t i, unsigned e) {
    if (e > 0xFFFF) throw precondition_error("exponent overflow");
    degree_ = degree_ - exp_[i] + e;
    exp_[i] = static_cast<Exponent>(e);
  }

  bool is_one() const noexcept { return degree_ == 0; }

  /// Sum of exponents over the variables selected by `mask` (bit i = var i).
  std::uint32_t degree_in(std::uint32_t mask) const noexcept {
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (mask >> i & 1u) d += exp_[i];
    return d;
  }

  bool divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }

  /// Exact quotient; caller guarantees `d.divides(*this)`.
  Monomial operator/(const Monomial& d) const noexcept {
    Monomial r = *this;
    for (std::size_t i = 0; i < nvars_; ++i) r.exp_[i] = static_cast<Exponent>(exp_[i] - d.exp_[i]);
    r.degree_ = degree_ - d.degree_;
    return r;
  }

  Monomial operator*(const Monomial& o) const {
    check_same(o);
    Monomial r = *this;
    for (std::size_t i = 0; i < nvars_; ++i) {
      unsigned e = unsigned(exp_[i]) + o.exp_[i];
      if (e > 0xFFFF) throw precondition_error("exponent overflow");
      r.exp_[i] = static_cast<Exponent>(e);
    }
    r.degree_ = degree_ + o.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_same(b);
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) r.set(i, std::max(a.exp_[i], b.exp_[i]));
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    a.check_same(b);
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) r.set(i, std::min(a.exp_[i], b.exp_[i]));
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
    for (std::size_t i = 0; i < a.nvars_; ++i)
      if (a.exp_[i] && b.exp_[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.exp_ == b.exp_;
  }

  /// Structural (lexicographic) order for use as a container key. Not a term order.
  friend bool structural_less(const Monomial& a, const Monomial& b) noexcept {
    if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
    return a.exp_ < b.exp_;
  }

  void check_same(const Monomial& o) const {
    if (nvars_ != o.nvars_) throw structural_error("monomials with different variable counts");
  }

  std::size_t hash() const noexcept {
    std::size_t h = nvars_;
    for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u + exp_[i];
    return h;
  }

 private:
  static std::uint8_t checked_size(std::size_t n) {
    if (n == 0 || n > kMaxVars) throw structural_error("unsupported variable count " + std::to_string(n));
    return static_cast<std::uint8_t>(n);
  }

  std::array<Exponent, kMaxVars> exp_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

// ---------------------------------------------------------------------------
// Term orders

/// Degrevlex, its local counterpart (lower degree is larger, ties by revlex),
/// or a two-block order eliminating the first `block` variables: degrevlex on
/// the first block, ties broken on the remaining variables by degrevlex or by
/// the local order. Local orders are only well-founded on truncated rings.
struct TermOrder {
  enum class Kind { DegRevLex, BlockElimination, LocalDegRevLex, BlockEliminationLocal };

  Kind kind = Kind::DegRevLex;
  std::size_t block = 0;

  static TermOrder degrevlex() { return {}; }
  static TermOrder elimination(std::size_t k) { return {Kind::BlockElimination, k}; }
  static TermOrder local() { return {Kind::LocalDegRevLex, 0}; }
  static TermOrder local_elimination(std::size_t k) { return {Kind::BlockEliminationLocal, k}; }

  bool is_local() const noexcept { return kind == Kind::LocalDegRevLex || kind == Kind::BlockEliminationLocal; }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    a.check_same(b);
    switch (kind) {
      case Kind::DegRevLex:
        return degrevlex_range(a, b, 0, a.size(), false);
      case Kind::LocalDegRevLex:
        return degrevlex_range(a, b, 0, a.size(), true);
      default:
        break;
    }
    std::size_t k = std::min(block, a.size());
    auto c = degrevlex_range(a, b, 0, k, false);
    if (c != 0) return c;
    return degrevlex_range(a, b, k, a.size(), kind == Kind::BlockEliminationLocal);
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  static std::strong_ordering degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi,
                                              bool local) noexcept {
    std::uint32_t da = 0, db = 0;
    if (lo == 0 && hi == a.size()) {
      da = a.degree();
      db = b.degree();
    } else {
      for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
      }
    }
    if (da != db) return local ? db <=> da : da <=> db;
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }
};

inline std::strong_ordering monomial_cmp(const Monomial& a, const Monomial& b,
                                         const TermOrder& ord = TermOrder::degrevlex()) {
  return ord.compare(a, b);
}

// ---------------------------------------------------------------------------
// Polynomial rings

/// The free polynomial ring F_p[vars]. Quotients live one level up, in
/// AmbientRing (see ideal.hpp).
class PolyRing {
 public:
  PolyRing(std::uint32_t characteristic, std::vector<std::string> names)
      : field_(characteristic), names_(std::move(names)) {
    if (names_.empty() || names_.size() > Monomial::kMaxVars)
      throw structural_error("a ring needs between 1 and " + std::to_string(Monomial::kMaxVars) + " variables");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j]) throw structural_error("duplicate variable name '" + names_[i] + "'");
  }

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// -1 when absent.
  int index_of(const std::string& name) const noexcept {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    return -1;
  }

  std::uint32_t all_vars_mask() const noexcept { return (1u << names_.size()) - 1u; }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.names_ == b.names_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> names_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

inline PolyRingPtr make_poly_ring(std::uint32_t p, std::vector<std::string> names) {
  return std::make_shared<const PolyRing>(p, std::move(names));
}

inline bool same_ring(const PolyRingPtr& a, const PolyRingPtr& b) {
  return a == b || (a && b && *a == *b);
}

struct Term {
  Monomial mono;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// ---------------------------------------------------------------------------
// Polynomials

/// Sparse polynomial with nonzero coefficients, terms kept in descending
/// degrevlex order so that equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(PolyRingPtr ring, std::int64_t c) {
    Polynomial p(ring);
    Coeff v = ring->field().reduce(c);
    if (v) p.terms_.push_back({Monomial(ring->nvars()), v});
    return p;
  }

  static Polynomial variable(PolyRingPtr ring, std::size_t i) {
    Monomial m(ring->nvars());
    m.set(i, 1);
    return monomial(std::move(ring), m);
  }

  static Polynomial monomial(PolyRingPtr ring, const Monomial& m, Coeff c = 1) {
    if (m.size() != ring->nvars()) throw structural_error("monomial does not match ring");
    Polynomial p(std::move(ring));
    if (c) p.terms_.push_back({m, c});
    return p;
  }

  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static Polynomial from_terms(PolyRingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const PolyRingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Leading term under degrevlex.
  const Term& leading() const {
    if (terms_.empty()) throw precondition_error("leading term of zero polynomial");
    return terms_.front();
  }

  std::uint32_t degree() const noexcept { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

  /// Lowest total degree of a term (the order of f at the origin).
  std::uint32_t order() const noexcept {
    std::uint32_t o = UINT32_MAX;
    for (const auto& t : terms_) o = std::min(o, t.mono.degree());
    return terms_.empty() ? 0 : o;
  }

  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_homogeneous() const noexcept {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }
  Coeff constant_term() const noexcept {
    return (!terms_.empty() && terms_.back().mono.is_one()) ? terms_.back().coeff : 0;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
    return r;
  }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) { return combine(f, g, false); }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return combine(f, g, true); }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    check_rings(f, g);
    if (f.is_zero() || g.is_zero()) return Polynomial(f.ring_);
    std::vector<Term> out;
    out.reserve(f.size() * g.size());
    const auto& F = f.field();
    for (const auto& a : f.terms_)
      for (const auto& b : g.terms_) out.push_back({a.mono * b.mono, F.mul(a.coeff, b.coeff)});
    return from_terms(f.ring_, std::move(out));
  }

  Polynomial scaled(Coeff c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, c);
    return r;
  }

  Polynomial times(const Monomial& m, Coeff c = 1) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field().mul(t.coeff, c)});
    return r;  // degrevlex is multiplicative, order preserved
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(field().inv(leading().coeff));
  }

  Polynomial pow(unsigned n) const {
    Polynomial r = constant(ring_, 1);
    Polynomial b = *this;
    while (n) {
      if (n & 1) r = r * b;
      n >>= 1;
      if (n) b = b * b;
    }
    return r;
  }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.terms_ == g.terms_ && (f.terms_.empty() || same_ring(f.ring_, g.ring_));
  }

  const PrimeField& field() const { return ring_->field(); }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    const auto& names = ring_->names();
    bool first = true;
    for (const auto& t : terms_) {
      std::int64_t c = field().signed_value(t.coeff);
      if (first) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      first = false;
      std::int64_t a = c < 0 ? -c : c;
      bool need_star = false;
      if (a != 1 || t.mono.is_one()) {
        s += std::to_string(a);
        need_star = true;
      }
      for (std::size_t i = 0; i < t.mono.size(); ++i) {
        if (!t.mono[i]) continue;
        if (need_star) s += "*";
        s += names[i];
        if (t.mono[i] > 1) s += "^" + std::to_string(t.mono[i]);
        need_star = true;
      }
    }
    return s;
  }

 private:
  static void check_rings(const Polynomial& f, const Polynomial& g) {
    if (!same_ring(f.ring_, g.ring_)) throw structural_error("polynomials from different rings");
  }

  static Polynomial combine(const Polynomial& f, const Polynomial& g, bool subtract) {
    check_rings(f, g);
    const auto& F = f.field();
    const TermOrder ord;
    Polynomial r(f.ring_);
    r.terms_.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
      if (j == g.size()) {
        r.terms_.push_back(f.terms_[i++]);
        continue;
      }
      Term b = g.terms_[j];
      if (subtract) b.coeff = F.neg(b.coeff);
      if (i == f.size()) {
        r.terms_.push_back(b);
        ++j;
        continue;
      }
      auto c = ord.compare(f.terms_[i].mono, b.mono);
      if (c > 0) {
        r.terms_.push_back(f.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(b);
        ++j;
      } else {
        Coeff s = F.add(f.terms_[i].coeff, b.coeff);
        if (s) r.terms_.push_back({b.mono, s});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void normalize() {
    const TermOrder ord;
    for (const auto& t : terms_)
      if (t.mono.size() != ring_->nvars()) throw structural_error("term does not match ring");
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    const auto& F = field();
    for (const auto& t : terms_) {
      Coeff c = t.coeff % F.characteristic();
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = F.add(out.back().coeff, c);
      } else {
        out.push_back({t.mono, c});
      }
    }
    std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
    terms_ = std::move(out);
  }

  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

inline Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

}  // namespace hk
