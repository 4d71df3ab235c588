#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hilbertkit/closure.hpp"
#include "hilbertkit/hilbert.hpp"
#include "hilbertkit/ladder.hpp"
#include "hilbertkit/reduction.hpp"

namespace hk {

// ---------------------------------------------------------------------------
// Deficits

struct DeficitReport {
  std::int64_t e1_deficit = 0;                // Σ λ(I^n/JI^(n-1)) - e_1
  std::optional<std::int64_t> e2_deficit;     // Σ (n-1) λ(I^n/JI^(n-1)) - e_2, for d >= 2
};

inline std::int64_t e1_deficit(const HilbertData& hd, const ReductionData& rd) { return rd.sum_lengths() - hd.e(1); }

inline std::optional<std::int64_t> e2_deficit(const HilbertData& hd, const ReductionData& rd) {
  if (hd.dim < 2) return std::nullopt;
  return rd.weighted_sum() - hd.e(2);
}

inline DeficitReport deficits(const HilbertData& hd, const ReductionData& rd) {
  return {e1_deficit(hd, rd), e2_deficit(hd, rd)};
}

// ---------------------------------------------------------------------------
// Valabrega-Valla

/// I^n ∩ J = J I^(n-1) for 2 <= n <= r (automatic beyond r).
inline bool vv_check(const PowerLadder& L, const ReductionData& rd) {
  for (unsigned n = 2; n <= rd.r; ++n) {
    Ideal lhs = ideal_intersect(L.power(n), rd.J_local);
    Ideal rhs = ideal_product(rd.J_local, L.power(n - 1));
    if (!ideal_equals(lhs, rhs)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Dimension-two sequences

struct BSequence {
  std::vector<std::int64_t> values;  // λ(B_n) for n = 2..n_top
  Polynomial x1;                     // J = (x1) + (x2)
  Polynomial x2;

  unsigned n_top() const { return static_cast<unsigned>(values.size() + 1); }
  std::int64_t sum() const {
    std::int64_t s = 0;
    for (auto v : values) s += v;
    return s;
  }
  /// Σ (n - 1) λ(B_n).
  std::int64_t weighted_sum() const {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < values.size(); ++k) s += static_cast<std::int64_t>(k + 1) * values[k];
    return s;
  }
};

namespace detail {

inline void require_dimension_two(const PowerLadder& L, const ReductionData& rd, const char* what) {
  if (L.dimension() != 2)
    throw precondition_error(std::string(what) + " needs dimension 2 (apply dimension_reduce first)");
  if (rd.J.gens().size() != 2) throw precondition_error(std::string(what) + " needs a two-generated reduction");
}

}  // namespace detail

/// λ(B_n) = λ(R/(I^(n-1) + x2 (I^(n-1) : x1))) - λ(R/(I^n : x1)) for
/// n = 2..r+2, using x1 (A : x1) = A ∩ (x1) for the regular element x1.
inline BSequence b_sequence(const PowerLadder& L, const ReductionData& rd) {
  detail::require_dimension_two(L, rd, "b_sequence");
  BSequence b;
  b.x1 = rd.J.gens()[0];
  b.x2 = rd.J.gens()[1];
  for (unsigned n = 2; n <= rd.r + 2; ++n) {
    const Ideal prev = L.power(n - 1);
    const Ideal q = colon_poly(prev, b.x1);
    std::vector<Polynomial> gens = prev.basis().elements();
    for (const auto& g : q.gens()) gens.push_back(b.x2 * g);
    const Ideal lower(L.ring(), std::move(gens), prev.corner());
    b.values.push_back(static_cast<std::int64_t>(colength(lower)) -
                       static_cast<std::int64_t>(colon_colength(L.power(n), b.x1)));
  }
  return b;
}

struct GuerrieriSum {
  std::vector<std::int64_t> terms;  // n = 1..r
  std::int64_t total() const {
    std::int64_t s = 0;
    for (auto t : terms) s += t;
    return s;
  }
};

/// Σ_{n>=1} [λ(R/(J I^n : x1)) - λ(R/(I^(n+1) : x1))]; terms vanish for n >= r.
inline GuerrieriSum guerrieri_sum(const PowerLadder& L, const ReductionData& rd) {
  detail::require_dimension_two(L, rd, "guerrieri_sum");
  const Polynomial& x1 = rd.J.gens()[0];
  GuerrieriSum g;
  for (unsigned n = 1; n <= std::max(rd.r, 1u); ++n) {
    const Ideal jin = ideal_product(rd.J_local, L.power(n));
    g.terms.push_back(static_cast<std::int64_t>(colon_colength(jin, x1)) -
                      static_cast<std::int64_t>(colon_colength(L.power(n + 1), x1)));
  }
  return g;
}

// ---------------------------------------------------------------------------
// Dimension reduction

struct DimensionReduction {
  Ideal image;
  std::vector<Polynomial> elements;
  HilbertData before;
  HilbertData after;
  unsigned attempts = 0;
};

struct DimensionReduceOptions {
  unsigned retries = 4;
  SuperficialOptions superficial;
  HilbertOptions hilbert;
};

/// Image of I modulo k superficial elements, resampled until e_0 and e_1
/// agree with those of I.
inline DimensionReduction dimension_reduce(const Ideal& I, std::size_t k, std::uint64_t seed,
                                           const DimensionReduceOptions& opt = {}) {
  if (k + 1 > std::max<std::size_t>(I.ring()->dimension(), 1))
    throw precondition_error("dimension_reduce: k must be at most d - 1");
  DimensionReduction out;
  PowerLadder L(I);
  out.before = hilbert_coefficients(L, opt.hilbert);
  if (k == 0) {
    out.image = L.base();
    out.after = out.before;
    return out;
  }
  for (unsigned attempt = 0; attempt < opt.retries; ++attempt) {
    ++out.attempts;
    auto xs = superficial_sequence(L.base(), k, seed + 7919u * attempt, opt.superficial);
    Ideal image = with_exact_corner(quotient_push(L.base(), xs));
    HilbertData after = hilbert_coefficients(PowerLadder(image), opt.hilbert);
    if (after.e(0) == out.before.e(0) && after.e(1) == out.before.e(1)) {
      out.image = image;
      out.elements = std::move(xs);
      out.after = std::move(after);
      return out;
    }
  }
  throw cap_error("dimension_reduce: e_0/e_1 not preserved after " + std::to_string(opt.retries) + " attempts");
}

// ---------------------------------------------------------------------------
// Depth certificates

enum class DepthTag { Trivial, VV, HM_e1, CPR_e2, Wang, GSum, RRPowers };

inline const char* to_string(DepthTag t) {
  switch (t) {
    case DepthTag::Trivial: return "A-PRIORI";
    case DepthTag::VV: return "VV";
    case DepthTag::HM_e1: return "HM-e1";
    case DepthTag::CPR_e2: return "CPR-e2";
    case DepthTag::Wang: return "WANG";
    case DepthTag::GSum: return "G-SUM";
    case DepthTag::RRPowers: return "RR-POWERS";
  }
  return "?";
}

struct DepthBound {
  unsigned value = 0;
  DepthTag tag = DepthTag::Trivial;
  std::string detail;
};

struct DepthCertificate {
  DepthBound lower;
  DepthBound upper;
  std::vector<std::string> evidence;  // one-sided observations that are not bounds
  bool exact() const noexcept { return lower.value == upper.value; }
  bool consistent() const noexcept { return lower.value <= upper.value; }
};

/// Everything computed for one reduction J of I.
struct ReductionAnalysis {
  ReductionData rd;
  DeficitReport deficits;
  std::optional<bool> vv;
  std::optional<BSequence> b;
  std::optional<GuerrieriSum> guerrieri;
};

struct DepthInputs {
  std::size_t d = 0;
  std::vector<ReductionAnalysis> analyses;
  std::optional<unsigned> rr_witness_power;  // some k with ratliff_rush(I^k) != I^k
  unsigned rr_bound_checked = 0;             // powers examined without a witness
};

/// Combines the criteria; tags in `exclude` are ignored.
inline DepthCertificate depth_bounds(const DepthInputs& in, const std::set<DepthTag>& exclude = {}) {
  const auto d = static_cast<unsigned>(in.d);
  DepthCertificate c;
  c.lower = {0, DepthTag::Trivial, "depth is non-negative"};
  c.upper = {d, DepthTag::Trivial, "depth is at most d"};
  auto use = [&](DepthTag t) { return !exclude.count(t); };
  auto raise = [&](unsigned v, DepthTag t, std::string why) {
    if (use(t) && v > c.lower.value) c.lower = {v, t, std::move(why)};
  };
  auto cap = [&](unsigned v, DepthTag t, std::string why) {
    if (use(t) && v < c.upper.value) c.upper = {v, t, std::move(why)};
  };
  std::size_t vv_failed = 0;
  for (std::size_t k = 0; k < in.analyses.size(); ++k) {
    const auto& a = in.analyses[k];
    const std::string who = " (reduction " + std::to_string(k + 1) + ")";
    if (a.vv) {
      if (*a.vv)
        raise(d, DepthTag::VV, "I^n ∩ J = J I^(n-1) for all n" + who);
      else
        ++vv_failed;
    }
    const auto e1 = a.deficits.e1_deficit;
    if (e1 == 0 && d >= 1) raise(d - 1, DepthTag::HM_e1, "e1 deficit 0" + who);
    if (e1 > 0 && d >= 2) cap(d - 2, DepthTag::HM_e1, "e1 deficit " + std::to_string(e1) + who);
    if (e1 == 1 && d >= 2) raise(d - 2, DepthTag::Wang, "e1 deficit 1" + who);
    if (a.deficits.e2_deficit && *a.deficits.e2_deficit == 0 && d >= 1)
      raise(d - 1, DepthTag::CPR_e2, "e2 deficit 0" + who);
    if (a.guerrieri && d == 2) {
      const auto g = a.guerrieri->total();
      if (g == 0) raise(1, DepthTag::GSum, "Guerrieri sum 0" + who);
      if (g == 1) raise(0, DepthTag::GSum, "Guerrieri sum 1" + who);
    }
  }
  if (in.rr_witness_power)
    cap(0, DepthTag::RRPowers, "I^" + std::to_string(*in.rr_witness_power) + " is not Ratliff-Rush closed");
  if (vv_failed)
    c.evidence.push_back("Valabrega-Valla test failed for " + std::to_string(vv_failed) +
                         " sampled reduction(s); suggests depth < d");
  if (!in.rr_witness_power && in.rr_bound_checked)
    c.evidence.push_back("I^k Ratliff-Rush closed for k <= " + std::to_string(in.rr_bound_checked));
  return c;
}

/// Smallest k <= bound with ratliff_rush(I^k) != I^k.
inline std::optional<unsigned> rr_powers_witness(const PowerLadder& L, unsigned bound,
                                                 const RatliffRushOptions& opt = {}) {
  for (unsigned k = 1; k <= bound; ++k) {
    const Ideal Ik = L.power(k);
    if (!ideal_equals(ratliff_rush(PowerLadder(Ik), opt), Ik)) return k;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Claim checks

enum class ClaimId { Thm310, Thm312, Prop36, Prop37, Prop38, Prop313, Lem315, Prop316, Cor317, Rem39Gap };

inline const std::vector<std::pair<ClaimId, const char*>>& claim_names() {
  static const std::vector<std::pair<ClaimId, const char*>> names{
      {ClaimId::Thm310, "THM-3.10"},  {ClaimId::Thm312, "THM-3.12"},   {ClaimId::Prop36, "PROP-3.6"},
      {ClaimId::Prop37, "PROP-3.7"},  {ClaimId::Prop38, "PROP-3.8"},   {ClaimId::Prop313, "PROP-3.13"},
      {ClaimId::Lem315, "LEM-3.15"},  {ClaimId::Prop316, "PROP-3.16"}, {ClaimId::Cor317, "COR-3.17"},
      {ClaimId::Rem39Gap, "REM-3.9-GAP"}};
  return names;
}

inline const char* to_string(ClaimId id) {
  for (const auto& [k, v] : claim_names())
    if (k == id) return v;
  return "?";
}

inline std::optional<ClaimId> parse_claim_id(const std::string& s) {
  for (const auto& [k, v] : claim_names())
    if (s == v) return k;
  return std::nullopt;
}

struct ClaimResult {
  enum class Status { Verified, Violated, Undetermined, NotApplicable, HypothesesUnverifiable };

  ClaimId id{};
  std::vector<std::pair<std::string, std::string>> hypotheses;  // name, "true"/"false"/"unknown"
  bool applicable = false;
  Status status = Status::NotApplicable;
  std::string detail;
};

inline const char* to_string(ClaimResult::Status s) {
  switch (s) {
    case ClaimResult::Status::Verified: return "verified";
    case ClaimResult::Status::Violated: return "violated";
    case ClaimResult::Status::Undetermined: return "undetermined";
    case ClaimResult::Status::NotApplicable: return "not-applicable";
    case ClaimResult::Status::HypothesesUnverifiable: return "hypotheses-unverifiable";
  }
  return "?";
}

/// What the claim checks may consult for one ideal.
struct ClaimContext {
  std::size_t d = 0;
  HilbertData hilbert;
  std::size_t colength = 0;  // λ(R/I)
  DepthInputs depth;         // analyses of every verified reduction
  std::vector<unsigned> r_values;  // sampled and named reductions
  std::optional<ClosureReport::Verdict> closed;
  std::optional<bool> rr_closed;  // ratliff_rush(I) == I

  std::int64_t northcott_gap() const {
    return hilbert.e(1) - hilbert.e(0) + static_cast<std::int64_t>(colength);
  }
};

namespace detail {

enum class Tri { False, True, Unknown };

inline const char* tri_str(Tri t) { return t == Tri::True ? "true" : t == Tri::False ? "false" : "unknown"; }

inline Tri closed_tri(const ClaimContext& c) {
  if (!c.closed || *c.closed == ClosureReport::Verdict::Unknown) return Tri::Unknown;
  return *c.closed == ClosureReport::Verdict::Closed ? Tri::True : Tri::False;
}

inline Tri tri_and(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::True;
}

inline Tri tri_or(Tri a, Tri b) {
  if (a == Tri::True || b == Tri::True) return Tri::True;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::False;
}

inline Tri tri(bool b) { return b ? Tri::True : Tri::False; }

inline bool all_equal(const std::vector<unsigned>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

/// Outcome of a conclusion "depth >= need" against a certificate.
inline ClaimResult::Status depth_status(const DepthCertificate& c, std::int64_t need) {
  if (need <= static_cast<std::int64_t>(c.lower.value)) return ClaimResult::Status::Verified;
  if (need > static_cast<std::int64_t>(c.upper.value)) return ClaimResult::Status::Violated;
  return ClaimResult::Status::Undetermined;
}

/// Merges per-reduction outcomes: any violation wins, then undetermined.
struct Tally {
  bool any_applicable = false, any_unverifiable = false, violated = false, undetermined = false;
  std::string detail;

  void add(Tri hyp, ClaimResult::Status concl, const std::string& what) {
    if (hyp == Tri::Unknown) {
      any_unverifiable = true;
      return;
    }
    if (hyp == Tri::False) return;
    any_applicable = true;
    if (concl == ClaimResult::Status::Violated) {
      violated = true;
      detail += (detail.empty() ? "" : "; ") + what;
    }
    if (concl == ClaimResult::Status::Undetermined) undetermined = true;
  }

  void finish(ClaimResult& r) const {
    r.applicable = any_applicable;
    r.detail = detail;
    if (violated)
      r.status = ClaimResult::Status::Violated;
    else if (any_applicable)
      r.status = undetermined ? ClaimResult::Status::Undetermined : ClaimResult::Status::Verified;
    else
      r.status = any_unverifiable ? ClaimResult::Status::HypothesesUnverifiable : ClaimResult::Status::NotApplicable;
  }
};

}  // namespace detail

/// Evaluates one numbered statement on the computed data. Depth conclusions
/// are judged against a certificate that ignores the criterion the statement
/// itself supplies.
inline ClaimResult verify_claim(ClaimId id, const ClaimContext& ctx) {
  using detail::Tri;
  ClaimResult res;
  res.id = id;
  detail::Tally tally;
  const auto d = static_cast<std::int64_t>(ctx.d);
  const Tri closed = detail::closed_tri(ctx);
  const bool r_equal = detail::all_equal(ctx.r_values);
  auto hyp = [&](const std::string& name, Tri t) { res.hypotheses.emplace_back(name, detail::tri_str(t)); };
  auto same_r = [&] { return r_equal ? ClaimResult::Status::Verified : ClaimResult::Status::Violated; };
  hyp("integrally closed", closed);

  switch (id) {
    case ClaimId::Thm310:
    case ClaimId::Thm312:
      for (const auto& a : ctx.depth.analyses) {
        if (!a.deficits.e2_deficit) continue;
        const auto e2 = *a.deficits.e2_deficit;
        const Tri h = detail::tri_or(detail::tri(e2 == 2), detail::tri_and(closed, detail::tri(e2 == 3 || e2 == 4)));
        hyp("e2 deficit = " + std::to_string(e2) + " qualifies", h);
        if (id == ClaimId::Thm310)
          tally.add(h, a.deficits.e1_deficit == 1 ? ClaimResult::Status::Verified : ClaimResult::Status::Violated,
                    "e1 deficit " + std::to_string(a.deficits.e1_deficit) + " with e2 deficit " + std::to_string(e2));
        else
          tally.add(h, same_r(), "reduction numbers differ");
      }
      break;
    case ClaimId::Prop36: {
      const auto cert = depth_bounds(ctx.depth, {DepthTag::Wang});
      for (const auto& a : ctx.depth.analyses) {
        const Tri h = detail::tri(a.deficits.e1_deficit == 1);
        tally.add(h, detail::depth_status(cert, d - 2), "depth upper bound below d - 2");
      }
      hyp("e1 deficit = 1 for some reduction", detail::tri(tally.any_applicable));
      break;
    }
    case ClaimId::Prop37:
    case ClaimId::Prop38: {
      const std::int64_t want = id == ClaimId::Prop37 ? 0 : 1;
      const auto cert = depth_bounds(ctx.depth, {DepthTag::GSum});
      for (const auto& a : ctx.depth.analyses) {
        if (!a.guerrieri) continue;
        const Tri h = detail::tri(a.guerrieri->total() == want);
        tally.add(h, detail::depth_status(cert, d - 1 - want), "depth upper bound contradicts the sum");
      }
      hyp("Guerrieri sum = " + std::to_string(want), detail::tri(tally.any_applicable));
      break;
    }
    case ClaimId::Prop313: {
      const auto cert = depth_bounds(ctx.depth);
      const Tri rr = ctx.rr_closed ? detail::tri(*ctx.rr_closed) : Tri::Unknown;
      for (const auto& a : ctx.depth.analyses) {
        if (!a.deficits.e2_deficit) continue;
        const Tri h = detail::tri_and(detail::tri_and(detail::tri(d == 3), rr), detail::tri(*a.deficits.e2_deficit == 3));
        tally.add(h, detail::depth_status(cert, 1), "depth upper bound 0");
      }
      hyp("d = 3", detail::tri(d == 3));
      hyp("Ratliff-Rush closed", rr);
      break;
    }
    case ClaimId::Lem315: {
      const auto cert = depth_bounds(ctx.depth);
      const Tri h = detail::tri_and(closed, detail::tri(ctx.northcott_gap() == 2));
      hyp("e1 - e0 + λ(R/I) = 2", detail::tri(ctx.northcott_gap() == 2));
      tally.add(h, detail::depth_status(cert, d - 1), "depth upper bound below d - 1");
      break;
    }
    case ClaimId::Prop316: {
      const Tri h = detail::tri_and(closed, detail::tri(ctx.northcott_gap() <= 3));
      hyp("e1 - e0 + λ(R/I) <= 3", detail::tri(ctx.northcott_gap() <= 3));
      tally.add(h, same_r(), "reduction numbers differ");
      break;
    }
    case ClaimId::Cor317: {
      const auto cert = depth_bounds(ctx.depth);
      bool gap_ok = false;
      for (auto r : ctx.r_values) gap_ok |= ctx.northcott_gap() <= static_cast<std::int64_t>(r) - 1;
      const Tri depth_ok = cert.lower.value + 2 >= ctx.d ? Tri::True
                           : cert.upper.value + 2 < ctx.d ? Tri::False
                                                          : Tri::Unknown;
      hyp("e1 - e0 + λ(R/I) <= r_J - 1", detail::tri(gap_ok));
      hyp("depth G(I) >= d - 2", depth_ok);
      const Tri h = detail::tri_and(detail::tri_and(closed, detail::tri(gap_ok)), depth_ok);
      tally.add(h, same_r(), "reduction numbers differ");
      break;
    }
    case ClaimId::Rem39Gap:
      for (const auto& a : ctx.depth.analyses) {
        if (!a.deficits.e2_deficit) continue;
        const auto e2 = *a.deficits.e2_deficit;
        tally.add(Tri::True, e2 == 1 ? ClaimResult::Status::Violated : ClaimResult::Status::Verified,
                  "e2 deficit equals 1");
        if (closed == Tri::True)
          tally.add(Tri::True, e2 == 2 ? ClaimResult::Status::Violated : ClaimResult::Status::Verified,
                    "integrally closed with e2 deficit 2");
      }
      break;
  }
  tally.finish(res);
  return res;
}

}  // namespace hk
