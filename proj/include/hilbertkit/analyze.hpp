#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilbertkit/closure.hpp"
#include "hilbertkit/graded.hpp"
#include "hilbertkit/hilbert.hpp"
#include "hilbertkit/reduction.hpp"

namespace hk {

struct AnalyzeOptions {
  std::size_t trials = 5;
  std::uint64_t seed = 1;
  unsigned r_max = 30;
  unsigned deg_bound = 0;       // 0: order of I plus one
  unsigned rr_power_bound = 6;  // powers tried for a Ratliff-Rush witness
  std::size_t vv_samples = 5;   // reductions given the Valabrega-Valla test
  bool closure = true;
  bool reduce_dimension = true;  // B-sequence after cutting down to dimension 2
  HilbertOptions hilbert;
  RatliffRushOptions rr;
};

struct NamedReduction {
  std::string name;
  Ideal J;
};

struct StageError {
  std::string stage;
  Error::Kind kind = Error::Kind::Structural;
  std::string message;
};

/// Sequence data computed in a dimension-two image of I.
struct ReducedBlock {
  DimensionReduction reduction;
  std::optional<ReductionAnalysis> analysis;
};

struct IdealReport {
  std::string name;
  Ideal ideal;
  std::size_t d = 0;
  bool m_primary = false;
  std::optional<HilbertData> hilbert;
  std::size_t colength = 0;
  std::optional<IndependenceReport> independence;
  std::vector<ReductionAnalysis> analyses;  // one per verified reduction, sample order
  std::vector<std::string> analysis_labels;
  std::optional<NorthcottReport> northcott;
  std::optional<ReducedBlock> reduced;
  std::optional<DepthCertificate> depth;
  std::optional<ClosureReport> closure;
  std::optional<bool> rr_closed;
  std::vector<ClaimResult> claims;
  std::vector<StageError> errors;

  bool cap_exceeded() const {
    for (const auto& e : errors)
      if (e.kind == Error::Kind::CapExceeded) return true;
    return false;
  }
};

namespace detail {

template <class F>
bool stage(IdealReport& rep, const char* name, F&& body) {
  try {
    body();
    return true;
  } catch (const Error& e) {
    rep.errors.push_back({name, e.kind(), e.what()});
  }
  return false;
}

inline ReductionAnalysis analyse_reduction(const PowerLadder& L, const HilbertData& hd, ReductionData rd,
                                           bool with_vv) {
  ReductionAnalysis a;
  a.deficits = deficits(hd, rd);
  if (with_vv) a.vv = vv_check(L, rd);
  if (L.dimension() == 2 && rd.J.gens().size() == 2) {
    a.b = b_sequence(L, rd);
    a.guerrieri = guerrieri_sum(L, rd);
  }
  a.rd = std::move(rd);
  return a;
}

}  // namespace detail

/// The full pipeline for one ideal. Stage failures are recorded and the
/// stages that do not depend on the failed one still run.
inline IdealReport analyze_ideal(const std::string& name, const Ideal& I, const std::vector<NamedReduction>& named,
                                 const AnalyzeOptions& opt = {}) {
  IdealReport rep;
  rep.name = name;
  rep.ideal = I;
  rep.d = I.ring()->dimension();
  if (!detail::stage(rep, "m-primary", [&] { rep.m_primary = is_m_primary(I); })) return rep;
  if (!rep.m_primary) {
    rep.errors.push_back({"m-primary", Error::Kind::NotMPrimary, "not m-primary: " + I.to_string()});
    return rep;
  }
  const PowerLadder L(I);
  rep.colength = L.colength(1);
  if (!detail::stage(rep, "hilbert", [&] { rep.hilbert = hilbert_coefficients(L, opt.hilbert); })) return rep;
  const HilbertData& hd = *rep.hilbert;

  detail::stage(rep, "reductions", [&] {
    std::vector<std::pair<std::string, Ideal>> js;
    for (const auto& n : named) js.emplace_back(n.name, n.J);
    rep.independence = independence_sample(L, opt.trials, opt.seed, js, opt.r_max);
  });
  if (rep.independence) {
    std::size_t k = 0;
    for (const auto& s : rep.independence->samples) {
      if (!s.r) continue;
      const ReductionData& rd = rep.independence->reductions[k++];
      const std::string label = s.label;
      detail::stage(rep, "reduction analysis", [&] {
        rep.analyses.push_back(detail::analyse_reduction(L, hd, rd, rep.analyses.size() < opt.vv_samples));
        rep.analysis_labels.push_back(label);
      });
    }
    if (!rep.analyses.empty())
      detail::stage(rep, "northcott", [&] { rep.northcott = northcott_huneke_check(L, hd, rep.analyses.front().rd); });
  }

  if (rep.d > 2 && opt.reduce_dimension) {
    detail::stage(rep, "dimension reduction", [&] {
      ReducedBlock blk;
      DimensionReduceOptions dopt;
      dopt.superficial.r_max = opt.r_max;
      dopt.hilbert = opt.hilbert;
      blk.reduction = dimension_reduce(I, rep.d - 2, opt.seed, dopt);
      const PowerLadder L2(blk.reduction.image);
      std::optional<ReductionData> rd;
      for (std::uint64_t s = 1; s <= 4 && !rd; ++s)
        rd = reduction_index(L2, random_candidate_reduction(blk.reduction.image, opt.seed + 104729u * s), opt.r_max);
      if (!rd) throw cap_error("no reduction of the image up to r_max = " + std::to_string(opt.r_max));
      blk.analysis = detail::analyse_reduction(L2, blk.reduction.after, std::move(*rd), false);
      rep.reduced = std::move(blk);
    });
  }

  DepthInputs din;
  din.d = rep.d;
  din.analyses = rep.analyses;
  detail::stage(rep, "depth", [&] {
    auto cert = depth_bounds(din);
    if (cert.lower.value < 1 && cert.upper.value > 0) {
      din.rr_witness_power = rr_powers_witness(L, opt.rr_power_bound, opt.rr);
      if (!din.rr_witness_power) din.rr_bound_checked = opt.rr_power_bound;
      cert = depth_bounds(din);
    }
    rep.depth = cert;
  });

  if (opt.closure) {
    detail::stage(rep, "closure", [&] {
      ClosureOptions copt;
      copt.deg_bound = opt.deg_bound;
      copt.r_max = opt.r_max;
      copt.rr = opt.rr;
      if (rep.depth) copt.depth_lower = rep.depth->lower.value;
      rep.closure = is_integrally_closed(L, copt);
      rep.rr_closed = ideal_equals(rep.closure->rr_closure, L.base());
    });
  }

  ClaimContext ctx;
  ctx.d = rep.d;
  ctx.hilbert = hd;
  ctx.colength = rep.colength;
  ctx.depth = din;
  if (rep.independence) ctx.r_values = rep.independence->observed_r_values;
  if (rep.closure) ctx.closed = rep.closure->verdict;
  ctx.rr_closed = rep.rr_closed;
  for (const auto& [id, label] : claim_names()) rep.claims.push_back(verify_claim(id, ctx));
  return rep;
}

}  // namespace hk
