#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hilbertkit/ladder.hpp"

namespace hk {

struct ReductionData {
  Ideal J;                                       // the generators as given
  Ideal J_local;                                 // J + m^K with m^K inside J locally
  std::vector<std::vector<Coeff>> coeff_matrix;  // rows: generators of J in the generators of I
  unsigned r = 0;
  std::vector<std::size_t> length_table;  // λ(I^n / J I^(n-1)) for n = 1..r+1

  std::int64_t sum_lengths() const {
    std::int64_t s = 0;
    for (auto v : length_table) s += static_cast<std::int64_t>(v);
    return s;
  }

  /// Σ (n - 1) λ(I^n / J I^(n-1)).
  std::int64_t weighted_sum() const {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < length_table.size(); ++k) s += static_cast<std::int64_t>(k * length_table[k]);
    return s;
  }
};

struct CandidateReduction {
  Ideal J;
  std::vector<std::vector<Coeff>> coeff_matrix;
};

/// d random F_p-combinations of the generators of I; deterministic in seed.
inline CandidateReduction random_candidate_reduction(const Ideal& I, std::uint64_t seed) {
  const std::size_t d = I.ring()->dimension();
  if (d == 0) throw precondition_error("random_candidate_reduction needs a ring of positive dimension");
  std::mt19937_64 rng(seed);
  const std::uint32_t p = I.ring()->characteristic();
  std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
  CandidateReduction out;
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Coeff> row;
    Polynomial g(I.base());
    for (const auto& f : I.gens()) {
      Coeff c = coeff(rng);
      row.push_back(c);
      g = g + f.scaled(c);
    }
    out.coeff_matrix.push_back(std::move(row));
    gens.push_back(std::move(g));
  }
  out.J = Ideal(I.ring(), std::move(gens));
  return out;
}

namespace detail {

inline std::vector<Polynomial> products(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::vector<Polynomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& f : a)
    for (const auto& g : b) out.push_back(f * g);
  return out;
}

}  // namespace detail

/// Least r <= r_max with I^(r+1) = J I^r in the local ring, with the length
/// table; nullopt when J is not a reduction up to r_max. The test compares
/// J I^r + m^(K+1) with I^(r+1), where m^K is inside I^(r+1): equal
/// colengths give I^(r+1) = J I^r + m I^(r+1), hence equality by Nakayama.
inline std::optional<ReductionData> reduction_index(const PowerLadder& L, const Ideal& J, unsigned r_max = 30) {
  if (!same_ring(J.ring(), L.ring())) throw structural_error("reduction from a different ring");
  const Ideal& I = L.base();
  for (const auto& g : J.gens())
    if (!contains_poly(I, g)) throw precondition_error("J is not contained in I: " + g.to_string());
  if (J.gens().empty()) return std::nullopt;
  for (unsigned r = 0; r <= r_max; ++r) {
    const Ideal next = L.power(r + 1);
    const std::uint32_t k = *next.corner();
    Ideal test(L.ring(), detail::products(J.gens(), detail::local_generators(L.power(r))), k + 1);
    if (colength(test) != L.colength(r + 1)) continue;
    ReductionData rd;
    rd.J = J;
    rd.J_local = detail::tightened(Ideal(L.ring(), J.gens(), k));
    rd.r = r;
    for (unsigned n = 1; n <= r + 1; ++n) {
      Ideal prod = ideal_product(rd.J_local, L.power(n - 1));
      rd.length_table.push_back(colength(prod) - L.colength(n));
    }
    return rd;
  }
  return std::nullopt;
}

inline std::optional<ReductionData> reduction_index(const PowerLadder& L, const CandidateReduction& c,
                                                    unsigned r_max = 30) {
  auto rd = reduction_index(L, c.J, r_max);
  if (rd) rd->coeff_matrix = c.coeff_matrix;
  return rd;
}

inline std::optional<ReductionData> reduction_index(const Ideal& I, const Ideal& J, unsigned r_max = 30) {
  return reduction_index(PowerLadder(I), J, r_max);
}

// ---------------------------------------------------------------------------
// Superficial elements

struct SuperficialWindow {
  unsigned lo = 1;
  unsigned hi = 6;
};

/// Bounded test of (I^(n+1) : x) ∩ I^c = I^n for n in the window, with c the
/// window start. The left side is the kernel of multiplication by x from
/// I^c/I^n to R/I^(n+1), so it is decided by lengths:
/// λ(I^c/I^n) = λ(R/I^(n+1)) - λ(R/(x I^c + I^(n+1))).
inline bool is_superficial(const Polynomial& x, const PowerLadder& L, SuperficialWindow w) {
  if (!contains_poly(L.base(), x) || contains_poly(L.power(2), x))
    throw precondition_error("not admissible: a superficial candidate must lie in I but not in I^2");
  const unsigned c = w.lo;
  std::vector<Polynomial> xc;
  for (const auto& g : detail::local_generators(L.power(c))) xc.push_back(x * g);
  for (unsigned n = std::max(w.lo, 1u); n <= w.hi; ++n) {
    const Ideal next = L.power(n + 1);
    std::vector<Polynomial> gens = xc;
    const auto& ng = next.gens();
    gens.insert(gens.end(), ng.begin(), ng.end());
    const Ideal image(L.ring(), std::move(gens), next.corner());
    const auto lhs = static_cast<std::int64_t>(L.colength(n)) - static_cast<std::int64_t>(L.colength(c));
    const auto rhs = static_cast<std::int64_t>(L.colength(n + 1)) - static_cast<std::int64_t>(colength(image));
    if (lhs != rhs) return false;
  }
  return true;
}

/// Default window [1, r_J + 4] for a random reduction of I.
inline SuperficialWindow default_window(const PowerLadder& L, std::uint64_t seed, unsigned r_max = 30) {
  auto rd = reduction_index(L, random_candidate_reduction(L.base(), seed), r_max);
  return {1, (rd ? rd->r : 2u) + 4};
}

struct SuperficialOptions {
  std::optional<SuperficialWindow> window;
  unsigned retries = 8;
  unsigned r_max = 30;
};

namespace detail {

inline Polynomial random_combination(const Ideal& I, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, I.ring()->characteristic() - 1);
  Polynomial g(I.base());
  for (const auto& f : I.gens()) g = g + f.scaled(coeff(rng));
  return g;
}

}  // namespace detail

/// x_1, ..., x_k with each x_i superficial for the image of I modulo the
/// previous ones (bounded verdicts).
inline std::vector<Polynomial> superficial_sequence(const Ideal& I, std::size_t k, std::uint64_t seed,
                                                    const SuperficialOptions& opt = {}) {
  if (k > I.ring()->dimension()) throw precondition_error("superficial_sequence: k exceeds the dimension");
  std::vector<Polynomial> xs;
  std::mt19937_64 rng(seed);
  Ideal current = I;
  for (std::size_t i = 0; i < k; ++i) {
    PowerLadder L(current);
    SuperficialWindow w = opt.window ? *opt.window : default_window(L, seed + i, opt.r_max);
    bool found = false;
    for (unsigned attempt = 0; attempt < opt.retries && !found; ++attempt) {
      Polynomial x = detail::random_combination(current, rng);
      if (x.is_zero() || contains_poly(L.power(2), x)) continue;
      if (is_superficial(x, L, w)) {
        xs.push_back(x);
        current = quotient_push(current, {x});
        found = true;
      }
    }
    if (!found)
      throw cap_error("superficial search failed at index " + std::to_string(i + 1) + " after " +
                      std::to_string(opt.retries) + " attempts");
  }
  return xs;
}

// ---------------------------------------------------------------------------
// Independence sampling

struct ReductionSample {
  std::string label;  // "seed N" or the user-given name
  std::optional<unsigned> r;
  std::string failure;  // set when not a reduction up to r_max
};

struct IndependenceReport {
  enum class Verdict { IndependentUpToSampling, NotIndependent };

  std::size_t trials = 0;
  std::vector<ReductionSample> samples;  // sampled then named, in order
  std::vector<unsigned> observed_r_values;
  Verdict verdict = Verdict::IndependentUpToSampling;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // indices into samples
  std::optional<unsigned> r_min;  // upper evidence for r(I)

  std::vector<ReductionData> reductions;  // verified data, sampled ones first
};

inline IndependenceReport independence_sample(const PowerLadder& L, std::size_t trials, std::uint64_t seed,
                                              const std::vector<std::pair<std::string, Ideal>>& named = {},
                                              unsigned r_max = 30) {
  IndependenceReport rep;
  rep.trials = trials;
  auto record = [&](std::string label, std::optional<ReductionData> rd) {
    ReductionSample s{std::move(label), std::nullopt, {}};
    if (rd) {
      s.r = rd->r;
      rep.observed_r_values.push_back(rd->r);
      rep.reductions.push_back(std::move(*rd));
    } else {
      s.failure = "not a reduction up to r_max = " + std::to_string(r_max);
    }
    rep.samples.push_back(std::move(s));
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + t;
    record("seed " + std::to_string(s), reduction_index(L, random_candidate_reduction(L.base(), s), r_max));
  }
  for (const auto& [name, J] : named) {
    try {
      record(name, reduction_index(L, J, r_max));
    } catch (const Error& e) {
      rep.samples.push_back({name, std::nullopt, e.what()});
    }
  }
  for (std::size_t a = 0; a < rep.samples.size() && !rep.witness; ++a)
    for (std::size_t b = a + 1; b < rep.samples.size(); ++b)
      if (rep.samples[a].r && rep.samples[b].r && *rep.samples[a].r != *rep.samples[b].r) {
        rep.witness = {a, b};
        rep.verdict = IndependenceReport::Verdict::NotIndependent;
        break;
      }
  std::sort(rep.observed_r_values.begin(), rep.observed_r_values.end());
  if (!rep.observed_r_values.empty()) rep.r_min = rep.observed_r_values.front();
  return rep;
}

}  // namespace hk
