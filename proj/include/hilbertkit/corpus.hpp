#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hilbertkit/analyze.hpp"

namespace hk {

struct ExpectedValues {
  std::vector<std::int64_t> e;  // leading Hilbert coefficients to compare
  std::optional<std::size_t> colength;
  std::optional<unsigned> r_all;  // every sampled and named reduction
  bool r_all_equal = false;
  std::vector<std::pair<std::string, unsigned>> named_r;
  std::optional<std::int64_t> e1_deficit;  // every sampled reduction
  std::optional<std::int64_t> e2_deficit;
  std::optional<std::int64_t> northcott_gap;  // e1 - e0 + λ(R/I)
  std::optional<unsigned> depth_exact;
  std::optional<unsigned> depth_lower_at_least;
  std::optional<unsigned> depth_upper_at_most;
  std::optional<ClosureReport::Verdict> closure;
  std::optional<IndependenceReport::Verdict> independence;
};

struct BuiltinExample {
  std::string name;
  std::vector<std::string> vars;
  std::vector<std::string> gens;
  std::vector<std::pair<std::string, std::vector<std::string>>> named;
  ExpectedValues expect;
  std::size_t min_trials = 3;
  std::optional<std::uint32_t> forbidden_char;
};

inline const std::vector<BuiltinExample>& builtin_examples() {
  using V = ClosureReport::Verdict;
  static const std::vector<BuiltinExample> corpus = [] {
    std::vector<BuiltinExample> c;
    {
      BuiltinExample x{"x6-y6-binomial", {"x", "y"}, {"x^6", "y^6", "x^5*y + x^2*y^4"}, {}, {}, 3, {}};
      x.expect.e = {36, 15, 11};
      x.expect.e1_deficit = 1;
      x.expect.e2_deficit = 3;
      x.expect.depth_exact = 0;
      x.expect.closure = V::NotClosed;
      c.push_back(x);
    }
    {
      BuiltinExample x{"quadrics-xyz", {"x", "y", "z"}, {"x^2 - y^2", "y^2 - z^2", "x*y", "y*z", "x*z"}, {}, {}, 3, {}};
      x.expect.e = {8, 4, 0};
      x.expect.depth_upper_at_most = 0;
      c.push_back(x);
    }
    auto staircase = [](std::string name, std::vector<std::string> gens, std::size_t len, std::int64_t gap) {
      BuiltinExample x{std::move(name), {"x", "y"}, std::move(gens), {}, {}, 20, {}};
      x.expect.e = {36, 15};
      x.expect.colength = len;
      x.expect.northcott_gap = gap;
      x.expect.depth_exact = 0;
      return x;
    };
    {
      auto x = staircase("staircase-22", {"x^6", "y^6", "x^5*y", "x^3*y^3", "x^2*y^4", "x*y^5"}, 22, 1);
      x.expect.r_all = 2;
      c.push_back(x);
    }
    {
      auto x = staircase("staircase-23a", {"x^6", "y^6", "x^5*y", "x^3*y^3", "x^2*y^4"}, 23, 2);
      x.expect.r_all = 2;
      c.push_back(x);
    }
    {
      auto x = staircase("staircase-23b", {"x^6", "y^6", "x^5*y", "x^3*y^3", "x*y^5"}, 23, 2);
      x.expect.r_all = 2;
      c.push_back(x);
    }
    {
      auto x = staircase("staircase-24", {"x^6", "y^6", "x^5*y", "x^2*y^4", "x*y^5"}, 24, 3);
      x.min_trials = 3;
      x.named = {{"J1", {"x^6", "x^5*y + y^6"}}, {"J2", {"x^6", "y^6"}}};
      x.expect.named_r = {{"J1", 2}, {"J2", 3}};
      x.expect.independence = IndependenceReport::Verdict::NotIndependent;
      c.push_back(x);
    }
    {
      BuiltinExample x{"cubic-cone-m5",
                       {"x", "y", "z"},
                       {"x^4", "x*(y^3 + z^3)", "y*(y^3 + z^3)", "z*(y^3 + z^3)", "x^5", "x^4*y", "x^4*z",
                        "x^3*y^2", "x^3*y*z", "x^3*z^2", "x^2*y^3", "x^2*y^2*z", "x^2*y*z^2", "x^2*z^3", "x*y^4",
                        "x*y^3*z", "x*y^2*z^2", "x*y*z^3", "x*z^4", "y^5", "y^4*z", "y^3*z^2", "y^2*z^3", "y*z^4",
                        "z^5"},
                       {},
                       {},
                       10,
                       3u};
      x.expect.e = {76, 48};
      x.expect.colength = 31;
      x.expect.northcott_gap = 3;
      x.expect.e1_deficit = 0;
      x.expect.depth_lower_at_least = 2;
      x.expect.r_all_equal = true;
      c.push_back(x);
    }
    return c;
  }();
  return corpus;
}

struct CheckRow {
  std::string field;
  std::string expected;
  std::string got;
  bool pass = false;
};

namespace detail {

inline std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace detail

/// Rows comparing a report with the expected values of a built-in example.
inline std::vector<CheckRow> check_example(const BuiltinExample& ex, const IdealReport& rep) {
  std::vector<CheckRow> rows;
  const ExpectedValues& x = ex.expect;
  auto row = [&](std::string field, std::string want, std::string got) {
    const bool ok = want == got;
    rows.push_back({std::move(field), std::move(want), std::move(got), ok});
  };
  for (const auto& e : rep.errors) rows.push_back({"stage " + e.stage, "ok", e.message, false});
  if (!rep.hilbert) return rows;
  const HilbertData& hd = *rep.hilbert;
  if (!x.e.empty()) {
    std::vector<std::int64_t> got;
    for (std::size_t i = 0; i < x.e.size(); ++i) got.push_back(hd.e(i));
    row("e", detail::join_ints(x.e), detail::join_ints(got));
  }
  if (x.colength) row("colength", std::to_string(*x.colength), std::to_string(rep.colength));
  if (x.northcott_gap) {
    const std::int64_t gap = hd.e(1) - hd.e(0) + static_cast<std::int64_t>(rep.colength);
    row("e1-e0+colength", std::to_string(*x.northcott_gap), std::to_string(gap));
  }
  if (rep.independence) {
    const auto& ind = *rep.independence;
    std::set<std::string> named;
    for (const auto& [n, r] : x.named_r) named.insert(n);
    for (const auto& s : ind.samples) {
      const std::string got = s.r ? std::to_string(*s.r) : s.failure;
      if (x.r_all && !named.count(s.label)) row("r_J " + s.label, std::to_string(*x.r_all), got);
    }
    for (const auto& [n, r] : x.named_r) {
      std::string got = "missing";
      for (const auto& s : ind.samples)
        if (s.label == n) got = s.r ? std::to_string(*s.r) : s.failure;
      row("r_J " + n, std::to_string(r), got);
    }
    if (x.r_all_equal) {
      const bool eq = !ind.observed_r_values.empty() &&
                      ind.observed_r_values.front() == ind.observed_r_values.back();
      std::string got;
      for (auto r : ind.observed_r_values) got += (got.empty() ? "" : ",") + std::to_string(r);
      row("r_J all equal", "true", eq ? "true" : "false (" + got + ")");
    }
    if (x.independence)
      row("independence",
          *x.independence == IndependenceReport::Verdict::NotIndependent ? "NOT-independent"
                                                                          : "independent-up-to-sampling",
          ind.verdict == IndependenceReport::Verdict::NotIndependent ? "NOT-independent"
                                                                      : "independent-up-to-sampling");
  }
  for (std::size_t k = 0; k < rep.analyses.size(); ++k) {
    const auto& a = rep.analyses[k];
    const auto& label = rep.analysis_labels[k];
    bool named = false;
    for (const auto& [n, r] : x.named_r) named |= n == label;
    if (named) continue;
    if (x.e1_deficit) row("e1 deficit " + label, std::to_string(*x.e1_deficit), std::to_string(a.deficits.e1_deficit));
    if (x.e2_deficit)
      row("e2 deficit " + label, std::to_string(*x.e2_deficit),
          a.deficits.e2_deficit ? std::to_string(*a.deficits.e2_deficit) : "undefined");
  }
  if (rep.depth) {
    const auto& c = *rep.depth;
    if (x.depth_exact)
      row("depth", "exact " + std::to_string(*x.depth_exact),
          c.exact() ? "exact " + std::to_string(c.lower.value)
                    : "[" + std::to_string(c.lower.value) + "," + std::to_string(c.upper.value) + "]");
    if (x.depth_lower_at_least)
      row("depth lower", ">= " + std::to_string(*x.depth_lower_at_least),
          c.lower.value >= *x.depth_lower_at_least ? ">= " + std::to_string(*x.depth_lower_at_least)
                                                   : std::to_string(c.lower.value));
    if (x.depth_upper_at_most)
      row("depth upper", "<= " + std::to_string(*x.depth_upper_at_most),
          c.upper.value <= *x.depth_upper_at_most ? "<= " + std::to_string(*x.depth_upper_at_most)
                                                  : std::to_string(c.upper.value));
  }
  if (x.closure)
    row("integrally closed", to_string(*x.closure), rep.closure ? to_string(rep.closure->verdict) : "not computed");
  return rows;
}

// ---------------------------------------------------------------------------
// Random search corpus

struct SearchIdeal {
  std::vector<std::string> vars;
  std::vector<std::string> gens;
};

/// Half of the samples are equigenerated: x_i^D for every variable plus a
/// random subset of the mixed monomials of degree D. The others take pure
/// powers and up to five monomials of degrees just below max_deg. Either kind
/// gets, with probability one third, a binomial of two monomials of equal
/// degree.
inline SearchIdeal random_search_ideal(std::size_t nvars, unsigned max_deg, std::mt19937_64& rng) {
  static const char* names[] = {"x", "y", "z"};
  if (nvars < 1 || nvars > 3) throw precondition_error("search supports 1 to 3 variables");
  if (max_deg < 2) throw precondition_error("search needs max-deg >= 2");
  SearchIdeal out;
  for (std::size_t i = 0; i < nvars; ++i) out.vars.push_back(names[i]);
  const unsigned lo = std::max(2u, max_deg > 3 ? max_deg - 3 : 2u);
  std::uniform_int_distribution<unsigned> deg(lo, max_deg);
  auto render = [&](const std::vector<unsigned>& e) {
    std::string s;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (!e[i]) continue;
      if (!s.empty()) s += "*";
      s += names[i];
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
  };
  auto monomial = [&](unsigned total) {
    std::vector<unsigned> e(nvars, 0);
    std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
    for (unsigned k = 0; k < total; ++k) ++e[var(rng)];
    return render(e);
  };
  if (std::bernoulli_distribution(0.5)(rng)) {
    const unsigned D = deg(rng);
    for (std::size_t i = 0; i < nvars; ++i) out.gens.push_back(std::string(names[i]) + "^" + std::to_string(D));
    std::bernoulli_distribution keep(0.5);
    std::vector<unsigned> e(nvars, 0);
    auto walk = [&](auto&& self, std::size_t i, unsigned left) -> void {
      if (i + 1 == nvars) {
        e[i] = left;
        if (*std::max_element(e.begin(), e.end()) < D && keep(rng)) out.gens.push_back(render(e));
        return;
      }
      for (unsigned a = 0; a <= left; ++a) {
        e[i] = a;
        self(self, i + 1, left - a);
      }
    };
    walk(walk, 0, D);
  } else {
    for (std::size_t i = 0; i < nvars; ++i) out.gens.push_back(std::string(names[i]) + "^" + std::to_string(deg(rng)));
    const unsigned extra = std::uniform_int_distribution<unsigned>(0, 5)(rng);
    for (unsigned k = 0; k < extra; ++k) out.gens.push_back(monomial(deg(rng)));
  }
  if (std::uniform_int_distribution<unsigned>(0, 2)(rng) == 0) {
    const unsigned t = deg(rng);
    const unsigned c = std::uniform_int_distribution<unsigned>(1, 9)(rng);
    out.gens.push_back(monomial(t) + " + " + std::to_string(c) + "*" + monomial(t));
  }
  return out;
}

struct SearchOptions {
  std::size_t vars = 2;
  unsigned max_deg = 6;
  std::size_t count = 200;
  std::uint64_t seed = 1;
  std::vector<ClaimId> claims;  // empty: every claim
  AnalyzeOptions analyze;
};

struct ClaimTally {
  ClaimId id{};
  std::size_t applicable = 0;
  std::size_t verified = 0;
  std::size_t vacuous = 0;  // hypotheses false
  std::size_t violated = 0;
  std::size_t undetermined = 0;
  std::size_t unverifiable = 0;
};

struct SearchViolation {
  std::size_t index = 0;
  SearchIdeal ideal;
  ClaimResult result;
};

struct SearchSummary {
  std::size_t samples = 0;
  std::vector<ClaimTally> tallies;
  std::vector<SearchViolation> violations;
  std::vector<std::pair<std::size_t, std::string>> errors;  // sample index, first stage error
};

/// Renders a search sample in the input format.
inline std::string search_input_text(const SearchIdeal& s, std::uint32_t characteristic) {
  std::string out = "ring { char = " + std::to_string(characteristic) + "; vars = ";
  for (std::size_t i = 0; i < s.vars.size(); ++i) out += (i ? ", " : "") + s.vars[i];
  out += "; }\nideal I = ";
  for (std::size_t i = 0; i < s.gens.size(); ++i) out += (i ? ", " : "") + s.gens[i];
  return out + ";\n";
}

/// Samples `count` ideals and evaluates the requested claims on each.
/// `on_sample` sees every analysed sample, in order.
inline SearchSummary run_search(
    const SearchOptions& opt, std::uint32_t characteristic,
    const std::function<void(std::size_t, const SearchIdeal&, const IdealReport&)>& on_sample = {}) {
  SearchSummary sum;
  std::vector<ClaimId> ids = opt.claims;
  if (ids.empty())
    for (const auto& [id, name] : claim_names()) ids.push_back(id);
  for (auto id : ids) sum.tallies.push_back({id});
  std::mt19937_64 rng(opt.seed);
  for (std::size_t k = 0; k < opt.count; ++k) {
    const SearchIdeal s = random_search_ideal(opt.vars, opt.max_deg, rng);
    const Ideal I = Ideal::parse(make_ring(characteristic, s.vars), s.gens);
    AnalyzeOptions aopt = opt.analyze;
    aopt.seed = opt.analyze.seed + 1000 * k;
    const IdealReport rep = analyze_ideal("sample " + std::to_string(k), I, {}, aopt);
    ++sum.samples;
    if (!rep.errors.empty()) sum.errors.emplace_back(k, rep.errors.front().stage + ": " + rep.errors.front().message);
    if (on_sample) on_sample(k, s, rep);
    for (auto& t : sum.tallies) {
      for (const auto& c : rep.claims) {
        if (c.id != t.id) continue;
        using S = ClaimResult::Status;
        if (c.applicable) ++t.applicable;
        switch (c.status) {
          case S::Verified: ++t.verified; break;
          case S::Violated:
            ++t.violated;
            sum.violations.push_back({k, s, c});
            break;
          case S::Undetermined: ++t.undetermined; break;
          case S::NotApplicable: ++t.vacuous; break;
          case S::HypothesesUnverifiable: ++t.unverifiable; break;
        }
      }
    }
  }
  return sum;
}

}  // namespace hk
