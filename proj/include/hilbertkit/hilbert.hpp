#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilbertkit/ladder.hpp"
#include "hilbertkit/reduction.hpp"

namespace hk {

/// Generalised binomial coefficient C(a, k) for any integer a and k >= 0.
inline std::int64_t binomial(std::int64_t a, std::int64_t k) {
  if (k < 0) return 0;
  __int128 r = 1;
  for (std::int64_t j = 0; j < k; ++j) r = r * (a - j) / (j + 1);
  return static_cast<std::int64_t>(r);
}

struct HilbertData {
  std::vector<std::size_t> table;          // H(n) = λ(R/I^n) for n = 0..n_top
  std::vector<std::int64_t> coefficients;  // e_0, ..., e_d
  unsigned postulation = 0;
  std::size_t dim = 0;

  std::int64_t e(std::size_t i) const { return i < coefficients.size() ? coefficients[i] : 0; }

  /// P(n) = Σ (-1)^i e_i C(n + d - i - 1, d - i).
  std::int64_t polynomial(std::int64_t n) const {
    std::int64_t s = 0;
    const auto d = static_cast<std::int64_t>(dim);
    for (std::int64_t i = 0; i <= d; ++i) {
      std::int64_t term = e(static_cast<std::size_t>(i)) * binomial(n + d - i - 1, d - i);
      s += (i % 2 ? -term : term);
    }
    return s;
  }
};

struct HilbertOptions {
  unsigned cap = 50;  // largest n tried before giving up
};

/// Raised when no polynomial window is found below the cap.
class PostulationError : public Error {
 public:
  PostulationError(const std::string& what, std::vector<std::size_t> partial)
      : Error(Kind::CapExceeded, what), partial_(std::move(partial)) {}
  const std::vector<std::size_t>& partial_table() const noexcept { return partial_; }

 private:
  std::vector<std::size_t> partial_;
};

inline std::size_t hilbert_function(const PowerLadder& L, unsigned n) { return L.colength(n); }

inline std::size_t hilbert_function(const Ideal& I, unsigned n) {
  if (!is_m_primary(I)) throw not_m_primary_error("not m-primary: " + I.to_string());
  if (n == 0) return 0;
  return colength(ideal_power(I, n));
}

namespace detail {

/// Coefficients of the binomial-basis polynomial through the points
/// (first + j, vals[j]); nullopt when the values are not a polynomial of
/// degree <= d on the window.
inline std::optional<std::vector<std::int64_t>> fit_hilbert_polynomial(std::int64_t first,
                                                                       const std::vector<std::int64_t>& vals,
                                                                       std::size_t d) {
  std::vector<std::int64_t> res = vals;
  std::vector<std::int64_t> e(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    const std::size_t k = d - i;
    std::vector<std::int64_t> diff = res;
    for (std::size_t step = 0; step < k; ++step)
      for (std::size_t j = 0; j + 1 < diff.size() - step; ++j) diff[j] = diff[j + 1] - diff[j];
    const std::size_t live = res.size() - k;
    for (std::size_t j = 1; j < live; ++j)
      if (diff[j] != diff[0]) return std::nullopt;
    const std::int64_t c = diff[0];
    for (std::size_t j = 0; j < res.size(); ++j) {
      const auto n = first + static_cast<std::int64_t>(j);
      res[j] -= c * binomial(n + static_cast<std::int64_t>(k) - 1, static_cast<std::int64_t>(k));
    }
    e[i] = (i % 2) ? -c : c;
  }
  for (auto r : res)
    if (r != 0) return std::nullopt;
  return e;
}

}  // namespace detail

/// Extends the table until the d-th difference is constant on d + 3
/// consecutive values and the fitted polynomial matches all of them.
inline HilbertData hilbert_coefficients(const PowerLadder& L, const HilbertOptions& opt = {}) {
  HilbertData hd;
  hd.dim = L.dimension();
  const std::size_t window = hd.dim + 3;
  hd.table.push_back(0);
  for (unsigned n = 1; n <= opt.cap; ++n) {
    hd.table.push_back(L.colength(n));
    if (n < window) continue;
    const std::int64_t first = static_cast<std::int64_t>(n - window + 1);
    std::vector<std::int64_t> vals(hd.table.begin() + first, hd.table.end());
    auto e = detail::fit_hilbert_polynomial(first, vals, hd.dim);
    if (!e) continue;
    hd.coefficients = std::move(*e);
    unsigned p = n;
    while (p > 0 && hd.polynomial(p - 1) == static_cast<std::int64_t>(hd.table[p - 1])) --p;
    hd.postulation = p;
    return hd;
  }
  std::string partial;
  for (auto v : hd.table) partial += (partial.empty() ? "" : ", ") + std::to_string(v);
  throw PostulationError("postulation not detected up to n = " + std::to_string(opt.cap) + "; partial table: [" +
                             partial + "]",
                         hd.table);
}

inline HilbertData hilbert_coefficients(const Ideal& I, const HilbertOptions& opt = {}) {
  if (!is_m_primary(I)) throw not_m_primary_error("not m-primary: " + I.to_string());
  return hilbert_coefficients(PowerLadder(I), opt);
}

struct NorthcottReport {
  bool northcott_holds = false;  // e_1 >= e_0 - λ(R/I)
  bool boundary = false;         // equality
  bool i2_equals_ji = false;
  bool consistent() const noexcept { return boundary == i2_equals_ji; }
};

inline NorthcottReport northcott_huneke_check(const PowerLadder& L, const HilbertData& hd, const ReductionData& rd) {
  NorthcottReport rep;
  const auto lambda = static_cast<std::int64_t>(L.colength(1));
  rep.northcott_holds = hd.e(1) >= hd.e(0) - lambda;
  rep.boundary = hd.e(1) == hd.e(0) - lambda;
  rep.i2_equals_ji = ideal_equals(L.power(2), ideal_product(rd.J_local, L.power(1)));
  return rep;
}

}  // namespace hk
