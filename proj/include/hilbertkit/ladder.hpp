#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hilbertkit/ideal.hpp"

namespace hk {

/// Lazily extended powers I^0 = R, I, I^2, ... of an m-primary ideal, with
/// their colengths. Shared by every computation on the same ideal.
class PowerLadder {
 public:
  explicit PowerLadder(const Ideal& I) : base_(I.corner() ? I : with_exact_corner(I)) {
    powers_.push_back(Ideal::unit(base_.ring()));
    powers_.push_back(base_);
  }

  const Ideal& base() const noexcept { return base_; }
  const RingPtr& ring() const noexcept { return base_.ring(); }
  std::size_t dimension() const noexcept { return base_.ring()->dimension(); }

  Ideal power(unsigned n) const {
    std::lock_guard lock(mu_);
    while (powers_.size() <= n) powers_.push_back(ideal_product(powers_.back(), base_));
    return powers_[n];
  }

  /// λ(R/I^n); zero for n = 0.
  std::size_t colength(unsigned n) const {
    if (n == 0) return 0;
    return hk::colength(power(n));
  }

 private:
  Ideal base_;
  mutable std::mutex mu_;
  mutable std::vector<Ideal> powers_;
};

using LadderPtr = std::shared_ptr<const PowerLadder>;

inline LadderPtr make_ladder(const Ideal& I) { return std::make_shared<const PowerLadder>(I); }

}  // namespace hk
