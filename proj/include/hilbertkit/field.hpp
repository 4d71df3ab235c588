#pragma once

#include <cstdint>

#include "hilbertkit/error.hpp"

namespace hk {

using Coeff = std::uint32_t;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Arithmetic in Z/pZ with residues stored in a machine word.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultCharacteristic = 32003;
  static constexpr std::uint32_t kMaxCharacteristic = (1u << 31) - 1;

  explicit PrimeField(std::uint32_t p = kDefaultCharacteristic) : p_(p) {
    if (p > kMaxCharacteristic || !is_prime(p))
      throw precondition_error("characteristic " + std::to_string(p) + " is not a supported prime");
  }

  std::uint32_t characteristic() const noexcept { return p_; }

  Coeff reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }

  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }

  Coeff pow(Coeff a, std::uint64_t e) const noexcept {
    Coeff r = 1 % p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Coeff inv(Coeff a) const {
    if (a == 0) throw precondition_error("inverse of zero");
    return pow(a, p_ - 2);
  }

  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t signed_value(Coeff a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace hk
