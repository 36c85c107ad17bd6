#pragma once

#include <cstdint>

namespace heisenhom {

/// An element of GF(p), always stored reduced into [0, p-1].
using Scalar = std::uint32_t;

/// Characteristic of a prime field GF(p). Construction rejects non-primes.
class FieldChar {
 public:
  /// Largest accepted prime; keeps products of two scalars inside 64 bits.
  static constexpr std::uint32_t kMaxPrime = (1u << 31) - 1;

  explicit FieldChar(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  bool is_two() const { return p_ == 2; }

  Scalar reduce(std::int64_t v) const {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const {
    auto s = static_cast<std::uint64_t>(a) + b;
    return static_cast<Scalar>(s >= p_ ? s - p_ : s);
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + (p_ - b); }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Multiplicative inverse of a nonzero element (Fermat).
  Scalar inverse(Scalar a) const;

  friend bool operator==(const FieldChar&, const FieldChar&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t v);

}  // namespace heisenhom
