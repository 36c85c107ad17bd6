#include "heisenhom/field.hpp"

#include <string>

#include "heisenhom/errors.hpp"

namespace heisenhom {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint64_t d = 3; d * d <= v; d += 2) {
    if (v % d == 0) return false;
  }
  return true;
}

FieldChar::FieldChar(std::uint32_t p) : p_(p) {
  if (p > kMaxPrime || !is_prime(p)) {
    throw NotPrime("characteristic " + std::to_string(p) + " is not a supported prime");
  }
}

Scalar FieldChar::inverse(Scalar a) const {
  // a^(p-2) mod p
  std::uint64_t result = 1;
  std::uint64_t base = a % p_;
  std::uint32_t e = p_ - 2;
  while (e != 0) {
    if (e & 1u) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Scalar>(result);
}

}  // namespace heisenhom
