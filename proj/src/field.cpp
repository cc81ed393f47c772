#include "polylevel/field.hpp"

#include <string>

#include "polylevel/error.hpp"

namespace polylevel {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not a prime below 2^31");
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t r = 1 % p_;
  std::uint32_t b = a % p_;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw Error("division by zero in GF(" + std::to_string(p_) + ")");
  return pow(a, p_ - 2);
}

}  // namespace polylevel
