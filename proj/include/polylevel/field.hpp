#pragma once

#include <cstdint>

namespace polylevel {

inline constexpr std::uint32_t kDefaultPrime = 32003;

bool is_prime(std::uint64_t n);

/// Arithmetic in GF(p) for a prime p < 2^31. Elements are canonical
/// representatives in [0, p).
class PrimeField {
 public:
  /// Throws Error if p is not a prime below 2^31.
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t characteristic() const noexcept { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;

  /// Reduces a signed integer into [0, p).
  std::uint32_t from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  /// Maps a residue to (-p/2, p/2].
  std::int64_t to_signed(std::uint32_t a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

 private:
  std::uint32_t p_;
};

}  // namespace polylevel
