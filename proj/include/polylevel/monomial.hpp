#pragma once

// Dense monomials with exponents packed one per byte, compared in graded
// reverse lexicographic order with variable 0 the largest.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace polylevel {

inline constexpr std::size_t kMaxVars = 48;
inline constexpr unsigned kMaxExponent = 127;

class Monomial {
 public:
  static constexpr std::size_t kWords = kMaxVars / 8;

  Monomial() = default;
  static Monomial variable(std::size_t i) {
    Monomial m;
    m.set(i, 1);
    return m;
  }
  static Monomial from_exponents(const std::vector<unsigned>& e);

  unsigned degree() const noexcept { return deg_; }
  unsigned operator[](std::size_t i) const noexcept {
    return static_cast<unsigned>((w_[i >> 3] >> ((i & 7) * 8)) & 0xff);
  }
  void set(std::size_t i, unsigned e) noexcept {
    const unsigned old = (*this)[i];
    const unsigned shift = (i & 7) * 8;
    w_[i >> 3] = (w_[i >> 3] & ~(std::uint64_t{0xff} << shift)) | (std::uint64_t{e} << shift);
    deg_ = static_cast<std::uint16_t>(deg_ - old + e);
  }

  /// Caller keeps every exponent of the product at most kMaxExponent.
  Monomial operator*(const Monomial& o) const noexcept {
    Monomial r;
    for (std::size_t k = 0; k < kWords; ++k) r.w_[k] = w_[k] + o.w_[k];
    r.deg_ = static_cast<std::uint16_t>(deg_ + o.deg_);
    return r;
  }
  /// Requires o | *this.
  Monomial operator/(const Monomial& o) const noexcept {
    Monomial r;
    for (std::size_t k = 0; k < kWords; ++k) r.w_[k] = w_[k] - o.w_[k];
    r.deg_ = static_cast<std::uint16_t>(deg_ - o.deg_);
    return r;
  }

  /// *this divides o.
  bool divides(const Monomial& o) const noexcept {
    for (std::size_t k = 0; k < kWords; ++k) {
      if ((((o.w_[k] | kHigh) - w_[k]) & kHigh) != kHigh) return false;
    }
    return true;
  }

  bool coprime(const Monomial& o) const noexcept {
    for (std::size_t k = 0; k < kWords; ++k) {
      if (nonzero_bytes(w_[k]) & nonzero_bytes(o.w_[k])) return false;
    }
    return true;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    unsigned deg = 0;
    for (std::size_t k = 0; k < kWords; ++k) {
      const std::uint64_t ge = (((a.w_[k] | kHigh) - b.w_[k]) & kHigh) >> 7;
      const std::uint64_t mask = ge * 0xff;
      r.w_[k] = (a.w_[k] & mask) | (b.w_[k] & ~mask);
      deg += byte_sum(r.w_[k]);
    }
    r.deg_ = static_cast<std::uint16_t>(deg);
    return r;
  }

  bool is_squarefree() const noexcept {
    for (std::uint64_t w : w_) {
      if (w & ~std::uint64_t{0x0101010101010101}) return false;
    }
    return true;
  }

  /// Graded reverse lexicographic comparison.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (a.deg_ != b.deg_) return a.deg_ <=> b.deg_;
    for (std::size_t k = kWords; k-- > 0;) {
      if (a.w_[k] != b.w_[k]) return a.w_[k] < b.w_[k] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.w_ == b.w_; }

  std::size_t hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : w_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return static_cast<std::size_t>(h);
  }

  /// "x0^2*x3", or "1". Names default to x<i>.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  static constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
  static constexpr std::uint64_t kLow7 = 0x7f7f7f7f7f7f7f7fULL;

  static std::uint64_t nonzero_bytes(std::uint64_t w) noexcept { return (((w & kLow7) + kLow7) | w) & kHigh; }
  static unsigned byte_sum(std::uint64_t w) noexcept {
    unsigned s = 0;
    for (; w; w >>= 8) s += static_cast<unsigned>(w & 0xff);
    return s;
  }

  std::array<std::uint64_t, kWords> w_{};
  std::uint16_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// All monomials of the given degree in n variables, in decreasing order.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned degree);

}  // namespace polylevel
