#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polylevel/field.hpp"
#include "polylevel/monomial.hpp"

namespace polylevel {

struct Term {
  Monomial mono;
  std::uint32_t coeff = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over GF(p); terms strictly decreasing, no zero
/// coefficients.
class Polynomial {
 public:
  Polynomial() = default;

  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms, const PrimeField& f);
  /// Takes terms that are already strictly decreasing with non-zero
  /// coefficients.
  static Polynomial from_sorted(std::vector<Term> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  std::uint32_t leading_coeff() const { return terms_.front().coeff; }
  unsigned degree() const;
  bool is_homogeneous() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b, const PrimeField& f);
Polynomial sub(const Polynomial& a, const Polynomial& b, const PrimeField& f);
Polynomial scale(const Polynomial& a, std::uint32_t c, const PrimeField& f);
Polynomial mul_term(const Polynomial& a, const Monomial& m, std::uint32_t c, const PrimeField& f);
Polynomial mul(const Polynomial& a, const Polynomial& b, const PrimeField& f);
Polynomial make_monic(const Polynomial& a, const PrimeField& f);

/// a - c * m * b, in one merge.
Polynomial sub_mul(const Polynomial& a, std::uint32_t c, const Monomial& m, const Polynomial& b, const PrimeField& f);

/// Coefficients printed in the symmetric range, e.g. "x1*x2 - x0*x3".
std::string to_string(const Polynomial& p, const PrimeField& f, const std::vector<std::string>& names = {});

}  // namespace polylevel
