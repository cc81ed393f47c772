#pragma once

// Buchberger's algorithm over GF(p) in graded reverse lexicographic order.

#include <cstddef>
#include <vector>

#include "polylevel/polynomial.hpp"

namespace polylevel {

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t product_skips = 0;
  std::size_t chain_skips = 0;
  std::size_t zero_reductions = 0;
  bool stopped_early = false;  // homogeneous input saturated all higher degrees
};

/// Full normal form of f modulo g (every term reduced).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g, const PrimeField& field);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const PrimeField& field);

/// Reduced Groebner basis: monic, interreduced, sorted by increasing leading
/// monomial. Pairs are processed by increasing lcm (normal strategy), with
/// the product and chain criteria. n is the number of variables in use.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators, std::size_t n, const PrimeField& field,
                                   BuchbergerStats* stats = nullptr);

/// Every S-pair of g reduces to zero modulo g.
bool is_groebner_basis(const std::vector<Polynomial>& g, const PrimeField& field);

/// Minimal, interreduced, monic basis sorted by leading monomial.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g, const PrimeField& field);

/// Standard monomials of degree d with respect to the given leading
/// monomials, in decreasing order.
std::vector<Monomial> standard_monomials_of_degree(const std::vector<Monomial>& leading, std::size_t n, unsigned d);

/// True when some degree-d monomial in n variables is divisible by none of
/// the leading monomials.
bool has_standard_monomial_of_degree(const std::vector<Monomial>& leading, std::size_t n, unsigned d);

}  // namespace polylevel
