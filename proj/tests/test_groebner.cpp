#include <map>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "polylevel/error.hpp"
#include "polylevel/groebner.hpp"

using namespace polylevel;

namespace {

const PrimeField F(32003);

Monomial mono(std::vector<unsigned> e) { return Monomial::from_exponents(e); }

Polynomial poly(std::vector<std::pair<std::int64_t, std::vector<unsigned>>> terms) {
  std::vector<Term> t;
  for (auto& [c, e] : terms) t.push_back(Term{mono(e), F.from_int(c)});
  return Polynomial::from_terms(std::move(t), F);
}

// Reference grevlex on exponent vectors.
int grevlex_cmp(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<unsigned> random_exps(std::mt19937_64& rng, std::size_t n, unsigned max_e) {
  std::vector<unsigned> e(n);
  for (auto& x : e) x = static_cast<unsigned>(rng() % (max_e + 1));
  return e;
}

Polynomial random_homogeneous(std::mt19937_64& rng, std::size_t n, unsigned d, std::size_t terms) {
  const auto mons = monomials_of_degree(n, d);
  std::vector<Term> t;
  for (std::size_t k = 0; k < terms; ++k) {
    t.push_back(Term{mons[rng() % mons.size()], static_cast<std::uint32_t>(1 + rng() % (F.characteristic() - 1))});
  }
  return Polynomial::from_terms(std::move(t), F);
}

oracle::Sparse to_sparse(const Polynomial& p, std::size_t n) {
  oracle::Sparse s;
  for (const Term& t : p.terms()) {
    oracle::Exps e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<int>(t.mono[i]);
    s[e] = t.coeff;
  }
  return s;
}

std::vector<std::uint64_t> hilbert_from_basis(const std::vector<Polynomial>& g, std::size_t n, unsigned max_d) {
  std::vector<Monomial> lead;
  for (const auto& p : g) lead.push_back(p.leading_monomial());
  std::vector<std::uint64_t> h;
  for (unsigned d = 0; d <= max_d; ++d) h.push_back(standard_monomials_of_degree(lead, n, d).size());
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

}  // namespace

TEST(Field, Arithmetic) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(32003));
  EXPECT_TRUE(is_prime(2147483647));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(32001));
  EXPECT_THROW(PrimeField(4), Error);
  EXPECT_THROW(PrimeField(0), Error);
  const PrimeField f(7);
  EXPECT_EQ(f.add(5, 4), 2u);
  EXPECT_EQ(f.sub(2, 5), 4u);
  EXPECT_EQ(f.mul(3, 5), 1u);
  EXPECT_EQ(f.inv(3), 5u);
  EXPECT_EQ(f.pow(3, 6), 1u);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_EQ(f.to_signed(6), -1);
  for (std::uint32_t a = 1; a < 32003; a += 97) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
}

TEST(Monomial, GrevlexExamples) {
  EXPECT_GT(Monomial::variable(0), Monomial::variable(1));
  EXPECT_GT(mono({0, 2, 0}), mono({1, 0, 1}));
  EXPECT_GT(mono({1, 1, 0}), mono({0, 0, 2}));
  EXPECT_GT(mono({0, 0, 2}), mono({1, 0, 0}));
  EXPECT_EQ(mono({1, 2}).degree(), 3u);
  EXPECT_EQ(mono({1, 0, 2}).to_string(), "x0*x2^2");
  EXPECT_EQ(Monomial{}.to_string(), "1");
}

TEST(Monomial, MatchesReferenceOnRandomPairs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20000; ++trial) {
    const std::size_t n = 1 + rng() % kMaxVars;
    const auto ea = random_exps(rng, n, 3);
    const auto eb = random_exps(rng, n, 3);
    const Monomial a = mono(ea), b = mono(eb);
    const int c = grevlex_cmp(ea, eb);
    EXPECT_EQ(a < b, c < 0);
    EXPECT_EQ(a == b, c == 0);
    bool div = true, cop = true, sqf = true;
    std::vector<unsigned> l(n), prod(n);
    for (std::size_t i = 0; i < n; ++i) {
      div = div && ea[i] <= eb[i];
      cop = cop && (ea[i] == 0 || eb[i] == 0);
      sqf = sqf && ea[i] <= 1;
      l[i] = std::max(ea[i], eb[i]);
      prod[i] = ea[i] + eb[i];
    }
    EXPECT_EQ(a.divides(b), div);
    EXPECT_EQ(a.coprime(b), cop);
    EXPECT_EQ(a.is_squarefree(), sqf);
    EXPECT_EQ(Monomial::lcm(a, b), mono(l));
    EXPECT_EQ(Monomial::lcm(a, b).degree(), std::accumulate(l.begin(), l.end(), 0u));
    EXPECT_EQ(a * b, mono(prod));
    EXPECT_EQ((a * b) / b, a);
  }
}

TEST(Monomial, DegreeEnumeration) {
  const auto m = monomials_of_degree(4, 3);
  EXPECT_EQ(m.size(), 20u);
  for (std::size_t k = 1; k < m.size(); ++k) EXPECT_GT(m[k - 1], m[k]);
  EXPECT_EQ(monomials_of_degree(5, 0).size(), 1u);
}

TEST(Polynomial, Normalization) {
  const auto p = poly({{1, {1, 0}}, {3, {0, 1}}, {-1, {1, 0}}, {2, {0, 1}}});
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.terms()[0].coeff, 5u);
  EXPECT_TRUE(poly({{2, {1}}, {-2, {1}}}).is_zero());
  EXPECT_TRUE(poly({{1, {2, 0}}, {1, {1, 1}}}).is_homogeneous());
  EXPECT_FALSE(poly({{1, {2, 0}}, {1, {1, 0}}}).is_homogeneous());
  EXPECT_EQ(to_string(poly({{1, {1, 0, 0, 1}}, {-1, {0, 1, 1, 0}}}), F), "-x1*x2 + x0*x3");
}

TEST(Polynomial, ArithmeticMatchesReference) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    auto make = [&] {
      std::vector<Term> t;
      const std::size_t k = rng() % 6;
      for (std::size_t i = 0; i < k; ++i) {
        t.push_back(Term{mono(random_exps(rng, n, 2)), static_cast<std::uint32_t>(rng() % 5)});
      }
      return Polynomial::from_terms(t, F);
    };
    const Polynomial a = make(), b = make();
    std::map<std::vector<unsigned>, std::uint64_t> ref_sum, ref_prod;
    auto exps = [&](const Monomial& m) {
      std::vector<unsigned> e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = m[i];
      return e;
    };
    for (const auto& t : a.terms()) ref_sum[exps(t.mono)] += t.coeff;
    for (const auto& t : b.terms()) ref_sum[exps(t.mono)] += t.coeff;
    for (const auto& s : a.terms()) {
      for (const auto& t : b.terms()) ref_prod[exps(s.mono * t.mono)] += std::uint64_t{s.coeff} * t.coeff;
    }
    auto from_ref = [&](const std::map<std::vector<unsigned>, std::uint64_t>& r) {
      std::vector<Term> t;
      for (auto& [e, c] : r) t.push_back(Term{mono(e), static_cast<std::uint32_t>(c % F.characteristic())});
      return Polynomial::from_terms(t, F);
    };
    EXPECT_EQ(add(a, b, F), from_ref(ref_sum));
    EXPECT_EQ(mul(a, b, F), from_ref(ref_prod));
    EXPECT_TRUE(sub(a, a, F).is_zero());
    const Monomial m = mono(random_exps(rng, n, 1));
    EXPECT_EQ(sub_mul(a, 3, m, b, F), sub(a, mul_term(b, m, 3, F), F));
    if (!a.is_zero()) {
      EXPECT_EQ(make_monic(a, F).leading_coeff(), 1u);
    }
  }
}

TEST(Groebner, SPolynomial) {
  const auto f = poly({{1, {2, 0, 0}}});
  const auto g = poly({{1, {1, 1, 0}}, {-1, {0, 0, 2}}});
  EXPECT_EQ(s_polynomial(f, g, F), poly({{1, {1, 0, 2}}}));
}

TEST(Groebner, HandComputedBasis) {
  // (y1^2, y1 y2 - y3^2): S-pair gives y1 y3^2, then y3^4.
  const auto basis = buchberger({poly({{1, {2, 0, 0}}}), poly({{1, {1, 1, 0}}, {-1, {0, 0, 2}}})}, 3, F);
  const std::vector<Polynomial> expected{poly({{1, {1, 1, 0}}, {-1, {0, 0, 2}}}), poly({{1, {2, 0, 0}}}),
                                         poly({{1, {1, 0, 2}}}), poly({{1, {0, 0, 4}}})};
  EXPECT_EQ(basis, expected);
}

TEST(Groebner, GenericQuadricsInThreeVariables) {
  std::mt19937_64 rng(3);
  std::vector<Polynomial> gens;
  for (int k = 0; k < 5; ++k) gens.push_back(random_homogeneous(rng, 3, 2, 6));
  const auto g = buchberger(gens, 3, F);
  EXPECT_EQ(hilbert_from_basis(g, 3, 6), (std::vector<std::uint64_t>{1, 3, 1}));
}

TEST(Groebner, UnitIdealAndEmptyInput) {
  const auto unit = buchberger({poly({{1, {1, 0}}, {-1, {0, 0}}}), poly({{1, {0, 1}}}), poly({{1, {1, 1}}, {-2, {0, 0}}})}, 2, F);
  ASSERT_EQ(unit.size(), 1u);
  EXPECT_EQ(unit[0].leading_monomial().degree(), 0u);
  EXPECT_TRUE(buchberger({}, 2, F).empty());
}

TEST(Groebner, NonHomogeneousIsGroebner) {
  const auto g = buchberger({poly({{1, {2, 0}}, {-1, {0, 0}}}), poly({{1, {1, 1}}, {-1, {0, 0}}})}, 2, F);
  EXPECT_TRUE(is_groebner_basis(g, F));
  // x^2 - 1, xy - 1 give y - x.
  EXPECT_EQ(normal_form(poly({{1, {0, 1}}, {-1, {1, 0}}}), g, F), Polynomial{});
}

TEST(Groebner, RandomHomogeneousIdealsAgainstLinearAlgebra) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    std::vector<Polynomial> gens;
    const std::size_t k = 1 + rng() % (n + 2);
    for (std::size_t i = 0; i < k; ++i) gens.push_back(random_homogeneous(rng, n, 2, 1 + rng() % 4));
    BuchbergerStats stats;
    const auto g = buchberger(gens, n, F, &stats);
    EXPECT_TRUE(is_groebner_basis(g, F));
    for (const auto& f : gens) EXPECT_TRUE(normal_form(f, g, F).is_zero());
    // Reduced: monic, and no term divisible by another leading monomial.
    for (std::size_t i = 0; i < g.size(); ++i) {
      EXPECT_EQ(g[i].leading_coeff(), 1u);
      if (i > 0) {
        EXPECT_LT(g[i - 1].leading_monomial(), g[i].leading_monomial());
      }
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (i == j) continue;
        for (const auto& t : g[i].terms()) EXPECT_FALSE(g[j].leading_monomial().divides(t.mono));
      }
    }
    std::vector<oracle::Sparse> sparse;
    for (const auto& f : gens) {
      if (!f.is_zero()) sparse.push_back(to_sparse(f, n));
    }
    const unsigned max_d = 6;
    auto expected = oracle::quotient(sparse, n, F.characteristic(), static_cast<int>(max_d)).hilbert;
    auto got = hilbert_from_basis(g, n, max_d);
    // Compare degrees 0..max_d exactly; trailing zeros were stripped.
    expected.resize(max_d + 1, 0);
    got.resize(max_d + 1, 0);
    EXPECT_EQ(got, expected) << "trial " << trial;
  }
}

TEST(Groebner, ReduceBasisOfAGroebnerBasis) {
  const auto a = poly({{1, {1, 1, 0}}, {-1, {0, 0, 2}}});
  const auto b = poly({{2, {2, 0, 0}}});
  const auto c = poly({{1, {1, 0, 2}}, {1, {2, 0, 0}}});
  const auto d = poly({{1, {0, 0, 4}}});
  const auto r = reduce_basis({a, b, c, d, mul_term(b, mono({0, 1, 0}), 1, F)}, F);
  EXPECT_EQ(r, (std::vector<Polynomial>{a, make_monic(b, F), poly({{1, {1, 0, 2}}}), d}));
}

TEST(StandardMonomials, MatchBruteForce) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<Monomial> lead;
    for (std::size_t k = rng() % 5; k-- > 0;) lead.push_back(mono(random_exps(rng, n, 2)));
    for (unsigned d = 0; d <= 4; ++d) {
      std::vector<Monomial> expected;
      for (const auto& m : monomials_of_degree(n, d)) {
        if (std::none_of(lead.begin(), lead.end(), [&](const Monomial& l) { return l.divides(m); })) {
          expected.push_back(m);
        }
      }
      EXPECT_EQ(standard_monomials_of_degree(lead, n, d), expected);
      EXPECT_EQ(has_standard_monomial_of_degree(lead, n, d), !expected.empty());
    }
  }
}
