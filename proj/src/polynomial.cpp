#include "polylevel/polynomial.hpp"

#include <algorithm>

namespace polylevel {

Polynomial Polynomial::from_terms(std::vector<Term> terms, const PrimeField& f) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term t : terms) {
    t.coeff %= f.characteristic();
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = f.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return from_sorted(std::move(out));
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
}

Polynomial sub_mul(const Polynomial& a, std::uint32_t c, const Monomial& m, const Polynomial& b, const PrimeField& f) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  const std::uint32_t neg_c = f.neg(c);
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size()) {
      out.push_back(x[i++]);
      continue;
    }
    const Monomial my = y[j].mono * m;
    if (i == x.size() || my > x[i].mono) {
      out.push_back(Term{my, f.mul(neg_c, y[j].coeff)});
      ++j;
    } else if (x[i].mono > my) {
      out.push_back(x[i++]);
    } else {
      const std::uint32_t v = f.add(x[i].coeff, f.mul(neg_c, y[j].coeff));
      if (v != 0) out.push_back(Term{my, v});
      ++i;
      ++j;
    }
  }
  return Polynomial::from_sorted(std::move(out));
}

Polynomial add(const Polynomial& a, const Polynomial& b, const PrimeField& f) {
  return sub_mul(a, f.neg(1), Monomial{}, b, f);
}

Polynomial sub(const Polynomial& a, const Polynomial& b, const PrimeField& f) { return sub_mul(a, 1, Monomial{}, b, f); }

Polynomial mul_term(const Polynomial& a, const Monomial& m, std::uint32_t c, const PrimeField& f) {
  c %= f.characteristic();
  if (c == 0) return {};
  std::vector<Term> out;
  out.reserve(a.size());
  for (const Term& t : a.terms()) out.push_back(Term{t.mono * m, f.mul(t.coeff, c)});
  return Polynomial::from_sorted(std::move(out));
}

Polynomial scale(const Polynomial& a, std::uint32_t c, const PrimeField& f) { return mul_term(a, Monomial{}, c, f); }

Polynomial mul(const Polynomial& a, const Polynomial& b, const PrimeField& f) {
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const Term& s : a.terms()) {
    for (const Term& t : b.terms()) out.push_back(Term{s.mono * t.mono, f.mul(s.coeff, t.coeff)});
  }
  return Polynomial::from_terms(std::move(out), f);
}

Polynomial make_monic(const Polynomial& a, const PrimeField& f) {
  if (a.is_zero() || a.leading_coeff() == 1) return a;
  return scale(a, f.inv(a.leading_coeff()), f);
}

std::string to_string(const Polynomial& p, const PrimeField& f, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    std::int64_t c = f.to_signed(t.coeff);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    const std::int64_t mag = c < 0 ? -c : c;
    const std::string mono = t.mono.to_string(names);
    if (mono == "1") {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace polylevel
