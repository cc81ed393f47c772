#include "polylevel/monomial.hpp"

#include <algorithm>
#include <functional>

#include "polylevel/error.hpp"

namespace polylevel {

Monomial Monomial::from_exponents(const std::vector<unsigned>& e) {
  if (e.size() > kMaxVars) throw Error("too many variables for a monomial");
  Monomial m;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > kMaxExponent) throw Error("exponent too large for a monomial");
    m.set(i, e[i]);
  }
  return m;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = (*this)[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned degree) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned left) {
    if (var + 1 == n) {
      cur.set(var, left);
      out.push_back(cur);
      cur.set(var, 0);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur.set(var, e);
      rec(var + 1, left - e);
    }
    cur.set(var, 0);
  };
  if (n == 0) {
    if (degree == 0) out.push_back(cur);
    return out;
  }
  rec(0, degree);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace polylevel
