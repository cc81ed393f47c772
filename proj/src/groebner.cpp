#include "polylevel/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

namespace polylevel {

namespace {

const Polynomial* find_reducer(const Monomial& m, const std::vector<Polynomial>& g) {
  for (const Polynomial& h : g) {
    if (!h.is_zero() && h.leading_monomial().divides(m)) return &h;
  }
  return nullptr;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g, const PrimeField& field) {
  Polynomial p = f;
  // Terms of p before `pos` are irreducible and final.
  std::size_t pos = 0;
  while (pos < p.size()) {
    const Term lt = p.terms()[pos];
    const Polynomial* h = find_reducer(lt.mono, g);
    if (!h) {
      ++pos;
      continue;
    }
    const std::uint32_t c = field.mul(lt.coeff, field.inv(h->leading_coeff()));
    std::vector<Term> tail(p.terms().begin() + static_cast<std::ptrdiff_t>(pos), p.terms().end());
    Polynomial reduced = sub_mul(Polynomial::from_sorted(std::move(tail)), c, lt.mono / h->leading_monomial(), *h, field);
    std::vector<Term> merged(p.terms().begin(), p.terms().begin() + static_cast<std::ptrdiff_t>(pos));
    merged.insert(merged.end(), reduced.terms().begin(), reduced.terms().end());
    p = Polynomial::from_sorted(std::move(merged));
  }
  return p;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const PrimeField& field) {
  const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  const Polynomial left = mul_term(f, l / f.leading_monomial(), field.inv(f.leading_coeff()), field);
  return sub_mul(left, field.inv(g.leading_coeff()), l / g.leading_monomial(), g, field);
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g, const PrimeField& field) {
  std::vector<Polynomial> monic;
  for (auto& p : g) {
    if (!p.is_zero()) monic.push_back(make_monic(p, field));
  }
  std::stable_sort(monic.begin(), monic.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.leading_monomial() < b.leading_monomial(); });
  std::vector<Polynomial> minimal;
  for (auto& p : monic) {
    if (!find_reducer(p.leading_monomial(), minimal)) minimal.push_back(std::move(p));
  }
  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    Polynomial tail = Polynomial::from_sorted({minimal[i].terms().begin() + 1, minimal[i].terms().end()});
    Polynomial reduced = normal_form(tail, others, field);
    std::vector<Term> terms{minimal[i].terms().front()};
    terms.insert(terms.end(), reduced.terms().begin(), reduced.terms().end());
    out.push_back(Polynomial::from_sorted(std::move(terms)));
  }
  return out;
}

namespace {

// Autoreduction of an arbitrary generating set: no leading monomial divides a
// term of another element. Unlike reduce_basis this is valid before the set
// is a Groebner basis.
std::vector<Polynomial> interreduce(const std::vector<Polynomial>& generators, const PrimeField& field) {
  std::vector<Polynomial> g;
  std::vector<Polynomial> todo(generators.begin(), generators.end());
  while (!todo.empty()) {
    Polynomial f = std::move(todo.back());
    todo.pop_back();
    Polynomial h = normal_form(f, g, field);
    if (h.is_zero()) continue;
    h = make_monic(h, field);
    const Monomial lm = h.leading_monomial();
    std::vector<Polynomial> keep;
    for (auto& q : g) {
      if (lm.divides(q.leading_monomial())) {
        todo.push_back(std::move(q));
      } else {
        keep.push_back(std::move(q));
      }
    }
    keep.push_back(std::move(h));
    g = std::move(keep);
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (j != i) others.push_back(g[j]);
    }
    Polynomial tail = Polynomial::from_sorted({g[i].terms().begin() + 1, g[i].terms().end()});
    Polynomial reduced = normal_form(tail, others, field);
    std::vector<Term> terms{g[i].terms().front()};
    terms.insert(terms.end(), reduced.terms().begin(), reduced.terms().end());
    g[i] = Polynomial::from_sorted(std::move(terms));
  }
  std::sort(g.begin(), g.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.leading_monomial() < b.leading_monomial(); });
  return g;
}

}  // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators, std::size_t n, const PrimeField& field,
                                   BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  const bool homogeneous = std::all_of(generators.begin(), generators.end(),
                                       [](const Polynomial& p) { return p.is_homogeneous(); });

  std::vector<Polynomial> g = interreduce(generators, field);
  if (!g.empty() && g.front().leading_monomial().degree() == 0) return {Polynomial::from_sorted({Term{Monomial{}, 1}})};

  using Pair = std::tuple<Monomial, std::size_t, std::size_t>;
  std::set<Pair> queue;
  std::vector<std::vector<char>> pending;
  auto add_element = [&](Polynomial p) {
    const std::size_t k = g.size();
    g.push_back(std::move(p));
    for (auto& row : pending) row.push_back(0);
    pending.emplace_back(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
      queue.emplace(Monomial::lcm(g[i].leading_monomial(), g[k].leading_monomial()), i, k);
      pending[i][k] = pending[k][i] = 1;
    }
  };
  {
    std::vector<Polynomial> initial = std::move(g);
    g.clear();
    for (auto& p : initial) add_element(std::move(p));
  }

  auto chain_skip = [&](std::size_t i, std::size_t j, const Monomial& l) {
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (k == i || k == j) continue;
      if (pending[i][k] || pending[j][k]) continue;
      if (g[k].leading_monomial().divides(l)) return true;
    }
    return false;
  };

  unsigned current_degree = 0;
  while (!queue.empty()) {
    auto [l, i, j] = *queue.begin();
    if (homogeneous && l.degree() != current_degree) {
      current_degree = l.degree();
      std::vector<Monomial> leading;
      for (const auto& p : g) leading.push_back(p.leading_monomial());
      if (!has_standard_monomial_of_degree(leading, n, current_degree)) {
        st.stopped_early = true;
        break;
      }
    }
    queue.erase(queue.begin());
    pending[i][j] = pending[j][i] = 0;
    ++st.pairs_considered;
    if (g[i].leading_monomial().coprime(g[j].leading_monomial())) {
      ++st.product_skips;
      continue;
    }
    if (chain_skip(i, j, l)) {
      ++st.chain_skips;
      continue;
    }
    Polynomial h = normal_form(s_polynomial(g[i], g[j], field), g, field);
    if (h.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    if (h.leading_monomial().degree() == 0) return {Polynomial::from_sorted({Term{Monomial{}, 1}})};
    add_element(make_monic(h, field));
  }
  return reduce_basis(std::move(g), field);
}

bool is_groebner_basis(const std::vector<Polynomial>& g, const PrimeField& field) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!normal_form(s_polynomial(g[i], g[j], field), g, field).is_zero()) return false;
    }
  }
  return true;
}

namespace {

// Depth-first over exponent vectors; a prefix divisible by a leading monomial
// stays divisible, so the branch is cut there.
template <class Emit>
bool walk_standard(const std::vector<Monomial>& leading, std::size_t n, unsigned d, Emit&& emit) {
  Monomial cur;
  auto divisible = [&](const Monomial& m) {
    return std::any_of(leading.begin(), leading.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::function<bool(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned left) -> bool {
    if (left == 0) return emit(cur);
    if (var == n) return false;
    for (unsigned e = left;; --e) {
      cur.set(var, e);
      if (!divisible(cur) && rec(var + 1, left - e)) {
        cur.set(var, 0);
        return true;
      }
      if (e == 0) break;
    }
    cur.set(var, 0);
    return false;
  };
  if (divisible(cur)) return false;
  return rec(0, d);
}

}  // namespace

std::vector<Monomial> standard_monomials_of_degree(const std::vector<Monomial>& leading, std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  walk_standard(leading, n, d, [&](const Monomial& m) {
    out.push_back(m);
    return false;
  });
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool has_standard_monomial_of_degree(const std::vector<Monomial>& leading, std::size_t n, unsigned d) {
  return walk_standard(leading, n, d, [](const Monomial&) { return true; });
}

}  // namespace polylevel
