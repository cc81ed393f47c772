#include "polylevel/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "polylevel/error.hpp"

namespace polylevel {

namespace {

std::array<Point, 4> corners(Cell c) {
  return {Point{c.x, c.y}, Point{c.x + 1, c.y}, Point{c.x, c.y + 1}, Point{c.x + 1, c.y + 1}};
}

bool cells_touch(Cell a, Cell b) { return std::abs(a.x - b.x) <= 1 && std::abs(a.y - b.y) <= 1; }

class VariableIndex {
 public:
  explicit VariableIndex(const std::vector<Point>& vars) {
    if (vars.size() > kMaxVars) throw Error("too many variables: " + std::to_string(vars.size()));
    for (std::size_t i = 0; i < vars.size(); ++i) index_.emplace(vars[i], i);
  }
  std::size_t operator()(Point p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw Error("vertex " + to_string(p) + " has no variable");
    return it->second;
  }

 private:
  std::map<Point, std::size_t> index_;
};

Polynomial binomial(const Monomial& plus, const Monomial& minus, const PrimeField& f) {
  return Polynomial::from_terms({Term{plus, 1}, Term{minus, f.neg(1)}}, f);
}

Monomial product(std::size_t i, std::size_t j) { return Monomial::variable(i) * Monomial::variable(j); }

std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& g) {
  std::vector<Monomial> out;
  out.reserve(g.size());
  for (const auto& p : g) out.push_back(p.leading_monomial());
  return out;
}

std::vector<std::vector<Monomial>> standard_by_degree(const std::vector<Monomial>& leading, std::size_t n,
                                                      unsigned max_degree, bool& zero_dimensional) {
  std::vector<std::vector<Monomial>> out;
  zero_dimensional = false;
  for (unsigned d = 0; d <= max_degree + 1; ++d) {
    auto s = standard_monomials_of_degree(leading, n, d);
    if (s.empty()) {
      zero_dimensional = true;
      break;
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::size_t> positions_of(const PathStructure& ps) {
  std::vector<std::size_t> pos(ps.polyomino.rank());
  for (std::size_t k = 0; k < ps.cells.size(); ++k) pos[ps.cells[k]] = k;
  return pos;
}

Monomial face_monomial(const RookConfig& face, const std::vector<std::size_t>& pos) {
  Monomial m;
  for (std::size_t c : face) m.set(pos[c], 1);
  return m;
}

// Kernel of the linear map whose images of the basis vectors are `rows`.
std::vector<std::vector<std::uint32_t>> left_kernel(std::vector<std::vector<std::uint32_t>> rows,
                                                     const PrimeField& f) {
  const std::size_t m = rows.size();
  std::vector<std::vector<std::uint32_t>> track(m, std::vector<std::uint32_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i) track[i][i] = 1;
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::vector<std::uint32_t>> kernel;
  for (std::size_t r = 0; r < m; ++r) {
    auto& row = rows[r];
    auto& tr = track[r];
    for (std::size_t k = 0; k < pivot_rows.size(); ++k) {
      const std::uint32_t c = row[pivot_cols[k]];
      if (c == 0) continue;
      const auto& prow = rows[pivot_rows[k]];
      const auto& ptr = track[pivot_rows[k]];
      const std::uint32_t nc = f.neg(c);
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (prow[j]) row[j] = f.add(row[j], f.mul(nc, prow[j]));
      }
      for (std::size_t j = 0; j < m; ++j) {
        if (ptr[j]) tr[j] = f.add(tr[j], f.mul(nc, ptr[j]));
      }
    }
    auto it = std::find_if(row.begin(), row.end(), [](std::uint32_t v) { return v != 0; });
    if (it == row.end()) {
      kernel.push_back(tr);
      continue;
    }
    const std::uint32_t inv = f.inv(*it);
    for (auto& v : row) v = f.mul(v, inv);
    for (auto& v : tr) v = f.mul(v, inv);
    pivot_rows.push_back(r);
    pivot_cols.push_back(static_cast<std::size_t>(it - row.begin()));
  }
  return kernel;
}

// Leading positions (smallest index first) of an echelon form of `vecs`.
std::vector<std::size_t> echelon_leads(std::vector<std::vector<std::uint32_t>> vecs, const PrimeField& f) {
  std::vector<std::size_t> leads;
  std::vector<std::vector<std::uint32_t>> basis;
  for (auto& v : vecs) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const std::uint32_t c = v[leads[k]];
      if (c == 0) continue;
      const std::uint32_t nc = f.neg(c);
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (basis[k][j]) v[j] = f.add(v[j], f.mul(nc, basis[k][j]));
      }
    }
    auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
    if (it == v.end()) continue;
    const std::uint32_t inv = f.inv(*it);
    for (auto& x : v) x = f.mul(x, inv);
    leads.push_back(static_cast<std::size_t>(it - v.begin()));
    basis.push_back(std::move(v));
  }
  std::sort(leads.begin(), leads.end());
  return leads;
}

void finish_flags(SocleReport& s) {
  std::size_t nonzero = 0;
  for (std::size_t d : s.dims) nonzero += d > 0;
  s.level = nonzero == 1;
  s.gorenstein = s.total() == 1;
  s.max_degree = static_cast<unsigned>(s.dims.size()) - 1;
  s.pseudo_gorenstein = !s.dims.empty() && s.dims.back() == 1;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// --- labelling ---------------------------------------------------------------------

std::vector<Point> VertexLabelling::variable_order() const {
  std::vector<Point> out;
  for (std::size_t i = 0; i < length(); ++i) {
    out.push_back(b_labels[i]);
    out.push_back(a_labels[i]);
  }
  out.push_back(b);
  out.push_back(a);
  return out;
}

std::vector<std::string> VertexLabelling::variable_names() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < length(); ++i) {
    out.push_back("b" + std::to_string(i + 1));
    out.push_back("a" + std::to_string(i + 1));
  }
  out.push_back("b");
  out.push_back("a");
  return out;
}

VertexLabelling label_path(const PathStructure& ps) {
  const Polyomino& p = ps.polyomino;
  const std::size_t l = ps.length();
  if (l < 2) throw NotAPath();
  const auto pos = positions_of(ps);
  auto cell_at = [&](std::size_t k) { return p[ps.cells[k]]; };
  auto in_prefix = [&](Cell c, std::size_t last) {
    auto idx = p.index_of(c);
    return idx && pos[*idx] <= last;
  };

  VertexLabelling lab;
  lab.a_labels.resize(l);
  lab.b_labels.resize(l);

  const auto c1 = corners(cell_at(0));
  const auto c2 = corners(cell_at(1));
  std::vector<Point> leaf;
  for (Point v : c1) {
    if (std::find(c2.begin(), c2.end(), v) == c2.end()) leaf.push_back(v);
  }
  if (leaf.size() != 2) throw NotAPath();
  std::sort(leaf.begin(), leaf.end());
  lab.a = leaf[0];
  lab.a_labels[0] = leaf[1];
  const Cell first = cell_at(0);
  const Point a1 = lab.a_labels[0];
  lab.b_labels[0] = Point{2 * first.x + 1 - a1.x, 2 * first.y + 1 - a1.y};
  Point next_a{};
  for (Point v : c1) {
    if (v != lab.a && v != lab.a_labels[0] && v != lab.b_labels[0]) next_a = v;
  }

  std::set<Point> seen(c1.begin(), c1.end());
  for (std::size_t i = 1; i < l; ++i) {
    lab.a_labels[i] = next_a;
    const Point ai = next_a;
    std::vector<Point> fresh;
    for (Point v : corners(cell_at(i))) {
      if (!seen.count(v)) fresh.push_back(v);
    }
    if (fresh.size() != 2) throw NotAPath();
    auto opposite = [&](Point v) {
      if (v.x == ai.x || v.y == ai.y) return false;
      for (int x = std::min(v.x, ai.x); x < std::max(v.x, ai.x); ++x) {
        for (int y = std::min(v.y, ai.y); y < std::max(v.y, ai.y); ++y) {
          if (!in_prefix(Cell{x, y}, i)) return false;
        }
      }
      return true;
    };
    const bool o0 = opposite(fresh[0]);
    const bool o1 = opposite(fresh[1]);
    if (o0 == o1) throw NotAPath();
    lab.b_labels[i] = o0 ? fresh[0] : fresh[1];
    next_a = o0 ? fresh[1] : fresh[0];
    seen.insert(fresh.begin(), fresh.end());
  }
  lab.b = next_a;

  auto all = lab.variable_order();
  std::sort(all.begin(), all.end());
  if (all != p.vertices()) throw NotAPath();
  return lab;
}

// --- ideals ----------------------------------------------------------------------

std::vector<InnerInterval> inner_intervals(const Polyomino& p) {
  std::vector<InnerInterval> out;
  for (const Cell& c : p.cells()) {
    for (int w = 1; p.contains(Cell{c.x + w - 1, c.y}); ++w) {
      for (int h = 1;; ++h) {
        bool row = true;
        for (int x = c.x; x < c.x + w && row; ++x) row = p.contains(Cell{x, c.y + h - 1});
        if (!row) break;
        out.push_back(InnerInterval{Point{c.x, c.y}, Point{c.x + w, c.y + h}});
      }
    }
  }
  return out;
}

std::vector<Polynomial> inner_two_minors(const Polyomino& p, const std::vector<Point>& vars, const PrimeField& field) {
  const VariableIndex idx(vars);
  std::vector<Polynomial> out;
  for (const auto& iv : inner_intervals(p)) {
    const Monomial diag = product(idx(iv.lower), idx(iv.upper));
    const Monomial anti = product(idx(Point{iv.lower.x, iv.upper.y}), idx(Point{iv.upper.x, iv.lower.y}));
    out.push_back(binomial(diag, anti, field));
  }
  return out;
}

std::vector<Polynomial> build_JP(const PathStructure& ps, const VertexLabelling& lab, const PrimeField& field) {
  std::map<Point, std::optional<std::size_t>> image;
  image[lab.a] = std::nullopt;
  image[lab.b] = std::nullopt;
  for (std::size_t i = 0; i < lab.length(); ++i) {
    image[lab.a_labels[i]] = i;
    image[lab.b_labels[i]] = i;
  }
  auto term = [&](Point u, Point v, std::uint32_t c) -> std::optional<Term> {
    auto iu = image.at(u);
    auto iv = image.at(v);
    if (!iu || !iv) return std::nullopt;
    return Term{product(*iu, *iv), c};
  };
  std::vector<Polynomial> out;
  for (const auto& iv : inner_intervals(ps.polyomino)) {
    std::vector<Term> terms;
    if (auto t = term(iv.lower, iv.upper, 1)) terms.push_back(*t);
    if (auto t = term(Point{iv.lower.x, iv.upper.y}, Point{iv.upper.x, iv.lower.y}, field.neg(1))) terms.push_back(*t);
    Polynomial f = Polynomial::from_terms(std::move(terms), field);
    if (f.is_zero()) continue;
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Monomial> same_interval_monomials(const PathStructure& ps) {
  std::vector<Monomial> out;
  for (const auto& [lo, hi] : ps.spans) {
    for (std::size_t i = lo; i <= hi; ++i) {
      for (std::size_t j = i; j <= hi; ++j) out.push_back(product(i, j));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --- path Groebner checks -----------------------------------------------------------

PathGbReport verify_path_gb(const PathStructure& ps, const PrimeField& field,
                            const std::function<void(std::vector<Polynomial>&)>& tamper) {
  const VertexLabelling lab = label_path(ps);
  const auto vars = lab.variable_order();
  const auto names = lab.variable_names();
  std::vector<Polynomial> gens = inner_two_minors(ps.polyomino, vars, field);
  if (tamper) tamper(gens);
  for (auto& g : gens) g = make_monic(g, field);
  const std::size_t l = lab.length();

  PathGbReport report;
  report.generators = gens.size();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      ++report.s_pairs;
      Polynomial r = normal_form(s_polynomial(gens[i], gens[j], field), gens, field);
      if (!r.is_zero()) {
        throw ClaimViolated("S-pair reduction", "S(" + to_string(gens[i], field, names) + ", " +
                                                    to_string(gens[j], field, names) + ") -> " +
                                                    to_string(r, field, names));
      }
    }
  }

  auto sorted = gens;
  std::sort(sorted.begin(), sorted.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.leading_monomial() < b.leading_monomial(); });
  const auto reduced = reduce_basis(gens, field);
  if (reduced != sorted) throw ClaimViolated("reduced basis", "inner 2-minors are not interreduced");
  report.reduced = true;
  const auto computed = buchberger(gens, vars.size(), field);
  if (computed != sorted) throw ClaimViolated("Buchberger agreement", "computed basis differs from the inner 2-minors");
  for (const auto& g : gens) {
    if (g.degree() != 2 || !g.is_homogeneous()) throw ClaimViolated("quadratic basis", to_string(g, field, names));
  }
  report.quadratic = true;

  std::set<Monomial> in2;
  for (const auto& g : gens) in2.insert(g.leading_monomial());
  auto var_b = [](std::size_t i) { return 2 * (i - 1); };  // i is 1-based
  auto var_a = [](std::size_t i) { return 2 * (i - 1) + 1; };
  const std::size_t var_bb = 2 * l;
  auto name = [&](std::size_t v) { return names[v]; };

  for (std::size_t i = 1; i <= l; ++i) {
    for (std::size_t j = i; j <= l; ++j) {
      if (in2.count(product(var_a(i), var_a(j)))) {
        throw ClaimViolated("a_i a_j not initial", name(var_a(i)) + "*" + name(var_a(j)));
      }
    }
  }
  for (std::size_t i = 1; i <= l; ++i) {
    for (std::size_t j = 1; j < i; ++j) {
      if (in2.count(product(var_a(i), var_b(j)))) {
        throw ClaimViolated("a_i b_j initial implies i <= j", name(var_a(i)) + "*" + name(var_b(j)));
      }
    }
  }
  auto turns_at = [&](std::size_t i) {  // 1-based, change of direction at C_i
    if (i <= 1 || i >= l) return false;
    return cells_touch(ps.polyomino[ps.cells[i - 2]], ps.polyomino[ps.cells[i]]);
  };
  for (std::size_t i = 1; i <= l; ++i) {
    for (std::size_t j = i + 1; j <= l; ++j) {
      if (in2.count(product(var_b(i), var_b(j))) && !turns_at(i)) {
        throw ClaimViolated("b_i b_j initial implies a turn at C_i", name(var_b(i)) + "*" + name(var_b(j)));
      }
    }
  }
  for (const auto& g : gens) {
    const Monomial lm = g.leading_monomial();
    const Monomial minus = g.terms().size() > 1 ? g.terms()[1].mono : Monomial{};
    for (std::size_t i = 1; i <= l; ++i) {
      const std::size_t bi = var_b(i);
      if (lm[bi] == 0) continue;
      const Monomial rest = lm / Monomial::variable(bi);
      std::size_t u = 0;
      while (rest[u] == 0) ++u;
      if (!(u < bi || u == var_a(i))) continue;
      const std::size_t next = i < l ? var_a(i + 1) : var_bb;
      if (minus[next] == 0) {
        throw ClaimViolated("a_{i+1} divides the trailing term", to_string(g, field, names));
      }
    }
  }
  return report;
}

PathAlgebraReport check_path_algebra(const PathStructure& ps, const PrimeField& field,
                                     const std::function<void(std::vector<Polynomial>&)>& tamper) {
  PathAlgebraReport report;
  report.gb = verify_path_gb(ps, field, tamper);

  const VertexLabelling lab = label_path(ps);
  std::vector<Polynomial> images = build_JP(ps, lab, field);
  for (auto& g : images) g = make_monic(g, field);
  report.jp_generators = images.size();
  if (!is_groebner_basis(images, field)) throw ClaimViolated("J_P generators form a Groebner basis", "an S-pair does not reduce to 0");

  const auto gb = buchberger(images, ps.length(), field);
  auto lead = leading_monomials(gb);
  std::sort(lead.begin(), lead.end());
  const auto expected = same_interval_monomials(ps);
  if (lead != expected) {
    std::string w;
    for (const auto& m : lead) w += m.to_string() + " ";
    throw ClaimViolated("in(J_P) is the same-interval ideal", "computed generators " + w);
  }

  const auto pos = positions_of(ps);
  std::vector<std::set<Monomial>> faces_by_degree;
  for (const auto& face : rook_faces(ps.polyomino, kRookRankHardLimit)) {
    if (faces_by_degree.size() <= face.size()) faces_by_degree.resize(face.size() + 1);
    faces_by_degree[face.size()].insert(face_monomial(face, pos));
  }
  const ArtinianAlgebra art = path_artinian(ps, field);
  if (art.standard.size() != faces_by_degree.size()) {
    throw ClaimViolated("standard monomials are rook configurations", "top degrees differ");
  }
  for (std::size_t d = 0; d < art.standard.size(); ++d) {
    std::set<Monomial> s(art.standard[d].begin(), art.standard[d].end());
    if (s != faces_by_degree[d]) {
      throw ClaimViolated("standard monomials are rook configurations", "degree " + std::to_string(d) + " differs");
    }
    report.standard_monomials += s.size();
  }

  const std::size_t t = path_rook_number(ps);
  for (const auto& m : monomials_of_degree(ps.length(), static_cast<unsigned>(t + 1))) {
    ++report.power_monomials;
    if (!normal_form(Polynomial::from_sorted({Term{m, 1}}), gb, field).is_zero()) {
      throw ClaimViolated("m^{r+1} in J_P", m.to_string());
    }
  }
  return report;
}

// --- Artinian reduction ---------------------------------------------------------

std::vector<std::uint64_t> ArtinianAlgebra::hilbert_function() const {
  std::vector<std::uint64_t> out;
  for (const auto& s : standard) out.push_back(s.size());
  return out;
}

std::uint64_t ArtinianAlgebra::dimension() const {
  std::uint64_t d = 0;
  for (const auto& s : standard) d += s.size();
  return d;
}

ArtinianAlgebra path_artinian(const PathStructure& ps, const PrimeField& field) {
  const VertexLabelling lab = label_path(ps);
  ArtinianAlgebra a;
  a.num_vars = ps.length();
  a.characteristic = field.characteristic();
  a.basis = buchberger(build_JP(ps, lab, field), a.num_vars, field);
  a.lsop = "path";
  bool zero_dim = false;
  a.standard = standard_by_degree(leading_monomials(a.basis), a.num_vars, static_cast<unsigned>(ps.length()), zero_dim);
  if (!zero_dim) throw ClaimViolated("R/J_P is Artinian", "standard monomials in every degree");
  return a;
}

ArtinianAlgebra artinian_reduction(const Polyomino& p, const AlgebraOptions& options) {
  if (!is_thin(p)) throw NotThin();
  if (!is_simple(p)) throw NotSimple();
  if (p.rank() > options.max_rank) throw RankTooLarge(p.rank(), options.max_rank);
  if (p.rank() > kMaxVars) throw RankTooLarge(p.rank(), kMaxVars);
  const PrimeField field(options.characteristic);

  if (!options.force_random && p.rank() >= 2 && as_path(p)) return path_artinian(path_structure(p), field);

  const auto summary = rook_complex(p, options.max_rank);
  const std::uint64_t expected = std::accumulate(summary.rook_poly.begin(), summary.rook_poly.end(), std::uint64_t{0});
  const auto verts = p.vertices();
  const std::size_t n = p.rank();

  const auto intervals = inner_intervals(p);
  std::uint64_t last_seed = options.seed;
  for (unsigned attempt = 0; attempt <= options.retries; ++attempt) {
    const std::uint64_t seed = mix_seed(options.seed, attempt);
    last_seed = seed;
    std::mt19937_64 rng(seed);
    std::map<Point, Polynomial> form;
    for (std::size_t v = 0; v < verts.size(); ++v) {
      std::vector<Term> terms;
      if (v < n) {
        terms.push_back(Term{Monomial::variable(v), 1});
      } else {
        for (std::size_t j = 0; j < n; ++j) {
          terms.push_back(Term{Monomial::variable(j), static_cast<std::uint32_t>(rng() % field.characteristic())});
        }
      }
      form.emplace(verts[v], Polynomial::from_terms(std::move(terms), field));
    }
    std::vector<Polynomial> gens;
    for (const auto& iv : intervals) {
      Polynomial diag = mul(form.at(iv.lower), form.at(iv.upper), field);
      Polynomial anti = mul(form.at(Point{iv.lower.x, iv.upper.y}), form.at(Point{iv.upper.x, iv.lower.y}), field);
      Polynomial g = sub(diag, anti, field);
      if (!g.is_zero()) gens.push_back(std::move(g));
    }
    ArtinianAlgebra a;
    a.num_vars = n;
    a.characteristic = field.characteristic();
    a.basis = buchberger(gens, n, field);
    bool zero_dim = false;
    a.standard = standard_by_degree(leading_monomials(a.basis), n, static_cast<unsigned>(n), zero_dim);
    if (!zero_dim || a.dimension() != expected) continue;
    a.lsop = "random";
    a.seed = seed;
    a.attempts = attempt + 1;
    return a;
  }
  throw LsopFailure("no generic linear system of parameters after " + std::to_string(options.retries + 1) +
                        " attempts for " + std::to_string(p.rank()) + "-cell shape",
                    last_seed);
}

// --- socle ------------------------------------------------------------------------

std::size_t SocleReport::total() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

SocleReport socle(const ArtinianAlgebra& a, bool with_initial) {
  const PrimeField field(a.characteristic);
  SocleReport s;
  const unsigned top = a.top_degree();
  s.dims.assign(top + 1, 0);
  if (with_initial) s.initial.assign(top + 1, {});
  for (unsigned k = 0; k <= top; ++k) {
    const auto& cols = a.standard[k];
    if (k == top) {
      s.dims[k] = cols.size();
      if (with_initial) s.initial[k] = cols;
      continue;
    }
    const auto& next = a.standard[k + 1];
    std::unordered_map<Monomial, std::size_t, MonomialHash> where;
    for (std::size_t i = 0; i < next.size(); ++i) where.emplace(next[i], i);
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(cols.size());
    for (const Monomial& c : cols) {
      std::vector<std::uint32_t> row(a.num_vars * next.size(), 0);
      for (std::size_t v = 0; v < a.num_vars; ++v) {
        const Polynomial nf = normal_form(Polynomial::from_sorted({Term{c * Monomial::variable(v), 1}}), a.basis, field);
        for (const Term& t : nf.terms()) row[v * next.size() + where.at(t.mono)] = t.coeff;
      }
      rows.push_back(std::move(row));
    }
    auto kernel = left_kernel(std::move(rows), field);
    s.dims[k] = kernel.size();
    if (with_initial) {
      for (std::size_t lead : echelon_leads(std::move(kernel), field)) s.initial[k].push_back(cols[lead]);
    }
  }
  finish_flags(s);
  return s;
}

SocleReport socle_of_initial(const PathStructure& ps, const PrimeField& field) {
  const VertexLabelling lab = label_path(ps);
  const std::size_t n = ps.length();
  const auto lead = leading_monomials(buchberger(build_JP(ps, lab, field), n, field));
  bool zero_dim = false;
  const auto standard = standard_by_degree(lead, n, static_cast<unsigned>(n), zero_dim);
  auto in_ideal = [&](const Monomial& m) {
    return std::any_of(lead.begin(), lead.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  SocleReport s;
  s.dims.assign(standard.size(), 0);
  s.initial.assign(standard.size(), {});
  std::set<Monomial> found;
  for (std::size_t d = 0; d < standard.size(); ++d) {
    for (const Monomial& m : standard[d]) {
      bool killed = true;
      for (std::size_t v = 0; v < n && killed; ++v) killed = in_ideal(m * Monomial::variable(v));
      if (killed) {
        ++s.dims[d];
        s.initial[d].push_back(m);
        found.insert(m);
      }
    }
  }
  const auto pos = positions_of(ps);
  std::set<Monomial> facets;
  for (const auto& f : rook_complex(ps.polyomino, kRookRankHardLimit).facets) facets.insert(face_monomial(f, pos));
  if (found != facets) throw ClaimViolated("socle of R/in(J_P) is spanned by facet monomials", "socle and facet sets differ");
  while (!s.dims.empty() && s.dims.back() == 0) s.dims.pop_back();
  finish_flags(s);
  return s;
}

bool check_power_containment(const PathStructure& ps, const PrimeField& field) {
  const VertexLabelling lab = label_path(ps);
  const auto gb = buchberger(build_JP(ps, lab, field), ps.length(), field);
  const std::size_t t = path_rook_number(ps);
  for (const auto& m : monomials_of_degree(ps.length(), static_cast<unsigned>(t + 1))) {
    if (!normal_form(Polynomial::from_sorted({Term{m, 1}}), gb, field).is_zero()) return false;
  }
  return true;
}

// --- classification ----------------------------------------------------------------

ClassificationRecord classify_algebraic(const Polyomino& p, const AlgebraOptions& options) {
  ClassificationRecord r;
  r.method = "algebraic";
  const ArtinianAlgebra a = artinian_reduction(p, options);
  const SocleReport s = socle(a);
  r.gorenstein = s.gorenstein;
  r.level = s.level;
  r.pseudo_gorenstein = s.pseudo_gorenstein;
  r.regularity = s.max_degree;
  r.rook_number = s.max_degree;
  r.seed = a.seed;
  r.hilbert = a.hilbert_function();
  r.socle = s.dims;
  const std::size_t rook = rook_complex(p, options.max_rank).rook_number;
  if (rook != s.max_degree) {
    throw ClaimViolated("top socle degree equals rook number",
                        "socle degree " + std::to_string(s.max_degree) + ", rook number " + std::to_string(rook));
  }
  return r;
}

}  // namespace polylevel
