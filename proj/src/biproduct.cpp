#include "ydb/biproduct.hpp"

#include <algorithm>
#include <set>

namespace ydb {

namespace {

constexpr int U = 0, V = 1, R = 2, S = 3;

int bidx(int p, int g) { return 4 * p + Biproduct::slot(g); }

std::vector<std::string> biproduct_names() {
  std::vector<std::string> names;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          std::string s;
          if (i > 0) s += i == 1 ? "u" : "u^" + std::to_string(i);
          if (j) s += "v";
          if (k) s += "r";
          if (l) s += "s";
          names.push_back(s.empty() ? "1" : s);
        }
      }
    }
  }
  return names;
}

}  // namespace

const Vec& Biproduct::element(const std::string& name) const {
  for (const auto& e : named) {
    if (e.name == name) return e.coords;
  }
  throw Error("unknown named element " + name);
}

Vec Biproduct::prod(std::initializer_list<Vec> xs) const {
  Vec out = one();
  for (const Vec& x : xs) out = multiply(hopf.algebra, out, x);
  return out;
}

Biproduct build_biproduct(const YDHopfAlgebra& a) {
  const int na = a.dim();
  const int n = 4 * na;
  const AlgebraData& alg = a.hopf.algebra;
  const CoalgebraData& coalg = a.hopf.coalgebra;
  Biproduct b;
  b.family = a.family;
  b.zeta = a.zeta;

  // (a * g)(a' * g') = a (g.a') * g g'
  AlgebraData& m = b.hopf.algebra;
  m.dim = n;
  m.unit = basis_vector(n, bidx(0, 0));
  m.mult = Tensor3(n);
  for (int p = 0; p < na; ++p) {
    for (int g = 0; g < 4; ++g) {
      for (int q = 0; q < na; ++q) {
        const Vec prod = multiply(alg, basis_vector(na, p), a.action[g].col(q));
        for (int g2 = 0; g2 < 4; ++g2) {
          Vec out = Vec::Zero(n);
          for (int k = 0; k < na; ++k) {
            if (!prod(k).is_zero()) out(bidx(k, KleinGroup::mul(g, g2))) = prod(k);
          }
          m.mult.at(bidx(p, g), bidx(q, g2)) = to_sparse(out);
        }
      }
    }
  }

  // Delta(a * g) = (a_(1) * a_(2)<1> g) (x) (a_(2)<2> * g)
  CoalgebraData& c = b.hopf.coalgebra;
  c.dim = n;
  c.counit = Vec::Zero(n);
  c.comult.resize(static_cast<std::size_t>(n));
  for (int p = 0; p < na; ++p) {
    for (int g = 0; g < 4; ++g) {
      c.counit(bidx(p, g)) = coalg.counit(p);
      Vec d = Vec::Zero(static_cast<Index>(n) * n);
      for (const auto& t : coalg.comult[static_cast<std::size_t>(p)]) {
        for (int h = 0; h < 4; ++h) {
          const Vec w = a.coaction[h].col(t.right);
          for (int k = 0; k < na; ++k) {
            if (w(k).is_zero()) continue;
            d(static_cast<Index>(bidx(t.left, KleinGroup::mul(h, g))) * n + bidx(k, g)) += t.coeff * w(k);
          }
        }
      }
      c.comult[static_cast<std::size_t>(bidx(p, g))] = to_tensor_list(d, n);
    }
  }
  b.hopf.antipode = compute_antipode(m, c);
  b.hopf.basis_names = biproduct_names();

  b.embed_a = Mat::Zero(n, na);
  for (int p = 0; p < na; ++p) b.embed_a(bidx(p, 0), p) = Cyclo(1);
  b.embed_h = Mat::Zero(n, 4);
  for (int g = 0; g < 4; ++g) b.embed_h(bidx(0, g), g) = Cyclo(1);
  b.pi_h = Mat::Zero(4, n);
  for (int p = 0; p < na; ++p) {
    for (int g = 0; g < 4; ++g) b.pi_h(g, bidx(p, g)) = coalg.counit(p);
  }

  b.named = {{"u", b.u()}, {"v", b.v()}, {"r", b.r()}, {"s", b.s()}};
  for (int i = 0; i < 4; ++i) b.named.push_back({"c" + std::to_string(i + 1), b.embed_a * a.group_likes[i].coords});
  for (int i = 0; i < 4; ++i) {
    b.named.push_back({"d" + std::to_string(i + 1), b.embed_a * a.group_likes[4 + i].coords});
  }
  for (int g = 0; g < 4; ++g) b.named.push_back({"h" + std::to_string(g + 1), Vec(b.embed_h.col(g))});
  return b;
}

Presentation biproduct_presentation(const Cyclo& zeta) {
  if (!is_fourth_root_of_unity(zeta)) throw InvalidRoot(zeta.str() + " is not a fourth root of unity");
  const Cyclo half = Cyclo(Rational(1, 2));
  Presentation p;
  p.generators = {"u", "v", "r", "s"};
  p.bounds = {4, 2, 2, 2};
  p.declared_dim = 32;
  p.swaps = {
      {V, U, {{{U, V}, Cyclo(1)}}},
      {R, U, {{{U, U, U, R}, Cyclo(1)}}},
      {R, V, {{{U, U, U, V, R}, Cyclo(1)}}},
      {S, U, {{{U, S}, Cyclo(1)}}},
      {S, V, {{{U, U, V, S}, Cyclo(1)}}},
      {S, R, {{{R, S}, Cyclo(1)}}},
  };
  p.powers = {
      {U, 4, {{{}, Cyclo(1)}}},
      {V, 2, {{{}, half}, {{U}, half * zeta}, {{U, U}, half}, {{U, U, U}, -half * zeta}}},
      {R, 2, {{{}, Cyclo(1)}}},
      {S, 2, {{{}, Cyclo(1)}}},
  };
  return p;
}

Subspace h_part(const Biproduct& b) {
  std::vector<Vec> cols;
  for (Index g = 0; g < b.embed_h.cols(); ++g) cols.push_back(b.embed_h.col(g));
  return Subspace::span(cols, b.dim());
}

Subspace coinvariants(const Biproduct& b) {
  const int n = b.dim();
  const Mat id = Mat::Identity(n, n);
  Mat cond(4 * n, n);
  for (int i = 0; i < n; ++i) {
    const Vec d = apply_tensor(id, b.pi_h, comultiply(b.hopf.coalgebra, basis_vector(n, i)), n, n);
    cond.col(i) = d - tensor(basis_vector(n, i), basis_vector(4, 0));
  }
  return kernel(cond);
}

IsoCheck quotient_iso_check(const Biproduct& b, const YDHopfAlgebra& a) {
  const QuotientCoalgebra q = quotient_coalgebra(b.hopf, h_part(b));
  const int na = a.dim();
  const Mat phi = q.projection * b.embed_a;
  if (q.coalgebra.dim != na || rank(phi) != na) return {false, "not bijective"};
  if (auto r = is_coalgebra_map(phi, a.hopf.coalgebra, q.coalgebra); !r) return {false, "coalgebra map: " + r.reason};
  for (int p = 0; p < na; ++p) {
    for (int g = 0; g < 4; ++g) {
      const Vec elem = basis_vector(b.dim(), bidx(p, g));
      for (int k = 0; k < na; ++k) {
        const Vec lhs = quotient_action(b.hopf, q, elem, phi.col(k));
        const Vec rhs = phi * multiply(a.hopf.algebra, basis_vector(na, p), a.action[g].col(k));
        if (!equal(lhs, rhs)) {
          return {false, "not B-linear at " + b.hopf.basis_names[bidx(p, g)] + " . " + a.hopf.basis_names[k]};
        }
      }
    }
  }
  return {true, {}};
}

// ---------------------------------------------------------------- characters

std::vector<Mat> psi_family(const Biproduct& b, const std::vector<Vec>& characters) {
  std::vector<Mat> out;
  for (const Vec& chi : characters) out.push_back(psi_automorphism(b.hopf.coalgebra, chi));
  return out;
}

namespace {

// Exponent of u, v, r or s in basis monomial m.
int exponent(int m, int gen) {
  switch (gen) {
    case U: return m / 8;
    case V: return (m / 4) % 2;
    case R: return (m / 2) % 2;
    default: return m % 2;
  }
}

bool scales_by_parity(const Mat& psi, int gen) {
  const Index n = psi.rows();
  for (Index m = 0; m < n; ++m) {
    const Cyclo sign = exponent(static_cast<int>(m), gen) ? Cyclo(-1) : Cyclo(1);
    for (Index k = 0; k < n; ++k) {
      const Cyclo expect = k == m ? sign : Cyclo();
      if (!(psi(k, m) == expect)) return false;
    }
  }
  return true;
}

}  // namespace

ChiTriple reconstruct_chi(const Biproduct& b) {
  if (b.family != 1) throw ReconstructionFailed("character reconstruction uses the family-1 presentation");
  ChiTriple out;
  out.all = characters(biproduct_presentation(b.zeta));
  const auto psis = psi_family(b, out.all);
  Vec* slots[3] = {&out.chi1, &out.chi2, &out.chi3};
  for (int t = 0; t < 3; ++t) {
    int found = 0;
    for (std::size_t c = 0; c < out.all.size(); ++c) {
      if (scales_by_parity(psis[c], V + t)) {
        *slots[t] = out.all[c];
        ++found;
      }
    }
    if (found != 1) {
      throw ReconstructionFailed("chi" + std::to_string(t + 1) + " matched " + std::to_string(found) + " characters");
    }
  }
  return out;
}

Vec chi_product(const Biproduct& b, const ChiTriple& chi, int mask) {
  Vec out = b.hopf.coalgebra.counit;
  const Vec* gens[3] = {&chi.chi1, &chi.chi2, &chi.chi3};
  for (int t = 0; t < 3; ++t) {
    if (mask & (1 << t)) out = convolve(b.hopf.coalgebra, out, *gens[t]);
  }
  return out;
}

std::string chi_name(int mask) {
  if (mask == 0) return "eps";
  std::string s;
  for (int t = 0; t < 3; ++t) {
    if (mask & (1 << t)) s += "chi" + std::to_string(t + 1);
  }
  return s;
}

int psi_eigen_mismatches(const Biproduct& b, const ChiTriple& chi) {
  const Vec* gens[3] = {&chi.chi1, &chi.chi2, &chi.chi3};
  int bad = 0;
  for (int t = 0; t < 3; ++t) {
    const Mat psi = psi_automorphism(b.hopf.coalgebra, *gens[t]);
    for (int m = 0; m < b.dim(); ++m) {
      const Cyclo sign = exponent(m, V + t) ? Cyclo(-1) : Cyclo(1);
      if (!equal(Vec(psi.col(m)), Vec(sign * basis_vector(b.dim(), m)))) ++bad;
    }
  }
  return bad;
}

Subspace fixed_space_of(const Biproduct& b, const std::vector<Vec>& chis) {
  return fixed_space(psi_family(b, chis), b.dim());
}

Subspace invariant_subalgebra(const Biproduct& b, const ChiTriple& chi) {
  return fixed_space_of(b, {chi.chi1, chi.chi2, chi.chi3});
}

Mat explicit_iso_to_negative(const Biproduct& b, const Biproduct& t) {
  if (!(t.zeta == -b.zeta)) throw Error("target biproduct must be built with -zeta");
  const Vec u3 = power(t.hopf.algebra, t.u(), 3);
  const std::vector<Vec> images{u3, t.v(), t.prod({t.r(), t.s()}), t.s()};
  return algebra_map_from_generators(biproduct_presentation(b.zeta), t.hopf.algebra, images);
}

// -------------------------------------------------------------------- groups

namespace {

int find_index(const std::vector<Vec>& xs, const Vec& x) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (equal(xs[i], x)) return static_cast<int>(i);
  }
  return -1;
}

template <typename Op>
FiniteGroup make_group(std::vector<Vec> elements, const Vec& identity, Op op, const std::string& what) {
  FiniteGroup g;
  g.elements = std::move(elements);
  g.identity = find_index(g.elements, identity);
  if (g.identity < 0) throw UnexpectedGroup(what + " does not contain the identity");
  const std::size_t n = g.elements.size();
  g.table.assign(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int k = find_index(g.elements, op(g.elements[i], g.elements[j]));
      if (k < 0) throw UnexpectedGroup(what + " is not closed under multiplication");
      g.table[i][j] = k;
    }
  }
  return g;
}

void require_elementary_abelian_8(const FiniteGroup& g, const std::string& what) {
  const std::size_t n = g.elements.size();
  if (n != 8) throw UnexpectedGroup(what + " has order " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (g.table[i][i] != g.identity) throw UnexpectedGroup(what + " is not of exponent 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (g.table[i][j] != g.table[j][i]) throw UnexpectedGroup(what + " is not abelian");
    }
  }
}

}  // namespace

const std::array<std::array<int, 4>, 7>& gamma_masks() {
  // chi1 = 1, chi2 = 2, chi3 = 4
  static const std::array<std::array<int, 4>, 7> masks{{
      {0, 1, 2, 3},
      {0, 1, 4, 5},
      {0, 1, 6, 7},
      {0, 2, 4, 6},
      {0, 2, 5, 7},
      {0, 3, 4, 7},
      {0, 3, 5, 6},
  }};
  return masks;
}

std::vector<std::vector<int>> order4_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> found;
  const int n = static_cast<int>(g.elements.size());
  for (int a = 0; a < n; ++a) {
    for (int c = a + 1; c < n; ++c) {
      if (a == g.identity || c == g.identity) continue;
      std::vector<int> s{g.identity, a, c, g.table[a][c]};
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
      found.insert(s);
    }
  }
  return {found.begin(), found.end()};
}

Subspace span_of_members(const FiniteGroup& g, const std::vector<int>& members) {
  std::vector<Vec> vs;
  for (int m : members) vs.push_back(g.elements[static_cast<std::size_t>(m)]);
  return Subspace::span(vs, g.elements.front().size());
}

GroupLattice grouplike_lattice(const Biproduct& b, const ChiTriple& chi) {
  GroupLattice out;
  const auto family = psi_family(b, chi.all);
  auto mul = [&](const Vec& x, const Vec& y) { return multiply(b.hopf.algebra, x, y); };
  out.grouplikes = make_group(group_likes(b.hopf, family), b.one(), mul, "G(B)");
  require_elementary_abelian_8(out.grouplikes, "G(B)");

  const Vec u2 = power(b.hopf.algebra, b.u(), 2);
  for (const Vec& g : out.grouplikes.elements) {
    std::string name = "?";
    for (int mask = 0; mask < 8; ++mask) {
      const Vec cand = b.prod({(mask & 1) ? u2 : b.one(), (mask & 2) ? b.r() : b.one(), (mask & 4) ? b.s() : b.one()});
      if (!equal(cand, g)) continue;
      name.clear();
      if (mask & 1) name += "u^2";
      if (mask & 2) name += "r";
      if (mask & 4) name += "s";
      if (name.empty()) name = "1";
    }
    out.grouplike_names.push_back(name);
  }
  const auto subs = order4_subgroups(out.grouplikes);
  for (std::size_t k = 0; k < subs.size(); ++k) out.grouplike_subgroups.push_back({"K" + std::to_string(k + 1), subs[k]});

  std::vector<Vec> by_mask;
  for (int mask = 0; mask < 8; ++mask) by_mask.push_back(chi_product(b, chi, mask));
  for (const Vec& c : chi.all) {
    if (find_index(by_mask, c) < 0) throw UnexpectedGroup("a character is not a product of chi1, chi2, chi3");
  }
  auto conv = [&](const Vec& x, const Vec& y) { return convolve(b.hopf.coalgebra, x, y); };
  out.characters = make_group(by_mask, b.hopf.coalgebra.counit, conv, "G(B*)");
  require_elementary_abelian_8(out.characters, "G(B*)");

  const auto gsubs = order4_subgroups(out.characters);
  if (gsubs.size() != 7) throw UnexpectedGroup("G(B*) has " + std::to_string(gsubs.size()) + " subgroups of order 4");
  for (std::size_t k = 0; k < 7; ++k) {
    const auto& m = gamma_masks()[k];
    std::vector<int> members(m.begin(), m.end());
    if (std::find(gsubs.begin(), gsubs.end(), members) == gsubs.end()) {
      throw UnexpectedGroup("Gamma" + std::to_string(k + 1) + " is not a subgroup");
    }
    out.gammas.push_back({"Gamma" + std::to_string(k + 1), members});
  }
  return out;
}

}  // namespace ydb
