#include "ydb/yetter_drinfeld.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ydb {

// --------------------------------------------------------------- bicharacter

Bicharacter bicharacter_from_fundamental(const Cyclo& t22, const Cyclo& t23, const Cyclo& t33) {
  Bicharacter t;
  for (int g = 0; g < 4; ++g) {
    for (int h = 0; h < 4; ++h) {
      const int a = g & 1, b = g >> 1, a2 = h & 1, b2 = h >> 1;
      t[g][h] = t22.pow(a * a2) * t23.pow(a * b2 + b * a2) * t33.pow(b * b2);
    }
  }
  return t;
}

Bicharacter make_theta(const Cyclo& zeta) { return bicharacter_from_fundamental(zeta * zeta, Cyclo(-1), Cyclo(1)); }

bool is_symmetric(const Bicharacter& t) {
  for (int g = 0; g < 4; ++g) {
    for (int h = 0; h < 4; ++h) {
      if (!(t[g][h] == t[h][g])) return false;
    }
  }
  return true;
}

bool is_multiplicative(const Bicharacter& t) {
  for (int g = 0; g < 4; ++g) {
    for (int g2 = 0; g2 < 4; ++g2) {
      for (int h = 0; h < 4; ++h) {
        if (!(t[KleinGroup::mul(g, g2)][h] == t[g][h] * t[g2][h])) return false;
        if (!(t[h][KleinGroup::mul(g, g2)] == t[h][g] * t[h][g2])) return false;
      }
    }
  }
  return true;
}

bool is_nondegenerate(const Bicharacter& t) {
  for (int g = 0; g < 4; ++g) {
    for (int h = g + 1; h < 4; ++h) {
      if (t[g] == t[h]) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------ group algebra

HopfData group_algebra() {
  HopfData h;
  AlgebraData& a = h.algebra;
  a.dim = 4;
  a.unit = basis_vector(4, 0);
  a.mult = Tensor3(4);
  for (int g = 0; g < 4; ++g) {
    for (int k = 0; k < 4; ++k) a.mult.at(g, k) = {{KleinGroup::mul(g, k), Cyclo(1)}};
  }
  CoalgebraData& c = h.coalgebra;
  c.dim = 4;
  c.counit = Vec::Constant(4, Cyclo(1));
  for (int g = 0; g < 4; ++g) c.comult.push_back({{g, g, Cyclo(1)}});
  h.antipode = compute_antipode(a, c);
  for (int g = 0; g < 4; ++g) h.basis_names.push_back(KleinGroup::name(g));
  return h;
}

Presentation group_algebra_presentation() {
  Presentation p;
  p.generators = {"g3", "g2"};
  p.bounds = {2, 2};
  p.swaps = {{1, 0, {{{0, 1}, Cyclo(1)}}}};
  p.powers = {{0, 2, {{{}, Cyclo(1)}}}, {1, 2, {{{}, Cyclo(1)}}}};
  p.declared_dim = 4;
  return p;
}

// ------------------------------------------------------------------ coaction

CoactionMats coaction_from_action(const ActionMats& action, const Bicharacter& theta) {
  if (!is_nondegenerate(theta)) throw DegenerateBicharacter("bicharacter is degenerate");
  CoactionMats out;
  const Index n = action[0].rows();
  const Cyclo quarter = Cyclo(Rational(1, 4));
  for (int g = 0; g < 4; ++g) {
    Mat m = Mat::Zero(n, n);
    for (int g2 = 0; g2 < 4; ++g2) m += theta[g][g2] * action[g2];
    out[g] = quarter * m;
  }
  return out;
}

ActionMats action_from_coaction(const CoactionMats& coaction, const Bicharacter& theta) {
  ActionMats out;
  const Index n = coaction[0].rows();
  for (int g = 0; g < 4; ++g) {
    Mat m = Mat::Zero(n, n);
    for (int h = 0; h < 4; ++h) m += theta[g][h] * coaction[h];
    out[g] = m;
  }
  return out;
}

// ------------------------------------------------------------------ families

namespace {

constexpr int X = 0, Y = 1;

Presentation family_presentation(int family, const Cyclo& zeta) {
  const Cyclo half = Cyclo(Rational(1, 2));
  Presentation p;
  p.generators = {"x", "y"};
  p.bounds = {4, 2};
  p.declared_dim = 8;
  p.powers.push_back({X, 4, {{{}, Cyclo(1)}}});
  if (family == 1) {
    p.swaps.push_back({Y, X, {{{X, Y}, Cyclo(1)}}});
    p.powers.push_back({Y, 2, {{{}, half}, {{X}, half * zeta}, {{X, X}, half}, {{X, X, X}, -half * zeta}}});
  } else {
    p.swaps.push_back({Y, X, {{{X, X, X, Y}, Cyclo(1)}}});
    p.powers.push_back({Y, 2, {{{}, half * zeta}, {{X}, half}, {{X, X}, -half * zeta}, {{X, X, X}, half}}});
  }
  return p;
}

std::vector<GroupLikeLabel> labels(const Cyclo& zeta) {
  const Cyclo half = Cyclo(Rational(1, 2));
  const Cyclo iz2 = Cyclo::iota() * zeta * zeta;
  auto e = [](int k) { return basis_vector(8, k); };
  // x^i y^j sits at index 2i + j.
  return {
      {"omega1", e(0)},
      {"omega2", Vec(half * (Cyclo(1) + iz2) * e(2) + half * (Cyclo(1) - iz2) * e(6))},
      {"omega3", Vec(half * (Cyclo(1) - iz2) * e(2) + half * (Cyclo(1) + iz2) * e(6))},
      {"omega4", e(4)},
      {"eta1", e(1)},
      {"eta2", e(7)},
      {"eta3", e(5)},
      {"eta4", e(3)},
  };
}

Mat columns_of(const std::vector<GroupLikeLabel>& gl) {
  Mat p(8, static_cast<Index>(gl.size()));
  for (std::size_t k = 0; k < gl.size(); ++k) p.col(static_cast<Index>(k)) = gl[k].coords;
  return p;
}

}  // namespace

Mat YDHopfAlgebra::change_of_basis() const { return columns_of(group_likes); }

const Vec& YDHopfAlgebra::label(const std::string& name) const {
  for (const auto& l : group_likes) {
    if (l.name == name) return l.coords;
  }
  throw Error("unknown group-like label " + name);
}

ActionMats generator_action(const AlgebraData& a, const Presentation& p) {
  const int n = a.dim;
  auto image = [&](const Vec& gx, const Vec& gy) {
    Mat m(n, n);
    for (int idx = 0; idx < n; ++idx) {
      const auto e = exponents_of(p, idx);
      m.col(idx) = multiply(a, power(a, gx, e[0]), power(a, gy, e[1]));
    }
    return m;
  };
  ActionMats act;
  act[0] = Mat::Identity(n, n);
  act[1] = image(basis_vector(n, 6), basis_vector(n, 7));  // g2: x -> x^3, y -> x^3 y
  act[2] = image(basis_vector(n, 2), basis_vector(n, 5));  // g3: x -> x, y -> x^2 y
  act[3] = act[1] * act[2];
  return act;
}

YDHopfAlgebra build_yd(int family, const Cyclo& zeta, const Bicharacter& theta) {
  if (family != 1 && family != 2) throw Error("family must be 1 or 2");
  if (!is_fourth_root_of_unity(zeta)) throw InvalidRoot(zeta.str() + " is not a fourth root of unity");
  YDHopfAlgebra a;
  a.family = family;
  a.zeta = zeta;
  a.theta = theta;
  a.presentation = family_presentation(family, zeta);
  a.hopf.algebra = straighten(a.presentation);
  a.hopf.basis_names = monomial_names(a.presentation);
  a.group_likes = labels(zeta);

  // The coalgebra is fixed by declaring the labeled elements group-like.
  const Mat p = a.change_of_basis();
  const Mat pinv = inverse(p);
  CoalgebraData& c = a.hopf.coalgebra;
  c.dim = 8;
  c.counit = Vec::Zero(8);
  for (int k = 0; k < 8; ++k) {
    Vec t = Vec::Zero(64);
    for (int m = 0; m < 8; ++m) {
      if (pinv(m, k).is_zero()) continue;
      c.counit(k) += pinv(m, k);
      t += pinv(m, k) * tensor(p.col(m), p.col(m));
    }
    c.comult.push_back(to_tensor_list(t, 8));
  }
  a.hopf.antipode = compute_antipode(a.hopf.algebra, c);
  a.action = generator_action(a.hopf.algebra, a.presentation);
  a.coaction = coaction_from_action(a.action, theta);
  return a;
}

YDHopfAlgebra build_family1(const Cyclo& zeta) { return build_yd(1, zeta, make_theta(zeta)); }
YDHopfAlgebra build_family2(const Cyclo& zeta) { return build_yd(2, zeta, make_theta(zeta)); }

YDHopfAlgebra build_family(int family, const Cyclo& zeta) {
  if (family == 1) return build_family1(zeta);
  if (family == 2) return build_family2(zeta);
  throw Error("family must be 1 or 2");
}

// ------------------------------------------------------------------- axioms

namespace {

std::string pair_name(const YDHopfAlgebra& a, int i, int j) {
  return "(" + a.hopf.basis_names[static_cast<std::size_t>(i)] + ", " + a.hopf.basis_names[static_cast<std::size_t>(j)] +
         ")";
}

AxiomResult check_representation(const YDHopfAlgebra& a) {
  const int n = a.dim();
  if (!equal(a.action[0], Mat(Mat::Identity(n, n)))) return {"G-representation", false, "g1 does not act trivially"};
  for (int g = 0; g < 4; ++g) {
    for (int h = 0; h < 4; ++h) {
      if (!equal(Mat(a.action[g] * a.action[h]), a.action[KleinGroup::mul(g, h)])) {
        return {"G-representation", false, KleinGroup::name(g) + KleinGroup::name(h)};
      }
    }
  }
  return {"G-representation", true, {}};
}

AxiomResult check_comodule(const YDHopfAlgebra& a) {
  const int n = a.dim();
  Mat sum = Mat::Zero(n, n);
  for (const Mat& c : a.coaction) sum += c;
  if (!equal(sum, Mat(Mat::Identity(n, n)))) return {"comodule", false, "counit law fails"};
  for (int g = 0; g < 4; ++g) {
    for (int h = 0; h < 4; ++h) {
      const Mat expect = g == h ? a.coaction[g] : Mat(Mat::Zero(n, n));
      if (!equal(Mat(a.coaction[g] * a.coaction[h]), expect)) {
        return {"comodule", false, "coassociativity fails at " + KleinGroup::name(g) + ", " + KleinGroup::name(h)};
      }
    }
  }
  return {"comodule", true, {}};
}

// delta(g.a) = g a<1> g^-1 (x) g.a<2>; conjugation is trivial in an abelian group.
AxiomResult check_yd_compatibility(const YDHopfAlgebra& a) {
  for (int g = 0; g < 4; ++g) {
    for (int h = 0; h < 4; ++h) {
      const int conj = KleinGroup::mul(KleinGroup::mul(g, h), KleinGroup::inverse(g));
      if (!equal(Mat(a.coaction[conj] * a.action[g]), Mat(a.action[g] * a.coaction[h]))) {
        return {"YD compatibility", false, KleinGroup::name(g) + " against component " + KleinGroup::name(h)};
      }
    }
  }
  return {"YD compatibility", true, {}};
}

AxiomResult check_module_algebra(const YDHopfAlgebra& a) {
  const AlgebraData& alg = a.hopf.algebra;
  for (int g = 0; g < 4; ++g) {
    if (!equal(Vec(a.action[g] * alg.unit), alg.unit)) return {"module-algebra", false, "unit moved"};
    for (int i = 0; i < alg.dim; ++i) {
      for (int j = 0; j < alg.dim; ++j) {
        const Vec lhs = a.action[g] * to_dense(alg.mult.at(i, j), alg.dim);
        const Vec rhs = multiply(alg, a.action[g].col(i), a.action[g].col(j));
        if (!equal(lhs, rhs)) return {"module-algebra", false, KleinGroup::name(g) + " on " + pair_name(a, i, j)};
      }
    }
  }
  return {"module-algebra", true, {}};
}

AxiomResult check_comodule_algebra(const YDHopfAlgebra& a) {
  const AlgebraData& alg = a.hopf.algebra;
  for (int h = 0; h < 4; ++h) {
    const Vec expect = h == 0 ? alg.unit : Vec(Vec::Zero(alg.dim));
    if (!equal(Vec(a.coaction[h] * alg.unit), expect)) return {"comodule-algebra", false, "unit not coinvariant"};
  }
  for (int i = 0; i < alg.dim; ++i) {
    for (int j = 0; j < alg.dim; ++j) {
      const Vec prod = to_dense(alg.mult.at(i, j), alg.dim);
      for (int h = 0; h < 4; ++h) {
        Vec rhs = Vec::Zero(alg.dim);
        for (int h1 = 0; h1 < 4; ++h1) {
          rhs += multiply(alg, a.coaction[h1].col(i), a.coaction[KleinGroup::mul(h, h1)].col(j));
        }
        if (!equal(Vec(a.coaction[h] * prod), rhs)) {
          return {"comodule-algebra", false, pair_name(a, i, j) + " component " + KleinGroup::name(h)};
        }
      }
    }
  }
  return {"comodule-algebra", true, {}};
}

AxiomResult check_module_coalgebra(const YDHopfAlgebra& a) {
  const CoalgebraData& c = a.hopf.coalgebra;
  const int n = c.dim;
  for (int g = 0; g < 4; ++g) {
    for (int i = 0; i < n; ++i) {
      const Vec x = a.action[g].col(i);
      if (!(counit(c, x) == c.counit(i))) return {"module-coalgebra", false, "counit at " + a.hopf.basis_names[i]};
      const Vec rhs = apply_tensor(a.action[g], a.action[g], to_dense(c.comult[static_cast<std::size_t>(i)], n), n, n);
      if (!equal(comultiply(c, x), rhs)) {
        return {"module-coalgebra", false, KleinGroup::name(g) + " on " + a.hopf.basis_names[i]};
      }
    }
  }
  return {"module-coalgebra", true, {}};
}

AxiomResult check_comodule_coalgebra(const YDHopfAlgebra& a) {
  const CoalgebraData& c = a.hopf.coalgebra;
  const int n = c.dim;
  for (int i = 0; i < n; ++i) {
    const Vec d = to_dense(c.comult[static_cast<std::size_t>(i)], n);
    for (int h = 0; h < 4; ++h) {
      const Vec x = a.coaction[h].col(i);
      const Cyclo eps = h == 0 ? c.counit(i) : Cyclo();
      if (!(counit(c, x) == eps)) return {"comodule-coalgebra", false, "counit at " + a.hopf.basis_names[i]};
      Vec rhs = Vec::Zero(static_cast<Index>(n) * n);
      for (int h1 = 0; h1 < 4; ++h1) rhs += apply_tensor(a.coaction[h1], a.coaction[KleinGroup::mul(h, h1)], d, n, n);
      if (!equal(comultiply(c, x), rhs)) {
        return {"comodule-coalgebra", false, a.hopf.basis_names[i] + " component " + KleinGroup::name(h)};
      }
    }
  }
  return {"comodule-coalgebra", true, {}};
}

// Delta(ab) = a_(1) (a_(2)<1> . b_(1)) (x) a_(2)<2> b_(2).
AxiomResult check_braided_law(const YDHopfAlgebra& a) {
  const AlgebraData& alg = a.hopf.algebra;
  const CoalgebraData& c = a.hopf.coalgebra;
  const int n = alg.dim;
  if (!equal(comultiply(c, alg.unit), tensor(alg.unit, alg.unit))) {
    return {"braided bialgebra law", false, "Delta(1) != 1 (x) 1"};
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Vec lhs = comultiply(c, to_dense(alg.mult.at(i, j), n));
      Vec rhs = Vec::Zero(static_cast<Index>(n) * n);
      for (const auto& s : c.comult[static_cast<std::size_t>(i)]) {
        for (const auto& t : c.comult[static_cast<std::size_t>(j)]) {
          for (int h = 0; h < 4; ++h) {
            const Vec right_a = a.coaction[h].col(s.right);
            if (is_zero_vector(right_a)) continue;
            const Vec l = multiply(alg, basis_vector(n, s.left), a.action[h].col(t.left));
            const Vec r = multiply(alg, right_a, basis_vector(n, t.right));
            rhs += (s.coeff * t.coeff) * tensor(l, r);
          }
        }
      }
      if (!equal(lhs, rhs)) return {"braided bialgebra law", false, pair_name(a, i, j)};
    }
  }
  return {"braided bialgebra law", true, {}};
}

}  // namespace

AxiomReport verify_yd_axioms(const YDHopfAlgebra& a) {
  AxiomReport r;
  r.results.push_back(check_associativity(a.hopf.algebra));
  r.results.push_back(check_unit(a.hopf.algebra));
  r.results.push_back(check_coassociativity(a.hopf.coalgebra));
  r.results.push_back(check_counit(a.hopf.coalgebra));
  r.results.push_back(check_counit_multiplicative(a.hopf.algebra, a.hopf.coalgebra));
  r.results.push_back(check_representation(a));
  r.results.push_back(check_comodule(a));
  r.results.push_back(check_yd_compatibility(a));
  r.results.push_back(check_module_algebra(a));
  r.results.push_back(check_comodule_algebra(a));
  r.results.push_back(check_module_coalgebra(a));
  r.results.push_back(check_comodule_coalgebra(a));
  r.results.push_back(check_braided_law(a));
  AxiomResult s = check_antipode(a.hopf.algebra, a.hopf.coalgebra, a.hopf.antipode);
  s.name = "braided antipode";
  r.results.push_back(std::move(s));
  return r;
}

// ------------------------------------------------------------ iso search

std::vector<int> orbit_lengths(const YDHopfAlgebra& a) {
  std::vector<int> out;
  for (const auto& l : a.group_likes) {
    std::vector<Vec> orbit;
    for (int g = 0; g < 4; ++g) {
      const Vec v = a.action[g] * l.coords;
      if (std::none_of(orbit.begin(), orbit.end(), [&](const Vec& w) { return equal(v, w); })) orbit.push_back(v);
    }
    out.push_back(static_cast<int>(orbit.size()));
  }
  return out;
}

namespace {

// Structure of a YD algebra written in its group-like basis.
struct GroupLikeFrame {
  Mat p;
  std::vector<Vec> mult;  // mult[i*8 + j] = coordinates of gl_i gl_j
  Vec unit;
  std::array<Mat, 4> action;
  std::array<Mat, 4> coaction;
  std::vector<int> orbits;

  explicit GroupLikeFrame(const YDHopfAlgebra& a) : p(a.change_of_basis()) {
    const Mat pinv = inverse(p);
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) mult.push_back(pinv * multiply(a.hopf.algebra, p.col(i), p.col(j)));
    }
    unit = pinv * a.hopf.algebra.unit;
    for (int g = 0; g < 4; ++g) {
      action[g] = pinv * a.action[g] * p;
      coaction[g] = pinv * a.coaction[g] * p;
    }
    orbits = orbit_lengths(a);
  }
};

class IsoSearch {
 public:
  IsoSearch(const GroupLikeFrame& a, const GroupLikeFrame& b) : a_(a), b_(b) {}

  // Conditions that only involve images already assigned (indices <= k).
  bool consistent_upto(const std::array<int, 8>& s, int k) const {
    auto ok_mat = [&](const Mat& ma, const Mat& mb, int i, int j) { return ma(i, j) == mb(s[i], s[j]); };
    if (!(a_.unit(k) == b_.unit(s[k]))) return false;
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) {
        if (i != k && j != k) continue;
        for (int g = 0; g < 4; ++g) {
          if (!ok_mat(a_.action[g], b_.action[g], i, j) || !ok_mat(a_.coaction[g], b_.coaction[g], i, j)) return false;
        }
      }
    }
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) {
        for (int m = 0; m <= k; ++m) {
          if (i != k && j != k && m != k) continue;
          if (!(a_.mult[i * 8 + j](m) == b_.mult[s[i] * 8 + s[j]](s[m]))) return false;
        }
      }
    }
    return true;
  }

  // A product landing partly outside the assigned indices is caught once
  // those indices are assigned; a complete assignment checks everything.
  bool consistent(const std::array<int, 8>& s) const {
    for (int k = 0; k < 8; ++k) {
      if (!consistent_upto(s, k)) return false;
    }
    return true;
  }

  std::vector<std::array<int, 8>> run_full() const {
    std::array<int, 8> s;
    std::iota(s.begin(), s.end(), 0);
    std::vector<std::array<int, 8>> out;
    do {
      if (consistent(s)) out.push_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
  }

  std::vector<std::array<int, 8>> run_pruned() const {
    std::vector<std::array<int, 8>> out;
    std::array<int, 8> s{};
    std::array<bool, 8> used{};
    extend(s, used, 0, out);
    return out;
  }

 private:
  void extend(std::array<int, 8>& s, std::array<bool, 8>& used, int k, std::vector<std::array<int, 8>>& out) const {
    if (k == 8) {
      out.push_back(s);
      return;
    }
    for (int t = 0; t < 8; ++t) {
      if (used[t]) continue;
      if (k == 0 && t != 0) continue;  // unit to unit
      if (a_.orbits[k] != b_.orbits[t]) continue;
      s[k] = t;
      if (!consistent_upto(s, k)) continue;
      used[t] = true;
      extend(s, used, k + 1, out);
      used[t] = false;
    }
  }

  const GroupLikeFrame& a_;
  const GroupLikeFrame& b_;
};

bool lex_less_mat(const Mat& a, const Mat& b) {
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
    }
  }
  return false;
}

}  // namespace

std::vector<Mat> yd_iso_search(const YDHopfAlgebra& a, const YDHopfAlgebra& b, bool full) {
  if (a.dim() != 8 || b.dim() != 8 || a.group_likes.size() != 8 || b.group_likes.size() != 8) {
    throw DimensionMismatch("yd_iso_search expects 8-dimensional algebras with group-like bases");
  }
  const GroupLikeFrame fa(a), fb(b);
  // The unit must be the first label on both sides for the pruned search.
  if (!equal(fa.unit, unit_vector<Cyclo>(8, 0)) || !equal(fb.unit, unit_vector<Cyclo>(8, 0))) {
    throw Error("yd_iso_search: first group-like label must be the unit");
  }
  IsoSearch search(fa, fb);
  const auto perms = full ? search.run_full() : search.run_pruned();
  const Mat painv = inverse(fa.p);
  std::vector<Mat> out;
  for (const auto& s : perms) {
    Mat pi = Mat::Zero(8, 8);
    for (int k = 0; k < 8; ++k) pi(s[k], k) = Cyclo(1);
    Mat f = fb.p * pi * painv;
    if (!is_algebra_map(f, a.hopf.algebra, b.hopf.algebra) || !is_coalgebra_map(f, a.hopf.coalgebra, b.hopf.coalgebra)) {
      throw Error("yd_iso_search: permutation passed the frame filters but not the direct check");
    }
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), lex_less_mat);
  return out;
}

// ----------------------------------------------------------------- degree 6

Vec degree6_polynomial(const YDHopfAlgebra& a) {
  const bool primitive = is_primitive_fourth_root(a.zeta);
  const AlgebraData& alg = a.hopf.algebra;
  const Vec y = a.y();
  const Vec y2 = power(alg, y, 2), y4 = power(alg, y, 4), y6 = power(alg, y, 6);
  if (a.family == 1 && !primitive) return y6 - y4 + y2 - alg.unit;
  if (a.family == 2 && primitive) return y6 - a.zeta * y4 - y2 + a.zeta * alg.unit;
  throw WrongCase("no degree-6 relation is stated for family " + std::to_string(a.family) + " with zeta = " +
                  a.zeta.str());
}

bool degree6_check(const YDHopfAlgebra& a) { return is_zero_vector(degree6_polynomial(a)); }

}  // namespace ydb
