#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ydb/biproduct.hpp"

using namespace ydb;

namespace {

const Cyclo i_ = Cyclo::iota();
const Cyclo half = Cyclo(1) / Cyclo(2);
const Cyclo quarter = Cyclo(1) / Cyclo(4);
const std::vector<Cyclo> kRoots{Cyclo(1), Cyclo(-1), i_, -i_};

struct Fixture {
  YDHopfAlgebra a;
  Biproduct b;
  explicit Fixture(const Cyclo& z) : a(build_family1(z)), b(build_biproduct(a)) {}
  Vec m(const Vec& x, const Vec& y) const { return multiply(b.hopf.algebra, x, y); }
  Vec m(std::initializer_list<Vec> xs) const { return b.prod(xs); }
  Vec pw(const Vec& x, int e) const { return power(b.hopf.algebra, x, e); }
  Vec delta(const Vec& x) const { return comultiply(b.hopf.coalgebra, x); }
};

const Fixture& fixture(const Cyclo& z) {
  static std::vector<std::unique_ptr<Fixture>> cache;
  for (const auto& f : cache) {
    if (f->b.zeta == z) return *f;
  }
  cache.push_back(std::make_unique<Fixture>(z));
  return *cache.back();
}

Cyclo pairing(const Vec& chi, const Vec& x) {
  Cyclo s;
  for (Index k = 0; k < x.size(); ++k) s += chi(k) * x(k);
  return s;
}

// b -> chi(b_(1)) b_(2)
Mat left_psi(const CoalgebraData& c, const Vec& chi) {
  Mat m = Mat::Zero(c.dim, c.dim);
  for (int i = 0; i < c.dim; ++i) {
    for (const auto& t : c.comult[static_cast<std::size_t>(i)]) m(t.right, i) += t.coeff * chi(t.left);
  }
  return m;
}

}  // namespace

TEST_CASE("monomial basis") {
  const Fixture& f = fixture(i_);
  std::set<int> seen;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          seen.insert(Biproduct::index(i, j, k, l));
          Vec x = f.pw(f.b.u(), i);
          if (j) x = f.m(x, f.b.v());
          if (k) x = f.m(x, f.b.r());
          if (l) x = f.m(x, f.b.s());
          CHECK(equal(x, f.b.monomial(i, j, k, l)));
        }
      }
    }
  }
  CHECK(seen.size() == 32);
}

TEST_CASE("smash product and embeddings") {
  for (const Cyclo& z : {Cyclo(1), i_}) {
    const Fixture& f = fixture(z);
    const Biproduct& b = f.b;
    const HopfData h = group_algebra();
    bool smash = true;
    for (int x = 0; x < 8; ++x) {
      for (int g = 0; g < 4; ++g) {
        for (int y = 0; y < 8; ++y) {
          for (int k = 0; k < 4; ++k) {
            const Vec lhs = f.m({b.embed_a.col(x), b.embed_h.col(g), b.embed_a.col(y), b.embed_h.col(k)});
            const Vec ay = f.a.action[static_cast<std::size_t>(g)] * basis_vector(8, y);
            const Vec a_part = multiply(f.a.hopf.algebra, basis_vector(8, x), ay);
            const Vec rhs = f.m(b.embed_a * a_part, b.embed_h.col(KleinGroup::mul(g, k)));
            if (!equal(lhs, rhs)) smash = false;
          }
        }
      }
    }
    CHECK(smash);
    CHECK(is_algebra_map(b.embed_h, h.algebra, b.hopf.algebra).ok);
    CHECK(is_coalgebra_map(b.embed_h, h.coalgebra, b.hopf.coalgebra).ok);
    CHECK(is_coalgebra_map(b.pi_h, b.hopf.coalgebra, h.coalgebra).ok);
    CHECK(equal(Mat(b.pi_h * b.embed_h), Mat(Mat::Identity(4, 4))));
  }
}

TEST_CASE("coproduct of u and v") {
  for (const Cyclo& z : kRoots) {
    CAPTURE(z.str());
    const Fixture& f = fixture(z);
    const Biproduct& b = f.b;
    const Vec u = b.u(), v = b.v(), r = b.r(), s = b.s(), one = b.one();
    const Vec u2 = f.pw(u, 2), u3 = f.pw(u, 3), u3s = f.m(u3, s);
    const Vec du = half * (tensor(u, u) + tensor(u, u3) + tensor(u3s, u) - tensor(u3s, u3));
    CHECK(equal(f.delta(u), du));

    const Cyclo z2 = z * z;
    const Vec rs = f.m(r, s);
    const Vec p0 = one + r + s + rs;
    const Vec p1 = one - z2 * r - s + z2 * rs;
    const Vec p2 = one - r + s - rs;
    const Vec p3 = one + z2 * r - s - z2 * rs;
    const Vec dv = quarter * (tensor(f.m(v, p0), v) + tensor(f.m(v, p1), f.m(u, v)) + tensor(f.m(v, p2), f.m(u2, v)) +
                              tensor(f.m(v, p3), f.m(u3, v)));
    CHECK(equal(f.delta(v), dv));
    for (const Vec& g : {u, v, r, s}) CHECK(counit(b.hopf.coalgebra, g) == Cyclo(1));
    CHECK(is_group_like(b.hopf.coalgebra, r));
    CHECK(is_group_like(b.hopf.coalgebra, s));
  }
}

TEST_CASE("named elements") {
  const Fixture& f = fixture(-i_);
  for (int k = 1; k <= 4; ++k) {
    const std::string n = std::to_string(k);
    CHECK(equal(f.b.element("c" + n), Vec(f.b.embed_a * f.a.label("omega" + n))));
    CHECK(equal(f.b.element("d" + n), Vec(f.b.embed_a * f.a.label("eta" + n))));
    CHECK(equal(f.b.element("h" + n), Vec(f.b.embed_h.col(k - 1))));
    CHECK(is_group_like(f.b.hopf.coalgebra, f.b.element("h" + n)));
  }
  // c_i, d_i are group-like in A, but in B only c1 = 1 and c4 = u^2 are.
  std::vector<std::string> gl;
  for (const char* p : {"c", "d"}) {
    for (int k = 1; k <= 4; ++k) {
      const std::string name = p + std::to_string(k);
      if (is_group_like(f.b.hopf.coalgebra, f.b.element(name))) gl.push_back(name);
    }
  }
  CHECK(gl == std::vector<std::string>{"c1", "c4"});
  CHECK(equal(f.b.element("u"), f.b.u()));
  CHECK_THROWS_AS(f.b.element("w"), Error);
}

TEST_CASE("power identities") {
  for (const Cyclo& z : kRoots) {
    CAPTURE(z.str());
    const Fixture& f = fixture(z);
    const Biproduct& b = f.b;
    const Vec u2 = f.pw(b.u(), 2), v2 = f.pw(b.v(), 2), v4 = f.pw(b.v(), 4);
    const Vec vs = f.m(b.v(), b.s());
    CHECK(equal(f.pw(vs, 2), f.m(u2, v2)));
    CHECK(equal(f.pw(vs, 4), v4));
    const Cyclo a = (Cyclo(1) + i_) / Cyclo(2), c = (Cyclo(1) - i_) / Cyclo(2);
    const Vec g = a * b.v() + c * f.m(u2, b.v());
    CHECK(equal(f.pw(g, 2), f.m(u2, v2)));
    CHECK(equal(f.pw(g, 4), v4));
    const Vec g5 = a * vs + c * f.m(u2, vs);
    CHECK(equal(f.pw(g5, 2), v2));
    CHECK(equal(f.pw(g5, 4), v4));
    const Vec vr = f.m(b.v(), b.r()), vrs = f.m(vr, b.s());
    CHECK_FALSE(commute(b.hopf.algebra, b.u(), vr));
    CHECK_FALSE(commute(b.hopf.algebra, b.u(), vrs));
  }
}

TEST_CASE("coinvariants") {
  for (const Cyclo& z : kRoots) {
    CAPTURE(z.str());
    const Fixture& f = fixture(z);
    const Biproduct& b = f.b;
    const Subspace co = coinvariants(b);
    CHECK(co.dim() == 8);
    std::vector<Vec> cols;
    for (int k = 0; k < 8; ++k) cols.push_back(b.embed_a.col(k));
    CHECK(co == span_of(cols, 32));
    const ChiTriple chi = reconstruct_chi(b);
    CHECK(co == fixed_space_of(b, {chi.chi2, chi.chi3}));
    CHECK(co.contains(b.u()));
    CHECK(co.contains(b.v()));
    CHECK_FALSE(co.contains(b.r()));
    // B^coH is commutative.
    for (const Vec& x : co.basis_vectors()) {
      for (const Vec& y : co.basis_vectors()) CHECK(commute(b.hopf.algebra, x, y));
    }
  }
}

TEST_CASE("B / BH+ against A") {
  for (const Cyclo& z : kRoots) {
    CAPTURE(z.str());
    const Fixture& f = fixture(z);
    const Biproduct& b = f.b;
    const IsoCheck iso = quotient_iso_check(b, f.a);
    CHECK(iso.ok);
    const QuotientCoalgebra q = quotient_coalgebra(b.hopf, h_part(b));
    // BH+ = A * H+
    std::vector<Vec> gens;
    for (int a = 0; a < 8; ++a) {
      for (int g = 1; g < 4; ++g) gens.push_back(f.m(b.embed_a.col(a), Vec(b.embed_h.col(g) - b.one())));
    }
    CHECK(q.ideal == span_of(gens, 32));
    for (const auto& l : f.a.group_likes) CHECK(is_group_like(q.coalgebra, q.project(b.embed_a * l.coords)));
    // (1 * h).a = h.a
    for (int g = 0; g < 4; ++g) {
      for (int a = 0; a < 8; ++a) {
        const Vec lhs = quotient_action(b.hopf, q, b.embed_h.col(g), q.project(b.embed_a.col(a)));
        const Vec rhs = q.project(b.embed_a * (f.a.action[static_cast<std::size_t>(g)] * basis_vector(8, a)));
        CHECK(equal(lhs, rhs));
      }
    }
  }
}

TEST_CASE("coproduct of v in the twisted quotient") {
  for (const Cyclo& z : kRoots) {
    CAPTURE(z.str());
    const Fixture& f = fixture(z);
    const Biproduct& b = f.b;
    const Vec u2 = f.pw(b.u(), 2), u2r = f.m(u2, b.r());
    const Subspace ht = span_of({b.one(), u2r, b.s(), f.m(u2r, b.s())}, 32);
    const QuotientCoalgebra q = quotient_coalgebra(b.hopf, ht);
    const Vec v = q.project(b.v()), w = q.project(f.m(u2, b.v()));
    const Vec dv = half * (tensor(v, v) + tensor(w, v) + tensor(v, w) - tensor(w, w));
    const Vec dw = half * (-tensor(v, v) + tensor(w, v) + tensor(v, w) + tensor(w, w));
    CHECK(equal(comultiply(q.coalgebra, v), dv));
    CHECK(equal(comultiply(q.coalgebra, w), dw));
    // v = vs and vr = vrs = u^2 v modulo B H~+
    CHECK(equal(q.project(f.m(b.v(), b.s())), v));
    CHECK(equal(q.project(f.m(b.v(), b.r())), w));
    CHECK(equal(q.project(f.m({b.v(), b.r(), b.s()})), w));
    const Cyclo a = (Cyclo(1) + i_) / Cyclo(2), c = (Cyclo(1) - i_) / Cyclo(2);
    const Vec g = a * v + c * w;
    CHECK(equal(comultiply(q.coalgebra, g), tensor(g, g)));
    CHECK(counit(q.coalgebra, g) == Cyclo(1));
  }
}

TEST_CASE("characters chi1, chi2, chi3") {
  for (const Cyclo& z : kRoots) {
    CAPTURE(z.str());
    const Fixture& f = fixture(z);
    const Biproduct& b = f.b;
    const ChiTriple chi = reconstruct_chi(b);
    CHECK(chi.all.size() == 8);
    auto values = [&](const Vec& c) {
      return std::vector<Cyclo>{pairing(c, b.u()), pairing(c, b.v()), pairing(c, b.r()), pairing(c, b.s())};
    };
    CHECK(values(chi.chi1) == std::vector<Cyclo>{1, -1, 1, 1});
    CHECK(values(chi.chi2) == std::vector<Cyclo>{1, 1, -1, 1});
    CHECK(values(chi.chi3) == std::vector<Cyclo>{1, 1, 1, -1});
    CHECK(equal(Vec(psi_automorphism(b.hopf.coalgebra, chi.chi1) * b.v()), Vec(-b.v())));
    CHECK(psi_eigen_mismatches(b, chi) == 0);
    // chi2, chi3 are pulled back from characters of H along pi_H.
    for (int idx = 0; idx < 32; ++idx) {
      const int a = idx / 4, slot = idx % 4;
      const Cyclo eps_a = f.a.hopf.coalgebra.counit(a);
      const int r_bit = slot / 2, s_bit = slot % 2;
      CHECK(chi.chi2(idx) == eps_a * Cyclo(r_bit ? -1 : 1));
      CHECK(chi.chi3(idx) == eps_a * Cyclo(s_bit ? -1 : 1));
    }
    // Central characters: b -> chi(b_(1)) b_(2) agrees with b -> b_(1) chi(b_(2)).
    std::vector<std::string> central;
    for (int mask = 0; mask < 8; ++mask) {
      const Vec c = chi_product(b, chi, mask);
      if (equal(left_psi(b.hopf.coalgebra, c), psi_automorphism(b.hopf.coalgebra, c))) central.push_back(chi_name(mask));
    }
    CHECK(central == std::vector<std::string>{"eps", "chi1"});
  }
  CHECK_THROWS_AS(reconstruct_chi(build_biproduct(build_family2(Cyclo(1)))), ReconstructionFailed);
}

TEST_CASE("invariant subalgebras") {
  for (const Cyclo& z : kRoots) {
    CAPTURE(z.str());
    const Fixture& f = fixture(z);
    const Biproduct& b = f.b;
    const ChiTriple chi = reconstruct_chi(b);
    const Subspace inv = invariant_subalgebra(b, chi);
    CHECK(inv == span_of({b.one(), b.u(), f.pw(b.u(), 2), f.pw(b.u(), 3)}, 32));
    CHECK(fixed_space_of(b, chi.all) == inv);
    const Subspace g6 = fixed_space_of(b, {chi.chi3, chi_product(b, chi, 3)});
    CHECK(g6.contains(b.u()));
    CHECK(g6.contains(f.m(b.v(), b.r())));
  }
}

TEST_CASE("isomorphism to the negative root") {
  for (const Cyclo& z : kRoots) {
    CAPTURE(z.str());
    const Fixture& f = fixture(z);
    const Fixture& g = fixture(-z);
    const Mat fw = explicit_iso_to_negative(f.b, g.b);
    const Mat bw = explicit_iso_to_negative(g.b, f.b);
    CHECK(is_hopf_iso(fw, f.b.hopf, g.b.hopf).ok);
    CHECK(equal(Mat(bw * fw), Mat(Mat::Identity(32, 32))));
    CHECK(equal(Mat(fw * bw), Mat(Mat::Identity(32, 32))));
    const Vec fv = fw * f.b.v();
    const Vec u = g.b.u();
    const Vec expect = half * (g.b.one() - z * u + g.pw(u, 2) + z * g.pw(u, 3));
    CHECK(equal(g.pw(fv, 2), expect));
    CHECK(equal(Vec(fw * f.pw(f.b.v(), 2)), expect));
  }
}

TEST_CASE("group-like lattice") {
  const std::vector<std::set<std::string>> expected_gammas{
      {"eps", "chi1", "chi2", "chi1chi2"},      {"eps", "chi1", "chi3", "chi1chi3"},
      {"eps", "chi1", "chi2chi3", "chi1chi2chi3"}, {"eps", "chi2", "chi3", "chi2chi3"},
      {"eps", "chi2", "chi1chi3", "chi1chi2chi3"}, {"eps", "chi3", "chi1chi2", "chi1chi2chi3"},
      {"eps", "chi2chi3", "chi1chi3", "chi1chi2"}};
  for (const Cyclo& z : kRoots) {
    CAPTURE(z.str());
    const Fixture& f = fixture(z);
    const Biproduct& b = f.b;
    const ChiTriple chi = reconstruct_chi(b);
    const GroupLattice lat = grouplike_lattice(b, chi);
    CHECK(lat.grouplikes.elements.size() == 8);
    CHECK(lat.grouplike_subgroups.size() == 7);
    CHECK(order4_subgroups(lat.grouplikes).size() == 7);
    CHECK(order4_subgroups(lat.characters).size() == 7);
    REQUIRE(lat.gammas.size() == 7);
    for (std::size_t k = 0; k < 7; ++k) {
      std::set<std::string> names;
      for (int m : lat.gammas[k].members) names.insert(chi_name(m));
      CHECK(names == expected_gammas[k]);
      CHECK(lat.gammas[k].label == "Gamma" + std::to_string(k + 1));
    }
    int normal = 0;
    for (const auto& sub : lat.grouplike_subgroups) {
      if (normal_hopf_subalgebra_check(b.hopf, span_of_members(lat.grouplikes, sub.members))) ++normal;
    }
    CHECK(normal == 1);
  }
}
