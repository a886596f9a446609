// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ydb/proofreplay.hpp"
#include "ydb/serialize.hpp"

using namespace ydb;

namespace {

const Cyclo i_ = Cyclo::iota();

struct Outcome {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      note = what;
    }
  }
};

struct Built {
  std::vector<YDHopfAlgebra> a1, a2;
  std::vector<Biproduct> b;
};

const Built& built() {
  static const Built data = [] {
    Built d;
    for (const Cyclo& z : fourth_roots()) {
      d.a1.push_back(build_family1(z));
      d.a2.push_back(build_family2(z));
      d.b.push_back(build_biproduct(d.a1.back()));
    }
    return d;
  }();
  return data;
}

bool contains(const std::vector<Vec>& xs, const Vec& x) {
  for (const Vec& y : xs) {
    if (equal(x, y)) return true;
  }
  return false;
}

Outcome criterion1() {
  Outcome o;
  o.require(check_hopf(group_algebra()).all_pass(), "K[Z2 x Z2]");
  const auto& d = built();
  for (std::size_t k = 0; k < 4; ++k) {
    const std::string z = fourth_root_name(d.b[k].zeta);
    const AxiomReport hb = check_hopf(d.b[k].hopf);
    o.require(hb.all_pass() && hb.results.size() == 7, "check_hopf B_" + z);
    o.require(verify_yd_axioms(d.a1[k]).all_pass(), "family 1 A_" + z);
    o.require(verify_yd_axioms(d.a2[k]).all_pass(), "family 2 A_" + z);
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const Biproduct& b : built().b) {
    const AlgebraData s = straighten(biproduct_presentation(b.zeta));
    o.require(s.dim == 32 && s.mult == b.hopf.algebra.mult && equal(s.unit, b.hopf.algebra.unit),
              "table mismatch for zeta = " + fourth_root_name(b.zeta));
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto& d = built();
  for (const auto* fam : {&d.a1, &d.a2}) {
    for (std::size_t p = 0; p < 4; ++p) {
      for (std::size_t q = 0; q < 4; ++q) {
        const auto pruned = yd_iso_search((*fam)[p], (*fam)[q]);
        const auto full = yd_iso_search((*fam)[p], (*fam)[q], true);
        const std::string tag = "family " + std::to_string((*fam)[p].family) + " pair (" +
                                fourth_root_name((*fam)[p].zeta) + ", " + fourth_root_name((*fam)[q].zeta) + ")";
        o.require(pruned.size() == full.size(), tag + ": pruned and full searches differ");
        for (std::size_t k = 0; k < std::min(pruned.size(), full.size()); ++k) {
          o.require(equal(pruned[k], full[k]), tag + ": pruned and full searches differ");
        }
        if (p != q) {
          o.require(full.empty(), tag + ": unexpected isomorphism");
        } else {
          o.require(full.size() >= 4, tag + ": fewer than 4 automorphisms");
          for (const Mat& g : (*fam)[p].action) {
            bool found = false;
            for (const Mat& f : full) found = found || equal(f, g);
            o.require(found, tag + ": action automorphism missing");
          }
        }
      }
    }
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto& d = built();
  auto check = [&](const YDHopfAlgebra& a, const Cyclo& c4) {
    const auto& alg = a.hopf.algebra;
    const Vec y2 = power(alg, a.y(), 2), y4 = power(alg, a.y(), 4), y6 = power(alg, a.y(), 6);
    // family 1: y^6 - y^4 + y^2 - 1; family 2: y^6 - zeta y^4 - y^2 + zeta
    const Vec direct = a.family == 1 ? Vec(y6 - y4 + y2 - alg.unit) : Vec(y6 - c4 * y4 - y2 + c4 * alg.unit);
    const std::string tag = "family " + std::to_string(a.family) + " zeta = " + fourth_root_name(a.zeta);
    o.require(is_zero_vector(direct), tag + ": relation is not zero");
    o.require(is_zero_vector(degree6_polynomial(a)) && degree6_check(a), tag + ": degree6_check");
  };
  for (std::size_t k = 0; k < 4; ++k) {
    if (!is_primitive_fourth_root(d.a1[k].zeta)) check(d.a1[k], d.a1[k].zeta);
    if (is_primitive_fourth_root(d.a2[k].zeta)) check(d.a2[k], d.a2[k].zeta);
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto& d = built();
  for (std::size_t k = 0; k < 4; ++k) {
    for (const YDHopfAlgebra* a : {&d.a1[k], &d.a2[k]}) {
      const bool prim = is_primitive_fourth_root(a->zeta);
      const bool eight = (a->family == 1) != prim;
      const auto& alg = a->hopf.algebra;
      const std::string tag = "family " + std::to_string(a->family) + " zeta = " + fourth_root_name(a->zeta);
      o.require(element_order(alg, a->y()) == (eight ? 8 : 4), tag + ": ord(y)");
      if (eight) o.require(equal(power(alg, a->y(), 4), power(alg, a->x(), 2)), tag + ": y^4 = x^2");
    }
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto& d = built();
  for (std::size_t k = 0; k < 4; ++k) {
    const Biproduct& b = d.b[k];
    const std::string z = fourth_root_name(b.zeta);
    o.require(quotient_iso_check(b, d.a1[k]).ok, "quotient_iso_check " + z);
    const Subspace co = coinvariants(b);
    o.require(co.dim() == 8, "dim coinvariants " + z);
    std::vector<Vec> cols;
    for (int c = 0; c < 8; ++c) cols.push_back(b.embed_a.col(c));
    o.require(co == span_of(cols, 32), "coinvariants = image of A " + z);
    const ChiTriple chi = reconstruct_chi(b);
    o.require(co == fixed_space_of(b, {chi.chi2, chi.chi3}), "coinvariants = fixed space " + z);
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (const Biproduct& b : built().b) {
    const std::string z = fourth_root_name(b.zeta);
    const ChiTriple chi = reconstruct_chi(b);
    o.require(psi_eigen_mismatches(b, chi) == 0, "psi_eigen_mismatches " + z);
    const Mat psis[3] = {psi_automorphism(b.hopf.coalgebra, chi.chi1), psi_automorphism(b.hopf.coalgebra, chi.chi2),
                         psi_automorphism(b.hopf.coalgebra, chi.chi3)};
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
          for (int l = 0; l < 2; ++l) {
            const Vec m = b.monomial(i, j, k, l);
            const int exps[3] = {j, k, l};
            for (int t = 0; t < 3; ++t) {
              const Vec expect = (exps[t] ? Cyclo(-1) : Cyclo(1)) * m;
              o.require(equal(Vec(psis[t] * m), expect), "eigenvalue table " + z);
            }
          }
        }
      }
    }
    const Subspace inv = invariant_subalgebra(b, chi);
    const auto& alg = b.hopf.algebra;
    o.require(inv == span_of({b.one(), b.u(), power(alg, b.u(), 2), power(alg, b.u(), 3)}, 32),
              "invariant subalgebra " + z);
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (const Biproduct& b : built().b) {
    const auto& alg = b.hopf.algebra;
    const Vec u2 = power(alg, b.u(), 2), u2r = multiply(alg, u2, b.r());
    const QuotientCoalgebra q =
        quotient_coalgebra(b.hopf, span_of({b.one(), u2r, b.s(), multiply(alg, u2r, b.s())}, 32));
    const Vec g = q.project(((Cyclo(1) + i_) / Cyclo(2)) * b.v() + ((Cyclo(1) - i_) / Cyclo(2)) * multiply(alg, u2, b.v()));
    const std::string z = fourth_root_name(b.zeta);
    o.require(equal(comultiply(q.coalgebra, g), tensor(g, g)), "Delta(g) = g (x) g for zeta = " + z);
    o.require(counit(q.coalgebra, g) == Cyclo(1), "eps(g) = 1 for zeta = " + z);
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto& d = built();
  for (std::size_t k : {std::size_t{2}, std::size_t{0}}) {  // zeta = i, zeta = 1
    const Biproduct& b = d.b[k];
    const Biproduct& n = d.b[k + 1];  // -zeta
    const Mat f = explicit_iso_to_negative(b, n);
    const Mat g = explicit_iso_to_negative(n, b);
    const IsoCheck c = is_hopf_iso(f, b.hopf, n.hopf);
    const std::string z = fourth_root_name(b.zeta);
    o.require(c.ok, "is_hopf_iso for zeta = " + z + ": " + c.reason);
    o.require(is_hopf_iso(g, n.hopf, b.hopf).ok, "reverse is_hopf_iso for zeta = " + z);
    o.require(equal(Mat(g * f), Mat(Mat::Identity(32, 32))) && equal(Mat(f * g), Mat(Mat::Identity(32, 32))),
              "compositions are identities for zeta = " + z);
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (const Biproduct& b : built().b) {
    const std::string z = fourth_root_name(b.zeta);
    const auto& alg = b.hopf.algebra;
    const ChiTriple chi = reconstruct_chi(b);
    const auto psis = psi_family(b, chi.all);
    const auto gl = group_likes(b.hopf, psis);
    std::vector<Vec> gen;
    const Vec u2 = power(alg, b.u(), 2);
    for (int a = 0; a < 2; ++a) {
      for (int c = 0; c < 2; ++c) {
        for (int e = 0; e < 2; ++e) {
          Vec x = b.one();
          if (a) x = multiply(alg, x, u2);
          if (c) x = multiply(alg, x, b.r());
          if (e) x = multiply(alg, x, b.s());
          gen.push_back(x);
        }
      }
    }
    bool same = gl.size() == 8;
    for (const Vec& x : gen) same = same && contains(gl, x);
    o.require(same, "G(B) = <u^2, r, s> for zeta = " + z);
    const auto central = central_group_likes(b.hopf, psis);
    o.require(central.size() == 2 && contains(central, b.one()) && contains(central, u2), "central group-likes " + z);
    bool elementary = chi.all.size() == 8;
    for (const Vec& c : chi.all) {
      elementary = elementary && equal(convolve(b.hopf.coalgebra, c, c), b.hopf.coalgebra.counit);
      for (const Vec& e : chi.all) elementary = elementary && contains(chi.all, convolve(b.hopf.coalgebra, c, e));
    }
    o.require(elementary, "G(B*) elementary abelian of order 8 for zeta = " + z);
    const GroupLattice lat = grouplike_lattice(b, chi);
    o.require(order4_subgroups(lat.grouplikes).size() == 7 && order4_subgroups(lat.characters).size() == 7 &&
                  lat.gammas.size() == 7,
              "seven subgroups of order 4 for zeta = " + z);
  }
  return o;
}

std::string fact(const TraceStep& s, const std::string& key) {
  for (const auto& [k, v] : s.facts) {
    if (k == key) return v;
  }
  return "";
}

Outcome criterion11(std::string& timing) {
  Outcome o;
  const auto& roots = fourth_roots();
  double worst = 0;
  for (std::size_t p = 0; p < 4; ++p) {
    for (std::size_t q = 0; q < 4; ++q) {
      const auto t0 = std::chrono::steady_clock::now();
      const Verdict v = classify_pair(1, roots[p], roots[q]);
      worst = std::max(worst, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
      const bool expect = is_primitive_fourth_root(roots[p]) == is_primitive_fourth_root(roots[q]);
      const std::string tag = "(" + fourth_root_name(roots[p]) + ", " + fourth_root_name(roots[q]) + ")";
      o.require(v.isomorphic == expect, tag + ": verdict");
      if (expect) {
        o.require(v.witness.has_value() && v.witness_check.empty(), tag + ": witness");
        continue;
      }
      if (!v.trace) {
        o.require(false, tag + ": missing trace");
        continue;
      }
      const CaseTrace& t = *v.trace;
      o.require(t.all_verified() && t.verdict == "NotIsomorphic", tag + ": trace not verified");
      std::vector<std::string> ids;
      for (const auto& s : t.steps) ids.push_back(s.id);
      for (const char* id : {"S0", "S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8", "S9"}) {
        o.require(std::find(ids.begin(), ids.end(), id) != ids.end() && t.step(id).verified, tag + ": step " + id);
      }
      const std::string& z = t.zeta;
      const std::string& x = t.xi;
      o.require(fact(t.step("S1"), z + ": central group-likes are 1 and u^2") == "holds", tag + ": S1 uniqueness");
      o.require(fact(t.step("S3"), z + ": exactly one normal candidate") == "holds", tag + ": S3 uniqueness");
      o.require(fact(t.step("S2"), "f(u) in {u', u'^3}") == "holds", tag + ": S2 matching");
      o.require(fact(t.step("S4"), "class of u is group-like") == "holds", tag + ": S4 group-like");
      o.require(fact(t.step("S8"), "class of v is group-like") == "holds" &&
                    fact(t.step("S8"), "class of g is group-like") == "holds",
                tag + ": S8 group-like");
      o.require(fact(t.step("S9"), "class of vs is group-like") == "holds" &&
                    fact(t.step("S9"), "class of g is group-like") == "holds",
                tag + ": S9 group-like");
      o.require(fact(t.step("S6"), "u and vr do not commute") == "holds", tag + ": S6");
      o.require(fact(t.step("S7"), "u and vrs do not commute") == "holds", tag + ": S7");
      o.require(fact(t.step("S9"), "(vs)^2 = u^2 v^2") == "holds", tag + ": (vs)^2");
      o.require(fact(t.step("S8"), "g^4 = v^4") == "holds", tag + ": g^4");
      const bool zp = is_primitive_fourth_root(roots[p]);
      o.require(fact(t.step("S9"), "ord(v_" + z + ")") == (zp ? "4" : "8") &&
                    fact(t.step("S9"), "ord(v_" + x + ")") == (zp ? "8" : "4"),
                tag + ": order clash");
      int cases = 0;
      for (const auto& c : t.cases) cases += !c.gamma.empty();
      o.require(cases == 9, tag + ": case coverage");
    }
  }
  const auto m = classification_matrix(Level::Biproduct, 1);
  for (std::size_t p = 0; p < 4; ++p) {
    for (std::size_t q = 0; q < 4; ++q) {
      o.require(m[p][q].isomorphic == (is_primitive_fourth_root(roots[p]) == is_primitive_fourth_root(roots[q])),
                "classification_matrix block pattern");
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "slowest pair %.1f s", worst);
  timing = buf;
  return o;
}

Outcome criterion12() {
  Outcome o;
  const auto& roots = fourth_roots();
  for (std::size_t p = 0; p < 4; ++p) {
    for (std::size_t q = 0; q < 4; ++q) {
      const std::string a = to_json(classify_pair(1, roots[p], roots[q])).dump();
      const std::string b = to_json(classify_pair(1, roots[p], roots[q])).dump();
      o.require(a == b, "classify_pair is not reproducible");
    }
  }
  const auto& d = built();
  for (std::size_t k = 0; k < 4; ++k) {
    o.require(to_json(d.b[k]).dump() == to_json(build_biproduct(build_family1(d.b[k].zeta))).dump(),
              "biproduct dump is not reproducible");
    o.require(to_json(verify_yd_axioms(d.a2[k])).dump() == to_json(verify_yd_axioms(d.a2[k])).dump(),
              "axiom report is not reproducible");
  }
  return o;
}

}  // namespace

int main() {
  struct Row {
    int id;
    const char* title;
    std::function<Outcome(std::string&)> run;
  };
  auto plain = [](Outcome (*f)()) { return [f](std::string&) { return f(); }; };
  const std::vector<Row> rows{
      {1, "axiom suite", plain(criterion1)},
      {2, "biproduct table equals straightened presentation", plain(criterion2)},
      {3, "YD isomorphism search", plain(criterion3)},
      {4, "degree-6 relations", plain(criterion4)},
      {5, "orders of y", plain(criterion5)},
      {6, "coinvariants and B/BH+", plain(criterion6)},
      {7, "psi eigenvalue table and invariants", plain(criterion7)},
      {8, "group-like class in B/BH~+", plain(criterion8)},
      {9, "isomorphism to the negative root", plain(criterion9)},
      {10, "group-likes and characters", plain(criterion10)},
      {11, "biproduct classification with traces", criterion11},
      {12, "determinism", plain(criterion12)},
  };
  int failed = 0;
  for (const auto& r : rows) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string extra;
    Outcome o;
    try {
      o = r.run(extra);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d: %s  %s (%.1f s%s%s)%s%s\n", r.id, o.pass ? "PASS" : "FAIL", r.title, s,
                extra.empty() ? "" : ", ", extra.c_str(), o.pass ? "" : ": ", o.note.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(rows.size()) - failed, rows.size());
  return failed ? 1 : 0;
}
