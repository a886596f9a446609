#include "ydb/proofreplay.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <numeric>

namespace ydb {

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string canonical(const Vec& v) {
  std::string s;
  for (Index i = 0; i < v.size(); ++i) {
    if (i) s += ';';
    s += v(i).str();
  }
  return s;
}

std::string canonical(const Subspace& sp) {
  std::string s = "dim=" + std::to_string(sp.dim());
  for (Index i = 0; i < sp.dim(); ++i) s += "|" + canonical(Vec(sp.basis_vector(i)));
  return s;
}

const TraceStep& CaseTrace::step(const std::string& id) const {
  for (const auto& s : steps) {
    if (s.id == id) return s;
  }
  throw Error("trace has no step " + id);
}

bool CaseTrace::all_verified() const {
  return std::all_of(steps.begin(), steps.end(),
                     [](const TraceStep& s) { return s.verified || s.status == "cited, not machine-verified"; });
}

namespace {

const char* kVerified = "verified";
const char* kCited = "cited, not machine-verified";

std::string yes_no(bool b) { return b ? "yes" : "no"; }

class StepBuilder {
 public:
  StepBuilder(std::string id, std::string anchor, std::string claim) {
    step_.id = std::move(id);
    step_.anchor = std::move(anchor);
    step_.claim = std::move(claim);
  }

  StepBuilder& fact(const std::string& key, const std::string& value) {
    step_.facts.emplace_back(key, value);
    data_ += key + "=" + value + "\n";
    return *this;
  }
  StepBuilder& data(const std::string& text) {
    data_ += text + "\n";
    return *this;
  }
  /// Records a checked premise; a false premise fails the step.
  StepBuilder& require(bool ok, const std::string& what) {
    fact(what, ok ? "holds" : "FAILS");
    if (!ok && failure_.empty()) failure_ = what;
    return *this;
  }

  TraceStep finish() {
    if (!failure_.empty()) throw ReplayFailure(step_.id + ": " + failure_);
    step_.verified = true;
    step_.status = kVerified;
    step_.digest = fnv1a_hex(step_.id + "\n" + data_);
    return step_;
  }

 private:
  TraceStep step_;
  std::string data_;
  std::string failure_;
};

// b -> chi(b_(1)) b_(2)
Mat left_psi(const CoalgebraData& c, const Vec& chi) {
  Mat m = Mat::Zero(c.dim, c.dim);
  for (int i = 0; i < c.dim; ++i) {
    for (const auto& t : c.comult[static_cast<std::size_t>(i)]) m(t.right, i) += t.coeff * chi(t.left);
  }
  return m;
}

bool contains_vec(const std::vector<Vec>& xs, const Vec& x) {
  return std::any_of(xs.begin(), xs.end(), [&](const Vec& y) { return equal(x, y); });
}

bool same_set(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const Vec& x) { return contains_vec(b, x); });
}

// Everything the replay needs from one biproduct.
struct Side {
  const Biproduct& b;
  std::string label;
  ChiTriple chi;
  GroupLattice lattice;
  std::vector<Mat> psis;
  Subspace coinv;
  Vec u2, u3;
  int ord_v = 0;

  Side(const Biproduct& bb, std::string name)
      : b(bb),
        label(std::move(name)),
        chi(reconstruct_chi(bb)),
        lattice(grouplike_lattice(bb, chi)),
        psis(psi_family(bb, chi.all)),
        coinv(coinvariants(bb)),
        u2(power(bb.hopf.algebra, bb.u(), 2)),
        u3(power(bb.hopf.algebra, bb.u(), 3)),
        ord_v(element_order(bb.hopf.algebra, bb.v())) {}

  Vec mul(const Vec& x, const Vec& y) const { return multiply(b.hopf.algebra, x, y); }
  Vec pw(const Vec& x, int e) const { return power(b.hopf.algebra, x, e); }
  std::string name(const Vec& x) const {
    for (std::size_t k = 0; k < lattice.grouplikes.elements.size(); ++k) {
      if (equal(lattice.grouplikes.elements[k], x)) return lattice.grouplike_names[k];
    }
    if (equal(x, b.u())) return "u";
    if (equal(x, u3)) return "u^3";
    return "element[" + fnv1a_hex(canonical(x)) + "]";
  }
  std::vector<Vec> group(const std::vector<std::string>& names) const {
    std::vector<Vec> out;
    for (const auto& n : names) {
      Vec x = b.one();
      if (n.find("u^2") != std::string::npos) x = mul(x, u2);
      if (n.find('r') != std::string::npos) x = mul(x, b.r());
      if (n.find('s') != std::string::npos) x = mul(x, b.s());
      out.push_back(x);
    }
    return out;
  }
  Subspace u_span() const { return Subspace::span({b.one(), b.u(), u2, u3}, b.dim()); }
};

std::vector<Vec> gamma_characters(const Side& side, int gamma) {
  std::vector<Vec> out;
  for (int mask : gamma_masks()[static_cast<std::size_t>(gamma)]) out.push_back(chi_product(side.b, side.chi, mask));
  return out;
}

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i];
  return s;
}

class Replayer {
 public:
  Replayer(const Biproduct& b, const Biproduct& bp)
      : z_(b, fourth_root_name(b.zeta)), x_(bp, fourth_root_name(bp.zeta)) {}

  CaseTrace run() {
    CaseTrace t;
    t.zeta = z_.label;
    t.xi = x_.label;
    t.steps.push_back(s0());
    t.steps.push_back(s1());
    t.steps.push_back(s2());
    t.steps.push_back(s3());
    t.steps.push_back(s3_cited());
    t.steps.push_back(s4());
    t.steps.push_back(s5(t.cases));
    t.steps.push_back(s6_s7("S6", 5, z_.mul(z_.b.v(), z_.b.r()), "vr", t.cases));
    t.steps.push_back(s6_s7("S7", 6, z_.b.prod({z_.b.v(), z_.b.r(), z_.b.s()}), "vrs", t.cases));
    t.steps.push_back(s8(t.cases));
    t.steps.push_back(s9(t.cases));
    t.verdict = "NotIsomorphic";
    return t;
  }

 private:
  TraceStep s0() {
    StepBuilder sb("S0", "character reconstruction and central character",
                   "chi1, chi2, chi3 are reconstructed from the psi-eigenvalues on both sides and chi1 is the unique "
                   "nontrivial central character");
    for (const Side* s : {&z_, &x_}) {
      std::vector<std::string> central;
      for (int mask = 0; mask < 8; ++mask) {
        const Vec& c = s->lattice.characters.elements[static_cast<std::size_t>(mask)];
        if (equal(left_psi(s->b.hopf.coalgebra, c), psi_automorphism(s->b.hopf.coalgebra, c))) {
          central.push_back(chi_name(mask));
        }
      }
      sb.fact(s->label + ": characters", std::to_string(s->chi.all.size()));
      sb.fact(s->label + ": central characters", join(central));
      sb.data(canonical(s->chi.chi1) + "|" + canonical(s->chi.chi2) + "|" + canonical(s->chi.chi3));
      sb.require(s->chi.all.size() == 8, s->label + ": eight characters");
      sb.require(central == std::vector<std::string>{"eps", "chi1"}, s->label + ": chi1 unique nontrivial central");
      sb.require(psi_eigen_mismatches(s->b, s->chi) == 0, s->label + ": psi eigenvalue table");
    }
    return sb.finish();
  }

  TraceStep s1() {
    StepBuilder sb("S1", "central group-likes", "u^2 is the unique nontrivial central group-like on both sides, so f(u^2) = u'^2");
    for (const Side* s : {&z_, &x_}) {
      const auto central = central_group_likes(s->b.hopf, s->psis);
      std::vector<std::string> names;
      for (const Vec& c : central) names.push_back(s->name(c));
      sb.fact(s->label + ": central group-likes", join(names));
      for (const Vec& c : central) sb.data(canonical(c));
      sb.require(same_set(central, {s->b.one(), s->u2}), s->label + ": central group-likes are 1 and u^2");
    }
    return sb.finish();
  }

  TraceStep s2() {
    StepBuilder sb("S2", "characters of the subalgebra generated by u",
                   "the characters of K<u> take the u-values i, -1, -i, 1; fixing eps and the value on u^2 leaves two "
                   "matchings, which force f(u) in {u', u'^3}");
    Presentation pu;
    pu.generators = {"u"};
    pu.bounds = {4};
    pu.powers = {{0, 4, {{{}, Cyclo(1)}}}};
    pu.declared_dim = 4;
    const auto chars = characters(pu);
    // Embeddings K<u> -> B and K<u'> -> B'; the relation u^4 = 1 is re-checked.
    const Mat ez = algebra_map_from_generators(pu, z_.b.hopf.algebra, {z_.b.u()});
    const Mat ex = algebra_map_from_generators(pu, x_.b.hopf.algebra, {x_.b.u()});
    sb.require(rank(ez) == 4 && rank(ex) == 4, "K<u> embeds in both biproducts");

    std::vector<Cyclo> uvals;
    for (const Vec& c : chars) uvals.push_back(c(1));
    std::vector<Cyclo> expect{Cyclo::iota(), Cyclo(-1), -Cyclo::iota(), Cyclo(1)};
    std::vector<std::string> names;
    for (const Cyclo& v : uvals) names.push_back(v.str());
    sb.fact("u-values", join(names));
    sb.require(std::is_permutation(uvals.begin(), uvals.end(), expect.begin()), "u-values are i, -1, -i, 1");

    // Pull-back matchings phi' -> phi' o f that fix eps and preserve the value on u^2.
    const int n = static_cast<int>(chars.size());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    int total = 0;
    std::vector<Vec> solutions;
    do {
      ++total;
      bool ok = true;
      for (int k = 0; k < n && ok; ++k) {
        const Vec& src = chars[static_cast<std::size_t>(k)];
        const Vec& img = chars[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
        if (src(1).is_one() != img(1).is_one()) ok = false;  // counit
        if (!(src(2) == img(2))) ok = false;                 // value on u^2
      }
      if (!ok) continue;
      // Solve for z in K<u'> with phi'(z) = (phi' o f)(u) for every phi'.
      Mat vals(n, 4);
      Vec rhs(n);
      for (int k = 0; k < n; ++k) {
        vals.row(k) = chars[static_cast<std::size_t>(k)].transpose();
        rhs(k) = chars[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])](1);
      }
      solutions.push_back(ex * (inverse(vals) * rhs));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<std::string> sol_names;
    for (const Vec& s : solutions) {
      sol_names.push_back(x_.name(s));
      sb.data(canonical(s));
    }
    sb.fact("bijections", std::to_string(total));
    sb.fact("admissible matchings", std::to_string(solutions.size()));
    sb.fact("f(u) candidates", join(sol_names));
    sb.require(solutions.size() == 2, "two admissible matchings");
    sb.require(same_set(solutions, {x_.b.u(), x_.u3}), "f(u) in {u', u'^3}");
    return sb.finish();
  }

  TraceStep s3() {
    StepBuilder sb("S3", "normal Hopf subalgebra of dimension four",
                   "among the seven group-like-spanned four-dimensional Hopf subalgebras exactly Span(1, u^2, s, u^2 s) "
                   "is normal, hence f(s) in {s', u'^2 s'}");
    for (const Side* s : {&z_, &x_}) {
      std::vector<std::string> normal;
      Subspace found;
      for (const auto& sub : s->lattice.grouplike_subgroups) {
        const Subspace span = span_of_members(s->lattice.grouplikes, sub.members);
        if (normal_hopf_subalgebra_check(s->b.hopf, span)) {
          std::vector<std::string> names;
          for (int m : sub.members) names.push_back(s->lattice.grouplike_names[static_cast<std::size_t>(m)]);
          normal.push_back("{" + join(names) + "}");
          found = span;
        }
      }
      sb.fact(s->label + ": candidates", std::to_string(s->lattice.grouplike_subgroups.size()));
      sb.fact(s->label + ": normal", join(normal));
      sb.require(s->lattice.grouplike_subgroups.size() == 7 && normal.size() == 1, s->label + ": exactly one normal candidate");
      const Subspace expect = Subspace::span(s->group({"1", "u^2", "s", "u^2s"}), s->b.dim());
      sb.require(found == expect, s->label + ": it is Span(1, u^2, s, u^2 s)");
      sb.data(canonical(found));
    }
    // Group-likes in the normal subalgebra of B' other than f(1) = 1' and f(u^2) = u'^2.
    std::vector<Vec> images;
    for (const Vec& g : x_.group({"s", "u^2s"})) images.push_back(g);
    std::vector<Vec> left;
    for (const Vec& g : x_.group({"1", "u^2", "s", "u^2s"})) {
      if (!equal(g, x_.b.one()) && !equal(g, x_.u2)) left.push_back(g);
    }
    std::vector<std::string> names;
    for (const Vec& g : left) names.push_back(x_.name(g));
    sb.fact("f(s) candidates", join(names));
    sb.require(same_set(left, images), "f(s) in {s', u'^2 s'}");
    return sb.finish();
  }

  static TraceStep s3_cited() {
    TraceStep t;
    t.id = "S3c";
    t.anchor = "normal Hopf subalgebra of dimension four";
    t.claim = "no four-dimensional normal Hopf subalgebra exists outside the group-like-spanned candidates";
    t.verified = false;
    t.status = kCited;
    t.digest = fnv1a_hex(t.id + "\n" + t.claim);
    return t;
  }

  TraceStep s4() {
    StepBuilder sb("S4", "image of s",
                   "in B / B Span<u^2 s>^+ the class of u is group-like while u', u'^3 are not among the c'_i, d'_i; "
                   "so f(s) = s' and f(r) in {r', r's', u'^2 r', u'^2 r's'}");
    const Subspace hs = Subspace::span(z_.group({"1", "u^2s"}), z_.b.dim());
    const QuotientCoalgebra q = quotient_coalgebra(z_.b.hopf, hs);
    const Vec ubar = q.project(z_.b.u());
    sb.fact("quotient dimension", std::to_string(q.coalgebra.dim));
    sb.data(canonical(q.ideal));
    sb.require(is_group_like(q.coalgebra, ubar), "class of u is group-like");
    sb.require(x_.coinv.contains(x_.b.u()) && x_.coinv.contains(x_.u3), "u', u'^3 are coinvariants");
    bool hit = false;
    for (const char* p : {"c", "d"}) {
      for (int i = 1; i <= 4; ++i) {
        const Vec& e = x_.b.element(p + std::to_string(i));
        if (equal(e, x_.b.u()) || equal(e, x_.u3)) hit = true;
      }
    }
    sb.require(!hit, "u', u'^3 not in {c'_i, d'_i}");
    std::vector<Vec> rest;
    const auto taken = x_.group({"1", "u^2", "s", "u^2s"});
    for (const Vec& g : x_.lattice.grouplikes.elements) {
      if (!contains_vec(taken, g)) rest.push_back(g);
    }
    std::vector<std::string> names;
    for (const Vec& g : rest) names.push_back(x_.name(g));
    sb.fact("f(r) candidates", join(names));
    sb.require(same_set(rest, x_.group({"r", "rs", "u^2r", "u^2rs"})), "f(r) in {r', r's', u'^2 r', u'^2 r's'}");
    return sb.finish();
  }

  TraceStep s5(std::vector<CaseOutcome>& cases) {
    StepBuilder sb("S5", "subgroups of the character group",
                   "G(B*) has seven subgroups of order four; Gamma1-Gamma3 contain chi1 while the image of <chi2', chi3'> "
                   "cannot");
    for (const Side* s : {&z_, &x_}) {
      std::vector<std::string> names;
      for (const auto& g : s->lattice.gammas) {
        std::vector<std::string> m;
        for (int k : g.members) m.push_back(chi_name(k));
        names.push_back(g.label + "={" + join(m) + "}");
      }
      sb.fact(s->label + ": subgroups", join(names));
      sb.require(s->lattice.gammas.size() == 7, s->label + ": seven subgroups of order four");
    }
    const auto& g4 = x_.lattice.gammas[3].members;
    sb.require(std::find(g4.begin(), g4.end(), 1) == g4.end(), "<chi2', chi3'> does not contain chi1'");
    for (int k = 0; k < 3; ++k) {
      const auto& m = z_.lattice.gammas[static_cast<std::size_t>(k)].members;
      const bool has = std::find(m.begin(), m.end(), 1) != m.end();
      sb.require(has, z_.lattice.gammas[static_cast<std::size_t>(k)].label + " contains chi1");
      cases.push_back({z_.lattice.gammas[static_cast<std::size_t>(k)].label, "", "S5", "contains the central character chi1"});
    }
    return sb.finish();
  }

  TraceStep s6_s7(const std::string& id, int gamma, const Vec& w, const std::string& wname,
                  std::vector<CaseOutcome>& cases) {
    const std::string label = z_.lattice.gammas[static_cast<std::size_t>(gamma)].label;
    StepBuilder sb(id, "noncommuting invariants for " + label,
                   "the psi-fixed space of " + label + " contains u and " + wname +
                       ", which do not commute, while B'^coH is commutative");
    const Subspace fixed = fixed_space_of(z_.b, gamma_characters(z_, gamma));
    sb.fact("fixed space dimension", std::to_string(fixed.dim()));
    sb.data(canonical(fixed));
    sb.require(fixed.contains(z_.b.u()), "u is fixed");
    sb.require(fixed.contains(w), wname + " is fixed");
    sb.require(!commute(z_.b.hopf.algebra, z_.b.u(), w), "u and " + wname + " do not commute");
    bool comm = true;
    for (Index i = 0; i < x_.coinv.dim(); ++i) {
      for (Index j = 0; j < x_.coinv.dim(); ++j) {
        if (!commute(x_.b.hopf.algebra, x_.coinv.basis_vector(i), x_.coinv.basis_vector(j))) comm = false;
      }
    }
    sb.require(comm, "B'^coH is commutative");
    cases.push_back({label, "", id, "u and " + wname + " are fixed but do not commute"});
    return sb.finish();
  }

  // Shared part of S8 and S9: b is in the fixed space of gamma, not in K<u>,
  // its class is group-like in the quotient, and its order is ord(v_zeta).
  void order_case(StepBuilder& sb, const Subspace& fixed, const Subspace& hsub, const Vec& b, const std::string& bname) {
    const QuotientCoalgebra q = quotient_coalgebra(z_.b.hopf, hsub);
    sb.data(canonical(q.ideal));
    sb.data(canonical(b));
    sb.require(fixed.contains(b), bname + " is fixed");
    sb.require(!z_.u_span().contains(b), bname + " is not in Span(1, u, u^2, u^3)");
    sb.require(is_group_like(q.coalgebra, q.project(b)), "class of " + bname + " is group-like");
    const int ord = element_order(z_.b.hopf.algebra, b);
    sb.fact("ord(" + bname + ")", std::to_string(ord));
    sb.require(ord == z_.ord_v, "ord(" + bname + ") = ord(v_" + z_.label + ")");
    sb.require(ord != x_.ord_v, "ord(" + bname + ") != ord(v_" + x_.label + ")");
  }

  // f(H~) = H' for H~ = <u^2 r, s> when f(r) in {u'^2 r', u'^2 r's'}, and
  // f(H) = H' when f(r) in {r', r's'}.
  void transport_check(StepBuilder& sb, bool twisted) {
    const Subspace hp = h_part(x_.b);
    for (const char* fr : twisted ? std::vector<const char*>{"u^2r", "u^2rs"} : std::vector<const char*>{"r", "rs"}) {
      const Vec img_r = x_.group({fr})[0];
      const Vec gen = twisted ? x_.mul(x_.u2, img_r) : img_r;  // image of u^2 r or r
      const Subspace span = Subspace::span({x_.b.one(), gen, x_.b.s(), x_.mul(gen, x_.b.s())}, x_.b.dim());
      sb.require(span == hp, std::string("f(r) = ") + fr + "': image of the subalgebra is H'");
    }
  }

  TraceStep s8(std::vector<CaseOutcome>& cases) {
    const std::string label = z_.lattice.gammas[3].label;
    StepBuilder sb("S8", "order clash for " + label,
                   "for " + label + " both f(r) alternatives produce a group-like class whose order is ord(v) != ord(v')");
    const Subspace fixed = fixed_space_of(z_.b, gamma_characters(z_, 3));
    sb.require(fixed == z_.coinv, "fixed space equals B^coH");
    const Vec v = z_.b.v();
    transport_check(sb, false);
    order_case(sb, fixed, h_part(z_.b), v, "v");
    cases.push_back({label, "f(r) in {r', r's'}", "S8", "class of v in B/BH+ is group-like and ord(v) != ord(v')"});

    transport_check(sb, true);
    const Subspace ht = Subspace::span(z_.group({"1", "u^2r", "s", "u^2rs"}), z_.b.dim());
    const Cyclo a = (Cyclo(1) + Cyclo::iota()) / Cyclo(2), c = (Cyclo(1) - Cyclo::iota()) / Cyclo(2);
    const Vec u2v = z_.mul(z_.u2, v);
    const Vec g = a * v + c * u2v;
    const Vec v2 = z_.pw(v, 2);
    sb.require(equal(z_.pw(g, 2), z_.mul(z_.u2, v2)), "g^2 = u^2 v^2");
    sb.require(equal(z_.pw(g, 4), z_.pw(v, 4)), "g^4 = v^4");
    order_case(sb, fixed, ht, g, "g");
    cases.push_back({label, "f(r) in {u'^2 r', u'^2 r's'}", "S8",
                     "class of g = (1+i)/2 v + (1-i)/2 u^2 v in B/BH~+ is group-like and ord(g) != ord(v')"});
    return sb.finish();
  }

  TraceStep s9(std::vector<CaseOutcome>& cases) {
    const std::string label = z_.lattice.gammas[4].label;
    StepBuilder sb("S9", "order clash for " + label,
                   "for " + label + " both f(r) alternatives produce a group-like class whose order is ord(v) != ord(v')");
    const Subspace fixed = fixed_space_of(z_.b, gamma_characters(z_, 4));
    sb.require(fixed.contains(z_.b.u()), "u is fixed");
    const Vec v = z_.b.v();
    const Vec vs = z_.mul(v, z_.b.s());
    const Vec v2 = z_.pw(v, 2), v4 = z_.pw(v, 4);
    sb.require(equal(z_.pw(vs, 2), z_.mul(z_.u2, v2)), "(vs)^2 = u^2 v^2");
    sb.require(equal(z_.pw(vs, 4), v4), "(vs)^4 = v^4");
    transport_check(sb, false);
    order_case(sb, fixed, h_part(z_.b), vs, "vs");
    cases.push_back({label, "f(r) in {r', r's'}", "S9", "class of vs in B/BH+ is group-like and ord(vs) != ord(v')"});

    transport_check(sb, true);
    const Subspace ht = Subspace::span(z_.group({"1", "u^2r", "s", "u^2rs"}), z_.b.dim());
    const Cyclo a = (Cyclo(1) + Cyclo::iota()) / Cyclo(2), c = (Cyclo(1) - Cyclo::iota()) / Cyclo(2);
    const Vec g = a * vs + c * z_.mul(z_.u2, vs);
    sb.require(equal(z_.pw(g, 2), v2), "g^2 = v^2");
    sb.require(equal(z_.pw(g, 4), v4), "g^4 = v^4");
    order_case(sb, fixed, ht, g, "g");
    cases.push_back({label, "f(r) in {u'^2 r', u'^2 r's'}", "S9",
                     "class of g = (1+i)/2 vs + (1-i)/2 u^2 vs in B/BH~+ is group-like and ord(g) != ord(v')"});
    sb.fact("ord(v_" + z_.label + ")", std::to_string(z_.ord_v));
    sb.fact("ord(v_" + x_.label + ")", std::to_string(x_.ord_v));
    sb.require(z_.ord_v != x_.ord_v, "ord(v) != ord(v')");
    return sb.finish();
  }

  Side z_;
  Side x_;
};

}  // namespace

CaseTrace replay_nonisomorphism(const Biproduct& b, const Biproduct& bp) {
  if (b.family != 1 || bp.family != 1) throw WrongCase("the replay covers family-1 biproducts");
  if (is_primitive_fourth_root(b.zeta) == is_primitive_fourth_root(bp.zeta)) {
    throw WrongCase("exactly one of the two roots must be primitive");
  }
  return Replayer(b, bp).run();
}

Verdict classify_pair(int family, const Cyclo& zeta, const Cyclo& xi) {
  if (family != 1) throw WrongCase("biproduct classification is replayed for family 1");
  if (!is_fourth_root_of_unity(zeta) || !is_fourth_root_of_unity(xi)) throw InvalidRoot("roots must satisfy z^4 = 1");
  const Biproduct b = build_biproduct(build_family1(zeta));
  const Biproduct bp = zeta == xi ? b : build_biproduct(build_family1(xi));
  Verdict v;
  if (is_primitive_fourth_root(zeta) != is_primitive_fourth_root(xi)) {
    v.isomorphic = false;
    v.trace = replay_nonisomorphism(b, bp);
    return v;
  }
  v.isomorphic = true;
  if (zeta == xi) {
    v.witness = Mat(Mat::Identity(b.dim(), b.dim()));
    v.witness_name = "identity";
  } else {
    v.witness = explicit_iso_to_negative(b, bp);
    v.witness_name = "sign change";
  }
  const IsoCheck check = is_hopf_iso(*v.witness, b.hopf, bp.hopf);
  v.witness_check = check.ok ? "" : check.reason;
  return v;
}

const std::vector<Cyclo>& fourth_roots() {
  static const std::vector<Cyclo> roots{Cyclo(1), Cyclo(-1), Cyclo::iota(), -Cyclo::iota()};
  return roots;
}

std::vector<std::vector<MatrixCell>> classification_matrix(Level level, int family, bool full_search) {
  const auto& roots = fourth_roots();
  std::vector<std::vector<MatrixCell>> out(roots.size());
  std::vector<YDHopfAlgebra> algebras;
  if (level == Level::YD) {
    for (const Cyclo& z : roots) algebras.push_back(build_family(family, z));
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < roots.size(); ++j) {
      MatrixCell cell;
      cell.zeta = fourth_root_name(roots[i]);
      cell.xi = fourth_root_name(roots[j]);
      if (level == Level::YD) {
        cell.witnesses = static_cast<int>(yd_iso_search(algebras[i], algebras[j], full_search).size());
        cell.isomorphic = cell.witnesses > 0;
      } else {
        cell.verdict = classify_pair(family, roots[i], roots[j]);
        cell.isomorphic = cell.verdict->isomorphic;
      }
      out[i].push_back(std::move(cell));
    }
  }
  return out;
}

}  // namespace ydb
