#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "ydb/proofreplay.hpp"
#include "ydb/serialize.hpp"

using namespace ydb;

namespace {

const Cyclo i_ = Cyclo::iota();

std::string fact(const TraceStep& s, const std::string& key) {
  for (const auto& [k, v] : s.facts) {
    if (k == key) return v;
  }
  return "<missing>";
}

void check_trace_shape(const CaseTrace& t) {
  std::vector<std::string> ids;
  for (const auto& s : t.steps) ids.push_back(s.id);
  CHECK(ids == std::vector<std::string>{"S0", "S1", "S2", "S3", "S3c", "S4", "S5", "S6", "S7", "S8", "S9"});
  CHECK(t.all_verified());
  CHECK(t.verdict == "NotIsomorphic");
  for (const auto& s : t.steps) {
    CHECK(s.digest.size() == 16);
    if (s.id == "S3c") {
      CHECK_FALSE(s.verified);
      CHECK(s.status == "cited, not machine-verified");
    } else {
      CHECK(s.verified);
      CHECK(s.status == "verified");
    }
  }
  std::map<std::string, std::set<std::string>> cases;
  for (const auto& c : t.cases) cases[c.gamma].insert(c.subcase);
  CHECK(cases.size() == 7);
  for (const char* g : {"Gamma1", "Gamma2", "Gamma3", "Gamma6", "Gamma7"}) CHECK(cases[g] == std::set<std::string>{""});
  const std::set<std::string> split{"f(r) in {r', r's'}", "f(r) in {u'^2 r', u'^2 r's'}"};
  CHECK(cases["Gamma4"] == split);
  CHECK(cases["Gamma5"] == split);
}

}  // namespace

TEST_CASE("FNV-1a digests") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("isomorphic pairs carry verified witnesses") {
  const Verdict sign = classify_pair(1, i_, -i_);
  CHECK(sign.isomorphic);
  CHECK(sign.witness_name == "sign change");
  CHECK(sign.witness_check.empty());
  CHECK_FALSE(sign.trace.has_value());
  const Biproduct b = build_biproduct(build_family1(i_));
  const Biproduct bp = build_biproduct(build_family1(-i_));
  REQUIRE(sign.witness.has_value());
  CHECK(is_hopf_iso(*sign.witness, b.hopf, bp.hopf).ok);

  const Verdict same = classify_pair(1, Cyclo(1), Cyclo(1));
  CHECK(same.isomorphic);
  CHECK(same.witness_name == "identity");
  CHECK(same.witness_check.empty());

  const Verdict neg = classify_pair(1, Cyclo(-1), Cyclo(1));
  CHECK(neg.isomorphic);
  CHECK(neg.witness_name == "sign change");
  CHECK(neg.witness_check.empty());
}

TEST_CASE("replay for (i, 1)") {
  const Verdict v = classify_pair(1, i_, Cyclo(1));
  CHECK_FALSE(v.isomorphic);
  REQUIRE(v.trace.has_value());
  const CaseTrace& t = *v.trace;
  check_trace_shape(t);
  CHECK(t.zeta == "i");
  CHECK(t.xi == "1");
  CHECK(fact(t.step("S0"), "i: central characters") == "eps, chi1");
  CHECK(fact(t.step("S2"), "admissible matchings") == "2");
  CHECK(fact(t.step("S2"), "bijections") == "24");
  CHECK(fact(t.step("S3"), "f(s) candidates") == "s, u^2s");
  CHECK(fact(t.step("S9"), "ord(v_i)") == "4");
  CHECK(fact(t.step("S9"), "ord(v_1)") == "8");
  CHECK(fact(t.step("S6"), "u and vr do not commute") == "holds");
  CHECK(fact(t.step("S7"), "u and vrs do not commute") == "holds");
  CHECK(fact(t.step("S8"), "g^4 = v^4") == "holds");
  CHECK(fact(t.step("S9"), "(vs)^2 = u^2 v^2") == "holds");
}

TEST_CASE("replay for (-1, -i) has the same shape") {
  const Verdict v = classify_pair(1, Cyclo(-1), -i_);
  CHECK_FALSE(v.isomorphic);
  REQUIRE(v.trace.has_value());
  check_trace_shape(*v.trace);
  CHECK(fact(v.trace->step("S9"), "ord(v_-1)") == "8");
  CHECK(fact(v.trace->step("S9"), "ord(v_-i)") == "4");
}

TEST_CASE("replay preconditions and failures") {
  const Biproduct b1 = build_biproduct(build_family1(Cyclo(1)));
  const Biproduct bm = build_biproduct(build_family1(Cyclo(-1)));
  CHECK_THROWS_AS(replay_nonisomorphism(b1, bm), WrongCase);
  CHECK_THROWS_AS(classify_pair(1, Cyclo(2), Cyclo(1)), InvalidRoot);
  CHECK_THROWS_AS(classify_pair(2, i_, Cyclo(1)), WrongCase);
  // B_1 relabeled as if zeta were i: the order clashes cannot verify.
  Biproduct fake = b1;
  fake.zeta = i_;
  CHECK_THROWS_AS(replay_nonisomorphism(fake, b1), ReplayFailure);
}

TEST_CASE("traces are deterministic") {
  const Biproduct bi = build_biproduct(build_family1(i_));
  const Biproduct b1 = build_biproduct(build_family1(Cyclo(1)));
  const std::string first = to_json(replay_nonisomorphism(bi, b1)).dump();
  const std::string second = to_json(replay_nonisomorphism(bi, b1)).dump();
  CHECK(first == second);
  const std::string rebuilt =
      to_json(replay_nonisomorphism(build_biproduct(build_family1(i_)), build_biproduct(build_family1(Cyclo(1))))).dump();
  CHECK(first == rebuilt);
}

TEST_CASE("classification matrices") {
  const auto& roots = fourth_roots();
  for (int fam : {1, 2}) {
    const auto yd = classification_matrix(Level::YD, fam);
    for (std::size_t p = 0; p < 4; ++p) {
      for (std::size_t q = 0; q < 4; ++q) {
        CHECK(yd[p][q].isomorphic == (p == q));
        if (p == q) CHECK(yd[p][q].witnesses >= 4);
      }
    }
  }
  const auto bm = classification_matrix(Level::Biproduct, 1);
  for (std::size_t p = 0; p < 4; ++p) {
    for (std::size_t q = 0; q < 4; ++q) {
      const bool expect = is_primitive_fourth_root(roots[p]) == is_primitive_fourth_root(roots[q]);
      CHECK(bm[p][q].isomorphic == expect);
      REQUIRE(bm[p][q].verdict.has_value());
      if (expect) {
        CHECK(bm[p][q].verdict->witness_check.empty());
      } else {
        REQUIRE(bm[p][q].verdict->trace.has_value());
        check_trace_shape(*bm[p][q].verdict->trace);
      }
    }
  }
}
