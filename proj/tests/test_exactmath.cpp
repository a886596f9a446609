#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ydb/linalg.hpp"

using namespace ydb;

namespace {

Cyclo random_cyclo(std::mt19937& rng, int height = 5) {
  std::uniform_int_distribution<int> num(-height, height);
  std::uniform_int_distribution<int> den(1, height);
  return Cyclo(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
               Rational(num(rng), den(rng)));
}

Mat random_matrix(std::mt19937& rng, int rows, int cols, int density_pct) {
  std::uniform_int_distribution<int> pct(0, 99);
  Mat m = Mat::Zero(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (pct(rng) < density_pct) m(i, j) = random_cyclo(rng, 3);
    }
  }
  return m;
}

const Cyclo w = Cyclo::omega();
const Cyclo i_ = Cyclo::iota();

}  // namespace

TEST_CASE("rational normal form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 5).str() == "0/1");
  CHECK(Rational(-6, 4).str() == "-3/2");
  CHECK(Rational::parse("10/-4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
}

TEST_CASE("rational promotion to big integers and back") {
  Rational big(std::int64_t{1} << 62);
  Rational sq = big * big;
  CHECK(sq.str() == "21267647932558653966460912964485513216/1");
  Rational back = sq / big;
  CHECK(back == big);
  CHECK(back.str() == big.str());
  Rational tiny = Rational(1) / sq;
  CHECK((tiny * sq).is_one());
  CHECK(sq > big);
  CHECK(-sq < -big);
}

TEST_CASE("cyclo_mul examples") {
  CHECK(w * w.pow(3) == Cyclo(-1));
  CHECK(i_ * i_ == Cyclo(-1));
  Cyclo a = (Cyclo(1) + i_) / Cyclo(2);
  Cyclo b = (Cyclo(1) - i_) / Cyclo(2);
  CHECK(a * b == Cyclo(Rational(1, 2)));
  CHECK(w.pow(8).is_one());
  CHECK(w.pow(4) == Cyclo(-1));
  CHECK(i_ == w * w);
}

TEST_CASE("cyclo_inv examples") {
  CHECK(w.inverse() == -w.pow(3));
  CHECK(Cyclo(2).inverse() == Cyclo(Rational(1, 2)));
  CHECK((Cyclo(1) + i_).inverse() == (Cyclo(1) - i_) / Cyclo(2));
  CHECK_THROWS_AS(Cyclo().inverse(), DivisionByZero);
}

TEST_CASE("cyclo printing and root spellings") {
  CHECK(Cyclo().str() == "0");
  CHECK(((Cyclo(1) + i_) / Cyclo(2)).str() == "1/2 + 1/2*i");
  CHECK((-w.pow(3)).str() == "-w^3");
  CHECK(parse_fourth_root("-i") == -i_);
  CHECK(fourth_root_name(Cyclo(-1)) == "-1");
  CHECK_THROWS_AS(parse_fourth_root("2"), InvalidRoot);
  CHECK(is_primitive_fourth_root(i_));
  CHECK_FALSE(is_primitive_fourth_root(Cyclo(-1)));
  CHECK_FALSE(is_fourth_root_of_unity(w));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(20240601);
  for (int t = 0; t < 300; ++t) {
    Cyclo a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    CHECK(a.norm() == (a * a.galois(3) * a.galois(5) * a.galois(7))[0]);
  }
}

TEST_CASE("square roots in K") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    Cyclo a = random_cyclo(rng, 4);
    auto r = sqrt(a * a);
    REQUIRE(r.has_value());
    CHECK(*r * *r == a * a);
  }
  // sqrt(2) = w - w^3 lies in K; sqrt(i) = w.
  auto s2 = sqrt(Cyclo(2));
  REQUIRE(s2.has_value());
  CHECK(*s2 * *s2 == Cyclo(2));
  CHECK(sqrt(i_).has_value());
  CHECK_FALSE(sqrt(Cyclo(3)).has_value());
  CHECK_FALSE(sqrt(w).has_value());
}

TEST_CASE("rational roots") {
  CHECK(*rational_root(Rational(16, 81), 4) == Rational(2, 3));
  CHECK(*rational_root(Rational(-8), 3) == Rational(-2));
  CHECK_FALSE(rational_root(Rational(-4), 2).has_value());
  CHECK_FALSE(rational_root(Rational(2), 2).has_value());
}

TEST_CASE("rref examples") {
  Mat id = Mat::Identity(3, 3);
  auto r = rref(id);
  CHECK(equal(r.reduced, id));
  CHECK(r.pivots == std::vector<Index>{0, 1, 2});

  Mat ones(2, 2);
  ones << Cyclo(1), Cyclo(1), Cyclo(1), Cyclo(1);
  auto r2 = rref(ones);
  Mat expect(2, 2);
  expect << Cyclo(1), Cyclo(1), Cyclo(0), Cyclo(0);
  CHECK(equal(r2.reduced, expect));
  CHECK(r2.pivots == std::vector<Index>{0});
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Mat(Mat::Identity(4, 4))).dim() == 0);
  CHECK(kernel(Mat(Mat::Zero(5, 5))).dim() == 5);
  CHECK(kernel(Mat(Mat::Zero(5, 5))) == Subspace::full(5));
}

TEST_CASE("kron examples") {
  CHECK(equal(kron(Mat(Mat::Identity(2, 2)), Mat(Mat::Identity(3, 3))), Mat(Mat::Identity(6, 6))));
  Mat m(1, 1);
  m(0, 0) = Cyclo(-1);
  Mat one(1, 1);
  one(0, 0) = Cyclo(1);
  CHECK(equal(kron(m, m), one));
  // Row-major index convention.
  Mat a(2, 1), b(2, 1);
  a << Cyclo(1), Cyclo(2);
  b << Cyclo(3), Cyclo(5);
  Mat ab(4, 1);
  ab << Cyclo(3), Cyclo(5), Cyclo(6), Cyclo(10);
  CHECK(equal(kron(a, b), ab));
}

TEST_CASE("linear algebra invariants on random matrices") {
  std::mt19937 rng(99);
  for (int t = 0; t < 25; ++t) {
    const int rows = 1 + static_cast<int>(rng() % 6), cols = 1 + static_cast<int>(rng() % 6);
    Mat m = random_matrix(rng, rows, cols, 40);
    if (t % 3 == 0 && rows > 1) m.row(rows - 1) = m.row(0) + Cyclo(2) * m.row(rows > 2 ? 1 : 0);
    auto r = rref(m);
    auto rr = rref(r.reduced);
    CHECK(equal(rr.reduced, r.reduced));
    CHECK(rr.pivots == r.pivots);
    CHECK(rank(m) == rank(Mat(m.transpose())));
    Subspace k = kernel(m);
    CHECK(k.dim() + r.rank() == cols);
    for (Index i = 0; i < k.dim(); ++i) CHECK(is_zero_vector(Vec(m * k.basis_vector(i))));
  }
}

TEST_CASE("subspace canonical form and quotient coordinates") {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    Mat gens = random_matrix(rng, 3, 6, 60);
    Subspace whole = Subspace::from_rows(gens);
    // Same span, different generators.
    Mat mixed = gens;
    mixed.row(0) += Cyclo::iota() * gens.row(1);
    CHECK(Subspace::from_rows(mixed) == whole);
    if (whole.dim() < 2) continue;
    Subspace sub = Subspace::span({whole.basis_vector(0)}, 6);
    Vec in_sub = Cyclo(3) * whole.basis_vector(0);
    CHECK(is_zero_vector(quotient_coords(whole, sub, in_sub)));
    Vec out_sub = whole.basis_vector(1) + in_sub;
    Vec q = quotient_coords(whole, sub, out_sub);
    CHECK_FALSE(is_zero_vector(q));
    CHECK(q.size() == whole.dim() - 1);
  }
}

TEST_CASE("quotient coordinates of complement vectors") {
  Subspace whole = Subspace::full(3);
  Subspace sub = Subspace::span({unit_vector<Cyclo>(3, 1)}, 3);
  Vec q0 = quotient_coords(whole, sub, unit_vector<Cyclo>(3, 0));
  Vec q2 = quotient_coords(whole, sub, unit_vector<Cyclo>(3, 2));
  CHECK(equal(q0, unit_vector<Cyclo>(2, 0)));
  CHECK(equal(q2, unit_vector<Cyclo>(2, 1)));
  Subspace line = Subspace::span({unit_vector<Cyclo>(3, 0)}, 3);
  CHECK_THROWS_AS(quotient_coords(line, sub, unit_vector<Cyclo>(3, 0)), MembershipViolation);
  CHECK_THROWS_AS(quotient_coords(whole, line, Vec(Vec::Zero(2))), DimensionMismatch);
}

TEST_CASE("sparse solver") {
  // x + y = 3, x - y = 1
  std::vector<std::vector<std::pair<Index, Cyclo>>> rows{{{0, Cyclo(1)}, {1, Cyclo(1)}},
                                                         {{0, Cyclo(1)}, {1, Cyclo(-1)}}};
  auto x = solve_sparse<Cyclo>(rows, {Cyclo(3), Cyclo(1)}, 2);
  REQUIRE(x.has_value());
  CHECK((*x)(0) == Cyclo(2));
  CHECK((*x)(1) == Cyclo(1));
  auto bad = solve_sparse<Cyclo>({{{0, Cyclo(1)}}, {{0, Cyclo(1)}}}, {Cyclo(1), Cyclo(2)}, 1);
  CHECK_FALSE(bad.has_value());
}

TEST_CASE("rational-scalar instantiation") {
  MatX<Rational> m(2, 3);
  m << Rational(1), Rational(2), Rational(3), Rational(2), Rational(4), Rational(6);
  CHECK(rank(m) == 1);
  CHECK(kernel(m).dim() == 2);
}
