#pragma once

// Finite-dimensional (co/bi/Hopf) algebras given by structure constants.
// Basis elements are indexed 0..dim-1; a tensor x (x) y of two vectors of a
// dim-n space is stored row-major, coordinate i*n + j.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ydb/linalg.hpp"

namespace ydb {

/// Sorted (index, coefficient) list without zero coefficients.
using SparseVec = std::vector<std::pair<int, Cyclo>>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& s, int n);
Vec basis_vector(int n, int k);

/// m(i, j, k) = coefficient of e_k in e_i * e_j, stored per pair (i, j).
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n) {}

  int dim() const { return n_; }
  const SparseVec& at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * n_ + j]; }
  SparseVec& at(int i, int j) { return cells_[static_cast<std::size_t>(i) * n_ + j]; }
  Cyclo operator()(int i, int j, int k) const;

  friend bool operator==(const Tensor3& a, const Tensor3& b) = default;

 private:
  int n_ = 0;
  std::vector<SparseVec> cells_;
};

struct TensorTerm {
  int left = 0;
  int right = 0;
  Cyclo coeff;
  friend bool operator==(const TensorTerm& a, const TensorTerm& b) = default;
};
/// Sparse element of C (x) C, sorted by (left, right), no zero coefficients.
using TensorList = std::vector<TensorTerm>;

TensorList to_tensor_list(const Vec& t, int n);
Vec to_dense(const TensorList& t, int n);

struct AlgebraData {
  int dim = 0;
  Vec unit;
  Tensor3 mult;
};

struct CoalgebraData {
  int dim = 0;
  Vec counit;
  std::vector<TensorList> comult;  ///< comult[i] = Delta(e_i)
};

struct HopfData {
  AlgebraData algebra;
  CoalgebraData coalgebra;
  Mat antipode;  ///< column i = S(e_i)
  std::vector<std::string> basis_names;

  int dim() const { return algebra.dim; }
};

bool operator==(const AlgebraData& a, const AlgebraData& b);
bool operator==(const CoalgebraData& a, const CoalgebraData& b);
bool operator==(const HopfData& a, const HopfData& b);

// ---------------------------------------------------------------- arithmetic

Vec multiply(const AlgebraData& a, const Vec& x, const Vec& y);
Vec power(const AlgebraData& a, const Vec& x, int e);
/// Matrix of y -> x*y.
Mat left_multiplication(const AlgebraData& a, const Vec& x);
/// Matrix of y -> y*x.
Mat right_multiplication(const AlgebraData& a, const Vec& x);
bool commute(const AlgebraData& a, const Vec& x, const Vec& y);

Vec comultiply(const CoalgebraData& c, const Vec& x);
Vec tensor(const Vec& x, const Vec& y);
Cyclo counit(const CoalgebraData& c, const Vec& x);
/// Coordinates of (f (x) g)(t) for a tensor t over spaces of dims n and m.
Vec apply_tensor(const Mat& f, const Mat& g, const Vec& t, int n, int m);
bool is_group_like(const CoalgebraData& c, const Vec& x);

/// Left-regular order: least n <= bound with x^n = 1.
int element_order(const AlgebraData& a, const Vec& x, int bound = 64);

// ------------------------------------------------------------------- checks

struct AxiomResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  void add(std::string name, bool pass, std::string detail = {});
  bool all_pass() const;
  /// Throws Error if no entry has this name.
  const AxiomResult& at(const std::string& name) const;
  std::vector<std::string> failures() const;
};

AxiomResult check_associativity(const AlgebraData& a);
AxiomResult check_unit(const AlgebraData& a);
AxiomResult check_coassociativity(const CoalgebraData& c);
AxiomResult check_counit(const CoalgebraData& c);
/// Delta(xy) = Delta(x)Delta(y) on basis pairs and Delta(1) = 1 (x) 1.
AxiomResult check_comult_multiplicative(const AlgebraData& a, const CoalgebraData& c);
AxiomResult check_counit_multiplicative(const AlgebraData& a, const CoalgebraData& c);
/// m(S (x) id)Delta = eta eps = m(id (x) S)Delta on every basis element.
AxiomResult check_antipode(const AlgebraData& a, const CoalgebraData& c, const Mat& antipode);

AxiomReport check_hopf(const HopfData& h);

/// Convolution inverse of the identity, solved as one sparse exact system.
/// Throws NoAntipode if the system is inconsistent.
Mat compute_antipode(const AlgebraData& a, const CoalgebraData& c);

// -------------------------------------------------------------- presentation

using Word = std::vector<int>;
using WordPoly = std::vector<std::pair<Word, Cyclo>>;

/// ba -> rhs for generators a < b.
struct SwapRule {
  int left = 0;
  int right = 0;
  WordPoly rhs;
};

/// g^exponent -> rhs.
struct PowerRule {
  int generator = 0;
  int exponent = 0;
  WordPoly rhs;
};

/// Normal monomials are g_0^e_0 g_1^e_1 ... with 0 <= e_i < bounds[i],
/// indexed lexicographically in the exponent tuple (mixed radix).
struct Presentation {
  std::vector<std::string> generators;
  std::vector<int> bounds;
  std::vector<SwapRule> swaps;
  std::vector<PowerRule> powers;
  int declared_dim = 0;
  long step_budget = 1'000'000;
};

enum class RewriteOrder { LeftFirst, RightFirst };

int normal_dim(const Presentation& p);
std::vector<int> exponents_of(const Presentation& p, int index);
int index_of(const Presentation& p, const std::vector<int>& exponents);
Word normal_word(const Presentation& p, int index);
std::vector<std::string> monomial_names(const Presentation& p);

/// Normal form of a word as coordinates in the normal-monomial basis.
Vec straighten_word(const Presentation& p, const Word& w, RewriteOrder order = RewriteOrder::LeftFirst);
AlgebraData straighten(const Presentation& p, RewriteOrder order = RewriteOrder::LeftFirst);

/// All unital multiplicative functionals, sorted lexicographically. Each
/// result is checked against the straightened structure constants.
std::vector<Vec> characters(const Presentation& p);
bool is_character(const AlgebraData& a, const Vec& chi);

/// Value of a word polynomial with generator i replaced by images[i] in tgt.
Vec evaluate_in(const AlgebraData& tgt, const WordPoly& poly, const std::vector<Vec>& images);
/// The algebra map out of the presented algebra sending generator i to
/// images[i]. Throws RelationViolation if an image tuple breaks a relation.
Mat algebra_map_from_generators(const Presentation& p, const AlgebraData& tgt, const std::vector<Vec>& images);

// ------------------------------------------------- group-likes and characters

/// b -> b_(1) chi(b_(2)).
Mat psi_automorphism(const CoalgebraData& c, const Vec& chi);
/// Convolution product (chi * chi')(b) = chi(b_(1)) chi'(b_(2)).
Vec convolve(const CoalgebraData& c, const Vec& chi, const Vec& chi2);

/// Group-likes of a coalgebra, found inside the simultaneous eigenspaces of
/// `family` (maps that have every group-like as an eigenvector with a root
/// of unity as eigenvalue, e.g. the psi_chi of all characters). Sorted
/// lexicographically. Throws EigenspaceTooLarge past dimension 6 and
/// GroupLikeSolverScope if a support pattern leaves more than a pencil.
std::vector<Vec> group_likes(const CoalgebraData& c, const std::vector<Mat>& family);
std::vector<Vec> group_likes(const HopfData& h, const std::vector<Mat>& family);

std::vector<Vec> central_group_likes(const HopfData& h, const std::vector<Mat>& family);
bool is_central(const AlgebraData& a, const Vec& x);

// --------------------------------------------------------------- subobjects

Subspace span_of(const std::vector<Vec>& vectors, int n);
bool is_subalgebra(const AlgebraData& a, const Subspace& s);
bool is_subcoalgebra(const CoalgebraData& c, const Subspace& s);

/// Throws NotAHopfSubalgebra unless s is a Hopf subalgebra; then reports
/// whether both adjoint actions preserve s.
bool normal_hopf_subalgebra_check(const HopfData& h, const Subspace& s);

struct QuotientCoalgebra {
  CoalgebraData coalgebra;
  Mat projection;               ///< dim(quotient) x dim(h)
  Subspace ideal;               ///< B * (hsub cap ker eps)
  std::vector<Index> complement;  ///< basis indices representing the quotient basis

  Vec project(const Vec& x) const { return projection * x; }
  /// Representative in the span of the complement basis vectors.
  Vec lift(const Vec& q) const;
};

/// B / B(hsub^+). Throws NotACoideal if the left ideal is not a coideal.
QuotientCoalgebra quotient_coalgebra(const HopfData& h, const Subspace& hsub);
/// b . q for the left B-module structure of the quotient; well-definedness
/// (B * ideal in ideal) is asserted and throws MembershipViolation.
Vec quotient_action(const HopfData& h, const QuotientCoalgebra& q, const Vec& b, const Vec& x);

// ---------------------------------------------------------------- morphisms

struct IsoCheck {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

IsoCheck is_algebra_map(const Mat& f, const AlgebraData& src, const AlgebraData& tgt);
IsoCheck is_coalgebra_map(const Mat& f, const CoalgebraData& src, const CoalgebraData& tgt);
IsoCheck is_hopf_iso(const Mat& f, const HopfData& src, const HopfData& tgt);

}  // namespace ydb
