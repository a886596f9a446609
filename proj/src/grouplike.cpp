#include <algorithm>
#include <array>

#include "ydb/algebra.hpp"

namespace ydb {

Mat psi_automorphism(const CoalgebraData& c, const Vec& chi) {
  Mat m = Mat::Zero(c.dim, c.dim);
  for (int b = 0; b < c.dim; ++b) {
    for (const auto& t : c.comult[static_cast<std::size_t>(b)]) {
      if (!is_zero(chi(t.right))) m(t.left, b) += t.coeff * chi(t.right);
    }
  }
  return m;
}

Vec convolve(const CoalgebraData& c, const Vec& chi, const Vec& chi2) {
  Vec out = Vec::Zero(c.dim);
  for (int b = 0; b < c.dim; ++b) {
    for (const auto& t : c.comult[static_cast<std::size_t>(b)]) out(b) += t.coeff * chi(t.left) * chi2(t.right);
  }
  return out;
}

namespace {

constexpr Index kMaxEigenspace = 6;

// Simultaneous eigenspaces of the family for eigenvalues among the eighth
// roots of unity, the only roots of unity in K.
std::vector<Subspace> simultaneous_eigenspaces(int n, const std::vector<Mat>& family) {
  std::vector<Subspace> spaces{Subspace::full(n)};
  for (const Mat& m : family) {
    std::vector<Subspace> next;
    for (int j = 0; j < 8; ++j) {
      const Subspace eig = kernel(Mat(m - Cyclo::root(j) * Mat::Identity(n, n)));
      if (eig.dim() == 0) continue;
      for (const Subspace& s : spaces) {
        Subspace cut = intersect(s, eig);
        if (cut.dim() > 0) next.push_back(std::move(cut));
      }
    }
    spaces = std::move(next);
  }
  return spaces;
}

using Quadratic = std::array<Cyclo, 3>;  // c0 + c1 m + c2 m^2

std::vector<Cyclo> roots(const Quadratic& q) {
  if (q[2].is_zero()) {
    if (q[1].is_zero()) return {};
    return {-q[0] / q[1]};
  }
  const Cyclo disc = q[1] * q[1] - Cyclo(4) * q[2] * q[0];
  auto s = sqrt(disc);
  if (!s) return {};
  const Cyclo two_a = Cyclo(2) * q[2];
  return {(-q[1] + *s) / two_a, (-q[1] - *s) / two_a};
}

class EigenspaceSolver {
 public:
  EigenspaceSolver(const CoalgebraData& c, const Subspace& e) : c_(c), e_(e), d_(e.dim()) {
    const Index n = c.dim;
    // ell[k](i, j) = coefficient of b_i (x) b_j in Delta(b_k), read at pivots.
    for (Index k = 0; k < d_; ++k) {
      const Vec delta = comultiply(c, e.basis_vector(k));
      Mat l(d_, d_);
      Vec residual = delta;
      for (Index i = 0; i < d_; ++i) {
        for (Index j = 0; j < d_; ++j) {
          l(i, j) = delta(e.pivots()[i] * n + e.pivots()[j]);
          if (!is_zero(l(i, j))) residual -= l(i, j) * tensor(e.basis_vector(i), e.basis_vector(j));
        }
      }
      ell_.push_back(std::move(l));
      residuals_.push_back(std::move(residual));
    }
    Mat r(n * n, d_);
    for (Index k = 0; k < d_; ++k) r.col(k) = residuals_[static_cast<std::size_t>(k)];
    auto red = rref(r);
    residual_rows_ = red.reduced.topRows(red.rank());
  }

  std::vector<Vec> solve() const {
    std::vector<Vec> found;
    for (unsigned mask = 1; mask < (1u << d_); ++mask) {
      for (Vec& c : solve_pattern(mask)) found.push_back(std::move(c));
    }
    return found;
  }

 private:
  bool in(unsigned mask, Index i) const { return (mask >> i) & 1u; }

  // Row vector of the linear form a -> ell_ij(a).
  VecX<Cyclo> ell_form(Index i, Index j) const {
    Vec f(d_);
    for (Index k = 0; k < d_; ++k) f(k) = ell_[static_cast<std::size_t>(k)](i, j);
    return f;
  }

  Vec element(const Vec& a) const { return e_.basis().transpose() * a; }

  std::vector<Vec> solve_pattern(unsigned mask) const {
    std::vector<Vec> rows;
    for (Index r = 0; r < residual_rows_.rows(); ++r) rows.push_back(residual_rows_.row(r).transpose());
    for (Index i = 0; i < d_; ++i) {
      if (!in(mask, i)) rows.push_back(basis_vector(static_cast<int>(d_), static_cast<int>(i)));
    }
    for (Index i = 0; i < d_; ++i) {
      for (Index j = 0; j < d_; ++j) {
        if (!in(mask, i) || !in(mask, j)) rows.push_back(ell_form(i, j));
      }
    }
    Mat constraints(static_cast<Index>(rows.size()), d_);
    for (std::size_t r = 0; r < rows.size(); ++r) constraints.row(static_cast<Index>(r)) = rows[r].transpose();
    const Subspace w = kernel(constraints);
    if (w.dim() == 0) return {};
    // a_i a_j = ell_ij(a) with a_i, a_j != 0 rules out patterns where some
    // support coordinate or cross term vanishes identically on W.
    for (Index i = 0; i < d_; ++i) {
      if (!in(mask, i)) continue;
      if (is_zero_vector(Vec(w.basis().col(i)))) return {};
      for (Index j = 0; j < d_; ++j) {
        if (in(mask, j) && is_zero_vector(Vec(w.basis() * ell_form(i, j)))) return {};
      }
    }
    std::vector<Vec> candidates;
    if (w.dim() == 1) {
      candidates.push_back(w.basis_vector(0));
    } else if (w.dim() == 2) {
      candidates = pencil(mask, w.basis_vector(0), w.basis_vector(1));
    } else {
      throw GroupLikeSolverScope("support pattern leaves a " + std::to_string(w.dim()) + "-dimensional family");
    }
    std::vector<Vec> out;
    for (const Vec& a : candidates) {
      bool support_ok = true;
      for (Index i = 0; i < d_; ++i) support_ok = support_ok && (in(mask, i) != is_zero(a(i)));
      if (!support_ok) continue;
      Vec x = element(a);
      const Cyclo eps = counit(c_, x);
      if (eps.is_zero()) continue;
      x /= eps;
      if (is_group_like(c_, x)) out.push_back(std::move(x));
    }
    return out;
  }

  // Projective points of span(w1, w2) solving a_i0 a_j = ell_i0j(a): writing
  // z = w1 + m w2 (plus the point w2), ell_i0i0(z) z_j = ell_i0j(z) z_i0 is a
  // quadratic in m for every j; the first nonvanishing one pins m down.
  std::vector<Vec> pencil(unsigned mask, const Vec& w1, const Vec& w2) const {
    std::vector<Vec> out{w2};
    Index i0 = 0;
    while (!in(mask, i0)) ++i0;
    auto lin = [&](const Vec& f) { return std::array<Cyclo, 2>{f.dot(w1), f.dot(w2)}; };
    const auto l00 = lin(ell_form(i0, i0));
    const std::array<Cyclo, 2> z0{w1(i0), w2(i0)};
    for (Index j = 0; j < d_; ++j) {
      const auto l0j = lin(ell_form(i0, j));
      const std::array<Cyclo, 2> zj{w1(j), w2(j)};
      Quadratic q{l00[0] * zj[0] - l0j[0] * z0[0],
                  l00[0] * zj[1] + l00[1] * zj[0] - l0j[0] * z0[1] - l0j[1] * z0[0],
                  l00[1] * zj[1] - l0j[1] * z0[1]};
      if (q[0].is_zero() && q[1].is_zero() && q[2].is_zero()) continue;
      for (const Cyclo& m : roots(q)) out.push_back(w1 + m * w2);
      return out;
    }
    throw GroupLikeSolverScope("quadratic system is degenerate on a two-dimensional pattern");
  }

  const CoalgebraData& c_;
  const Subspace& e_;
  Index d_;
  std::vector<Mat> ell_;
  std::vector<Vec> residuals_;
  Mat residual_rows_;
};

}  // namespace

std::vector<Vec> group_likes(const CoalgebraData& c, const std::vector<Mat>& family) {
  std::vector<Vec> found;
  for (const Subspace& e : simultaneous_eigenspaces(c.dim, family)) {
    if (e.dim() > kMaxEigenspace) {
      throw EigenspaceTooLarge("simultaneous eigenspace of dimension " + std::to_string(e.dim()));
    }
    for (Vec& g : EigenspaceSolver(c, e).solve()) found.push_back(std::move(g));
  }
  std::sort(found.begin(), found.end(), lex_less<Cyclo>);
  found.erase(std::unique(found.begin(), found.end(), [](const Vec& a, const Vec& b) { return equal(a, b); }),
              found.end());
  return found;
}

std::vector<Vec> group_likes(const HopfData& h, const std::vector<Mat>& family) {
  return group_likes(h.coalgebra, family);
}

bool is_central(const AlgebraData& a, const Vec& x) {
  for (int i = 0; i < a.dim; ++i) {
    if (!commute(a, x, basis_vector(a.dim, i))) return false;
  }
  return true;
}

std::vector<Vec> central_group_likes(const HopfData& h, const std::vector<Mat>& family) {
  std::vector<Vec> out;
  for (Vec& g : group_likes(h, family)) {
    if (is_central(h.algebra, g)) out.push_back(std::move(g));
  }
  return out;
}

// --------------------------------------------------------------- quotients

Vec QuotientCoalgebra::lift(const Vec& q) const {
  Vec x = Vec::Zero(projection.cols());
  for (std::size_t k = 0; k < complement.size(); ++k) x(complement[k]) = q(static_cast<Index>(k));
  return x;
}

QuotientCoalgebra quotient_coalgebra(const HopfData& h, const Subspace& hsub) {
  const int n = h.dim();
  if (hsub.ambient() != n) throw DimensionMismatch("quotient_coalgebra: ambient mismatch");
  Mat eps(1, n);
  eps.row(0) = h.coalgebra.counit.transpose();
  const Subspace plus = intersect_kernel(hsub, eps);
  std::vector<Vec> gens;
  for (int i = 0; i < n; ++i) {
    for (Index k = 0; k < plus.dim(); ++k) {
      gens.push_back(multiply(h.algebra, basis_vector(n, i), plus.basis_vector(k)));
    }
  }
  QuotientCoalgebra q;
  q.ideal = Subspace::span(gens, n);
  std::vector<char> pivot(static_cast<std::size_t>(n), 0);
  for (Index p : q.ideal.pivots()) pivot[static_cast<std::size_t>(p)] = 1;
  for (int k = 0; k < n; ++k) {
    if (!pivot[static_cast<std::size_t>(k)]) q.complement.push_back(k);
  }
  const Index m = static_cast<Index>(q.complement.size());
  q.projection = Mat::Zero(m, n);
  for (int i = 0; i < n; ++i) {
    const Vec r = q.ideal.reduce(basis_vector(n, i));
    for (Index k = 0; k < m; ++k) q.projection(k, i) = r(q.complement[static_cast<std::size_t>(k)]);
  }
  // Coideal: eps(I) = 0 and (pi (x) pi) Delta(I) = 0.
  for (Index k = 0; k < q.ideal.dim(); ++k) {
    const Vec x = q.ideal.basis_vector(k);
    if (!counit(h.coalgebra, x).is_zero()) throw NotACoideal("counit does not vanish on the ideal");
    const Vec d = apply_tensor(q.projection, q.projection, comultiply(h.coalgebra, x), n, n);
    if (!is_zero_vector(d)) throw NotACoideal("ideal is not a coideal");
  }
  q.coalgebra.dim = static_cast<int>(m);
  q.coalgebra.counit = Vec(m);
  for (Index k = 0; k < m; ++k) {
    const int i = static_cast<int>(q.complement[static_cast<std::size_t>(k)]);
    q.coalgebra.counit(k) = h.coalgebra.counit(i);
    const Vec d = apply_tensor(q.projection, q.projection, to_dense(h.coalgebra.comult[static_cast<std::size_t>(i)], n),
                               n, n);
    q.coalgebra.comult.push_back(to_tensor_list(d, static_cast<int>(m)));
  }
  return q;
}

Vec quotient_action(const HopfData& h, const QuotientCoalgebra& q, const Vec& b, const Vec& x) {
  for (Index k = 0; k < q.ideal.dim(); ++k) {
    if (!q.ideal.contains(multiply(h.algebra, b, q.ideal.basis_vector(k)))) {
      throw MembershipViolation("quotient action is not well defined");
    }
  }
  return q.project(multiply(h.algebra, b, q.lift(x)));
}

}  // namespace ydb
