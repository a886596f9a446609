#pragma once

// Exact dense linear algebra over Eigen containers. Everything here is a
// template on the scalar type; Cyclo is the one the rest of the library uses
// and Rational is exercised by the tests. No pivot thresholds: a pivot is any
// entry that is not exactly zero.

#include <Eigen/Core>

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ydb/cyclo.hpp"
#include "ydb/errors.hpp"

namespace Eigen {

template <>
struct NumTraits<ydb::Rational> : GenericNumTraits<ydb::Rational> {
  using Real = ydb::Rational;
  using NonInteger = ydb::Rational;
  using Nested = ydb::Rational;
  using Literal = ydb::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 16
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<ydb::Cyclo> : GenericNumTraits<ydb::Cyclo> {
  using Real = ydb::Cyclo;
  using NonInteger = ydb::Cyclo;
  using Nested = ydb::Cyclo;
  using Literal = ydb::Cyclo;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 128
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace ydb {

using Index = Eigen::Index;

template <typename Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat = MatX<Cyclo>;
using Vec = VecX<Cyclo>;

template <typename Scalar>
VecX<Scalar> unit_vector(Index n, Index k) {
  VecX<Scalar> v = VecX<Scalar>::Zero(n);
  v(k) = Scalar(1);
  return v;
}

template <typename Derived>
bool is_zero_vector(const Eigen::MatrixBase<Derived>& v) {
  for (Index i = 0; i < v.rows(); ++i) {
    for (Index j = 0; j < v.cols(); ++j) {
      if (!is_zero(v(i, j))) return false;
    }
  }
  return true;
}

template <typename DA, typename DB>
bool equal(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (!(a(i, j) == b(i, j))) return false;
    }
  }
  return true;
}

/// Lexicographic comparison of coordinate vectors.
template <typename Scalar>
bool lex_less(const VecX<Scalar>& a, const VecX<Scalar>& b) {
  const Index n = std::min(a.size(), b.size());
  for (Index i = 0; i < n; ++i) {
    auto c = a(i) <=> b(i);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

template <typename Scalar>
struct RrefResult {
  MatX<Scalar> reduced;       ///< same shape as the input, zero rows last
  std::vector<Index> pivots;  ///< pivot column of each nonzero row
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination.
template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  MatX<Scalar> m = input;
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index sel = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (!is_zero(m(r, col))) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Index c = col; c < m.cols(); ++c) {
      if (!is_zero(m(row, c))) m(row, c) = m(row, c) * inv;
    }
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const Scalar f = m(r, col);
      for (Index c = col; c < m.cols(); ++c) {
        if (!is_zero(m(row, c))) m(r, c) -= f * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

/// Subspace of K^n stored as the rref of a row-stacked basis. Two subspaces
/// are equal iff their canonical bases are identical.
template <typename Scalar>
class BasicSubspace {
 public:
  BasicSubspace() = default;

  static BasicSubspace zero(Index ambient) {
    BasicSubspace s;
    s.ambient_ = ambient;
    s.basis_ = MatX<Scalar>(0, ambient);
    return s;
  }
  static BasicSubspace full(Index ambient) {
    return from_rows(MatX<Scalar>::Identity(ambient, ambient));
  }

  /// Span of the rows of `rows`.
  template <typename Derived>
  static BasicSubspace from_rows(const Eigen::MatrixBase<Derived>& rows) {
    BasicSubspace s;
    s.ambient_ = rows.cols();
    auto r = rref(rows);
    s.basis_ = r.reduced.topRows(r.rank());
    s.pivots_ = std::move(r.pivots);
    return s;
  }

  /// Span of a list of vectors, each of length `ambient`.
  static BasicSubspace span(const std::vector<VecX<Scalar>>& vectors, Index ambient) {
    MatX<Scalar> rows(static_cast<Index>(vectors.size()), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != ambient) throw DimensionMismatch("span: vector length mismatch");
      rows.row(static_cast<Index>(i)) = vectors[i].transpose();
    }
    return from_rows(rows);
  }

  Index ambient() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const MatX<Scalar>& basis() const { return basis_; }
  VecX<Scalar> basis_vector(Index i) const { return basis_.row(i).transpose(); }
  std::vector<VecX<Scalar>> basis_vectors() const {
    std::vector<VecX<Scalar>> out;
    for (Index i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
    return out;
  }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// v minus its component along the basis, read off at the pivots. The
  /// result vanishes at every pivot column and is zero iff v is in the span.
  VecX<Scalar> reduce(const VecX<Scalar>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("reduce: vector length mismatch");
    VecX<Scalar> r = v;
    for (Index i = 0; i < dim(); ++i) {
      const Scalar f = r(pivots_[i]);
      if (is_zero(f)) continue;
      for (Index c = 0; c < ambient_; ++c) {
        if (!is_zero(basis_(i, c))) r(c) -= f * basis_(i, c);
      }
    }
    return r;
  }

  bool contains(const VecX<Scalar>& v) const { return is_zero_vector(reduce(v)); }

  bool includes(const BasicSubspace& other) const {
    if (other.ambient_ != ambient_) return false;
    for (Index i = 0; i < other.dim(); ++i) {
      if (!contains(other.basis_vector(i))) return false;
    }
    return true;
  }

  /// Coordinates of v in this basis; throws MembershipViolation if v is not
  /// in the subspace.
  VecX<Scalar> coordinates(const VecX<Scalar>& v) const {
    if (!contains(v)) throw MembershipViolation("vector is not in the subspace");
    VecX<Scalar> c(dim());
    for (Index i = 0; i < dim(); ++i) c(i) = v(pivots_[i]);
    return c;
  }

  BasicSubspace sum(const BasicSubspace& other) const {
    MatX<Scalar> rows(dim() + other.dim(), ambient_);
    rows << basis_, other.basis_;
    return from_rows(rows);
  }

  friend bool operator==(const BasicSubspace& a, const BasicSubspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && equal(a.basis_, b.basis_);
  }

 private:
  Index ambient_ = 0;
  MatX<Scalar> basis_;
  std::vector<Index> pivots_;
};

using Subspace = BasicSubspace<Cyclo>;

/// Right null space {x : m x = 0} in canonical form.
template <typename Derived>
BasicSubspace<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Index n = m.cols();
  auto r = rref(m);
  std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
  for (Index p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
  std::vector<VecX<Scalar>> basis;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    VecX<Scalar> v = VecX<Scalar>::Zero(n);
    v(f) = Scalar(1);
    for (Index i = 0; i < r.rank(); ++i) {
      if (!is_zero(r.reduced(i, f))) v(r.pivots[static_cast<std::size_t>(i)]) = -r.reduced(i, f);
    }
    basis.push_back(std::move(v));
  }
  return BasicSubspace<Scalar>::span(basis, n);
}

/// Exact inverse via Gauss-Jordan on [m | I]; throws DivisionByZero if m is singular.
template <typename Derived>
MatX<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Index n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("inverse: matrix is not square");
  MatX<Scalar> aug(n, 2 * n);
  aug << m, MatX<Scalar>::Identity(n, n);
  auto r = rref(aug);
  if (r.rank() < n || r.pivots[static_cast<std::size_t>(n - 1)] != n - 1) {
    throw DivisionByZero("inverse: matrix is singular");
  }
  return r.reduced.rightCols(n);
}

/// Kronecker product with the row-major index convention (i*dim + j).
template <typename DA, typename DB>
MatX<typename DA::Scalar> kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  MatX<Scalar> out = MatX<Scalar>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (Index k = 0; k < b.rows(); ++k) {
        for (Index l = 0; l < b.cols(); ++l) {
          if (is_zero(b(k, l))) continue;
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

/// Coordinates of the class of v in whole/sub, in the deterministic complement
/// basis: the vectors of `whole` reduced modulo `sub` and brought to rref.
/// The result is zero iff v lies in sub.
template <typename Scalar>
VecX<Scalar> quotient_coords(const BasicSubspace<Scalar>& whole, const BasicSubspace<Scalar>& sub,
                             const VecX<Scalar>& v) {
  if (!whole.includes(sub)) throw MembershipViolation("quotient_coords: sub is not contained in whole");
  if (!whole.contains(v)) throw MembershipViolation("quotient_coords: vector is not in whole");
  std::vector<VecX<Scalar>> reduced;
  for (Index i = 0; i < whole.dim(); ++i) reduced.push_back(sub.reduce(whole.basis_vector(i)));
  auto complement = BasicSubspace<Scalar>::span(reduced, whole.ambient());
  return complement.coordinates(sub.reduce(v));
}

/// Simultaneous fixed space {x : m x = x for all m in maps}.
template <typename Scalar>
BasicSubspace<Scalar> fixed_space(const std::vector<MatX<Scalar>>& maps, Index n) {
  MatX<Scalar> stacked(static_cast<Index>(maps.size()) * n, n);
  for (std::size_t k = 0; k < maps.size(); ++k) {
    stacked.middleRows(static_cast<Index>(k) * n, n) = maps[k] - MatX<Scalar>::Identity(n, n);
  }
  return kernel(stacked);
}

/// Intersection of a subspace with ker(m), as a subspace of the ambient space.
template <typename Scalar>
BasicSubspace<Scalar> intersect_kernel(const BasicSubspace<Scalar>& space, const MatX<Scalar>& m) {
  // Coefficients c with m * (basis^T c) = 0.
  MatX<Scalar> image = m * space.basis().transpose();
  auto coeff = kernel(image);
  std::vector<VecX<Scalar>> vectors;
  for (Index i = 0; i < coeff.dim(); ++i) {
    vectors.push_back(space.basis().transpose() * coeff.basis_vector(i));
  }
  return BasicSubspace<Scalar>::span(vectors, space.ambient());
}

template <typename Scalar>
BasicSubspace<Scalar> intersect(const BasicSubspace<Scalar>& a, const BasicSubspace<Scalar>& b) {
  // x in a with x in b  <=>  x in a and the reduction of x modulo b vanishes.
  const Index n = a.ambient();
  MatX<Scalar> reducer(n, n);
  for (Index c = 0; c < n; ++c) reducer.col(c) = b.reduce(unit_vector<Scalar>(n, c));
  return intersect_kernel(a, reducer);
}

/// Sparse exact solver for A x = rhs with A given row by row as
/// (column, value) lists. Returns nullopt if the system is inconsistent; free
/// variables are set to zero. Rows are eliminated incrementally into echelon
/// form and back-substituted, so sparse systems stay sparse.
template <typename Scalar>
std::optional<VecX<Scalar>> solve_sparse(const std::vector<std::vector<std::pair<Index, Scalar>>>& rows,
                                         const std::vector<Scalar>& rhs, Index unknowns) {
  const Index rhs_col = unknowns;
  std::map<Index, std::vector<std::pair<Index, Scalar>>> pivot_rows;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::map<Index, Scalar> work;
    for (const auto& [c, v] : rows[r]) {
      if (is_zero(v)) continue;
      auto [it, inserted] = work.emplace(c, v);
      if (!inserted) it->second += v;
    }
    if (!is_zero(rhs[r])) work[rhs_col] += rhs[r];
    std::erase_if(work, [](const auto& kv) { return is_zero(kv.second); });
    while (!work.empty()) {
      auto lead = work.begin();
      if (lead->first == rhs_col) return std::nullopt;
      auto pit = pivot_rows.find(lead->first);
      if (pit == pivot_rows.end()) {
        const Scalar inv = Scalar(1) / lead->second;
        std::vector<std::pair<Index, Scalar>> stored;
        for (const auto& [c, v] : work) stored.emplace_back(c, v * inv);
        pivot_rows.emplace(lead->first, std::move(stored));
        break;
      }
      const Scalar f = lead->second;
      for (const auto& [c, v] : pit->second) {
        auto [it, inserted] = work.emplace(c, -(f * v));
        if (!inserted) {
          it->second -= f * v;
          if (is_zero(it->second)) work.erase(it);
        }
      }
    }
  }
  VecX<Scalar> x = VecX<Scalar>::Zero(unknowns);
  for (auto it = pivot_rows.rbegin(); it != pivot_rows.rend(); ++it) {
    Scalar value(0);
    for (const auto& [c, v] : it->second) {
      if (c == it->first) continue;
      if (c == rhs_col) {
        value += v;
      } else if (!is_zero(x(c))) {
        value -= v * x(c);
      }
    }
    x(it->first) = value;
  }
  return x;
}

}  // namespace ydb
