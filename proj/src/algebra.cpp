#include "ydb/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace ydb {

SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (Index i = 0; i < v.size(); ++i) {
    if (!is_zero(v(i))) out.emplace_back(static_cast<int>(i), v(i));
  }
  return out;
}

Vec to_dense(const SparseVec& s, int n) {
  Vec v = Vec::Zero(n);
  for (const auto& [k, c] : s) v(k) += c;
  return v;
}

Vec basis_vector(int n, int k) { return unit_vector<Cyclo>(n, k); }

Cyclo Tensor3::operator()(int i, int j, int k) const {
  for (const auto& [idx, c] : at(i, j)) {
    if (idx == k) return c;
  }
  return Cyclo();
}

TensorList to_tensor_list(const Vec& t, int n) {
  TensorList out;
  for (Index k = 0; k < t.size(); ++k) {
    if (!is_zero(t(k))) out.push_back({static_cast<int>(k / n), static_cast<int>(k % n), t(k)});
  }
  return out;
}

Vec to_dense(const TensorList& t, int n) {
  Vec v = Vec::Zero(static_cast<Index>(n) * n);
  for (const auto& term : t) v(static_cast<Index>(term.left) * n + term.right) += term.coeff;
  return v;
}

bool operator==(const AlgebraData& a, const AlgebraData& b) {
  return a.dim == b.dim && equal(a.unit, b.unit) && a.mult == b.mult;
}

bool operator==(const CoalgebraData& a, const CoalgebraData& b) {
  return a.dim == b.dim && equal(a.counit, b.counit) && a.comult == b.comult;
}

bool operator==(const HopfData& a, const HopfData& b) {
  return a.algebra == b.algebra && a.coalgebra == b.coalgebra && equal(a.antipode, b.antipode) &&
         a.basis_names == b.basis_names;
}

// ---------------------------------------------------------------- arithmetic

namespace {

// Dense accumulator over a fixed index range that remembers touched slots, so
// repeated sparse sums stay cheap.
class Accumulator {
 public:
  explicit Accumulator(std::size_t n) : values_(n), touched_flag_(n, 0) {}

  void add(std::size_t k, const Cyclo& c) {
    if (c.is_zero()) return;
    if (!touched_flag_[k]) {
      touched_flag_[k] = 1;
      touched_.push_back(k);
    }
    values_[k] += c;
  }

  SparseVec take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVec out;
    for (std::size_t k : touched_) {
      if (!values_[k].is_zero()) out.emplace_back(static_cast<int>(k), values_[k]);
      values_[k] = Cyclo();
      touched_flag_[k] = 0;
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<Cyclo> values_;
  std::vector<char> touched_flag_;
  std::vector<std::size_t> touched_;
};

void require_dim(const Vec& x, int n, const char* what) {
  if (x.size() != n) throw DimensionMismatch(std::string(what) + ": vector length mismatch");
}

SparseVec product_sparse(const AlgebraData& a, const SparseVec& x, const SparseVec& y, Accumulator& acc) {
  for (const auto& [i, ci] : x) {
    for (const auto& [j, cj] : y) {
      const Cyclo cij = ci * cj;
      for (const auto& [k, m] : a.mult.at(i, j)) acc.add(static_cast<std::size_t>(k), cij * m);
    }
  }
  return acc.take();
}

std::string describe_index(int i) { return "e" + std::to_string(i); }

}  // namespace

Vec multiply(const AlgebraData& a, const Vec& x, const Vec& y) {
  require_dim(x, a.dim, "multiply");
  require_dim(y, a.dim, "multiply");
  Accumulator acc(static_cast<std::size_t>(a.dim));
  return to_dense(product_sparse(a, to_sparse(x), to_sparse(y), acc), a.dim);
}

Vec power(const AlgebraData& a, const Vec& x, int e) {
  if (e < 0) throw Error("power: negative exponent");
  Vec result = a.unit;
  for (int k = 0; k < e; ++k) result = multiply(a, result, x);
  return result;
}

Mat left_multiplication(const AlgebraData& a, const Vec& x) {
  Mat m(a.dim, a.dim);
  for (int j = 0; j < a.dim; ++j) m.col(j) = multiply(a, x, basis_vector(a.dim, j));
  return m;
}

Mat right_multiplication(const AlgebraData& a, const Vec& x) {
  Mat m(a.dim, a.dim);
  for (int j = 0; j < a.dim; ++j) m.col(j) = multiply(a, basis_vector(a.dim, j), x);
  return m;
}

bool commute(const AlgebraData& a, const Vec& x, const Vec& y) {
  return equal(multiply(a, x, y), multiply(a, y, x));
}

Vec comultiply(const CoalgebraData& c, const Vec& x) {
  require_dim(x, c.dim, "comultiply");
  const Index n = c.dim;
  Vec out = Vec::Zero(n * n);
  for (Index i = 0; i < n; ++i) {
    if (is_zero(x(i))) continue;
    for (const auto& t : c.comult[static_cast<std::size_t>(i)]) out(t.left * n + t.right) += x(i) * t.coeff;
  }
  return out;
}

Vec tensor(const Vec& x, const Vec& y) { return kron(x, y); }

Cyclo counit(const CoalgebraData& c, const Vec& x) {
  require_dim(x, c.dim, "counit");
  Cyclo s;
  for (Index i = 0; i < x.size(); ++i) {
    if (!is_zero(x(i)) && !is_zero(c.counit(i))) s += x(i) * c.counit(i);
  }
  return s;
}

Vec apply_tensor(const Mat& f, const Mat& g, const Vec& t, int n, int m) {
  if (f.cols() != n || g.cols() != m || t.size() != static_cast<Index>(n) * m) {
    throw DimensionMismatch("apply_tensor: shape mismatch");
  }
  const Index p = f.rows();
  const Index q = g.rows();
  Vec out = Vec::Zero(p * q);
  for (Index k = 0; k < t.size(); ++k) {
    if (is_zero(t(k))) continue;
    const Index i = k / m;
    const Index j = k % m;
    for (Index a = 0; a < p; ++a) {
      if (is_zero(f(a, i))) continue;
      const Cyclo fa = t(k) * f(a, i);
      for (Index b = 0; b < q; ++b) {
        if (!is_zero(g(b, j))) out(a * q + b) += fa * g(b, j);
      }
    }
  }
  return out;
}

bool is_group_like(const CoalgebraData& c, const Vec& x) {
  return counit(c, x).is_one() && equal(comultiply(c, x), tensor(x, x));
}

int element_order(const AlgebraData& a, const Vec& x, int bound) {
  if (is_zero_vector(x)) throw Error("element_order: zero element");
  Vec p = x;
  for (int n = 1; n <= bound; ++n) {
    if (equal(p, a.unit)) return n;
    p = multiply(a, p, x);
  }
  throw OrderExceedsBound("element order exceeds bound " + std::to_string(bound));
}

// ------------------------------------------------------------------- checks

void AxiomReport::add(std::string name, bool pass, std::string detail) {
  results.push_back({std::move(name), pass, std::move(detail)});
}

bool AxiomReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.pass; });
}

const AxiomResult& AxiomReport::at(const std::string& name) const {
  for (const auto& r : results) {
    if (r.name == name) return r;
  }
  throw Error("no axiom entry named '" + name + "'");
}

std::vector<std::string> AxiomReport::failures() const {
  std::vector<std::string> out;
  for (const auto& r : results) {
    if (!r.pass) out.push_back(r.name);
  }
  return out;
}

AxiomResult check_associativity(const AlgebraData& a) {
  const int n = a.dim;
  Accumulator acc(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const SparseVec& ij = a.mult.at(i, j);
      for (int k = 0; k < n; ++k) {
        SparseVec left = product_sparse(a, ij, {{k, Cyclo(1)}}, acc);
        SparseVec right = product_sparse(a, {{i, Cyclo(1)}}, a.mult.at(j, k), acc);
        if (left != right) {
          return {"associativity", false,
                  "(" + describe_index(i) + describe_index(j) + ")" + describe_index(k) + " differs"};
        }
      }
    }
  }
  return {"associativity", true, std::to_string(n * n * n) + " triples"};
}

AxiomResult check_unit(const AlgebraData& a) {
  for (int i = 0; i < a.dim; ++i) {
    const Vec e = basis_vector(a.dim, i);
    if (!equal(multiply(a, a.unit, e), e) || !equal(multiply(a, e, a.unit), e)) {
      return {"unit", false, describe_index(i)};
    }
  }
  return {"unit", true, {}};
}

AxiomResult check_coassociativity(const CoalgebraData& c) {
  const std::int64_t n = c.dim;
  for (int i = 0; i < c.dim; ++i) {
    std::map<std::int64_t, Cyclo> left, right;
    for (const auto& t : c.comult[static_cast<std::size_t>(i)]) {
      for (const auto& s : c.comult[static_cast<std::size_t>(t.left)]) {
        left[(s.left * n + s.right) * n + t.right] += t.coeff * s.coeff;
      }
      for (const auto& s : c.comult[static_cast<std::size_t>(t.right)]) {
        right[(t.left * n + s.left) * n + s.right] += t.coeff * s.coeff;
      }
    }
    std::erase_if(left, [](const auto& kv) { return kv.second.is_zero(); });
    std::erase_if(right, [](const auto& kv) { return kv.second.is_zero(); });
    if (left != right) return {"coassociativity", false, describe_index(i)};
  }
  return {"coassociativity", true, {}};
}

AxiomResult check_counit(const CoalgebraData& c) {
  for (int i = 0; i < c.dim; ++i) {
    Vec l = Vec::Zero(c.dim);
    Vec r = Vec::Zero(c.dim);
    for (const auto& t : c.comult[static_cast<std::size_t>(i)]) {
      l(t.right) += c.counit(t.left) * t.coeff;
      r(t.left) += c.counit(t.right) * t.coeff;
    }
    const Vec e = basis_vector(c.dim, i);
    if (!equal(l, e) || !equal(r, e)) return {"counit", false, describe_index(i)};
  }
  return {"counit", true, {}};
}

AxiomResult check_comult_multiplicative(const AlgebraData& a, const CoalgebraData& c) {
  const int n = a.dim;
  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (!equal(comultiply(c, a.unit), tensor(a.unit, a.unit))) {
    return {"comultiplication multiplicative", false, "Delta(1) != 1 (x) 1"};
  }
  Accumulator acc(nn);
  Accumulator small(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (const auto& [k, m] : a.mult.at(i, j)) {
        for (const auto& t : c.comult[static_cast<std::size_t>(k)]) {
          acc.add(static_cast<std::size_t>(t.left) * n + t.right, m * t.coeff);
        }
      }
      SparseVec lhs = acc.take();
      for (const auto& s : c.comult[static_cast<std::size_t>(i)]) {
        for (const auto& t : c.comult[static_cast<std::size_t>(j)]) {
          const Cyclo st = s.coeff * t.coeff;
          const SparseVec& ll = a.mult.at(s.left, t.left);
          const SparseVec& rr = a.mult.at(s.right, t.right);
          for (const auto& [p, cp] : ll) {
            const Cyclo stp = st * cp;
            for (const auto& [q, cq] : rr) acc.add(static_cast<std::size_t>(p) * n + q, stp * cq);
          }
        }
      }
      SparseVec rhs = acc.take();
      if (lhs != rhs) {
        return {"comultiplication multiplicative", false,
                "Delta(" + describe_index(i) + describe_index(j) + ") differs"};
      }
    }
  }
  return {"comultiplication multiplicative", true, std::to_string(n * n) + " pairs"};
}

AxiomResult check_counit_multiplicative(const AlgebraData& a, const CoalgebraData& c) {
  if (!counit(c, a.unit).is_one()) return {"counit multiplicative", false, "eps(1) != 1"};
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      Cyclo v;
      for (const auto& [k, m] : a.mult.at(i, j)) v += m * c.counit(k);
      if (!(v == c.counit(i) * c.counit(j))) {
        return {"counit multiplicative", false, describe_index(i) + describe_index(j)};
      }
    }
  }
  return {"counit multiplicative", true, {}};
}

AxiomResult check_antipode(const AlgebraData& a, const CoalgebraData& c, const Mat& antipode) {
  const int n = a.dim;
  if (antipode.rows() != n || antipode.cols() != n) return {"antipode", false, "shape mismatch"};
  std::vector<SparseVec> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = to_sparse(antipode.col(i));
  Accumulator acc(static_cast<std::size_t>(n));
  const SparseVec unit = to_sparse(a.unit);
  for (int i = 0; i < n; ++i) {
    SparseVec expect;
    if (!c.counit(i).is_zero()) {
      for (const auto& [k, v] : unit) expect.emplace_back(k, v * c.counit(i));
    }
    for (int side = 0; side < 2; ++side) {
      for (const auto& t : c.comult[static_cast<std::size_t>(i)]) {
        const SparseVec& x = side == 0 ? s[static_cast<std::size_t>(t.left)] : SparseVec{{t.left, Cyclo(1)}};
        const SparseVec& y = side == 0 ? SparseVec{{t.right, Cyclo(1)}} : s[static_cast<std::size_t>(t.right)];
        for (const auto& [p, cp] : x) {
          for (const auto& [q, cq] : y) {
            const Cyclo f = t.coeff * cp * cq;
            for (const auto& [k, m] : a.mult.at(p, q)) acc.add(static_cast<std::size_t>(k), f * m);
          }
        }
      }
      if (acc.take() != expect) {
        return {"antipode", false, std::string(side == 0 ? "left" : "right") + " law fails at " + describe_index(i)};
      }
    }
  }
  return {"antipode", true, {}};
}

AxiomReport check_hopf(const HopfData& h) {
  AxiomReport r;
  r.results.push_back(check_associativity(h.algebra));
  r.results.push_back(check_unit(h.algebra));
  r.results.push_back(check_coassociativity(h.coalgebra));
  r.results.push_back(check_counit(h.coalgebra));
  r.results.push_back(check_comult_multiplicative(h.algebra, h.coalgebra));
  r.results.push_back(check_counit_multiplicative(h.algebra, h.coalgebra));
  r.results.push_back(check_antipode(h.algebra, h.coalgebra, h.antipode));
  return r;
}

Mat compute_antipode(const AlgebraData& a, const CoalgebraData& c) {
  // Unknown S(k, l) = coefficient of e_k in S(e_l), numbered k*n + l.
  // Equation (i, m): sum over Delta(e_i) = sum c e_l (x) e_r of
  //   sum_k c * mult(k, r, m) * S(k, l) = eps(e_i) * unit(m).
  const int n = a.dim;
  std::vector<std::vector<std::pair<Index, Cyclo>>> rows;
  std::vector<Cyclo> rhs;
  for (int i = 0; i < n; ++i) {
    std::vector<std::map<Index, Cyclo>> eq(static_cast<std::size_t>(n));
    for (const auto& t : c.comult[static_cast<std::size_t>(i)]) {
      for (int k = 0; k < n; ++k) {
        for (const auto& [m, v] : a.mult.at(k, t.right)) {
          eq[static_cast<std::size_t>(m)][static_cast<Index>(k) * n + t.left] += t.coeff * v;
        }
      }
    }
    for (int m = 0; m < n; ++m) {
      std::vector<std::pair<Index, Cyclo>> row;
      for (const auto& [col, v] : eq[static_cast<std::size_t>(m)]) {
        if (!v.is_zero()) row.emplace_back(col, v);
      }
      rows.push_back(std::move(row));
      rhs.push_back(c.counit(i) * a.unit(m));
    }
  }
  auto sol = solve_sparse<Cyclo>(rows, rhs, static_cast<Index>(n) * n);
  if (!sol) throw NoAntipode("antipode equations are inconsistent");
  Mat s(n, n);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) s(k, l) = (*sol)(static_cast<Index>(k) * n + l);
  }
  return s;
}

// --------------------------------------------------------------- subobjects

Subspace span_of(const std::vector<Vec>& vectors, int n) { return Subspace::span(vectors, n); }

bool is_subalgebra(const AlgebraData& a, const Subspace& s) {
  if (!s.contains(a.unit)) return false;
  for (Index i = 0; i < s.dim(); ++i) {
    for (Index j = 0; j < s.dim(); ++j) {
      if (!s.contains(multiply(a, s.basis_vector(i), s.basis_vector(j)))) return false;
    }
  }
  return true;
}

bool is_subcoalgebra(const CoalgebraData& c, const Subspace& s) {
  // Delta(x) in s (x) s iff every row and every column of its coefficient
  // matrix lies in s.
  const int n = c.dim;
  for (Index b = 0; b < s.dim(); ++b) {
    const Vec d = comultiply(c, s.basis_vector(b));
    Mat m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = d(static_cast<Index>(i) * n + j);
    }
    for (int k = 0; k < n; ++k) {
      if (!s.contains(m.row(k).transpose()) || !s.contains(m.col(k))) return false;
    }
  }
  return true;
}

bool normal_hopf_subalgebra_check(const HopfData& h, const Subspace& s) {
  const AlgebraData& a = h.algebra;
  if (s.ambient() != h.dim()) throw NotAHopfSubalgebra("ambient dimension mismatch");
  if (!is_subalgebra(a, s)) throw NotAHopfSubalgebra("not a unital subalgebra");
  if (!is_subcoalgebra(h.coalgebra, s)) throw NotAHopfSubalgebra("not a subcoalgebra");
  for (Index i = 0; i < s.dim(); ++i) {
    if (!s.contains(h.antipode * s.basis_vector(i))) throw NotAHopfSubalgebra("not antipode-stable");
  }
  const int n = h.dim();
  for (int b = 0; b < n; ++b) {
    for (Index i = 0; i < s.dim(); ++i) {
      const Vec x = s.basis_vector(i);
      Vec left = Vec::Zero(n);
      Vec right = Vec::Zero(n);
      for (const auto& t : h.coalgebra.comult[static_cast<std::size_t>(b)]) {
        const Vec e1 = basis_vector(n, t.left);
        const Vec e2 = basis_vector(n, t.right);
        left += t.coeff * multiply(a, multiply(a, e1, x), h.antipode.col(t.right));
        right += t.coeff * multiply(a, multiply(a, h.antipode.col(t.left), x), e2);
      }
      if (!s.contains(left) || !s.contains(right)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- morphisms

IsoCheck is_algebra_map(const Mat& f, const AlgebraData& src, const AlgebraData& tgt) {
  if (f.rows() != tgt.dim || f.cols() != src.dim) return {false, "shape mismatch"};
  if (!equal(f * src.unit, tgt.unit)) return {false, "unit not preserved"};
  for (int i = 0; i < src.dim; ++i) {
    for (int j = 0; j < src.dim; ++j) {
      const Vec lhs = f * to_dense(src.mult.at(i, j), src.dim);
      const Vec rhs = multiply(tgt, f.col(i), f.col(j));
      if (!equal(lhs, rhs)) {
        return {false, "not multiplicative on (" + describe_index(i) + ", " + describe_index(j) + ")"};
      }
    }
  }
  return {true, {}};
}

IsoCheck is_coalgebra_map(const Mat& f, const CoalgebraData& src, const CoalgebraData& tgt) {
  if (f.rows() != tgt.dim || f.cols() != src.dim) return {false, "shape mismatch"};
  for (int i = 0; i < src.dim; ++i) {
    const Vec e = basis_vector(src.dim, i);
    if (!(counit(tgt, f * e) == src.counit(i))) return {false, "counit not preserved at " + describe_index(i)};
    const Vec lhs = apply_tensor(f, f, to_dense(src.comult[static_cast<std::size_t>(i)], src.dim), src.dim, src.dim);
    if (!equal(lhs, comultiply(tgt, f.col(i)))) return {false, "not comultiplicative at " + describe_index(i)};
  }
  return {true, {}};
}

IsoCheck is_hopf_iso(const Mat& f, const HopfData& src, const HopfData& tgt) {
  if (f.rows() != f.cols() || f.rows() != src.dim() || tgt.dim() != src.dim()) {
    return {false, "dimension mismatch"};
  }
  if (rank(f) != f.cols()) return {false, "not bijective"};
  if (auto r = is_algebra_map(f, src.algebra, tgt.algebra); !r) return r;
  if (auto r = is_coalgebra_map(f, src.coalgebra, tgt.coalgebra); !r) return r;
  if (!equal(Mat(f * src.antipode), Mat(tgt.antipode * f))) return {false, "antipode not preserved"};
  return {true, {}};
}

}  // namespace ydb
