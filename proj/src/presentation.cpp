#include <algorithm>
#include <functional>
#include <map>

#include "ydb/algebra.hpp"

namespace ydb {

int normal_dim(const Presentation& p) {
  int d = 1;
  for (int b : p.bounds) d *= b;
  return d;
}

std::vector<int> exponents_of(const Presentation& p, int index) {
  std::vector<int> e(p.bounds.size());
  for (std::size_t g = p.bounds.size(); g-- > 0;) {
    e[g] = index % p.bounds[g];
    index /= p.bounds[g];
  }
  return e;
}

int index_of(const Presentation& p, const std::vector<int>& exponents) {
  int idx = 0;
  for (std::size_t g = 0; g < p.bounds.size(); ++g) idx = idx * p.bounds[g] + exponents[g];
  return idx;
}

Word normal_word(const Presentation& p, int index) {
  Word w;
  const auto e = exponents_of(p, index);
  for (std::size_t g = 0; g < e.size(); ++g) w.insert(w.end(), static_cast<std::size_t>(e[g]), static_cast<int>(g));
  return w;
}

std::vector<std::string> monomial_names(const Presentation& p) {
  std::vector<std::string> names;
  for (int i = 0; i < normal_dim(p); ++i) {
    const auto e = exponents_of(p, i);
    std::string s;
    for (std::size_t g = 0; g < e.size(); ++g) {
      if (e[g] == 0) continue;
      s += p.generators[g];
      if (e[g] > 1) s += "^" + std::to_string(e[g]);
    }
    names.push_back(s.empty() ? "1" : s);
  }
  return names;
}

namespace {

struct Redex {
  enum Kind { None, Swap, Power } kind = None;
  std::size_t pos = 0;
  const WordPoly* rhs = nullptr;
  std::size_t length = 0;
};

class Rewriter {
 public:
  explicit Rewriter(const Presentation& p) : p_(p) {
    const auto g = p.generators.size();
    if (p.bounds.size() != g) throw Error("presentation: one exponent bound per generator required");
    swap_.assign(g * g, nullptr);
    power_.assign(g, nullptr);
    for (const auto& r : p.swaps) {
      if (r.left <= r.right) throw Error("presentation: swap rules must orient ba with a < b");
      swap_[static_cast<std::size_t>(r.left) * g + r.right] = &r.rhs;
    }
    for (const auto& r : p.powers) {
      if (r.exponent != p.bounds[static_cast<std::size_t>(r.generator)]) {
        throw Error("presentation: power rule exponent must equal the generator's bound");
      }
      power_[static_cast<std::size_t>(r.generator)] = &r.rhs;
    }
    for (std::size_t a = 0; a < g; ++a) {
      if (!power_[a]) throw Error("presentation: missing power rule for " + p.generators[a]);
      for (std::size_t b = 0; b < a; ++b) {
        if (!swap_[a * g + b]) throw Error("presentation: missing rule for " + p.generators[a] + p.generators[b]);
      }
    }
  }

  Redex find(const Word& w, RewriteOrder order) const {
    const std::size_t n = w.size();
    if (n < 2) return {};
    auto at = [&](std::size_t i) -> Redex {
      const auto g = p_.generators.size();
      if (i + 1 < n && w[i] > w[i + 1]) {
        return {Redex::Swap, i, swap_[static_cast<std::size_t>(w[i]) * g + w[i + 1]], 2};
      }
      const auto e = static_cast<std::size_t>(p_.bounds[static_cast<std::size_t>(w[i])]);
      if (i + e <= n && std::all_of(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i + e),
                                    [&](int x) { return x == w[i]; })) {
        return {Redex::Power, i, power_[static_cast<std::size_t>(w[i])], e};
      }
      return {};
    };
    if (order == RewriteOrder::LeftFirst) {
      for (std::size_t i = 0; i < n; ++i) {
        if (auto r = at(i); r.kind != Redex::None) return r;
      }
    } else {
      for (std::size_t i = n; i-- > 0;) {
        if (auto r = at(i); r.kind != Redex::None) return r;
      }
    }
    return {};
  }

  Vec normal_form(const Word& w, RewriteOrder order) const {
    const int dim = normal_dim(p_);
    Vec out = Vec::Zero(dim);
    std::map<Word, Cyclo> pending;
    pending[w] = Cyclo(1);
    long steps = 0;
    while (!pending.empty()) {
      auto node = pending.extract(pending.begin());
      const Word& word = node.key();
      const Cyclo& c = node.mapped();
      if (c.is_zero()) continue;
      Redex r = find(word, order);
      if (r.kind == Redex::None) {
        std::vector<int> e(p_.generators.size(), 0);
        for (int x : word) ++e[static_cast<std::size_t>(x)];
        out(index_of(p_, e)) += c;
        continue;
      }
      if (++steps > p_.step_budget) throw DivergenceError("straightening exceeded the step budget");
      for (const auto& [rw, rc] : *r.rhs) {
        Word nw(word.begin(), word.begin() + static_cast<long>(r.pos));
        nw.insert(nw.end(), rw.begin(), rw.end());
        nw.insert(nw.end(), word.begin() + static_cast<long>(r.pos + r.length), word.end());
        pending[std::move(nw)] += c * rc;
      }
    }
    return out;
  }

 private:
  const Presentation& p_;
  std::vector<const WordPoly*> swap_;
  std::vector<const WordPoly*> power_;
};

}  // namespace

Vec straighten_word(const Presentation& p, const Word& w, RewriteOrder order) {
  return Rewriter(p).normal_form(w, order);
}

AlgebraData straighten(const Presentation& p, RewriteOrder order) {
  const int n = normal_dim(p);
  if (n != p.declared_dim) {
    throw DimensionMismatch("presentation has " + std::to_string(n) + " normal monomials, declared " +
                            std::to_string(p.declared_dim));
  }
  Rewriter rw(p);
  AlgebraData a;
  a.dim = n;
  a.unit = basis_vector(n, 0);
  a.mult = Tensor3(n);
  std::vector<Word> words;
  for (int i = 0; i < n; ++i) words.push_back(normal_word(p, i));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Word w = words[static_cast<std::size_t>(i)];
      w.insert(w.end(), words[static_cast<std::size_t>(j)].begin(), words[static_cast<std::size_t>(j)].end());
      a.mult.at(i, j) = to_sparse(rw.normal_form(w, order));
    }
  }
  return a;
}

// --------------------------------------------------------------- characters

namespace {

Cyclo evaluate(const Word& w, const std::vector<Cyclo>& values) {
  Cyclo v(1);
  for (int g : w) v *= values[static_cast<std::size_t>(g)];
  return v;
}

Cyclo evaluate(const WordPoly& poly, const std::vector<Cyclo>& values) {
  Cyclo v;
  for (const auto& [w, c] : poly) v += c * evaluate(w, values);
  return v;
}

// k-th roots of c among q * w^j, where q is a rational k-th root of the
// absolute value of c's single nonzero coefficient.
std::vector<Cyclo> root_candidates(const Cyclo& c, int k) {
  if (c.is_zero()) return {Cyclo()};
  int nonzero = 0;
  Rational q0;
  for (int m = 0; m < 4; ++m) {
    if (!c[m].is_zero()) {
      ++nonzero;
      q0 = c[m];
    }
  }
  if (nonzero != 1) {
    throw CandidateSetIncomplete("power rule value " + c.str() + " is not a rational multiple of a root of unity");
  }
  auto q = rational_root(q0.sign() < 0 ? -q0 : q0, k);
  if (!q) throw CandidateSetIncomplete("no rational " + std::to_string(k) + "-th root of |" + q0.str() + "|");
  std::vector<Cyclo> out;
  for (int j = 0; j < 8; ++j) {
    Cyclo cand = Cyclo(*q) * Cyclo::root(j);
    if (cand.pow(k) == c) out.push_back(cand);
  }
  if (out.empty()) throw CandidateSetIncomplete("no root of " + c.str() + " in the candidate set");
  return out;
}

}  // namespace

bool is_character(const AlgebraData& a, const Vec& chi) {
  if (chi.size() != a.dim) return false;
  if (!(chi.dot(a.unit) == Cyclo(1))) return false;
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      Cyclo v;
      for (const auto& [k, m] : a.mult.at(i, j)) v += m * chi(k);
      if (!(v == chi(i) * chi(j))) return false;
    }
  }
  return true;
}

std::vector<Vec> characters(const Presentation& p) {
  const AlgebraData a = straighten(p);
  const std::size_t g = p.generators.size();
  std::vector<const PowerRule*> power(g, nullptr);
  for (const auto& r : p.powers) power[static_cast<std::size_t>(r.generator)] = &r;

  std::vector<Vec> out;
  std::vector<Cyclo> values(g);
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == g) {
      for (const auto& r : p.swaps) {
        if (!(evaluate(Word{r.left, r.right}, values) == evaluate(r.rhs, values))) return;
      }
      for (const auto& r : p.powers) {
        if (!(values[static_cast<std::size_t>(r.generator)].pow(r.exponent) == evaluate(r.rhs, values))) return;
      }
      Vec chi(a.dim);
      for (int i = 0; i < a.dim; ++i) chi(i) = evaluate(normal_word(p, i), values);
      if (!is_character(a, chi)) throw RelationViolation("enumerated character is not multiplicative");
      out.push_back(std::move(chi));
      return;
    }
    for (const auto& [w, c] : power[k]->rhs) {
      for (int x : w) {
        if (static_cast<std::size_t>(x) >= k) {
          throw CandidateSetIncomplete("power rule for " + p.generators[k] + " involves a later generator");
        }
      }
    }
    for (const Cyclo& cand : root_candidates(evaluate(power[k]->rhs, values), power[k]->exponent)) {
      values[k] = cand;
      assign(k + 1);
    }
  };
  assign(0);
  std::sort(out.begin(), out.end(), lex_less<Cyclo>);
  return out;
}

Vec evaluate_in(const AlgebraData& tgt, const WordPoly& poly, const std::vector<Vec>& images) {
  Vec out = Vec::Zero(tgt.dim);
  for (const auto& [w, c] : poly) {
    Vec v = tgt.unit;
    for (int g : w) v = multiply(tgt, v, images[static_cast<std::size_t>(g)]);
    out += c * v;
  }
  return out;
}

Mat algebra_map_from_generators(const Presentation& p, const AlgebraData& tgt, const std::vector<Vec>& images) {
  if (images.size() != p.generators.size()) throw DimensionMismatch("one image per generator required");
  for (const auto& r : p.swaps) {
    if (!equal(evaluate_in(tgt, {{Word{r.left, r.right}, Cyclo(1)}}, images), evaluate_in(tgt, r.rhs, images))) {
      throw RelationViolation("images break the relation " + p.generators[r.left] + p.generators[r.right]);
    }
  }
  for (const auto& r : p.powers) {
    const Word w(static_cast<std::size_t>(r.exponent), r.generator);
    if (!equal(evaluate_in(tgt, {{w, Cyclo(1)}}, images), evaluate_in(tgt, r.rhs, images))) {
      throw RelationViolation("images break the power relation for " + p.generators[r.generator]);
    }
  }
  const int n = normal_dim(p);
  Mat f(tgt.dim, n);
  for (int i = 0; i < n; ++i) f.col(i) = evaluate_in(tgt, {{normal_word(p, i), Cyclo(1)}}, images);
  return f;
}

}  // namespace ydb
