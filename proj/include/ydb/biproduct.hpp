#pragma once

// Radford biproducts B = A * H for H = K[Z2 x Z2].
//
// Basis index of u^i v^j r^k s^l is 8i + 4j + 2k + l, where u = x*1, v = y*1,
// r = 1*g2 and s = 1*g3. Equivalently a*g sits at 4 * (index of a in A) +
// slot(g) with slot(g) = 2 * (g2 bit) + (g3 bit).

#include <array>
#include <string>
#include <vector>

#include "ydb/yetter_drinfeld.hpp"

namespace ydb {

struct NamedElement {
  std::string name;
  Vec coords;
};

struct Biproduct {
  int family = 1;
  Cyclo zeta;
  HopfData hopf;
  Mat embed_a;  ///< 32 x 8, a -> a * 1_H
  Mat embed_h;  ///< 32 x 4, h -> 1_A * h
  Mat pi_h;     ///< 4 x 32, a * h -> eps(a) h
  std::vector<NamedElement> named;

  int dim() const { return hopf.dim(); }
  static int index(int i, int j, int k, int l) { return 8 * i + 4 * j + 2 * k + l; }
  static int slot(int g) { return 2 * (g & 1) + (g >> 1); }
  Vec monomial(int i, int j, int k, int l) const { return basis_vector(32, index(i, j, k, l)); }
  Vec u() const { return monomial(1, 0, 0, 0); }
  Vec v() const { return monomial(0, 1, 0, 0); }
  Vec r() const { return monomial(0, 0, 1, 0); }
  Vec s() const { return monomial(0, 0, 0, 1); }
  Vec one() const { return hopf.algebra.unit; }
  /// u, v, r, s, c1..c4, d1..d4, h1..h4.
  const Vec& element(const std::string& name) const;
  /// Product of a list of elements.
  Vec prod(std::initializer_list<Vec> xs) const;
};

/// Smash product and cosmash coproduct tables; antipode solved exactly.
Biproduct build_biproduct(const YDHopfAlgebra& a);

/// Generators u, v, r, s with the defining relations of the family-1 biproduct.
Presentation biproduct_presentation(const Cyclo& zeta);

/// {b : (id (x) pi_H) Delta(b) = b (x) 1_H}.
Subspace coinvariants(const Biproduct& b);

/// a -> class of a * 1_H in B / B H^+ is bijective, a coalgebra map and
/// B-linear for (a * h).a' = a (h.a').
IsoCheck quotient_iso_check(const Biproduct& b, const YDHopfAlgebra& a);

/// Hopf subalgebra 1_A * H.
Subspace h_part(const Biproduct& b);

struct ChiTriple {
  std::vector<Vec> all;  ///< every character, sorted
  Vec chi1, chi2, chi3;
};

/// The characters whose psi-automorphisms scale u^i v^j r^k s^l by (-1)^j,
/// (-1)^k and (-1)^l respectively. Throws ReconstructionFailed unless each is
/// unique.
ChiTriple reconstruct_chi(const Biproduct& b);

/// Characters in the exponent-bit labeling chi1^a chi2^b chi3^c (mask a + 2b + 4c).
Vec chi_product(const Biproduct& b, const ChiTriple& chi, int mask);
std::string chi_name(int mask);

/// Number of (monomial, chi_t) pairs where psi_{chi_t} does not scale the
/// monomial by the expected sign.
int psi_eigen_mismatches(const Biproduct& b, const ChiTriple& chi);

/// Simultaneous fixed space of psi_chi over the given characters.
Subspace fixed_space_of(const Biproduct& b, const std::vector<Vec>& chis);
/// Fixed space of psi_chi1, psi_chi2, psi_chi3.
Subspace invariant_subalgebra(const Biproduct& b, const ChiTriple& chi);

/// f(u) = u'^3, f(v) = v', f(r) = r's', f(s) = s' into the biproduct for -zeta.
Mat explicit_iso_to_negative(const Biproduct& b, const Biproduct& target);

struct FiniteGroup {
  std::vector<Vec> elements;
  std::vector<std::vector<int>> table;  ///< table[i][j] = index of e_i e_j
  int identity = 0;
};

struct LabeledSubgroup {
  std::string label;
  std::vector<int> members;  ///< sorted indices into the group's elements
};

struct GroupLattice {
  FiniteGroup grouplikes;            ///< G(B)
  std::vector<std::string> grouplike_names;
  std::vector<LabeledSubgroup> grouplike_subgroups;  ///< order 4
  FiniteGroup characters;            ///< G(B*), elements indexed by chi mask
  std::vector<LabeledSubgroup> gammas;  ///< Gamma1..Gamma7
};

/// All psi_chi, in character order.
std::vector<Mat> psi_family(const Biproduct& b, const std::vector<Vec>& characters);

/// Throws UnexpectedGroup unless both groups are elementary abelian of order 8.
GroupLattice grouplike_lattice(const Biproduct& b, const ChiTriple& chi);

/// Subgroups of order 4 in an elementary abelian 2-group.
std::vector<std::vector<int>> order4_subgroups(const FiniteGroup& g);

/// Member masks of Gamma1..Gamma7 over chi1, chi2, chi3.
const std::array<std::array<int, 4>, 7>& gamma_masks();

Subspace span_of_members(const FiniteGroup& g, const std::vector<int>& members);

}  // namespace ydb
