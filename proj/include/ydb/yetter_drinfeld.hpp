#pragma once

// Yetter-Drinfel'd Hopf algebras over H = K[Z2 x Z2].
//
// Group elements are indexed 0..3 for g1..g4 with g1 the unit; bit 0 is the
// g2 component and bit 1 the g3 component, so the product is XOR.

#include <array>
#include <string>
#include <vector>

#include "ydb/algebra.hpp"

namespace ydb {

struct KleinGroup {
  static constexpr int order = 4;
  static int mul(int g, int h) { return g ^ h; }
  static int inverse(int g) { return g; }
  static std::string name(int g) { return "g" + std::to_string(g + 1); }
};

/// theta(g_i, g_j) as a 4x4 table.
using Bicharacter = std::array<std::array<Cyclo, 4>, 4>;

/// Bilinear extension of the values on (g2,g2), (g2,g3) = (g3,g2), (g3,g3).
Bicharacter bicharacter_from_fundamental(const Cyclo& t22, const Cyclo& t23, const Cyclo& t33);
/// theta(g2,g2) = zeta^2, theta(g2,g3) = -1, theta(g3,g3) = 1.
Bicharacter make_theta(const Cyclo& zeta);
bool is_symmetric(const Bicharacter& t);
bool is_multiplicative(const Bicharacter& t);
/// g -> theta(g, .) injective into the character group.
bool is_nondegenerate(const Bicharacter& t);

/// K[G] with basis g1..g4.
HopfData group_algebra();
/// Generators g3, g2 (in that order) so the normal monomial index is the group index.
Presentation group_algebra_presentation();

using ActionMats = std::array<Mat, 4>;
/// coaction[h] is the h-component: delta(a) = sum_h h (x) coaction[h] * a.
using CoactionMats = std::array<Mat, 4>;

/// delta(a)_g = 1/4 sum_g' theta(g, g') g'.a. Throws DegenerateBicharacter.
CoactionMats coaction_from_action(const ActionMats& action, const Bicharacter& theta);
/// g.a = sum_h theta(g, h) delta(a)_h.
ActionMats action_from_coaction(const CoactionMats& coaction, const Bicharacter& theta);

struct GroupLikeLabel {
  std::string name;
  Vec coords;
};

struct YDHopfAlgebra {
  int family = 1;
  Cyclo zeta;
  Bicharacter theta;
  Presentation presentation;  ///< generators x, y; basis x^i y^j at index 2i + j
  HopfData hopf;              ///< antipode is the braided antipode
  ActionMats action;
  CoactionMats coaction;
  std::vector<GroupLikeLabel> group_likes;  ///< omega1..omega4, eta1..eta4

  int dim() const { return hopf.dim(); }
  Vec x() const { return basis_vector(dim(), 2); }
  Vec y() const { return basis_vector(dim(), 1); }
  /// Columns are the labeled group-likes in the x^i y^j basis.
  Mat change_of_basis() const;
  const Vec& label(const std::string& name) const;
};

/// Throw InvalidRoot unless zeta^4 = 1.
YDHopfAlgebra build_family1(const Cyclo& zeta);
YDHopfAlgebra build_family2(const Cyclo& zeta);
YDHopfAlgebra build_family(int family, const Cyclo& zeta);

/// Generic constructor used by both families; `theta` may be any bicharacter
/// (the negative controls pass a corrupted one).
YDHopfAlgebra build_yd(int family, const Cyclo& zeta, const Bicharacter& theta);

/// Action of g2 and g3 on generators, extended multiplicatively.
ActionMats generator_action(const AlgebraData& a, const Presentation& p);

AxiomReport verify_yd_axioms(const YDHopfAlgebra& a);

/// Lengths of the action orbits of the labeled group-likes, in label order.
std::vector<int> orbit_lengths(const YDHopfAlgebra& a);

/// All YD Hopf algebra isomorphisms a -> b, as matrices in the x^i y^j bases,
/// sorted lexicographically by column-major coordinates. With full = false the
/// search fixes the unit and preserves action-orbit lengths.
std::vector<Mat> yd_iso_search(const YDHopfAlgebra& a, const YDHopfAlgebra& b, bool full = false);

/// Degree-6 relation in y: family 1 with zeta = +-1 uses y^6 - y^4 + y^2 - 1,
/// family 2 with zeta = +-i uses y^6 - zeta y^4 - y^2 + zeta. Throws WrongCase
/// elsewhere.
Vec degree6_polynomial(const YDHopfAlgebra& a);
bool degree6_check(const YDHopfAlgebra& a);

}  // namespace ydb
