#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vknot/diagram.hpp"
#include "vknot/intersect.hpp"
#include "vknot/laurent.hpp"

namespace vknot {

/// Everything computed for one diagram. W, I, II and the class III are knot
/// invariants; writhe and the four f polynomials depend on the diagram.
struct InvariantSet {
  std::int64_t writhe = 0;
  LaurentPoly W;
  LaurentPoly Wbar;  ///< W(t) + W(t^-1)
  LaurentPoly f01;
  LaurentPoly f10;
  LaurentPoly f00;
  LaurentPoly f11;
  LaurentPoly I;
  LaurentPoly II;
  LaurentClass III;  ///< f00 modulo integer multiples of Wbar

  friend bool operator==(const InvariantSet& a, const InvariantSet& b) {
    return a.writhe == b.writhe && a.W == b.W && a.Wbar == b.Wbar && a.f01 == b.f01 && a.f10 == b.f10 &&
           a.f00 == b.f00 && a.f11 == b.f11 && a.I == b.I && a.II == b.II &&
           a.III.representative == b.III.representative && a.III.modulus == b.III.modulus;
  }
};

std::int64_t writhe(const GaussDiagram& d);
LaurentPoly writhe_polynomial(const GaussDiagram& d);

/// Sum over all ordered chord pairs (i, j), i == j included, of
/// eps_i eps_j (t^(arc_p(i) . arc_q(j)) - 1); p, q select gamma (0) or
/// gammabar (1).
LaurentPoly f_polynomial(const GaussDiagram& d, int p, int q);

LaurentPoly first_intersection(const GaussDiagram& d);
LaurentPoly second_intersection(const GaussDiagram& d);
LaurentClass third_intersection(const GaussDiagram& d);

InvariantSet all_invariants(const GaussDiagram& d);
/// Same, from precomputed intersection data and chord signs. Lets callers
/// feed tabulated intersection numbers without a diagram.
InvariantSet invariants_from(const IntersectionData& data, std::span<const Sign> signs);

/// A lower bound together with the polynomial that attains it ("none" and
/// value 0 when every contributing polynomial is zero).
struct Bound {
  std::int64_t value = 0;
  std::string source = "none";
};

/// c(K) >= deg X + 1 over X in {W, I, II, III}.
Bound crossing_lower_bound(const InvariantSet& s);
/// vc(K) >= deg X over X in {W, I, II, III}.
Bound virtual_crossing_lower_bound(const InvariantSet& s);

/// The three sufficient conditions for K, -K, K#, K*, -K#, -K*, K#*, -K#*
/// to be mutually distinct.
struct DistinctnessReport {
  bool twice_third_differs_from_second = false;  ///< 2 III != II mod Wbar
  bool writhe_not_reciprocal = false;            ///< W(t) != W(t^-1)
  bool reverse_detectable = false;               ///< W(t) != -W(t^-1) or I(t) != I(t^-1)
  bool distinct() const {
    return twice_third_differs_from_second && writhe_not_reciprocal && reverse_detectable;
  }
};

DistinctnessReport symmetry_distinctness(const InvariantSet& s);

struct IdentityCheck {
  std::string name;
  bool holds;
};

/// Evaluates every reverse / vertical mirror / horizontal mirror identity for
/// W, Wbar, I, II and III on d against the invariants of the transformed
/// diagrams.
struct SymmetryReport {
  std::vector<IdentityCheck> checks;
  bool all_hold() const;
  std::vector<std::string> failures() const;
};

SymmetryReport symmetry_identity_check(const GaussDiagram& d);

/// The eight symmetry variants K, -K, K#, K*, -K#, -K*, K#*, -K#*.
struct SymmetryVariant {
  std::string name;
  GaussDiagram diagram;
};
std::vector<SymmetryVariant> symmetry_variants(const GaussDiagram& d);

}  // namespace vknot
