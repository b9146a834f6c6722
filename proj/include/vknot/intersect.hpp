#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vknot/diagram.hpp"

namespace vknot {

/// Which of the two arcs cut out by a chord: Gamma runs forward from the
/// over endpoint to the under endpoint, GammaBar from under back to over.
/// As cycles on the surface, Gamma + GammaBar is the whole knot curve.
enum class ArcKind : std::uint8_t { Gamma, GammaBar };

struct ArcRef {
  ChordId chord;
  ArcKind kind;
};

inline ArcRef gamma_arc(ChordId c) { return {c, ArcKind::Gamma}; }
inline ArcRef gamma_bar_arc(ChordId c) { return {c, ArcKind::GammaBar}; }

/// Sign rule for the correction term of a linked pair in gamma_gamma.
/// Flipped exists only as a negative control for the move-invariance tests.
enum class LinkedCorrection : std::uint8_t { Standard, Flipped };

/// Positions strictly inside the arc, in arc order.
std::vector<std::size_t> interior_positions(const GaussDiagram& d, ArcRef a);
std::vector<Endpoint> interior_endpoints(const GaussDiagram& d, ArcRef a);

/// n_i = gamma_i . gammabar_i, the sum of endpoint signs inside gamma_i.
int index(const GaussDiagram& d, ChordId i);

/// S(a, b): signed count of endpoints x inside a whose partner lies inside b.
/// The arcs must belong to different chords.
int s_count(const GaussDiagram& d, ArcRef a, ArcRef b);

/// gamma_i . gamma_j. Unlinked chords give S(gamma_i, gamma_j); linked ones
/// add sigma * (eps_i + eps_j) / 2 with sigma = +1 when the under endpoint of
/// j lies inside gamma_i and -1 when the over endpoint does.
int gamma_gamma(const GaussDiagram& d, ChordId i, ChordId j,
                LinkedCorrection rule = LinkedCorrection::Standard);

/// The per-chord indices and the antisymmetric matrix A[i][j] = gamma_i .
/// gamma_j. Every other pairing among the gamma and gammabar cycles follows
/// from these by gammabar_i = gamma_D - gamma_i.
class IntersectionData {
 public:
  IntersectionData() = default;
  /// Validates shape, zero diagonal and antisymmetry.
  IntersectionData(std::vector<int> index, std::vector<std::vector<int>> gamma_matrix);

  std::size_t size() const { return index_.size(); }
  int index(ChordId i) const { return index_.at(i); }
  const std::vector<int>& indices() const { return index_; }
  int gamma_gamma(ChordId i, ChordId j) const { return a_[i * index_.size() + j]; }

  /// Intersection number of the two cycles; arcs may share a chord.
  int pairing(ArcRef a, ArcRef b) const;

  friend bool operator==(const IntersectionData&, const IntersectionData&) = default;

 private:
  std::vector<int> index_;
  std::vector<int> a_;  // row-major n x n
};

IntersectionData build(const GaussDiagram& d, LinkedCorrection rule = LinkedCorrection::Standard);

inline int pairing(const IntersectionData& data, ArcRef a, ArcRef b) { return data.pairing(a, b); }

/// Independent route to the same numbers, straight from the diagram: S(a, b)
/// plus, for linked chords, (sgn(y_b) - sgn(y_a)) / 2 where y_b is the
/// endpoint of b's chord inside a and y_a the endpoint of a's chord inside b.
/// Intended as a cross-check of `pairing`; arcs must be on different chords.
int direct_pairing_oracle(const GaussDiagram& d, ArcRef a, ArcRef b);

/// The three tables gamma.gammabar, gamma.gamma and gammabar.gammabar as
/// right-aligned integer grids, one header line each, rows and columns in
/// chord order.
std::string format_tables(const IntersectionData& data);

}  // namespace vknot
