#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "vknot/diagram.hpp"

namespace vknot {

/// A move that does not apply at the requested site.
class MoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Which side of a new kink is empty: GammaEmpty inserts (O, U) so that
/// gamma of the new chord is trivial, GammaBarEmpty inserts (U, O).
enum class KinkType : std::uint8_t { GammaEmpty, GammaBarEmpty };

/// The four first-move variants (a)-(d) of the defect table.
enum class R1Variant : std::uint8_t { A, B, C, D };
Sign variant_sign(R1Variant v);
KinkType variant_kink(R1Variant v);

/// Parallel: the under strand meets the two new crossings in the same order
/// as the over strand (chords linked). Antiparallel: opposite order (nested).
enum class R2Variant : std::uint8_t { Parallel, Antiparallel };

/// Gaps index the 2n+1 insertion points of the linear sequence: gap k sits
/// just before position k, gap 2n after the last endpoint.
struct R1Add {
  std::size_t gap;
  Sign sign;
  KinkType kink;
};
struct R1Remove {
  ChordId chord;
};
/// Inserts the over pair at over_gap and the under pair at under_gap (gaps of
/// the original sequence). In a shared gap the over pair comes first. The new
/// chords a = n and b = n+1 get signs sign and -sign.
struct R2Add {
  std::size_t over_gap;
  std::size_t under_gap;
  R2Variant variant;
  Sign sign;
};
struct R2Remove {
  ChordId first;
  ChordId second;
};
/// Three strands of a triangle, each given by the position p of its first
/// endpoint (the strand is positions p, p+1 mod 2n). Sorted ascending.
struct R3Move {
  std::array<std::size_t, 3> pairs;
  friend bool operator==(const R3Move&, const R3Move&) = default;
};

using MoveSpec = std::variant<R1Add, R1Remove, R2Add, R2Remove, R3Move>;

GaussDiagram r1_add(const GaussDiagram& d, std::size_t gap, Sign sign, KinkType kink);
GaussDiagram r1_add(const GaussDiagram& d, std::size_t gap, R1Variant variant);
/// Deletes an isolated chord (its endpoints adjacent); later chords shift
/// down by one.
GaussDiagram r1_remove(const GaussDiagram& d, ChordId chord);
GaussDiagram r2_add(const GaussDiagram& d, std::size_t over_gap, std::size_t under_gap, R2Variant variant, Sign sign);
/// Deletes a bigon: opposite signs, over endpoints adjacent, under endpoints
/// adjacent.
GaussDiagram r2_remove(const GaussDiagram& d, ChordId a, ChordId b);

/// Chords removable by r1_remove, ascending.
std::vector<ChordId> r1_removable(const GaussDiagram& d);
/// Chord pairs (a < b) removable by r2_remove.
std::vector<std::pair<ChordId, ChordId>> r2_removable(const GaussDiagram& d);

/// All triangles where a third move applies: three disjoint adjacent pairs
/// carrying (O,O), (U,U) and a mixed pair whose O joins the (U,U) strand and
/// whose U joins the (O,O) strand, with signs consistent with three straight
/// strands. That last condition reads eps(XY) * o(Z) equal for all three
/// crossings, where o(Z) = +1 iff strand Z meets the higher of the other two
/// strands first.
std::vector<R3Move> r3_applicable(const GaussDiagram& d);
/// Reverses the endpoint order within each of the three strands. Signs are
/// unchanged and applying the same move again restores d.
GaussDiagram r3_apply(const GaussDiagram& d, const R3Move& move);

GaussDiagram apply_move(const GaussDiagram& d, const MoveSpec& move);

/// One line per move, e.g. "R2add over=1 under=4 variant=parallel sign=-".
/// Chords are 1-based like Gauss code labels; gaps and positions 0-based.
std::string format_move(const MoveSpec& move);
MoveSpec parse_move(std::string_view line);

struct Walk {
  GaussDiagram diagram;
  std::vector<MoveSpec> log;
};

inline constexpr std::size_t kDefaultMaxChords = 12;

/// Applies `steps` random moves: each step picks uniformly among the
/// applicable move kinds, then uniformly among that kind's sites. Adds are
/// withheld while they would exceed max_chords. A step with nothing
/// applicable is skipped. Deterministic for a given seed.
Walk random_walk(const GaussDiagram& d, std::size_t steps, std::uint64_t seed,
                 std::size_t max_chords = kDefaultMaxChords);

/// Called after every applied move; returning false ends the walk early.
using StepObserver = std::function<bool(const GaussDiagram& before, const MoveSpec& move, const GaussDiagram& after)>;
Walk random_walk(const GaussDiagram& d, std::size_t steps, std::uint64_t seed, std::size_t max_chords,
                 const StepObserver& observer);

}  // namespace vknot
