#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vknot {

/// Chord index, 0-based. Text forms use 1-based labels.
using ChordId = std::size_t;

enum class Role : std::uint8_t { Over, Under };

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr int value(Sign s) { return static_cast<int>(s); }
constexpr Sign operator-(Sign s) { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }
constexpr Role opposite(Role r) { return r == Role::Over ? Role::Under : Role::Over; }
constexpr char sign_char(Sign s) { return s == Sign::Positive ? '+' : '-'; }

struct Endpoint {
  ChordId chord;
  Role role;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// Malformed Gauss code or an inconsistent chord structure.
class DiagramError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A virtual knot diagram as a Gauss diagram: the cyclic sequence of the 2n
/// chord endpoints met along the knot, plus one sign per chord.
///
/// Position 0 is the basepoint. It only fixes the linear order used for text
/// output; all invariants are independent of it. Equality via operator== is
/// structural (same basepoint, same labels); `equivalent` compares up to
/// rotation and relabeling.
class GaussDiagram {
 public:
  /// The unknot (no chords).
  GaussDiagram() = default;

  /// Validates that every chord 0..n-1 occurs once as Over and once as
  /// Under, with n == signs.size().
  GaussDiagram(std::vector<Endpoint> endpoints, std::vector<Sign> signs);

  /// Parses tokens of the form (O|U)<label>(+|-), e.g. "O1+U2+O3+U1+O2+U3+".
  /// Whitespace is ignored, O/U are case-insensitive, and U+2212 is accepted
  /// as a minus sign. Chords are renumbered by first appearance.
  static GaussDiagram parse(std::string_view code);

  /// Token text in the current basepoint and labeling.
  std::string str() const;
  /// Canonical token text: lexicographically least over all rotations, with
  /// chords labeled by first appearance.
  std::string canonical() const;
  /// Canonical diagram (basepoint and labels from `canonical`).
  GaussDiagram canonicalized() const;
  bool equivalent(const GaussDiagram& other) const { return canonical() == other.canonical(); }

  std::size_t chord_count() const { return signs_.size(); }
  std::size_t size() const { return endpoints_.size(); }
  bool empty() const { return endpoints_.empty(); }

  std::span<const Endpoint> endpoints() const { return endpoints_; }
  const Endpoint& at(std::size_t pos) const { return endpoints_.at(pos); }
  std::span<const Sign> signs() const { return signs_; }
  Sign sign(ChordId c) const { return signs_.at(c); }

  std::size_t over_position(ChordId c) const { return over_pos_.at(c); }
  std::size_t under_position(ChordId c) const { return under_pos_.at(c); }
  std::size_t position(ChordId c, Role r) const {
    return r == Role::Over ? over_position(c) : under_position(c);
  }
  /// Position of the other endpoint of the chord at `pos`.
  std::size_t partner(std::size_t pos) const;

  /// Endpoint sign: -eps at the over endpoint, +eps at the under endpoint.
  int endpoint_sign(std::size_t pos) const;

  /// Same cyclic diagram with the basepoint moved to position k.
  GaussDiagram rotated(std::size_t k) const;
  /// Chords renumbered 0..n-1 by first appearance from the basepoint.
  GaussDiagram relabeled() const;

  friend bool operator==(const GaussDiagram& a, const GaussDiagram& b) {
    return a.endpoints_ == b.endpoints_ && a.signs_ == b.signs_;
  }

 private:
  void index_positions();

  std::vector<Endpoint> endpoints_;
  std::vector<Sign> signs_;
  std::vector<std::size_t> over_pos_;
  std::vector<std::size_t> under_pos_;
};

GaussDiagram parse(std::string_view code);
/// Canonical serialization; parse(serialize(d)) is equivalent to d.
std::string serialize(const GaussDiagram& d);

/// -D: orientation reversed; roles and signs kept.
GaussDiagram reverse(const GaussDiagram& d);
/// D#: every crossing switched; roles flipped and signs negated.
GaussDiagram vertical_mirror(const GaussDiagram& d);
/// D*: image under an orientation-reversing homeomorphism of the surface.
/// The curve and its crossing order are unchanged, so endpoint order and
/// roles are kept and only the signs are negated.
GaussDiagram horizontal_mirror(const GaussDiagram& d);

/// Uniform random perfect matching of 2n positions, random chord direction
/// and sign per chord. Deterministic for a given seed on every platform.
GaussDiagram random_diagram(std::size_t n, std::uint64_t seed);

/// Chords i and j are linked when their endpoints alternate around the
/// circle. Throws DiagramError if i == j.
bool linked(const GaussDiagram& d, ChordId i, ChordId j);

/// True if position p lies strictly inside the arc running forward from
/// position `from` to position `to`.
bool in_open_arc(std::size_t p, std::size_t from, std::size_t to, std::size_t n);

}  // namespace vknot
