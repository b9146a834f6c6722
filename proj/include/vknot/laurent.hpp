#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace vknot {

/// Sparse Laurent polynomial in one variable t with integer coefficients.
///
/// Terms are kept in a map keyed by exponent; a zero coefficient is never
/// stored, so the zero polynomial is the empty map. Arithmetic is checked:
/// any coefficient or exponent overflow throws std::overflow_error.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Coefficient = std::int64_t;
  using Terms = std::map<Exponent, Coefficient>;

  LaurentPoly() = default;

  static LaurentPoly constant(Coefficient c);
  static LaurentPoly monomial(Coefficient c, Exponent e);
  /// Builds from arbitrary (exponent, coefficient) pairs; zeros are dropped.
  static LaurentPoly from_terms(const Terms& terms);

  /// Parses the canonical text form ("-2t^3+4t^2-2t", "t^-1", "0").
  /// Whitespace is ignored and terms may come in any order; repeated
  /// exponents are summed. Throws std::invalid_argument on malformed input.
  static LaurentPoly parse(std::string_view text);

  /// Canonical text form: descending exponents, ASCII, "0" for zero.
  std::string str() const;

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Coefficient coefficient(Exponent e) const;

  std::optional<Exponent> max_degree() const;
  std::optional<Exponent> min_degree() const;
  std::optional<Exponent> span() const;

  /// The substitution t -> t^-1.
  LaurentPoly substitute_inverse() const;
  bool is_reciprocal() const;

  /// Sum of |coefficient| over all terms.
  Coefficient abs_coefficient_sum() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  /// Adds m * t^e.
  void add_term(Exponent e, Coefficient m);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator-(const LaurentPoly& p);
  friend LaurentPoly operator*(Coefficient m, const LaurentPoly& p);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Terms terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly scale(LaurentPoly::Coefficient m, const LaurentPoly& p);
/// t^k - 1; zero when k == 0.
LaurentPoly monomial_minus_one(LaurentPoly::Exponent k);
LaurentPoly substitute_inverse(const LaurentPoly& p);
std::optional<LaurentPoly::Exponent> max_degree(const LaurentPoly& p);
std::optional<LaurentPoly::Exponent> span(const LaurentPoly& p);
bool is_reciprocal(const LaurentPoly& p);

/// The class of `representative` modulo integer multiples of `modulus`.
/// With a zero modulus the class is the single polynomial.
struct LaurentClass {
  LaurentPoly representative;
  LaurentPoly modulus;
};

/// If diff == m * modulus for some integer m, returns m. A zero modulus only
/// divides the zero polynomial (with m = 0).
std::optional<LaurentPoly::Coefficient> integer_multiple(const LaurentPoly& diff,
                                                         const LaurentPoly& modulus);

/// Class equality for classes sharing a modulus. Throws std::invalid_argument
/// if the moduli differ.
bool class_equal(const LaurentClass& a, const LaurentClass& b);

/// Set equality of two classes whose moduli may differ: the moduli must
/// agree up to sign, and the representatives must be congruent.
bool classes_coincide(const LaurentClass& a, const LaurentClass& b);

/// The representative rep - m*modulus of least span (zero beats everything),
/// then least absolute coefficient sum, then least |m|, then m >= 0.
LaurentPoly canonical_representative(const LaurentClass& a);

/// Largest max_degree over all members of the class; none only for the
/// class {0}.
std::optional<LaurentPoly::Exponent> class_max_degree(const LaurentClass& a);

}  // namespace vknot
