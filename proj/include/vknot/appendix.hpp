#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "vknot/laurent.hpp"

namespace vknot {

/// The two compact notations used in published virtual knot tables.
///
/// Braced: "{n}(a0+a1+...+am)" stands for a0 t^n + a1 t^(n+1) + ... + am t^(n+m)
/// with a0 and am nonzero. A single term renders as "{n}(a0)".
///
/// Symmetric: "[b0+b1+...+bm" stands for b0 + b1 (t + t^-1) + ... + bm (t^m + t^-m)
/// and needs a reciprocal polynomial; bm is nonzero unless m == 0, so a
/// nonzero constant c renders as "[c".
///
/// The zero polynomial renders as "0" in both styles.
enum class AppendixStyle { Braced, Symmetric };

class AppendixError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws AppendixError for symmetric style on a non-reciprocal polynomial.
std::string format_appendix(const LaurentPoly& p, AppendixStyle style);
/// Inverse of format_appendix. Whitespace is ignored and U+2212 is read as
/// a minus sign. Throws AppendixError on anything format_appendix would not
/// produce.
LaurentPoly parse_appendix(std::string_view text, AppendixStyle style);

}  // namespace vknot
