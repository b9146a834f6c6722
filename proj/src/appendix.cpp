#include "vknot/appendix.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <vector>

#include "checked.hpp"

namespace vknot {

namespace {

using Coefficient = LaurentPoly::Coefficient;
using Exponent = LaurentPoly::Exponent;

void append_signed(std::string& out, Coefficient c, bool first) {
  if (!first && c >= 0) out += '+';
  out += std::to_string(c);
}

std::string normalize(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char ch = static_cast<unsigned char>(text[i]);
    if (ch == 0xE2 && text.substr(i, 3) == "\xE2\x88\x92") {
      out += '-';
      i += 2;
    } else if (!std::isspace(ch)) {
      out += static_cast<char>(ch);
    } else if (!out.empty() && std::isdigit(static_cast<unsigned char>(out.back()))) {
      // Blanks separating two digits must not fuse them into one number.
      std::size_t j = i;
      while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      if (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) out += ' ';
      i = j - 1;
    }
  }
  return out;
}

class Cursor {
 public:
  Cursor(std::string_view s, std::string_view original) : s_(s), original_(original) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw AppendixError(what + " in '" + std::string(original_) + "'");
  }
  bool done() const { return pos_ == s_.size(); }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  // An integer with an optional leading sign; `sign_required` demands one.
  std::int64_t integer(bool sign_required) {
    if (sign_required && !peek('+') && !peek('-')) fail("expected '+' or '-'");
    bool negative = false;
    if (peek('+') || peek('-')) negative = s_[pos_++] == '-';
    std::uint64_t magnitude = 0;
    auto begin = s_.data() + pos_;
    auto [ptr, ec] = std::from_chars(begin, s_.data() + s_.size(), magnitude);
    if (ec != std::errc{} || ptr == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    constexpr auto limit = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
    if (magnitude > limit) fail("number out of range");
    auto v = static_cast<std::int64_t>(magnitude);
    return negative ? -v : v;
  }
  // Trailing signed terms until `stop` (or end when stop == 0).
  std::vector<std::int64_t> signed_list(char stop) {
    std::vector<std::int64_t> out{integer(false)};
    while (!done() && !peek(stop)) out.push_back(integer(true));
    return out;
  }

 private:
  std::string_view s_;
  std::string_view original_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_appendix(const LaurentPoly& p, AppendixStyle style) {
  if (p.is_zero()) return "0";
  std::string out;
  if (style == AppendixStyle::Braced) {
    const auto lo = *p.min_degree(), hi = *p.max_degree();
    out = "{" + std::to_string(lo) + "}(";
    for (auto e = lo;; ++e) {
      append_signed(out, p.coefficient(e), e == lo);
      if (e == hi) break;
    }
    return out + ")";
  }
  if (!p.is_reciprocal()) throw AppendixError("symmetric notation needs a reciprocal polynomial, got " + p.str());
  out = "[";
  const auto hi = *p.max_degree();
  for (Exponent k = 0; k <= hi; ++k) append_signed(out, p.coefficient(k), k == 0);
  return out;
}

LaurentPoly parse_appendix(std::string_view text, AppendixStyle style) {
  const auto s = normalize(text);
  if (s == "0") return {};
  Cursor cur(s, text);
  LaurentPoly p;
  if (style == AppendixStyle::Braced) {
    cur.expect('{');
    const auto n = cur.integer(false);
    cur.expect('}');
    cur.expect('(');
    const auto a = cur.signed_list(')');
    cur.expect(')');
    if (!cur.done()) cur.fail("trailing text");
    if (a.front() == 0 || a.back() == 0) cur.fail("outer coefficients must be nonzero");
    for (std::size_t k = 0; k < a.size(); ++k)
      p.add_term(detail::checked_add(n, static_cast<Exponent>(k)), a[k]);
    return p;
  }
  cur.expect('[');
  const auto b = cur.signed_list('\0');
  if (b.back() == 0) cur.fail(b.size() == 1 ? "zero is written 0" : "last coefficient must be nonzero");
  p.add_term(0, b[0]);
  for (std::size_t k = 1; k < b.size(); ++k) {
    p.add_term(static_cast<Exponent>(k), b[k]);
    p.add_term(-static_cast<Exponent>(k), b[k]);
  }
  return p;
}

}  // namespace vknot
