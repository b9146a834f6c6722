#include "vknot/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "checked.hpp"

namespace vknot {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_neg;
using detail::checked_sub;

LaurentPoly LaurentPoly::constant(Coefficient c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(Coefficient c, Exponent e) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const Terms& terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(Exponent e, Coefficient m) {
  if (m == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, m);
  if (inserted) return;
  it->second = checked_add(it->second, m);
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly::Coefficient LaurentPoly::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

std::optional<LaurentPoly::Exponent> LaurentPoly::max_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::optional<LaurentPoly::Exponent> LaurentPoly::min_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<LaurentPoly::Exponent> LaurentPoly::span() const {
  if (terms_.empty()) return std::nullopt;
  return checked_sub(*max_degree(), *min_degree());
}

LaurentPoly LaurentPoly::substitute_inverse() const {
  LaurentPoly p;
  for (auto [e, c] : terms_) p.terms_.emplace(checked_neg(e), c);
  return p;
}

bool LaurentPoly::is_reciprocal() const { return *this == substitute_inverse(); }

LaurentPoly::Coefficient LaurentPoly::abs_coefficient_sum() const {
  Coefficient total = 0;
  for (auto [e, c] : terms_) total = checked_add(total, c < 0 ? checked_neg(c) : c);
  return total;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (auto [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (auto [e, c] : other.terms_) add_term(e, checked_neg(c));
  return *this;
}

LaurentPoly operator-(const LaurentPoly& p) { return scale(-1, p); }

LaurentPoly operator*(LaurentPoly::Coefficient m, const LaurentPoly& p) {
  LaurentPoly r;
  if (m == 0) return r;
  for (auto [e, c] : p.terms_) r.terms_.emplace(e, checked_mul(m, c));
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    // Magnitude printed via unsigned to survive INT64_MIN.
    auto mag = c < 0 ? 0ULL - static_cast<unsigned long long>(c) : static_cast<unsigned long long>(c);
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += 't';
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) src_ += ch;
  }

  LaurentPoly run() {
    if (src_.empty()) fail("empty polynomial");
    LaurentPoly p;
    bool first = true;
    while (pos_ < src_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = src_[pos_++] == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      bool have_digits = std::isdigit(static_cast<unsigned char>(peek()));
      LaurentPoly::Coefficient c = have_digits ? read_unsigned() : 1;
      LaurentPoly::Exponent e = 0;
      if (peek() == 't') {
        ++pos_;
        e = 1;
        if (peek() == '^') {
          ++pos_;
          int esign = 1;
          if (peek() == '+' || peek() == '-') esign = src_[pos_++] == '-' ? -1 : 1;
          if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
          e = esign * read_unsigned();
        }
      } else if (!have_digits) {
        fail("expected coefficient or 't'");
      }
      p.add_term(e, sign * c);
    }
    return p;
  }

 private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  std::int64_t read_unsigned() {
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      v = checked_add(checked_mul(v, 10), src_[pos_++] - '0');
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad polynomial '" + src_ + "' at offset " + std::to_string(pos_) +
                                ": " + what);
  }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return PolyParser(text).run(); }

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }

LaurentPoly scale(LaurentPoly::Coefficient m, const LaurentPoly& p) { return m * p; }

LaurentPoly monomial_minus_one(LaurentPoly::Exponent k) {
  if (k == 0) return {};
  LaurentPoly p = LaurentPoly::monomial(1, k);
  p.add_term(0, -1);
  return p;
}

LaurentPoly substitute_inverse(const LaurentPoly& p) { return p.substitute_inverse(); }

std::optional<LaurentPoly::Exponent> max_degree(const LaurentPoly& p) { return p.max_degree(); }

std::optional<LaurentPoly::Exponent> span(const LaurentPoly& p) { return p.span(); }

bool is_reciprocal(const LaurentPoly& p) { return p.is_reciprocal(); }

std::optional<LaurentPoly::Coefficient> integer_multiple(const LaurentPoly& diff,
                                                         const LaurentPoly& modulus) {
  if (diff.is_zero()) return 0;
  if (modulus.is_zero()) return std::nullopt;
  auto lead = *modulus.max_degree();
  auto d = diff.coefficient(lead);
  auto h = modulus.coefficient(lead);
  if (d % h != 0) return std::nullopt;
  auto m = d / h;
  if (diff - m * modulus != LaurentPoly{}) return std::nullopt;
  return m;
}

bool class_equal(const LaurentClass& a, const LaurentClass& b) {
  if (a.modulus != b.modulus) throw std::invalid_argument("class_equal: moduli differ");
  return integer_multiple(a.representative - b.representative, a.modulus).has_value();
}

bool classes_coincide(const LaurentClass& a, const LaurentClass& b) {
  if (a.modulus != b.modulus && a.modulus != -b.modulus) return false;
  return integer_multiple(a.representative - b.representative, a.modulus).has_value();
}

LaurentPoly canonical_representative(const LaurentClass& a) {
  const auto& rep = a.representative;
  const auto& mod = a.modulus;
  if (mod.is_zero()) return rep;

  // Beyond |m| > bound every exponent of the modulus survives in
  // rep - m*mod and each |coefficient| grows with |m|, so nothing out there
  // can beat the candidates inside the window.
  LaurentPoly::Coefficient bound = 0;
  for (auto [e, h] : mod.terms()) {
    auto r = rep.coefficient(e);
    auto q = (r < 0 ? checked_neg(r) : r) / (h < 0 ? checked_neg(h) : h);
    bound = std::max(bound, checked_add(q, 1));
  }

  // Ties on (span, size) fall back to the term map itself, which depends
  // only on the candidate and not on where the search started.
  using Key = std::tuple<LaurentPoly::Exponent, LaurentPoly::Coefficient, LaurentPoly::Terms>;
  std::optional<Key> best_key;
  LaurentPoly best;
  for (auto m = -bound; m <= bound; ++m) {
    LaurentPoly cand = rep - m * mod;
    Key key{cand.is_zero() ? -1 : *cand.span(), cand.abs_coefficient_sum(), cand.terms()};
    if (!best_key || key < *best_key) {
      best_key = std::move(key);
      best = std::move(cand);
    }
  }
  return best;
}

std::optional<LaurentPoly::Exponent> class_max_degree(const LaurentClass& a) {
  auto r = a.representative.max_degree();
  auto h = a.modulus.max_degree();
  if (!h) return r;
  if (!r) return h;
  return std::max(*r, *h);
}

}  // namespace vknot
