#include "vknot/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <tuple>

#include "rng.hpp"

namespace vknot {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

struct Token {
  Role role;
  std::size_t label;
  Sign sign;
};

std::vector<Token> tokenize(std::string_view code) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < code.size() && std::isspace(static_cast<unsigned char>(code[i]))) ++i;
  };
  auto fail = [&](const std::string& what) {
    throw DiagramError("bad Gauss code at offset " + std::to_string(i) + ": " + what);
  };
  for (skip_space(); i < code.size(); skip_space()) {
    Token t{};
    char r = static_cast<char>(std::toupper(static_cast<unsigned char>(code[i])));
    if (r != 'O' && r != 'U') fail("expected 'O' or 'U'");
    t.role = r == 'O' ? Role::Over : Role::Under;
    ++i;
    skip_space();
    if (i >= code.size() || !std::isdigit(static_cast<unsigned char>(code[i]))) fail("expected chord label");
    std::size_t label = 0;
    while (i < code.size() && std::isdigit(static_cast<unsigned char>(code[i]))) {
      if (label > 100000000) fail("chord label too large");
      label = label * 10 + static_cast<std::size_t>(code[i++] - '0');
    }
    if (label == 0) fail("chord labels start at 1");
    t.label = label;
    skip_space();
    if (i < code.size() && code[i] == '+') {
      t.sign = Sign::Positive;
      ++i;
    } else if (i < code.size() && code[i] == '-') {
      t.sign = Sign::Negative;
      ++i;
    } else if (code.substr(i, 3) == "\xE2\x88\x92") {  // U+2212 MINUS SIGN
      t.sign = Sign::Negative;
      i += 3;
    } else {
      fail("expected '+' or '-'");
    }
    tokens.push_back(t);
  }
  return tokens;
}

using CanonicalToken = std::tuple<int, std::size_t, int>;

std::vector<CanonicalToken> canonical_tokens(const GaussDiagram& d, std::size_t start) {
  const std::size_t n = d.size();
  std::vector<std::size_t> label(d.chord_count(), kUnset);
  std::size_t next = 0;
  std::vector<CanonicalToken> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& ep = d.at((start + k) % n);
    if (label[ep.chord] == kUnset) label[ep.chord] = next++;
    out.emplace_back(ep.role == Role::Over ? 0 : 1, label[ep.chord], d.sign(ep.chord) == Sign::Positive ? 0 : 1);
  }
  return out;
}

std::size_t canonical_start(const GaussDiagram& d) {
  std::size_t best = 0;
  std::vector<CanonicalToken> best_tokens;
  for (std::size_t r = 0; r < d.size(); ++r) {
    auto t = canonical_tokens(d, r);
    if (r == 0 || t < best_tokens) {
      best = r;
      best_tokens = std::move(t);
    }
  }
  return best;
}

}  // namespace

GaussDiagram::GaussDiagram(std::vector<Endpoint> endpoints, std::vector<Sign> signs)
    : endpoints_(std::move(endpoints)), signs_(std::move(signs)) {
  if (endpoints_.size() != 2 * signs_.size())
    throw DiagramError("expected " + std::to_string(2 * signs_.size()) + " endpoints for " +
                       std::to_string(signs_.size()) + " chords, got " + std::to_string(endpoints_.size()));
  index_positions();
}

void GaussDiagram::index_positions() {
  const std::size_t n = signs_.size();
  over_pos_.assign(n, kUnset);
  under_pos_.assign(n, kUnset);
  for (std::size_t p = 0; p < endpoints_.size(); ++p) {
    const auto& ep = endpoints_[p];
    if (ep.chord >= n) throw DiagramError("chord index " + std::to_string(ep.chord) + " out of range");
    auto& slot = ep.role == Role::Over ? over_pos_[ep.chord] : under_pos_[ep.chord];
    if (slot != kUnset)
      throw DiagramError("chord " + std::to_string(ep.chord + 1) + " has two " +
                         (ep.role == Role::Over ? "over" : "under") + " endpoints");
    slot = p;
  }
}

GaussDiagram GaussDiagram::parse(std::string_view code) {
  auto tokens = tokenize(code);
  std::map<std::size_t, ChordId> ids;
  std::vector<Endpoint> endpoints;
  std::vector<Sign> signs;
  std::vector<int> overs, unders;
  for (const auto& t : tokens) {
    auto [it, fresh] = ids.try_emplace(t.label, signs.size());
    if (fresh) {
      signs.push_back(t.sign);
      overs.push_back(0);
      unders.push_back(0);
    } else if (signs[it->second] != t.sign) {
      throw DiagramError("chord " + std::to_string(t.label) + " has inconsistent signs");
    }
    ++(t.role == Role::Over ? overs : unders)[it->second];
    endpoints.push_back({it->second, t.role});
  }
  for (auto [label, id] : ids) {
    if (overs[id] != 1 || unders[id] != 1)
      throw DiagramError("chord " + std::to_string(label) + " must appear exactly once as O and once as U");
  }
  return GaussDiagram(std::move(endpoints), std::move(signs));
}

std::string GaussDiagram::str() const {
  std::string out;
  for (const auto& ep : endpoints_) {
    out += ep.role == Role::Over ? 'O' : 'U';
    out += std::to_string(ep.chord + 1);
    out += sign_char(signs_[ep.chord]);
  }
  return out;
}

GaussDiagram GaussDiagram::canonicalized() const {
  if (empty()) return {};
  return rotated(canonical_start(*this)).relabeled();
}

std::string GaussDiagram::canonical() const { return canonicalized().str(); }

std::size_t GaussDiagram::partner(std::size_t pos) const {
  const auto& ep = endpoints_.at(pos);
  return position(ep.chord, opposite(ep.role));
}

int GaussDiagram::endpoint_sign(std::size_t pos) const {
  const auto& ep = endpoints_.at(pos);
  int eps = value(signs_[ep.chord]);
  return ep.role == Role::Over ? -eps : eps;
}

GaussDiagram GaussDiagram::rotated(std::size_t k) const {
  if (empty()) return *this;
  std::vector<Endpoint> eps(endpoints_);
  std::rotate(eps.begin(), eps.begin() + static_cast<std::ptrdiff_t>(k % eps.size()), eps.end());
  return GaussDiagram(std::move(eps), signs_);
}

GaussDiagram GaussDiagram::relabeled() const {
  std::vector<std::size_t> label(chord_count(), kUnset);
  std::vector<Sign> signs(chord_count());
  std::vector<Endpoint> eps;
  eps.reserve(size());
  std::size_t next = 0;
  for (const auto& ep : endpoints_) {
    if (label[ep.chord] == kUnset) {
      label[ep.chord] = next;
      signs[next] = signs_[ep.chord];
      ++next;
    }
    eps.push_back({label[ep.chord], ep.role});
  }
  return GaussDiagram(std::move(eps), std::move(signs));
}

GaussDiagram parse(std::string_view code) { return GaussDiagram::parse(code); }

std::string serialize(const GaussDiagram& d) { return d.canonical(); }

GaussDiagram reverse(const GaussDiagram& d) {
  std::vector<Endpoint> eps(d.endpoints().rbegin(), d.endpoints().rend());
  return GaussDiagram(std::move(eps), {d.signs().begin(), d.signs().end()});
}

GaussDiagram vertical_mirror(const GaussDiagram& d) {
  std::vector<Endpoint> eps;
  eps.reserve(d.size());
  for (const auto& ep : d.endpoints()) eps.push_back({ep.chord, opposite(ep.role)});
  std::vector<Sign> signs;
  for (Sign s : d.signs()) signs.push_back(-s);
  return GaussDiagram(std::move(eps), std::move(signs));
}

GaussDiagram horizontal_mirror(const GaussDiagram& d) {
  std::vector<Sign> signs;
  for (Sign s : d.signs()) signs.push_back(-s);
  return GaussDiagram({d.endpoints().begin(), d.endpoints().end()}, std::move(signs));
}

GaussDiagram random_diagram(std::size_t n, std::uint64_t seed) {
  detail::Rng rng(seed);
  std::vector<std::size_t> slots(2 * n);
  std::iota(slots.begin(), slots.end(), 0);
  // Fisher-Yates; consecutive slot pairs then form a uniform perfect matching.
  for (std::size_t i = slots.size(); i > 1; --i) std::swap(slots[i - 1], slots[rng.below(i)]);
  std::vector<Endpoint> eps(2 * n);
  std::vector<Sign> signs(n);
  for (ChordId c = 0; c < n; ++c) {
    auto a = slots[2 * c], b = slots[2 * c + 1];
    if (rng.coin()) std::swap(a, b);
    eps[a] = {c, Role::Over};
    eps[b] = {c, Role::Under};
    signs[c] = rng.coin() ? Sign::Positive : Sign::Negative;
  }
  return GaussDiagram(std::move(eps), std::move(signs)).relabeled();
}

bool in_open_arc(std::size_t p, std::size_t from, std::size_t to, std::size_t n) {
  auto offset = (p + n - from) % n;
  auto length = (to + n - from) % n;
  return offset != 0 && offset < length;
}

bool linked(const GaussDiagram& d, ChordId i, ChordId j) {
  if (i == j) throw DiagramError("linked: a chord is not linked with itself");
  const auto n = d.size();
  auto from = d.over_position(i), to = d.under_position(i);
  return in_open_arc(d.over_position(j), from, to, n) != in_open_arc(d.under_position(j), from, to, n);
}

}  // namespace vknot
