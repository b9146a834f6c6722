#include "vknot/moves.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

#include "rng.hpp"

namespace vknot {

namespace {

struct Builder {
  std::vector<Endpoint> eps;
  std::vector<Sign> signs;
};

Builder unpack(const GaussDiagram& d) {
  return {{d.endpoints().begin(), d.endpoints().end()}, {d.signs().begin(), d.signs().end()}};
}

void check_gap(const GaussDiagram& d, std::size_t gap) {
  if (gap > d.size()) throw MoveError("gap " + std::to_string(gap) + " out of range 0.." + std::to_string(d.size()));
}

bool adjacent(const GaussDiagram& d, std::size_t p, std::size_t q) {
  const auto n = d.size();
  return (p + 1) % n == q || (q + 1) % n == p;
}

GaussDiagram remove_chords(const GaussDiagram& d, ChordId a, ChordId b) {
  std::vector<ChordId> remap(d.chord_count());
  std::vector<Sign> signs;
  for (ChordId c = 0, next = 0; c < d.chord_count(); ++c) {
    if (c == a || c == b) continue;
    remap[c] = next++;
    signs.push_back(d.sign(c));
  }
  std::vector<Endpoint> eps;
  for (const auto& ep : d.endpoints())
    if (ep.chord != a && ep.chord != b) eps.push_back({remap[ep.chord], ep.role});
  return GaussDiagram(std::move(eps), std::move(signs));
}

void check_chord(const GaussDiagram& d, ChordId c) {
  if (c >= d.chord_count()) throw MoveError("chord " + std::to_string(c + 1) + " does not exist");
}

// Roles of a candidate triangle, resolved from three adjacent pairs.
struct Triangle {
  std::size_t top, middle, bottom;  // first positions of the strands
  ChordId top_middle, top_bottom, middle_bottom;
};

std::optional<Triangle> classify(const GaussDiagram& d, const std::array<std::size_t, 3>& firsts) {
  const auto n = d.size();
  std::optional<std::size_t> top, middle, bottom;
  for (auto p : firsts) {
    const auto& x = d.at(p);
    const auto& y = d.at((p + 1) % n);
    if (x.chord == y.chord) return std::nullopt;
    if (x.role == Role::Over && y.role == Role::Over) {
      if (top) return std::nullopt;
      top = p;
    } else if (x.role == Role::Under && y.role == Role::Under) {
      if (bottom) return std::nullopt;
      bottom = p;
    } else {
      if (middle) return std::nullopt;
      middle = p;
    }
  }
  if (!top || !middle || !bottom) return std::nullopt;
  auto in_pair = [&](std::size_t pos, std::size_t first) { return pos == first || pos == (first + 1) % n; };
  const auto m0 = d.at(*middle), m1 = d.at((*middle + 1) % n);
  const ChordId middle_over = m0.role == Role::Over ? m0.chord : m1.chord;
  const ChordId middle_under = m0.role == Role::Under ? m0.chord : m1.chord;
  if (!in_pair(d.under_position(middle_over), *bottom)) return std::nullopt;
  if (!in_pair(d.over_position(middle_under), *top)) return std::nullopt;
  const auto t0 = d.at(*top), t1 = d.at((*top + 1) % n);
  const ChordId top_bottom = t0.chord == middle_under ? t1.chord : t0.chord;
  if (!in_pair(d.under_position(top_bottom), *bottom)) return std::nullopt;
  return Triangle{*top, *middle, *bottom, middle_under, top_bottom, middle_over};
}

bool straight_line_consistent(const GaussDiagram& d, const Triangle& t) {
  auto first_is = [&](std::size_t pair, ChordId c) { return d.at(pair).chord == c ? 1 : -1; };
  const int o_top = first_is(t.top, t.top_middle);
  const int o_middle = first_is(t.middle, t.top_middle);
  const int o_bottom = first_is(t.bottom, t.top_bottom);
  const int a = value(d.sign(t.top_middle)) * o_bottom;
  const int b = value(d.sign(t.top_bottom)) * o_middle;
  const int c = value(d.sign(t.middle_bottom)) * o_top;
  return a == b && b == c;
}

}  // namespace

Sign variant_sign(R1Variant v) {
  return v == R1Variant::A || v == R1Variant::D ? Sign::Positive : Sign::Negative;
}

KinkType variant_kink(R1Variant v) {
  return v == R1Variant::A || v == R1Variant::B ? KinkType::GammaEmpty : KinkType::GammaBarEmpty;
}

GaussDiagram r1_add(const GaussDiagram& d, std::size_t gap, Sign sign, KinkType kink) {
  check_gap(d, gap);
  auto b = unpack(d);
  const ChordId c = d.chord_count();
  const Endpoint first{c, kink == KinkType::GammaEmpty ? Role::Over : Role::Under};
  const Endpoint second{c, opposite(first.role)};
  b.eps.insert(b.eps.begin() + static_cast<std::ptrdiff_t>(gap), {first, second});
  b.signs.push_back(sign);
  return GaussDiagram(std::move(b.eps), std::move(b.signs));
}

GaussDiagram r1_add(const GaussDiagram& d, std::size_t gap, R1Variant variant) {
  return r1_add(d, gap, variant_sign(variant), variant_kink(variant));
}

GaussDiagram r1_remove(const GaussDiagram& d, ChordId chord) {
  check_chord(d, chord);
  if (!adjacent(d, d.over_position(chord), d.under_position(chord)))
    throw MoveError("chord " + std::to_string(chord + 1) + " is not isolated");
  return remove_chords(d, chord, chord);
}

GaussDiagram r2_add(const GaussDiagram& d, std::size_t over_gap, std::size_t under_gap, R2Variant variant, Sign sign) {
  check_gap(d, over_gap);
  check_gap(d, under_gap);
  const ChordId a = d.chord_count(), b = a + 1;
  const std::vector<Endpoint> over_pair{{a, Role::Over}, {b, Role::Over}};
  const std::vector<Endpoint> under_pair = variant == R2Variant::Parallel
                                               ? std::vector<Endpoint>{{a, Role::Under}, {b, Role::Under}}
                                               : std::vector<Endpoint>{{b, Role::Under}, {a, Role::Under}};
  std::vector<Endpoint> eps;
  eps.reserve(d.size() + 4);
  for (std::size_t gap = 0; gap <= d.size(); ++gap) {
    if (gap == over_gap) eps.insert(eps.end(), over_pair.begin(), over_pair.end());
    if (gap == under_gap) eps.insert(eps.end(), under_pair.begin(), under_pair.end());
    if (gap < d.size()) eps.push_back(d.at(gap));
  }
  std::vector<Sign> signs(d.signs().begin(), d.signs().end());
  signs.push_back(sign);
  signs.push_back(-sign);
  return GaussDiagram(std::move(eps), std::move(signs));
}

GaussDiagram r2_remove(const GaussDiagram& d, ChordId a, ChordId b) {
  check_chord(d, a);
  check_chord(d, b);
  if (a == b) throw MoveError("second move needs two different chords");
  if (d.sign(a) == d.sign(b)) throw MoveError("second move needs chords of opposite sign");
  if (!adjacent(d, d.over_position(a), d.over_position(b)) || !adjacent(d, d.under_position(a), d.under_position(b)))
    throw MoveError("chords " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " do not form a bigon");
  return remove_chords(d, a, b);
}

std::vector<ChordId> r1_removable(const GaussDiagram& d) {
  std::vector<ChordId> out;
  for (ChordId c = 0; c < d.chord_count(); ++c)
    if (adjacent(d, d.over_position(c), d.under_position(c))) out.push_back(c);
  return out;
}

std::vector<std::pair<ChordId, ChordId>> r2_removable(const GaussDiagram& d) {
  std::vector<std::pair<ChordId, ChordId>> out;
  for (ChordId a = 0; a < d.chord_count(); ++a) {
    for (ChordId b = a + 1; b < d.chord_count(); ++b) {
      if (d.sign(a) == d.sign(b)) continue;
      if (adjacent(d, d.over_position(a), d.over_position(b)) && adjacent(d, d.under_position(a), d.under_position(b)))
        out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<R3Move> r3_applicable(const GaussDiagram& d) {
  std::vector<R3Move> out;
  const auto n = d.size();
  if (n < 6) return out;
  std::vector<std::size_t> strands;
  for (std::size_t p = 0; p < n; ++p)
    if (d.at(p).chord != d.at((p + 1) % n).chord) strands.push_back(p);
  auto disjoint = [n](std::size_t p, std::size_t q) { return p != q && (p + 1) % n != q && (q + 1) % n != p; };
  for (std::size_t i = 0; i < strands.size(); ++i) {
    for (std::size_t j = i + 1; j < strands.size(); ++j) {
      if (!disjoint(strands[i], strands[j])) continue;
      for (std::size_t k = j + 1; k < strands.size(); ++k) {
        if (!disjoint(strands[i], strands[k]) || !disjoint(strands[j], strands[k])) continue;
        std::array<std::size_t, 3> firsts{strands[i], strands[j], strands[k]};
        auto t = classify(d, firsts);
        if (t && straight_line_consistent(d, *t)) out.push_back({firsts});
      }
    }
  }
  return out;
}

GaussDiagram r3_apply(const GaussDiagram& d, const R3Move& move) {
  auto sites = r3_applicable(d);
  if (std::find(sites.begin(), sites.end(), move) == sites.end())
    throw MoveError("no third move applies at the given strands");
  auto b = unpack(d);
  for (auto p : move.pairs) std::swap(b.eps[p], b.eps[(p + 1) % d.size()]);
  return GaussDiagram(std::move(b.eps), std::move(b.signs));
}

GaussDiagram apply_move(const GaussDiagram& d, const MoveSpec& move) {
  struct Visitor {
    const GaussDiagram& d;
    GaussDiagram operator()(const R1Add& m) const { return r1_add(d, m.gap, m.sign, m.kink); }
    GaussDiagram operator()(const R1Remove& m) const { return r1_remove(d, m.chord); }
    GaussDiagram operator()(const R2Add& m) const { return r2_add(d, m.over_gap, m.under_gap, m.variant, m.sign); }
    GaussDiagram operator()(const R2Remove& m) const { return r2_remove(d, m.first, m.second); }
    GaussDiagram operator()(const R3Move& m) const { return r3_apply(d, m); }
  };
  return std::visit(Visitor{d}, move);
}

std::string format_move(const MoveSpec& move) {
  struct Visitor {
    std::string operator()(const R1Add& m) const {
      return "R1add gap=" + std::to_string(m.gap) + " sign=" + sign_char(m.sign) +
             " kink=" + (m.kink == KinkType::GammaEmpty ? "gamma-empty" : "gammabar-empty");
    }
    std::string operator()(const R1Remove& m) const { return "R1remove chord=" + std::to_string(m.chord + 1); }
    std::string operator()(const R2Add& m) const {
      return "R2add over=" + std::to_string(m.over_gap) + " under=" + std::to_string(m.under_gap) +
             " variant=" + (m.variant == R2Variant::Parallel ? "parallel" : "antiparallel") + " sign=" + sign_char(m.sign);
    }
    std::string operator()(const R2Remove& m) const {
      return "R2remove chords=" + std::to_string(m.first + 1) + "," + std::to_string(m.second + 1);
    }
    std::string operator()(const R3Move& m) const {
      return "R3 pairs=" + std::to_string(m.pairs[0]) + "," + std::to_string(m.pairs[1]) + "," +
             std::to_string(m.pairs[2]);
    }
  };
  return std::visit(Visitor{}, move);
}

namespace {

std::vector<std::size_t> parse_numbers(std::string_view text, std::string_view line) {
  std::vector<std::size_t> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto part = text.substr(0, comma);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size())
      throw MoveError("bad number in move '" + std::string(line) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

MoveSpec parse_move(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string kind;
  in >> kind;
  std::map<std::string, std::string, std::less<>> fields;
  for (std::string word; in >> word;) {
    auto eq = word.find('=');
    if (eq == std::string::npos) throw MoveError("expected key=value in move '" + std::string(line) + "'");
    fields[word.substr(0, eq)] = word.substr(eq + 1);
  }
  auto field = [&](std::string_view key) -> const std::string& {
    auto it = fields.find(key);
    if (it == fields.end()) throw MoveError("move '" + std::string(line) + "' lacks " + std::string(key));
    return it->second;
  };
  auto number = [&](std::string_view key) {
    auto v = parse_numbers(field(key), line);
    if (v.size() != 1) throw MoveError("expected one number for " + std::string(key));
    return v[0];
  };
  auto chord = [&](std::size_t label) {
    if (label == 0) throw MoveError("chord labels start at 1");
    return label - 1;
  };
  auto sign = [&]() {
    const auto& s = field("sign");
    if (s == "+") return Sign::Positive;
    if (s == "-") return Sign::Negative;
    throw MoveError("bad sign in move '" + std::string(line) + "'");
  };

  if (kind == "R1add") {
    const auto& k = field("kink");
    if (k != "gamma-empty" && k != "gammabar-empty") throw MoveError("bad kink type '" + k + "'");
    return R1Add{number("gap"), sign(), k == "gamma-empty" ? KinkType::GammaEmpty : KinkType::GammaBarEmpty};
  }
  if (kind == "R1remove") return R1Remove{chord(number("chord"))};
  if (kind == "R2add") {
    const auto& v = field("variant");
    if (v != "parallel" && v != "antiparallel") throw MoveError("bad variant '" + v + "'");
    return R2Add{number("over"), number("under"), v == "parallel" ? R2Variant::Parallel : R2Variant::Antiparallel,
                 sign()};
  }
  if (kind == "R2remove") {
    auto c = parse_numbers(field("chords"), line);
    if (c.size() != 2) throw MoveError("R2remove needs two chords");
    return R2Remove{chord(c[0]), chord(c[1])};
  }
  if (kind == "R3") {
    auto p = parse_numbers(field("pairs"), line);
    if (p.size() != 3) throw MoveError("R3 needs three pairs");
    std::sort(p.begin(), p.end());
    return R3Move{{p[0], p[1], p[2]}};
  }
  throw MoveError("unknown move kind '" + kind + "'");
}

Walk random_walk(const GaussDiagram& d, std::size_t steps, std::uint64_t seed, std::size_t max_chords) {
  return random_walk(d, steps, seed, max_chords, nullptr);
}

Walk random_walk(const GaussDiagram& d, std::size_t steps, std::uint64_t seed, std::size_t max_chords,
                 const StepObserver& observer) {
  detail::Rng rng(seed);
  Walk walk{d, {}};
  auto random_sign = [&] { return rng.coin() ? Sign::Positive : Sign::Negative; };
  for (std::size_t step = 0; step < steps; ++step) {
    const auto& cur = walk.diagram;
    const auto r1 = r1_removable(cur);
    const auto r2 = r2_removable(cur);
    const auto r3 = r3_applicable(cur);
    enum Kind { AddR1, AddR2, RemoveR1, RemoveR2, ApplyR3 };
    std::vector<Kind> kinds;
    if (cur.chord_count() + 1 <= max_chords) kinds.push_back(AddR1);
    if (cur.chord_count() + 2 <= max_chords) kinds.push_back(AddR2);
    if (!r1.empty()) kinds.push_back(RemoveR1);
    if (!r2.empty()) kinds.push_back(RemoveR2);
    if (!r3.empty()) kinds.push_back(ApplyR3);
    if (kinds.empty()) continue;

    MoveSpec move;
    const auto gaps = cur.size() + 1;
    switch (kinds[rng.below(kinds.size())]) {
      case AddR1:
        move = R1Add{rng.below(gaps), random_sign(), rng.coin() ? KinkType::GammaEmpty : KinkType::GammaBarEmpty};
        break;
      case AddR2: {
        auto over = rng.below(gaps);
        auto under = rng.below(gaps);
        auto variant = rng.coin() ? R2Variant::Parallel : R2Variant::Antiparallel;
        move = R2Add{over, under, variant, random_sign()};
        break;
      }
      case RemoveR1:
        move = R1Remove{r1[rng.below(r1.size())]};
        break;
      case RemoveR2: {
        auto [a, b] = r2[rng.below(r2.size())];
        move = R2Remove{a, b};
        break;
      }
      case ApplyR3:
        move = r3[rng.below(r3.size())];
        break;
    }
    auto next = apply_move(cur, move);
    walk.log.push_back(move);
    const bool keep_going = !observer || observer(walk.diagram, move, next);
    walk.diagram = std::move(next);
    if (!keep_going) break;
  }
  return walk;
}

}  // namespace vknot
