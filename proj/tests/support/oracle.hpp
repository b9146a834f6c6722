#pragma once

// Reference computation used to cross-check the library. It shares no code
// with src/: its own token reader, plain maps for polynomials, and the
// direct linked-pair rule for every off-diagonal pairing (no linearity).

#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "vknot/laurent.hpp"

namespace oracle {

using Poly = std::map<long, long>;

inline void add(Poly& p, long e, long c) {
  if ((p[e] += c) == 0) p.erase(e);
}

inline Poly plus(Poly a, const Poly& b, long scale = 1) {
  for (auto [e, c] : b) add(a, e, scale * c);
  return a;
}

inline Poly inverse(const Poly& p) {
  Poly out;
  for (auto [e, c] : p) out[-e] = c;
  return out;
}

inline Poly to_poly(const vknot::LaurentPoly& p) {
  Poly out;
  for (auto [e, c] : p.terms()) out[static_cast<long>(e)] = static_cast<long>(c);
  return out;
}

struct Code {
  // Per position: chord label and whether it is the over endpoint.
  std::vector<int> chord;
  std::vector<bool> over;
  // Per chord label.
  std::map<int, int> sign, over_pos, under_pos;

  int size() const { return static_cast<int>(chord.size()); }
};

inline Code read(const std::string& text) {
  Code c;
  std::size_t i = 0;
  while (i < text.size()) {
    char role = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i++])));
    if (role != 'O' && role != 'U') throw std::invalid_argument("oracle: bad role");
    int label = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) label = 10 * label + (text[i++] - '0');
    int s = text.at(i++) == '+' ? 1 : -1;
    const int pos = c.size();
    c.chord.push_back(label);
    c.over.push_back(role == 'O');
    c.sign[label] = s;
    (role == 'O' ? c.over_pos : c.under_pos)[label] = pos;
  }
  return c;
}

inline int endpoint_sign(const Code& c, int pos) {
  const int e = c.sign.at(c.chord[pos]);
  return c.over[pos] ? -e : e;
}

inline int partner(const Code& c, int pos) {
  const int k = c.chord[pos];
  return c.over[pos] ? c.under_pos.at(k) : c.over_pos.at(k);
}

struct Arc {
  int from, to;  // open arc running forward from `from` to `to`
};

inline Arc arc(const Code& c, int chord, bool gamma) {
  return gamma ? Arc{c.over_pos.at(chord), c.under_pos.at(chord)} : Arc{c.under_pos.at(chord), c.over_pos.at(chord)};
}

inline bool inside(const Code& c, int p, Arc a) {
  const int n = c.size();
  const int off = ((p - a.from) % n + n) % n;
  const int len = ((a.to - a.from) % n + n) % n;
  return off != 0 && off < len;
}

inline int index(const Code& c, int chord) {
  int total = 0;
  for (int p = 0; p < c.size(); ++p)
    if (inside(c, p, arc(c, chord, true))) total += endpoint_sign(c, p);
  return total;
}

// Intersection number of arc(i, gi) with arc(j, gj).
inline int pairing(const Code& c, int i, bool gi, int j, bool gj) {
  if (i == j) {
    if (gi == gj) return 0;
    return gi ? index(c, i) : -index(c, i);
  }
  const Arc a = arc(c, i, gi), b = arc(c, j, gj);
  int s = 0;
  for (int p = 0; p < c.size(); ++p)
    if (inside(c, p, a) && inside(c, partner(c, p), b)) s += endpoint_sign(c, p);
  const bool jo = inside(c, c.over_pos.at(j), a), ju = inside(c, c.under_pos.at(j), a);
  if (jo == ju) return s;  // unlinked
  const int yb = jo ? c.over_pos.at(j) : c.under_pos.at(j);
  const int ya = inside(c, c.over_pos.at(i), b) ? c.over_pos.at(i) : c.under_pos.at(i);
  return s + (endpoint_sign(c, yb) - endpoint_sign(c, ya)) / 2;
}

struct Values {
  long writhe = 0;
  Poly W, Wbar, f01, f10, f00, f11, I, II;
};

inline Values compute(const std::string& text) {
  const auto c = read(text);
  Values v;
  for (auto [k, s] : c.sign) {
    v.writhe += s;
    add(v.W, index(c, k), s);
    add(v.W, 0, -s);
  }
  v.Wbar = plus(v.W, inverse(v.W));
  Poly* f[2][2] = {{&v.f00, &v.f01}, {&v.f10, &v.f11}};
  for (auto [i, si] : c.sign) {
    for (auto [j, sj] : c.sign) {
      for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
          add(*f[p][q], pairing(c, i, p == 0, j, q == 0), si * sj);
          add(*f[p][q], 0, -si * sj);
        }
      }
    }
  }
  v.I = plus(v.f01, v.W, -v.writhe);
  v.II = plus(plus(v.f00, v.f11), v.Wbar, -v.writhe);
  return v;
}

}  // namespace oracle
