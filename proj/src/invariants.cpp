#include "vknot/invariants.hpp"

#include <stdexcept>

namespace vknot {

namespace {

ArcKind kind_of(int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("arc selector must be 0 or 1");
  return bit == 0 ? ArcKind::Gamma : ArcKind::GammaBar;
}

LaurentPoly f_sum(const IntersectionData& data, std::span<const Sign> signs, int p, int q) {
  const auto kp = kind_of(p), kq = kind_of(q);
  LaurentPoly out;
  for (ChordId i = 0; i < data.size(); ++i) {
    for (ChordId j = 0; j < data.size(); ++j) {
      auto k = data.pairing({i, kp}, {j, kq});
      if (k == 0) continue;
      auto e = value(signs[i]) * value(signs[j]);
      out.add_term(k, e);
      out.add_term(0, -e);
    }
  }
  return out;
}

LaurentPoly writhe_sum(const IntersectionData& data, std::span<const Sign> signs) {
  LaurentPoly w;
  for (ChordId i = 0; i < data.size(); ++i) w += value(signs[i]) * monomial_minus_one(data.index(i));
  return w;
}

std::int64_t sign_sum(std::span<const Sign> signs) {
  std::int64_t w = 0;
  for (Sign s : signs) w += value(s);
  return w;
}

}  // namespace

std::int64_t writhe(const GaussDiagram& d) { return sign_sum(d.signs()); }

LaurentPoly writhe_polynomial(const GaussDiagram& d) { return writhe_sum(build(d), d.signs()); }

LaurentPoly f_polynomial(const GaussDiagram& d, int p, int q) { return f_sum(build(d), d.signs(), p, q); }

LaurentPoly first_intersection(const GaussDiagram& d) { return all_invariants(d).I; }

LaurentPoly second_intersection(const GaussDiagram& d) { return all_invariants(d).II; }

LaurentClass third_intersection(const GaussDiagram& d) { return all_invariants(d).III; }

InvariantSet invariants_from(const IntersectionData& data, std::span<const Sign> signs) {
  if (signs.size() != data.size()) throw std::invalid_argument("one sign per chord required");
  InvariantSet s;
  s.writhe = sign_sum(signs);
  s.W = writhe_sum(data, signs);
  s.Wbar = s.W + s.W.substitute_inverse();
  s.f01 = f_sum(data, signs, 0, 1);
  s.f10 = f_sum(data, signs, 1, 0);
  s.f00 = f_sum(data, signs, 0, 0);
  s.f11 = f_sum(data, signs, 1, 1);
  s.I = s.f01 - s.writhe * s.W;
  s.II = s.f00 + s.f11 - s.writhe * s.Wbar;
  s.III = {s.f00, s.Wbar};
  return s;
}

InvariantSet all_invariants(const GaussDiagram& d) { return invariants_from(build(d), d.signs()); }

namespace {

void consider(Bound& best, std::optional<LaurentPoly::Exponent> degree, std::int64_t shift, const char* name) {
  if (!degree) return;
  auto v = *degree + shift;
  if (best.source == "none" || v > best.value) {
    best.value = v;
    best.source = name;
  }
}

Bound degree_bound(const InvariantSet& s, std::int64_t shift) {
  Bound b;
  consider(b, s.W.max_degree(), shift, "W");
  consider(b, s.I.max_degree(), shift, "I");
  consider(b, s.II.max_degree(), shift, "II");
  consider(b, class_max_degree(s.III), shift, "III");
  if (b.value < 0) b.value = 0;
  return b;
}

}  // namespace

Bound crossing_lower_bound(const InvariantSet& s) { return degree_bound(s, 1); }

Bound virtual_crossing_lower_bound(const InvariantSet& s) { return degree_bound(s, 0); }

DistinctnessReport symmetry_distinctness(const InvariantSet& s) {
  DistinctnessReport r;
  r.twice_third_differs_from_second = !class_equal({2 * s.III.representative, s.Wbar}, {s.II, s.Wbar});
  const auto w_inv = s.W.substitute_inverse();
  r.writhe_not_reciprocal = s.W != w_inv;
  r.reverse_detectable = s.W != -w_inv || s.I != s.I.substitute_inverse();
  return r;
}

bool SymmetryReport::all_hold() const {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return true;
}

std::vector<std::string> SymmetryReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.holds) out.push_back(c.name);
  return out;
}

SymmetryReport symmetry_identity_check(const GaussDiagram& d) {
  const auto k = all_invariants(d);
  const auto rev = all_invariants(reverse(d));
  const auto vert = all_invariants(vertical_mirror(d));
  const auto hor = all_invariants(horizontal_mirror(d));

  const auto w_inv = k.W.substitute_inverse();
  const auto i_inv = k.I.substitute_inverse();
  const LaurentClass complement{k.II - k.f00, k.Wbar};

  SymmetryReport r;
  auto check = [&](std::string name, bool holds) { r.checks.push_back({std::move(name), holds}); };
  check("W(-K) = W(t^-1)", rev.W == w_inv);
  check("W(K#) = -W(t^-1)", vert.W == -w_inv);
  check("W(K*) = -W(t^-1)", hor.W == -w_inv);
  check("Wbar(-K) = Wbar", rev.Wbar == k.Wbar);
  check("Wbar(K#) = -Wbar", vert.Wbar == -k.Wbar);
  check("Wbar(K*) = -Wbar", hor.Wbar == -k.Wbar);
  check("I(-K) = I(t^-1)", rev.I == i_inv);
  check("I(K#) = I(t^-1)", vert.I == i_inv);
  check("I(K*) = I(t^-1)", hor.I == i_inv);
  check("II(-K) = II", rev.II == k.II);
  check("II(K#) = II", vert.II == k.II);
  check("II(K*) = II", hor.II == k.II);
  check("III(-K) = II - III", classes_coincide(rev.III, complement));
  check("III(K#) = II - III", classes_coincide(vert.III, complement));
  check("III(K*) = III", classes_coincide(hor.III, k.III));
  return r;
}

std::vector<SymmetryVariant> symmetry_variants(const GaussDiagram& d) {
  const auto vm = vertical_mirror(d);
  const auto hm = horizontal_mirror(d);
  const auto both = horizontal_mirror(vm);
  return {{"K", d},           {"-K", reverse(d)},  {"K#", vm},        {"K*", hm},
          {"-K#", reverse(vm)}, {"-K*", reverse(hm)}, {"K#*", both}, {"-K#*", reverse(both)}};
}

}  // namespace vknot
