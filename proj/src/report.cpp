#include "vknot/report.hpp"

#include <sstream>

#include "vknot/appendix.hpp"
#include "vknot/intersect.hpp"
#include "vknot/moves.hpp"

namespace vknot {

namespace {

const char* const kColumns[] = {"name", "gauss_code", "writhe", "W", "Wbar", "f01", "f10", "f00", "f11", "I",
                                "II", "III_representative", "III_modulus", "c_lower_bound", "vc_lower_bound",
                                "symmetry_distinct"};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

nlohmann::ordered_json record_json(const std::string& name, const GaussDiagram& d, const InvariantSet& s) {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["gauss_code"] = d.str();
  j["writhe"] = s.writhe;
  j["W"] = s.W.str();
  j["Wbar"] = s.Wbar.str();
  j["f01"] = s.f01.str();
  j["f10"] = s.f10.str();
  j["f00"] = s.f00.str();
  j["f11"] = s.f11.str();
  j["I"] = s.I.str();
  j["II"] = s.II.str();
  j["III_representative"] = canonical_representative(s.III).str();
  j["III_modulus"] = s.III.modulus.str();
  j["c_lower_bound"] = crossing_lower_bound(s).value;
  j["vc_lower_bound"] = virtual_crossing_lower_bound(s).value;
  j["symmetry_distinct"] = symmetry_distinctness(s).distinct();
  return j;
}

nlohmann::ordered_json record_json(const TableRow& row) {
  if (row.invariants) return record_json(row.name, row.code, *row.invariants);
  return {{"name", row.name}, {"gauss_code", row.code.str()}, {"error", row.error}};
}

std::string csv_header() {
  std::string out;
  for (const char* c : kColumns) out += std::string(c) + ",";
  return out + "error";
}

std::string csv_row(const TableRow& row) {
  const auto j = record_json(row);
  std::string out;
  for (const char* c : kColumns) {
    if (j.contains(c)) {
      const auto& v = j[c];
      out += csv_field(v.is_string() ? v.get<std::string>() : v.dump());
    }
    out += ',';
  }
  return out + csv_field(row.error);
}

std::string appendix_header() { return "name\tW\tI\tII\tWbar\tf00\tf11\tIII"; }

std::string appendix_row(const TableRow& row) {
  if (!row.invariants) return row.name + "\terror: " + row.error;
  const auto& s = *row.invariants;
  auto braced = [](const LaurentPoly& p) { return format_appendix(p, AppendixStyle::Braced); };
  auto symmetric = [](const LaurentPoly& p) { return format_appendix(p, AppendixStyle::Symmetric); };
  return row.name + '\t' + braced(s.W) + '\t' + braced(s.I) + '\t' + symmetric(s.II) + '\t' + symmetric(s.Wbar) +
         '\t' + symmetric(s.f00) + '\t' + symmetric(s.f11) + '\t' + symmetric(canonical_representative(s.III));
}

std::string format_text(const GaussDiagram& d, const InvariantSet& s) {
  std::ostringstream out;
  out << "gauss code  " << (d.empty() ? "(unknot)" : d.str()) << '\n';
  out << "writhe      " << s.writhe << '\n';
  out << "W           " << s.W.str() << '\n';
  out << "Wbar        " << s.Wbar.str() << '\n';
  out << "f01         " << s.f01.str() << '\n';
  out << "f10         " << s.f10.str() << '\n';
  out << "f00         " << s.f00.str() << '\n';
  out << "f11         " << s.f11.str() << '\n';
  out << "I           " << s.I.str() << '\n';
  out << "II          " << s.II.str() << '\n';
  out << "III         " << canonical_representative(s.III).str() << "  mod " << s.III.modulus.str() << '\n';
  if (!d.empty()) {
    const auto data = build(d);
    out << "\nindex";
    for (auto n : data.indices()) out << ' ' << n;
    out << "\n\n" << format_tables(data);
  }
  return out.str();
}

Comparison compare(const InvariantSet& a, const InvariantSet& b) {
  return {a.W != b.W, a.I != b.I, a.II != b.II, !classes_coincide(a.III, b.III)};
}

std::string describe(const Comparison& c) {
  const std::pair<const char*, bool> items[] = {{"W", c.W}, {"I", c.I}, {"II", c.II}, {"III", c.III}};
  std::vector<std::string> differ, equal;
  for (auto [name, d] : items) (d ? differ : equal).push_back(name);
  auto join = [](const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
    return out;
  };
  std::string out;
  if (!differ.empty()) out = join(differ) + (differ.size() == 1 ? " differs" : " differ");
  if (!equal.empty()) out += (out.empty() ? "" : "; ") + join(equal) + " equal";
  return out;
}

namespace {

SelftestResult trefoil_suite() {
  const auto d = GaussDiagram::parse("O1+U2+O3+U1+O2+U3+");
  const auto data = build(d);
  for (ChordId i = 0; i < d.chord_count(); ++i)
    for (ChordId j = 0; j < d.chord_count(); ++j)
      for (auto a : {ArcKind::Gamma, ArcKind::GammaBar})
        for (auto b : {ArcKind::Gamma, ArcKind::GammaBar})
          if (data.pairing({i, a}, {j, b}) != 0) return {"trefoil", false, "nonzero pairing"};
  const auto s = all_invariants(d);
  const bool ok = s.W.is_zero() && s.I.is_zero() && s.II.is_zero() && class_equal(s.III, {{}, s.Wbar});
  return {"trefoil", ok, ok ? "all pairings and invariants vanish" : "nonzero invariant"};
}

SelftestResult tabulated_suite() {
  const IntersectionData data({3, -1, 0, 2}, {{0, 3, 1, 1}, {-3, 0, -1, -2}, {-1, 1, 0, -1}, {-1, 2, 1, 0}});
  const Sign signs[] = {Sign::Negative, Sign::Negative, Sign::Negative, Sign::Positive};
  const auto s = invariants_from(data, signs);
  const bool ok = s.I == LaurentPoly::parse("-2t^3+4t^2-2t") &&
                  s.II == LaurentPoly::parse("-t^3+2t^2-3t+4-3t^-1+2t^-2-t^-3") &&
                  class_equal(s.III, {LaurentPoly::parse("-t+2-t^-1"), s.Wbar});
  return {"4.39 tables", ok, ok ? "I, II, III match" : "mismatch: I = " + s.I.str() + ", II = " + s.II.str()};
}

SelftestResult linearity_suite() {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto d = random_diagram(2 + seed % 6, seed);
    const auto data = build(d);
    for (ChordId i = 0; i < d.chord_count(); ++i) {
      for (ChordId j = 0; j < d.chord_count(); ++j) {
        if (i == j) continue;
        for (auto a : {ArcKind::Gamma, ArcKind::GammaBar})
          for (auto b : {ArcKind::Gamma, ArcKind::GammaBar})
            if (data.pairing({i, a}, {j, b}) != direct_pairing_oracle(d, {i, a}, {j, b}))
              return {"linearity", false, "pairing mismatch on " + d.str()};
      }
    }
  }
  return {"linearity", true, "200 random diagrams"};
}

SelftestResult symmetry_suite() {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto d = random_diagram(1 + seed % 7, seed);
    const auto r = symmetry_identity_check(d);
    if (!r.all_hold()) return {"symmetry identities", false, r.failures().front() + " fails on " + d.str()};
  }
  return {"symmetry identities", true, "200 random diagrams"};
}

SelftestResult moves_suite() {
  const auto d = GaussDiagram::parse("O1-O2-O3-U4+U1-U3-O4+U2-");
  const auto base = all_invariants(d);
  std::string failure;
  random_walk(d, 300, 7, kDefaultMaxChords, [&](const GaussDiagram&, const MoveSpec& m, const GaussDiagram& after) {
    const auto c = compare(base, all_invariants(after));
    if (c.W || c.I || c.II || c.III) {
      failure = format_move(m);
      return false;
    }
    return true;
  });
  return {"move invariance", failure.empty(), failure.empty() ? "300 moves" : "changed by " + failure};
}

}  // namespace

std::vector<SelftestResult> run_selftest() {
  return {trefoil_suite(), tabulated_suite(), linearity_suite(), symmetry_suite(), moves_suite()};
}

}  // namespace vknot
