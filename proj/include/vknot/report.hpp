#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "vknot/catalog.hpp"
#include "vknot/invariants.hpp"

namespace vknot {

/// JSON object with name, gauss_code, writhe, W, Wbar, f01, f10, f00, f11,
/// I, II, III_representative, III_modulus, c_lower_bound, vc_lower_bound and
/// symmetry_distinct. Polynomials use the canonical text form. A failed row
/// carries name, gauss_code and error instead.
nlohmann::ordered_json record_json(const TableRow& row);
nlohmann::ordered_json record_json(const std::string& name, const GaussDiagram& d, const InvariantSet& s);

/// CSV with the JSON fields as columns plus a trailing error column.
std::string csv_header();
std::string csv_row(const TableRow& row);

/// Tab-separated table in the compact published notation: name, W and I in
/// braced form, then II, Wbar, f00, f11 and the III representative in
/// symmetric form.
std::string appendix_header();
std::string appendix_row(const TableRow& row);

/// Human-readable invariants plus the three intersection tables.
std::string format_text(const GaussDiagram& d, const InvariantSet& s);

/// Which of W, I, II and III tell two knots apart. III compares as sets of
/// polynomials, so different moduli count as different.
struct Comparison {
  bool W = false;
  bool I = false;
  bool II = false;
  bool III = false;
};
Comparison compare(const InvariantSet& a, const InvariantSet& b);
/// E.g. "W differs; I, II, III equal".
std::string describe(const Comparison& c);

struct SelftestResult {
  std::string name;
  bool passed;
  std::string detail;
};
/// Trefoil vanishing, the tabulated 4.39 intersection numbers, pairing
/// linearity, symmetry identities and a short move-invariance walk.
std::vector<SelftestResult> run_selftest();

}  // namespace vknot
