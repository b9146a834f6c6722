#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vknot/diagram.hpp"
#include "vknot/invariants.hpp"

namespace vknot {

struct KnotRecord {
  std::string name;
  GaussDiagram code;
};

/// Records in file order; names are unique.
using Catalog = std::vector<KnotRecord>;

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads "name<TAB>gauss_code" lines. Blank lines and lines starting with
/// '#' are skipped. Errors name the offending line number.
Catalog parse_catalog(std::istream& in);
Catalog load_catalog(const std::filesystem::path& path);

/// One computed row. Exactly one of `invariants` and `error` is set.
struct TableRow {
  std::string name;
  GaussDiagram code;
  std::optional<InvariantSet> invariants;
  std::string error;
};

/// Computes every record, spreading records over `workers` threads (0 picks
/// the hardware concurrency). Rows come back in catalog order, and a failure
/// in one record does not stop the others.
std::vector<TableRow> compute_table(const Catalog& catalog, unsigned workers = 0);

}  // namespace vknot
