#include "vknot/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <thread>

namespace vknot {

Catalog parse_catalog(std::istream& in) {
  Catalog out;
  std::set<std::string> names;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto where = "line " + std::to_string(lineno) + ": ";
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw CatalogError(where + "expected name<TAB>gauss_code");
    auto name = line.substr(0, tab);
    while (!name.empty() && name.back() == ' ') name.pop_back();
    name.erase(0, name.find_first_not_of(' '));
    if (name.empty()) throw CatalogError(where + "empty name");
    if (!names.insert(name).second) throw CatalogError(where + "duplicate name '" + name + "'");
    try {
      out.push_back({name, GaussDiagram::parse(std::string_view(line).substr(tab + 1))});
    } catch (const DiagramError& e) {
      throw CatalogError(where + e.what());
    }
  }
  return out;
}

Catalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog " + path.string());
  return parse_catalog(in);
}

std::vector<TableRow> compute_table(const Catalog& catalog, unsigned workers) {
  std::vector<TableRow> rows(catalog.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (auto i = next++; i < catalog.size(); i = next++) {
      auto& row = rows[i];
      row.name = catalog[i].name;
      row.code = catalog[i].code;
      try {
        row.invariants = all_invariants(row.code);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(catalog.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  return rows;
}

}  // namespace vknot
