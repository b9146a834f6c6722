#include "vknot/intersect.hpp"

#include <algorithm>
#include <sstream>

namespace vknot {

namespace {

struct ArcBounds {
  std::size_t from;
  std::size_t to;
};

ArcBounds bounds(const GaussDiagram& d, ArcRef a) {
  auto o = d.over_position(a.chord), u = d.under_position(a.chord);
  return a.kind == ArcKind::Gamma ? ArcBounds{o, u} : ArcBounds{u, o};
}

bool inside(const GaussDiagram& d, std::size_t p, ArcBounds b) { return in_open_arc(p, b.from, b.to, d.size()); }

void require_distinct(ArcRef a, ArcRef b, const char* what) {
  if (a.chord == b.chord) throw DiagramError(std::string(what) + ": arcs must belong to different chords");
}

}  // namespace

std::vector<std::size_t> interior_positions(const GaussDiagram& d, ArcRef a) {
  auto b = bounds(d, a);
  std::vector<std::size_t> out;
  for (auto p = (b.from + 1) % d.size(); p != b.to; p = (p + 1) % d.size()) out.push_back(p);
  return out;
}

std::vector<Endpoint> interior_endpoints(const GaussDiagram& d, ArcRef a) {
  std::vector<Endpoint> out;
  for (auto p : interior_positions(d, a)) out.push_back(d.at(p));
  return out;
}

int index(const GaussDiagram& d, ChordId i) {
  int total = 0;
  for (auto p : interior_positions(d, gamma_arc(i))) total += d.endpoint_sign(p);
  return total;
}

int s_count(const GaussDiagram& d, ArcRef a, ArcRef b) {
  require_distinct(a, b, "s_count");
  auto bb = bounds(d, b);
  int total = 0;
  for (auto p : interior_positions(d, a))
    if (inside(d, d.partner(p), bb)) total += d.endpoint_sign(p);
  return total;
}

int gamma_gamma(const GaussDiagram& d, ChordId i, ChordId j, LinkedCorrection rule) {
  if (i == j) return 0;
  int s = s_count(d, gamma_arc(i), gamma_arc(j));
  if (!linked(d, i, j)) return s;
  auto gi = bounds(d, gamma_arc(i));
  int sigma = inside(d, d.under_position(j), gi) ? 1 : -1;
  if (rule == LinkedCorrection::Flipped) sigma = -sigma;
  return s + sigma * (value(d.sign(i)) + value(d.sign(j))) / 2;
}

IntersectionData::IntersectionData(std::vector<int> index, std::vector<std::vector<int>> gamma_matrix)
    : index_(std::move(index)) {
  const auto n = index_.size();
  if (gamma_matrix.size() != n) throw std::invalid_argument("intersection matrix has wrong row count");
  a_.reserve(n * n);
  for (const auto& row : gamma_matrix) {
    if (row.size() != n) throw std::invalid_argument("intersection matrix is not square");
    a_.insert(a_.end(), row.begin(), row.end());
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (gamma_gamma(i, j) != -gamma_gamma(j, i))
        throw std::invalid_argument("intersection matrix is not antisymmetric");
}

int IntersectionData::pairing(ArcRef a, ArcRef b) const {
  const auto i = a.chord, j = b.chord;
  const int ni = index(i), nj = index(j);
  const int aij = gamma_gamma(i, j);
  // gamma_i . gamma_D = n_i and gammabar_i = gamma_D - gamma_i; on the
  // diagonal aij is zero so these reduce to +-n_i and 0.
  if (a.kind == ArcKind::Gamma) return b.kind == ArcKind::Gamma ? aij : ni - aij;
  return b.kind == ArcKind::Gamma ? -nj - aij : nj - ni + aij;
}

IntersectionData build(const GaussDiagram& d, LinkedCorrection rule) {
  const auto n = d.chord_count();
  std::vector<int> idx(n);
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (ChordId i = 0; i < n; ++i) {
    idx[i] = index(d, i);
    for (ChordId j = i + 1; j < n; ++j) {
      a[i][j] = gamma_gamma(d, i, j, rule);
      a[j][i] = -a[i][j];
    }
  }
  return IntersectionData(std::move(idx), std::move(a));
}

int direct_pairing_oracle(const GaussDiagram& d, ArcRef a, ArcRef b) {
  require_distinct(a, b, "direct_pairing_oracle");
  int s = s_count(d, a, b);
  if (!linked(d, a.chord, b.chord)) return s;
  auto ab = bounds(d, a), bb = bounds(d, b);
  // Linked: exactly one endpoint of each chord sits inside the other's arc.
  auto yb = inside(d, d.over_position(b.chord), ab) ? d.over_position(b.chord) : d.under_position(b.chord);
  auto ya = inside(d, d.over_position(a.chord), bb) ? d.over_position(a.chord) : d.under_position(a.chord);
  return s + (d.endpoint_sign(yb) - d.endpoint_sign(ya)) / 2;
}

std::string format_tables(const IntersectionData& data) {
  const auto n = data.size();
  struct Table {
    const char* title;
    ArcKind row;
    ArcKind col;
  };
  const Table tables[] = {{"gamma . gammabar", ArcKind::Gamma, ArcKind::GammaBar},
                          {"gamma . gamma", ArcKind::Gamma, ArcKind::Gamma},
                          {"gammabar . gammabar", ArcKind::GammaBar, ArcKind::GammaBar}};
  int width = 2;
  for (const auto& t : tables)
    for (ChordId i = 0; i < n; ++i)
      for (ChordId j = 0; j < n; ++j)
        width = std::max(width, static_cast<int>(std::to_string(data.pairing({i, t.row}, {j, t.col})).size()));
  std::ostringstream out;
  for (const auto& t : tables) {
    out << t.title << '\n';
    for (ChordId i = 0; i < n; ++i) {
      for (ChordId j = 0; j < n; ++j) {
        auto s = std::to_string(data.pairing({i, t.row}, {j, t.col}));
        out << (j ? " " : "") << std::string(static_cast<std::size_t>(width) - s.size(), ' ') << s;
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace vknot
