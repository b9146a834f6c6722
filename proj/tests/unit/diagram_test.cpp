#include <gtest/gtest.h>

#include "vknot/diagram.hpp"

using namespace vknot;

namespace {
const char* const kTrefoil = "O1+U2+O3+U1+O2+U3+";
}

TEST(DiagramParse, Trefoil) {
  const auto d = GaussDiagram::parse(kTrefoil);
  EXPECT_EQ(d.chord_count(), 3u);
  EXPECT_EQ(d.size(), 6u);
  EXPECT_EQ(d.str(), kTrefoil);
  EXPECT_EQ(d.over_position(0), 0u);
  EXPECT_EQ(d.under_position(0), 3u);
  for (ChordId c = 0; c < 3; ++c) EXPECT_EQ(d.sign(c), Sign::Positive);
}

TEST(DiagramParse, EmptyIsUnknot) {
  const auto d = GaussDiagram::parse("");
  EXPECT_TRUE(d.empty());
  EXPECT_EQ(d.chord_count(), 0u);
  EXPECT_EQ(d.str(), "");
  EXPECT_EQ(d.canonical(), "");
}

TEST(DiagramParse, LenientInput) {
  const auto d = GaussDiagram::parse(" o1+ u2+ O3+\tU1+o2+U3+ ");
  EXPECT_EQ(d.str(), kTrefoil);
  const auto minus = GaussDiagram::parse("O1−U1−");
  EXPECT_EQ(minus.str(), "O1-U1-");
}

TEST(DiagramParse, RenumbersByFirstAppearance) {
  const auto d = GaussDiagram::parse("O7-U3+O3+U7-");
  EXPECT_EQ(d.str(), "O1-U2+O2+U1-");
}

TEST(DiagramParse, Errors) {
  for (const char* bad : {"O1+", "O1+O1+", "O1+U1-", "X1+U1+", "O+U+", "O1U1", "O1+U1+U1+", "O1+U2+"}) {
    EXPECT_THROW(GaussDiagram::parse(bad), DiagramError) << bad;
  }
}

TEST(DiagramPositions, PartnersAndSigns) {
  const auto d = GaussDiagram::parse("O1-O2-O3-U4+U1-U3-O4+U2-");
  for (std::size_t p = 0; p < d.size(); ++p) {
    EXPECT_EQ(d.partner(d.partner(p)), p);
    EXPECT_EQ(d.at(d.partner(p)).chord, d.at(p).chord);
    EXPECT_NE(d.at(d.partner(p)).role, d.at(p).role);
    // Endpoint sign: -eps at the over endpoint, +eps at the under endpoint.
    const int e = value(d.sign(d.at(p).chord));
    EXPECT_EQ(d.endpoint_sign(p), d.at(p).role == Role::Over ? -e : e);
  }
}

TEST(DiagramCanonical, InvariantUnderRotationAndRelabeling) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto d = random_diagram(1 + seed % 7, seed);
    const auto c = d.canonical();
    for (std::size_t k = 0; k < d.size(); ++k) {
      const auto r = d.rotated(k);
      EXPECT_EQ(r.canonical(), c);
      EXPECT_EQ(r.relabeled().canonical(), c);
    }
    EXPECT_EQ(GaussDiagram::parse(c).canonical(), c);
    EXPECT_TRUE(parse(serialize(d)).equivalent(d));
  }
}

TEST(DiagramCanonical, DistinguishesSigns) {
  EXPECT_FALSE(GaussDiagram::parse("O1+U1+").equivalent(GaussDiagram::parse("O1-U1-")));
  EXPECT_TRUE(GaussDiagram::parse("O1+U1+").equivalent(GaussDiagram::parse("U1+O1+")));
}

TEST(DiagramTransforms, ReverseAndMirrorsAreInvolutions) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto d = random_diagram(seed % 8, seed);
    EXPECT_EQ(reverse(reverse(d)), d);
    EXPECT_EQ(vertical_mirror(vertical_mirror(d)), d);
    EXPECT_EQ(horizontal_mirror(horizontal_mirror(d)), d);
    EXPECT_EQ(vertical_mirror(horizontal_mirror(d)), horizontal_mirror(vertical_mirror(d)));
  }
}

TEST(DiagramTransforms, Shapes) {
  const auto d = GaussDiagram::parse("O1+O2-U1+U2-");
  EXPECT_EQ(reverse(d).str(), "U2-U1+O2-O1+");
  EXPECT_EQ(vertical_mirror(d).str(), "U1-U2+O1-O2+");
  EXPECT_EQ(horizontal_mirror(d).str(), "O1-O2+U1-U2+");
}

TEST(DiagramRandom, DeterministicAndValid) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto a = random_diagram(6, seed);
    EXPECT_EQ(a, random_diagram(6, seed));
    EXPECT_EQ(a.chord_count(), 6u);
    EXPECT_EQ(GaussDiagram::parse(a.str()), a);
  }
  EXPECT_NE(random_diagram(6, 1).str(), random_diagram(6, 2).str());
}

TEST(DiagramLinking, Basic) {
  const auto linked_pair = GaussDiagram::parse("O1+O2-U1+U2-");
  EXPECT_TRUE(linked(linked_pair, 0, 1));
  const auto nested = GaussDiagram::parse("O1+O2-U2-U1+");
  EXPECT_FALSE(linked(nested, 0, 1));
  EXPECT_THROW(linked(nested, 0, 0), DiagramError);
}

TEST(DiagramArcs, OpenArc) {
  EXPECT_TRUE(in_open_arc(1, 0, 3, 6));
  EXPECT_FALSE(in_open_arc(0, 0, 3, 6));
  EXPECT_FALSE(in_open_arc(3, 0, 3, 6));
  EXPECT_TRUE(in_open_arc(0, 4, 2, 6));
  EXPECT_FALSE(in_open_arc(3, 4, 2, 6));
}

TEST(DiagramConstruct, Validates) {
  EXPECT_THROW(GaussDiagram({{0, Role::Over}}, {Sign::Positive}), DiagramError);
  EXPECT_THROW(GaussDiagram({{0, Role::Over}, {0, Role::Over}}, {Sign::Positive}), DiagramError);
  EXPECT_THROW(GaussDiagram({{0, Role::Over}, {1, Role::Under}}, {Sign::Positive}), DiagramError);
}
