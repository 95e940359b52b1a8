#include <random>

#include <gtest/gtest.h>

#include "harbourne/catalog.hpp"
#include "harbourne/core.hpp"
#include "oracles.hpp"

using namespace harbourne;

namespace {

const PolarizationData kLine = PolarizationData::plane_line();

ArrangementCombinatorics lines(std::int64_t tau, ArrangementCombinatorics::Counts t) {
  return ArrangementCombinatorics::uniform(1, tau, std::move(t));
}

ArrangementCombinatorics wiman() { return lines(45, {{3, 120}, {4, 45}, {5, 36}}); }

}  // namespace

TEST(Combinatorics, ValidatesConstruction) {
  EXPECT_THROW(lines(1, {}), PreconditionError);
  EXPECT_THROW(lines(3, {{4, 1}}), PreconditionError);
  EXPECT_THROW(lines(3, {{1, 1}}), PreconditionError);
  EXPECT_THROW(lines(3, {{2, -1}}), PreconditionError);
  EXPECT_THROW(ArrangementCombinatorics({Integer(1), Integer(0)}, {}), PreconditionError);
  EXPECT_EQ(lines(3, {{2, 3}, {3, 0}}).counts().size(), 1U);
}

TEST(Combinatorics, SurfacePresets) {
  const auto p2 = SurfaceInvariants::projective_plane();
  EXPECT_EQ(p2.c1_sq, 9);
  EXPECT_EQ(p2.c2, 3);
  EXPECT_FALSE(p2.kodaira_nonneg);
  EXPECT_EQ(kLine.a_sq, 1);
  EXPECT_EQ(kLine.ka, -3);
}

TEST(Combinatorics, DegreeParity) {
  EXPECT_TRUE(ArrangementCombinatorics({2, 4}, {}).degree_parity_ok());
  EXPECT_EQ(ArrangementCombinatorics({2, 4}, {}).parity_delta(), 0);
  EXPECT_TRUE(ArrangementCombinatorics({1, 3}, {}).degree_parity_ok());
  EXPECT_EQ(ArrangementCombinatorics({1, 3}, {}).parity_delta(), 1);
  EXPECT_FALSE(ArrangementCombinatorics({1, 2, 2}, {}).degree_parity_ok());
}

TEST(Moments, Examples) {
  EXPECT_EQ(f_moment(lines(3, {{2, 3}}), 0), 3);
  EXPECT_EQ(f_moment(wiman(), 0), 201);
  EXPECT_EQ(f_moment(wiman(), 1), 720);
  EXPECT_EQ(f_moment(wiman(), 2), 2700);
}

TEST(Moments, ZerothIsPointCountAndMonotone) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto comb = oracle::random_plane_vector(rng, 1 + i % 5, 4 + i % 7);
    Integer count = 0;
    for (const auto& [r, t] : comb.counts()) count += t;
    EXPECT_EQ(f_moment(comb, 0), count);
    EXPECT_LE(f_moment(comb, 0), f_moment(comb, 1));
    EXPECT_LE(f_moment(comb, 1), f_moment(comb, 2));
  }
}

TEST(IncidenceIdentity, Examples) {
  auto ok = check_incidence_identity(lines(3, {{2, 3}}), kLine);
  EXPECT_TRUE(ok.holds);
  EXPECT_EQ(ok.discrepancy, 0);
  EXPECT_TRUE(check_incidence_identity(wiman(), kLine).holds);
  auto bad = check_incidence_identity(lines(3, {{2, 2}}), kLine);
  EXPECT_FALSE(bad.holds);
  EXPECT_EQ(bad.discrepancy, 2);
}

TEST(SelfIntersection, Examples) {
  EXPECT_EQ(d_squared(lines(3, {{2, 3}}), kLine), 9);
  EXPECT_EQ(d_squared(wiman(), kLine), 2025);
  const auto cubics = ArrangementCombinatorics::uniform(3, 4, {{2, 54}});
  EXPECT_EQ(d_squared(cubics, kLine), 144);
  EXPECT_EQ(strict_transform_self_intersection(lines(3, {{2, 3}}), kLine), -3);
  EXPECT_EQ(strict_transform_self_intersection(wiman(), kLine), -675);
  EXPECT_EQ(strict_transform_self_intersection(cubics, kLine), -72);
  EXPECT_THROW(d_squared(lines(3, {{2, 2}}), kLine), PreconditionError);
}

TEST(HarbourneConstant, Examples) {
  EXPECT_EQ(harbourne_constant(wiman(), kLine), Rational(-225, 67));
  EXPECT_EQ(harbourne_constant(lines(3, {{2, 3}}), kLine), Rational(-1));
  EXPECT_EQ(harbourne_constant(ArrangementCombinatorics::uniform(2, 4, {{2, 24}}), kLine), Rational(-4, 3));
  EXPECT_EQ(harbourne_constant(ArrangementCombinatorics::uniform(3, 4, {{2, 54}}), kLine), Rational(-4, 3));
}

TEST(HarbourneConstant, Refusals) {
  EXPECT_THROW(harbourne_constant(lines(3, {{2, 2}}), kLine), PreconditionError);
  // A^2 = 0: no incidences and no points, h undefined.
  EXPECT_THROW(harbourne_constant(ArrangementCombinatorics({1, 1}, {}), PolarizationData{0, 0}), PreconditionError);
}

TEST(HarbourneConstant, MatchesDefinitionOnRandomInstances) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const auto inst = oracle::random_surface_instance(rng, i % 2 == 0);
    const auto& comb = inst.combinatorics;
    const auto& pol = inst.polarization;
    ASSERT_TRUE(check_incidence_identity(comb, pol).holds);
    const Rational h = harbourne_constant(comb, pol);
    EXPECT_EQ(h, oracle::h_by_definition(comb, pol.a_sq));
    EXPECT_EQ(Rational(strict_transform_self_intersection(comb, pol)), f_moment(comb, 0) * h);
    EXPECT_EQ(d_squared(comb, pol), pol.a_sq * comb.degree_sum() * comb.degree_sum());
  }
}

TEST(Genus, Examples) {
  EXPECT_EQ(genus_data(lines(3, {{2, 3}}), kLine).component_genera, std::vector<Integer>(3, Integer(0)));
  const auto cubics = ArrangementCombinatorics::uniform(3, 4, {{2, 54}});
  const auto g = genus_data(cubics, kLine);
  EXPECT_EQ(g.component_genera.front(), 1);
  EXPECT_EQ(g.two_g_minus_two, 0);
  for (int d = 1; d <= 12; ++d) {
    const auto comb = ArrangementCombinatorics::uniform(d, 2, {{2, d * d}});
    EXPECT_EQ(genus_data(comb, kLine).component_genera.front(), (d - 1) * (d - 2) / 2);
  }
}

TEST(Genus, ParityViolationNamesComponent) {
  const ArrangementCombinatorics comb({2, 3}, {});
  try {
    genus_data(comb, PolarizationData{1, 0});
    FAIL() << "expected a parity error";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("d_2 = 3"), std::string::npos) << e.what();
  }
}

TEST(EulerStrata, Examples) {
  const auto p2 = SurfaceInvariants::projective_plane();
  const auto three = euler_strata(lines(3, {{2, 3}}), kLine, p2);
  EXPECT_EQ(three.divisor, 3);
  EXPECT_EQ(three.complement, 0);
  const auto two = euler_strata(lines(2, {{2, 1}}), kLine, p2);
  EXPECT_EQ(two.divisor, 3);
  EXPECT_EQ(two.complement, 0);
  // g - 1 = -45 gives 2 - 2g = 90, and 90 + 201 - 720 = -429.
  EXPECT_EQ(euler_strata(wiman(), kLine, p2).divisor, -429);
}

TEST(EulerStrata, Additive) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto inst = oracle::random_surface_instance(rng, true);
    const auto e = euler_strata(inst.combinatorics, inst.polarization, inst.surface);
    EXPECT_EQ(e.complement + e.divisor, inst.surface.c2);
    EXPECT_EQ(e.divisor - e.divisor_minus_singular, f_moment(inst.combinatorics, 0));
  }
}

TEST(Catalog, EntriesValidate) {
  for (const auto& entry : catalog_entries()) {
    const auto& comb = entry.combinatorics;
    EXPECT_TRUE(check_incidence_identity(comb, kLine).holds) << entry.name;
    if (comb.t(comb.tau()) == 0) EXPECT_GE(f_moment(comb, 0), comb.tau()) << entry.name;
    EXPECT_FALSE(entry.provenance.empty());
  }
  EXPECT_EQ(harbourne_constant(catalog("hesse12").combinatorics, kLine), Rational(-16, 7));
  EXPECT_EQ(harbourne_constant(catalog("dual_hesse9").combinatorics, kLine), Rational(-9, 4));
  EXPECT_EQ(harbourne_constant(catalog("klein21").combinatorics, kLine), Rational(-3));
  EXPECT_THROW(catalog("nope"), UnknownEntryError);
}
