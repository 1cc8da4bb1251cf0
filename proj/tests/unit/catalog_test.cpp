#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cvspec/bounds.hpp"
#include "cvspec/catalog.hpp"
#include "cvspec/catalog_json.hpp"

using namespace cvspec;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Catalog, TenEntriesInOrder) {
  const auto cat = build_catalog();
  ASSERT_EQ(cat.size(), 10u);
  for (std::size_t i = 0; i < cat.size(); ++i) EXPECT_EQ(cat[i].id, catalog_ids()[i]);
  for (std::size_t i = 0; i < cat.size(); ++i) EXPECT_EQ(cat[i].applicable, i >= 2) << cat[i].id;
}

TEST(Catalog, FamilyParameters) {
  EXPECT_EQ(make_entry("konishi").family_n, 2);
  EXPECT_EQ(make_entry("hopf").family_n, 1);
  EXPECT_EQ(make_entry("flag").family_n, 0);
  EXPECT_THROW(make_entry("konishi", 1), std::invalid_argument);
  EXPECT_THROW(make_entry("twistor", 1), std::invalid_argument);
  EXPECT_THROW(make_entry("hopf", 0), std::invalid_argument);
  EXPECT_THROW(make_entry("flag", 3), std::invalid_argument);
  EXPECT_THROW(make_entry("nope"), std::invalid_argument);
}

TEST(Catalog, GeometryData) {
  const auto s4 = make_entry("sphere4n3", 2).geometry;
  EXPECT_EQ(s4.n, 11);
  EXPECT_EQ(s4.p, 8);
  EXPECT_EQ(s4.c_tilde, 10.0);
  EXPECT_EQ(s4.c, 2.0);
  EXPECT_EQ(*s4.beta1, 24.0);
  EXPECT_EQ(*s4.a_norm_sq, 24.0);
  EXPECT_EQ(*s4.s_fiber, 6.0);

  const auto cp = make_entry("cp2n1", 3).geometry;
  EXPECT_EQ(cp.n, 14);
  EXPECT_EQ(cp.c_tilde, 16.0);
  EXPECT_EQ(cp.c, 4.0);
  EXPECT_EQ(*cp.beta1, 32.0);

  const auto tw = make_entry("twistor", 3).geometry;
  EXPECT_EQ(*tw.a_norm_sq, 24.0);
  EXPECT_FALSE(tw.beta1.has_value());

  const auto flag = make_entry("flag").geometry;
  EXPECT_EQ(flag.n, 6);
  EXPECT_EQ(flag.c, 1.0);
  EXPECT_EQ(*flag.a_norm_sq, 2.0);
}

TEST(Catalog, EinsteinIdentity) {
  for (const auto& e : build_catalog()) {
    const auto& g = e.geometry;
    if (!g.einstein) continue;
    EXPECT_LT(std::abs(g.n * g.c_tilde - (-*g.a_norm_sq + *g.s_base + *g.s_fiber)), 1e-12) << e.id;
  }
}

TEST(Catalog, Volumes) {
  EXPECT_NEAR(*make_entry("hopf").geometry.vol_m, 2 * kPi * kPi, 1e-12);
  EXPECT_NEAR(*make_entry("sphere4n3").geometry.vol_m, kPi * kPi * kPi * kPi / 3.0, 1e-12);
  EXPECT_NEAR(*make_entry("cp2n1").geometry.vol_m, kPi * kPi * kPi / 6.0, 1e-12);
  EXPECT_DOUBLE_EQ(*make_entry("torus").geometry.vol_m, 1.0);
}

TEST(Catalog, ExactBranchesNonnegative) {
  for (const auto& e : build_catalog()) {
    for (const auto& b : e.exact_lambda1) {
      EXPECT_GE(b.A, 0.0) << e.id;
      EXPECT_GE(b.B, 0.0) << e.id;
    }
  }
}

TEST(EntryLambda1, Examples) {
  EXPECT_DOUBLE_EQ(*entry_lambda1(make_entry("hopf", 1), 1.0).exact, 3.0);
  for (int n = 1; n <= 3; ++n) {
    for (double t : {0.1, 0.5, 1.0}) {
      EXPECT_DOUBLE_EQ(*entry_lambda1(make_entry("cp2n1", n), t).exact, 8.0 * (n + 1));
    }
  }
  EXPECT_DOUBLE_EQ(*entry_lambda1(make_entry("sphere4n3", 1), 2.0).exact, 4.75);
  EXPECT_NEAR(*entry_lambda1(make_entry("sphere15"), 1e6).exact, 8.0, 1e-10);
}

TEST(EntryLambda1, TorusFromLattice) {
  auto e = make_entry("torus", 2);
  EXPECT_NEAR(*entry_lambda1(e, 4.0).exact, kPi * kPi / 4.0, 1e-12);
  e.exact_lambda1.clear();  // force the lattice oracle
  EXPECT_NEAR(*entry_lambda1(e, 4.0).exact, kPi * kPi / 4.0, 1e-12);
  EXPECT_FALSE(entry_lambda1(e, 4.0).lower.has_value());
}

TEST(EntryLambda1, FlagHasOnlyBounds) {
  const auto est = entry_lambda1(make_entry("flag"), 2.0);
  EXPECT_FALSE(est.known());
  EXPECT_FALSE(est.upper.has_value());
  ASSERT_TRUE(est.lower.has_value());
  EXPECT_NEAR(*est.lower, 1.0 / 7.0 + 79.0 / 140.0, 1e-14);
}

TEST(EntryLambda1, KonishiUsesAlternativeBound) {
  const auto e = make_entry("konishi", 3);
  const auto est = entry_lambda1(e, 2.0);
  EXPECT_DOUBLE_EQ(*est.lower, 24.0 + 2.0);
  EXPECT_GT(*est.lower, theorem_lower_bound(e.geometry, 2.0));
}

TEST(EntryLambda1, CrossoverOfExactBranches) {
  for (int n = 1; n <= 3; ++n) {
    const auto e = make_entry("hopf", n);
    const double tc = 1.0 / std::sqrt(2.0 * n + 4.0);
    EXPECT_NEAR(e.exact_lambda1[0](tc), e.exact_lambda1[1](tc), 1e-12);
  }
}

TEST(EntryLambda1, BoundsBracketExact) {
  for (const auto& e : build_catalog()) {
    for (double t : {0.2, 1.0, 3.0, 30.0}) {
      const auto est = entry_lambda1(e, t);
      if (!est.exact) continue;
      if (est.lower) EXPECT_LE(*est.lower, *est.exact + 1e-9) << e.id << " t=" << t;
      if (est.upper) EXPECT_LE(*est.exact, *est.upper + 1e-9) << e.id << " t=" << t;
    }
  }
}

TEST(Catalog, OracleCoherence) {
  for (const auto& id : {"torus", "product", "hopf"}) {
    const auto e = make_entry(id);
    const auto spec = e.joint_spectrum(2000.0);
    ASSERT_TRUE(spec.has_value()) << id;
    for (int i = 1; i <= 100; ++i) {
      const double t = 0.1 * i;
      EXPECT_NEAR(lambda1_of_t(*spec, t), min_branch(e.exact_lambda1, t), 1e-12 * 40) << id;
    }
  }
  EXPECT_FALSE(make_entry("sphere15").joint_spectrum(100.0).has_value());
}

TEST(Catalog, Rationals) {
  EXPECT_EQ(make_entry("flag").rationals.at("gamma"), Rational(65, 7));
  EXPECT_EQ(make_entry("flag").rationals.at("threshold_sq"), Rational(65, 14));
  EXPECT_EQ(make_entry("kobayashi", 2).rationals.at("gamma"), Rational(52, 3));
}

TEST(CatalogJson, RoundTrip) {
  std::vector<CatalogEntry> entries = build_catalog();
  for (int n = 2; n <= 4; ++n) entries.push_back(make_entry("sphere4n3", n));
  const auto back = catalog_from_json(catalog_to_json(entries));
  ASSERT_EQ(back.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) EXPECT_EQ(back[i], entries[i]) << entries[i].id;
}

TEST(CatalogJson, NullsForUnknownFields) {
  const auto text = catalog_to_json({make_entry("flag")});
  EXPECT_NE(text.find("\"beta1\": null"), std::string::npos);
}

TEST(CatalogJson, RejectsMalformed) {
  EXPECT_THROW(catalog_from_json("{"), std::invalid_argument);
  EXPECT_THROW(catalog_from_json("{}"), std::invalid_argument);
  EXPECT_THROW(catalog_from_json("[{\"id\": 3}]"), std::invalid_argument);
}

TEST(OracleKind, Strings) {
  for (auto k : {OracleKind::none, OracleKind::torus_lattice, OracleKind::circle_product,
                 OracleKind::hopf}) {
    EXPECT_EQ(oracle_kind_from_string(to_string(k)), k);
  }
  EXPECT_THROW(oracle_kind_from_string("x"), std::invalid_argument);
}
