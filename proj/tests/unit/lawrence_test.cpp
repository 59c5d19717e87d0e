#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "srcomplex/bouquet.hpp"
#include "srcomplex/lawrence.hpp"
#include "support/fixtures.hpp"

using namespace srcomplex;

namespace {

std::vector<IntVec> reference_c_vectors() {
  return {make_vector({7, 1, 2027}), make_vector({1, -1}),   make_vector({1}),
          make_vector({2, 3, 7}),    make_vector({11, 1}),   make_vector({4, -1, -27}),
          make_vector({1})};
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Io;  // sentinel: nothing thrown
}

}  // namespace

TEST(LawrenceLift, FullLift) {
  const IntMatrix lifted = lawrence_lift(make_matrix({{1, 2}}));
  EXPECT_EQ(lifted, make_matrix({{1, 2, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}}));
}

TEST(LawrenceLift, PartialLiftDropsMirroredPairs) {
  const IntMatrix t = make_matrix({{4, 6, 5}});
  EXPECT_EQ(lawrence_lift_omega(t, OmegaSet(3, {})), lawrence_lift(t));
  EXPECT_EQ(lawrence_lift_omega(t, OmegaSet::full(3)), t);
  EXPECT_EQ(lawrence_lift_omega(t, OmegaSet(3, {2})),
            make_matrix({{4, 6, 5, 0, 0}, {1, 0, 0, 1, 0}, {0, 0, 1, 0, 1}}));
  EXPECT_EQ(code_of([&] { lawrence_lift_omega(t, OmegaSet(4, {1})); }), ErrorCode::InvalidOmega);
}

TEST(DOmega, AppendsNegatedKeptCoordinates) {
  const IntVec u = make_vector({3, -2, 0});
  EXPECT_TRUE(equal_vectors(d_omega(u, OmegaSet(3, {2})), make_vector({3, -2, 0, -3, 0})));
  EXPECT_TRUE(equal_vectors(d_omega(u, OmegaSet::full(3)), u));
  EXPECT_EQ(code_of([&] { d_omega(u, OmegaSet(2, {})); }), ErrorCode::LengthMismatch);
}

TEST(LiftedGraver, MatchesDirectComputationForEveryOmega) {
  for (const IntMatrix& t : {make_matrix({{1, 2}}), make_matrix({{4, 6, 5}}), make_matrix({{1, 1, 1}, {1, 2, 3}})}) {
    const auto graver_t = graver_basis(t);
    const std::size_t s = static_cast<std::size_t>(t.cols());
    for (std::uint64_t mask = 0; mask < (1u << s); ++mask) {
      const OmegaSet omega = OmegaSet::from_mask(s, mask);
      EXPECT_TRUE(lifted_graver(graver_t, omega) == graver_basis(lawrence_lift_omega(t, omega))) << omega.to_string();
    }
  }
}

TEST(LiftedGraver, MatchesDirectComputationOnCyclicConfiguration) {
  const IntMatrix t = fixtures::load_fixture("T57.mat");
  const auto graver_t = graver_basis(t);
  for (const OmegaSet& omega : {OmegaSet(7, {2}), OmegaSet(7, {6}), OmegaSet(7, {1, 3, 4, 5, 7})}) {
    EXPECT_TRUE(lifted_graver(graver_t, omega) == graver_basis(lawrence_lift_omega(t, omega))) << omega.to_string();
  }
}

TEST(Bezout, ReproducesReferenceCoefficients) {
  const std::vector<IntVec> expected{make_vector({0, 1, 0}), make_vector({1, 0}),   make_vector({1}),
                                     make_vector({-1, 1, 0}), make_vector({0, 1}),  make_vector({0, -1, 0}),
                                     make_vector({1})};
  const auto cs = reference_c_vectors();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    EXPECT_TRUE(equal_vectors(bezout_coefficients(cs[i]), expected[i])) << "c_" << i + 1;
  }
}

TEST(Bezout, RandomPrimitiveVectors) {
  std::mt19937_64 rng(41);
  int checked = 0;
  while (checked < 500) {
    const Index k = fixtures::uniform(rng, 1, 5);
    IntVec c(k);
    Integer g(0);
    for (Index i = 0; i < k; ++i) {
      c(i) = Integer(fixtures::uniform(rng, -60, 60));
      g = gcd_value(g, c(i));
    }
    if (g != Integer(1)) {
      EXPECT_EQ(code_of([&] { bezout_coefficients(c); }), ErrorCode::GcdNotOne);
      continue;
    }
    EXPECT_EQ(dot(bezout_coefficients(c), c), Integer(1));
    ++checked;
  }
}

TEST(GeneralizedLawrence, ReproducesReferenceMatrix) {
  GLMSpec<Integer> spec{fixtures::load_fixture("T57.mat"), reference_c_vectors(), std::nullopt};
  EXPECT_EQ(build_generalized_lawrence(spec), fixtures::load_fixture("glm_13x15.mat"));
}

TEST(GeneralizedLawrence, ExplicitLambdaIsHonoured) {
  const IntMatrix t = make_matrix({{4, 6, 5}});
  GLMSpec<Integer> spec{t, {make_vector({2, 3}), make_vector({1}), make_vector({1})}, std::nullopt};
  spec.lambda = std::vector<IntVec>{make_vector({2, -1}), make_vector({1}), make_vector({1})};
  EXPECT_EQ(build_generalized_lawrence(spec), make_matrix({{8, -4, 6, 5}, {-3, 2, 0, 0}}));
  spec.lambda = std::vector<IntVec>{make_vector({1, 1}), make_vector({1}), make_vector({1})};
  EXPECT_EQ(code_of([&] { build_generalized_lawrence(spec); }), ErrorCode::BezoutMismatch);
}

TEST(GeneralizedLawrence, ValidatesCVectors) {
  const IntMatrix t = make_matrix({{4, 6, 5}});
  auto build = [&](std::vector<IntVec> cs) {
    return code_of([&] { build_generalized_lawrence(GLMSpec<Integer>{t, std::move(cs), std::nullopt}); });
  };
  EXPECT_EQ(build({make_vector({1, 0}), make_vector({1}), make_vector({1})}), ErrorCode::FullSupportViolated);
  EXPECT_EQ(build({make_vector({-1, 2}), make_vector({1}), make_vector({1})}), ErrorCode::FirstComponentNotPositive);
  EXPECT_EQ(build({make_vector({2, 4}), make_vector({1}), make_vector({1})}), ErrorCode::GcdNotOne);
  EXPECT_EQ(build({make_vector({1}), make_vector({1})}), ErrorCode::InvalidArgument);
}

TEST(GeneralizedLawrence, BouquetRoundTrip) {
  std::mt19937_64 rng(42);
  for (const IntMatrix& t : fixtures::general_position_fixtures()) {
    std::vector<IntVec> cs;
    for (Index i = 0; i < t.cols(); ++i) {
      for (;;) {
        const Index k = fixtures::uniform(rng, 1, 3);
        IntVec c(k);
        Integer g(0);
        for (Index j = 0; j < k; ++j) {
          long long x = 0;
          while (x == 0) x = fixtures::uniform(rng, j == 0 ? 1 : -9, 9);
          c(j) = Integer(x);
          g = gcd_value(g, c(j));
        }
        if (g == Integer(1)) {
          cs.push_back(c);
          break;
        }
      }
    }
    const IntMatrix a = build_generalized_lawrence(GLMSpec<Integer>{t, cs, std::nullopt});
    const auto d = bouquet_decomposition(a);
    ASSERT_EQ(d.size(), cs.size());
    for (std::size_t b = 0; b < cs.size(); ++b) {
      EXPECT_TRUE(equal_vectors(*d.bouquets()[b].c, cs[b]));
      const bool negative = std::any_of(cs[b].begin(), cs[b].end(), [](const Integer& x) { return x < 0; });
      EXPECT_EQ(d.bouquets()[b].kind, negative ? BouquetClass::Mixed : BouquetClass::NonMixed);
    }
    EXPECT_EQ(bouquet_ideal(a).matrix, t);
  }
}
