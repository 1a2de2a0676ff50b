#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ordvec/coherence.hpp"
#include "ordvec/error.hpp"
#include "ordvec/majorize.hpp"
#include "ordvec/random_instances.hpp"

using namespace ordvec;

namespace {

MajorizedSpace orthant_space(std::vector<RVector> m) {
  std::size_t d = m.front().dim();
  return MajorizedSpace(Cone::orthant(d), PositiveSet{std::move(m)});
}

}  // namespace

TEST(MajorizedSpace, RejectsInvalidData) {
  EXPECT_THROW(MajorizedSpace(Cone::halfspace(RMatrix{{1, 0}}), PositiveSet{{RVector{1, 0}}}), InvalidInput);
  EXPECT_THROW(orthant_space({RVector{1, -1}}), InvalidInput);
  EXPECT_THROW(MajorizedSpace(Cone::orthant(2), PositiveSet{}), InvalidInput);
}

TEST(InIdeal, Examples) {
  EXPECT_FALSE(in_ideal(orthant_space({RVector{1, 0}}), RVector{0, 1}));
  EXPECT_TRUE(in_ideal(orthant_space({RVector{1, 1}}), RVector{3, -2}));
  EXPECT_TRUE(in_ideal(orthant_space({RVector{1, 0}}), RVector{0, 0}));
  EXPECT_THROW(in_ideal(orthant_space({RVector{1, 0}}), RVector{1}), DimensionMismatch);
}

TEST(NormP, Examples) {
  auto delta = orthant_space({RVector{1, 0}, RVector{0, 1}});
  auto r = norm_p(delta, RVector{1, -2});
  ASSERT_TRUE(r.finite());
  EXPECT_EQ(*r.value, Rational(3));
  EXPECT_TRUE(r.attained);
  EXPECT_TRUE(verify_norm_witness(delta, RVector{1, -2}, r));
  EXPECT_EQ(*norm_p(delta, RVector{0, 0}).value, Rational(0));
  EXPECT_EQ(*norm_p(orthant_space({RVector{1, 1}}), RVector{1, -2}).value, Rational(2));
  EXPECT_FALSE(norm_p(orthant_space({RVector{1, 0}}), RVector{0, 1}).finite());
}

TEST(NormP, WitnessVerifierRejectsTampering) {
  auto s = orthant_space({RVector{1, 0}, RVector{0, 1}});
  auto r = norm_p(s, RVector{1, -2});
  auto bad = r;
  bad.witness[1] = Rational(1);
  EXPECT_FALSE(verify_norm_witness(s, RVector{1, -2}, bad));
  bad = r;
  bad.value = Rational(4);
  EXPECT_FALSE(verify_norm_witness(s, RVector{1, -2}, bad));
}

TEST(NormP, AgreesWithEnumerationOracle) {
  Sampler rng(77);
  InstanceBounds small{3, 3, 3};
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    RandomInstance inst = random_instance(rng, small, i % 3 == 0);
    RMatrix a = oracle::halfspaces(inst.space.cone());
    if (a.rows() > 6) continue;
    for (int j = 0; j < 4; ++j) {
      RVector v = j == 0 ? rng.vector(inst.space.dim(), -3, 3) : random_in_ideal(rng, inst.space, 3);
      auto got = norm_p(inst.space, v);
      auto want = oracle::norm(a, inst.space.positive_set().vectors, v);
      ASSERT_EQ(got.value, want) << "instance " << i << " v " << v;
      EXPECT_EQ(in_ideal(inst.space, v), want.has_value());
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(NormPLex2, Examples) {
  PositiveSet m{{RVector{1, 0}}};
  auto zero = norm_p_lex2(m, RVector{0, 1});
  ASSERT_TRUE(zero.finite());
  EXPECT_EQ(*zero.value, Rational(0));
  EXPECT_FALSE(zero.attained);

  auto one = norm_p_lex2(m, RVector{1, 0});
  EXPECT_EQ(*one.value, Rational(1));
  EXPECT_TRUE(one.attained);

  // t = 2 gives (0,5) and (4,-5), both lex-nonnegative: attained.
  auto two = norm_p_lex2(m, RVector{2, -5});
  EXPECT_EQ(*two.value, Rational(2));
  EXPECT_TRUE(two.attained);

  EXPECT_FALSE(norm_p_lex2(PositiveSet{{RVector{0, 1}}}, RVector{1, 0}).finite());
  EXPECT_EQ(*norm_p_lex2(PositiveSet{{RVector{0, 2}}}, RVector{0, -3}).value, Rational(3, 2));
}

TEST(NormPLex2, MatchesClosedApproximations) {
  // p under K_n decreases to the lexicographic value and equals it for large
  // n exactly when the infimum is attained.
  Sampler rng(91);
  const long big = 1000000;
  for (int i = 0; i < 150; ++i) {
    MajorizedSpace s = random_lex_instance(rng, 3, 3);
    RVector v = rng.vector(2, -3, 3);
    NormResult lex = norm_p(s, v);
    std::optional<Rational> prev;
    for (long n : {10L, 1000L, big}) {
      // M must sit inside K_n.
      bool inside = std::all_of(s.positive_set().vectors.begin(), s.positive_set().vectors.end(),
                                [&](const RVector& m) { return n * m[0] + m[1] >= Rational(0); });
      if (!inside) continue;
      auto approx = oracle::norm(oracle::lex_approximation(n), s.positive_set().vectors, v);
      if (!lex.finite()) {
        ASSERT_FALSE(approx.has_value());
        continue;
      }
      if (!approx) continue;
      ASSERT_GE(*approx, *lex.value);
      if (prev) ASSERT_LE(*approx, *prev);
      prev = approx;
      if (n == big) {
        if (lex.attained) {
          ASSERT_EQ(*approx, *lex.value) << "M size " << s.size() << " v " << v;
        } else {
          ASSERT_GT(*approx, *lex.value);
          ASSERT_LE(*approx - *lex.value, Rational(1, 1000));
        }
      }
    }
    if (lex.finite() && lex.attained) EXPECT_TRUE(verify_norm_witness(s, v, lex));
  }
}

TEST(OrderUnitNorm, Examples) {
  EXPECT_EQ(*order_unit_norm(Cone::orthant(3), RVector{1, 1, 1}, RVector{1, -2, 3}), Rational(3));
  EXPECT_EQ(*order_unit_norm(Cone::orthant(3), RVector{1, 1, 1}, RVector{0, 0, 0}), Rational(0));
  Cone k = Cone::halfspace(RMatrix{{1, 0}, {1, 1}});
  auto got = order_unit_norm(k, RVector{1, 0}, RVector{0, 1});
  // Oracle: the single-variable program min t, A(t u -+ v) >= 0.
  auto want = oracle::norm(k.matrix(), {RVector{1, 0}}, RVector{0, 1});
  EXPECT_EQ(got, want);
  EXPECT_EQ(*got, Rational(1));
  EXPECT_FALSE(order_unit_norm(Cone::orthant(2), RVector{1, 0}, RVector{0, 1}).has_value());
  EXPECT_THROW(order_unit_norm(Cone::orthant(2), RVector{1, -1}, RVector{0, 1}), PreconditionViolation);
  EXPECT_THROW(order_unit_norm(Cone::lex2(), RVector{1, 0}, RVector{0, 1}), PreconditionViolation);
}

TEST(PrincipalIdeal, Examples) {
  auto delta = orthant_space({RVector{1, 0}, RVector{0, 1}});
  auto rep = principal_ideal_identity_check(delta, {RVector{1, -2}});
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.pm_unit, Rational(2));
  EXPECT_EQ(*rep.rows[0].unit_norm, Rational(2));
  EXPECT_EQ(*rep.rows[0].pm, Rational(3));

  Sampler rng(4);
  auto single = orthant_space({RVector{2, 1, 3}});
  for (int i = 0; i < 10; ++i) {
    RVector v = random_in_ideal(rng, single);
    EXPECT_EQ(*norm_p(single, v).value, *order_unit_norm(single.cone(), RVector{2, 1, 3}, v));
  }

  // Random orthant instance, |M| = 3, dim 4, 50 samples.
  PositiveSet m;
  while (m.size() < 3) {
    RVector x = rng.vector(4, 0, 4);
    if (!x.is_zero()) m.vectors.push_back(x);
  }
  MajorizedSpace s(Cone::orthant(4), m);
  std::vector<RVector> samples;
  for (int i = 0; i < 50; ++i) samples.push_back(random_in_ideal(rng, s));
  EXPECT_TRUE(principal_ideal_identity_check(s, samples).pass());

  auto outside = principal_ideal_identity_check(orthant_space({RVector{1, 0}}), {RVector{0, 1}});
  EXPECT_FALSE(outside.pass());
  EXPECT_EQ(outside.first_outside, std::optional<std::size_t>(0));
}

TEST(Domination, HoldsOnRandomInstances) {
  Sampler rng(8);
  for (int i = 0; i < 15; ++i) {
    RandomInstance inst = random_instance(rng);
    auto c = domination_constant(inst.space, inst.order_unit);
    ASSERT_TRUE(c.has_value());
    for (int j = 0; j < 5; ++j) {
      RVector v = random_in_ideal(rng, inst.space);
      EXPECT_LE(*order_unit_norm(inst.space.cone(), inst.order_unit, v), *c * *norm_p(inst.space, v).value);
    }
  }
}

TEST(BaseRepresentation, Examples) {
  auto delta = orthant_space({RVector{1, 0}, RVector{0, 1}});
  EXPECT_EQ(*base_representation(delta, RVector{2, 3}), (RVector{2, 3}));
  EXPECT_FALSE(base_representation(delta, RVector{-1, 0}).has_value());

  auto coherent = orthant_space({RVector{1, 0}, RVector{Rational(1, 2), Rational(1, 2)}, RVector{0, 1}});
  auto verdict = check_coherent(coherent);
  ASSERT_TRUE(verdict.coherent);
  const auto& ms = coherent.positive_set().vectors;
  RVector c = (ms[0] + ms[2]) * Rational(2);  // 4 times the midpoint
  auto t = base_representation(coherent, c);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(coherent.combination(*t), c);
  EXPECT_EQ(t->sum(), Rational(4));
  EXPECT_EQ(dot(verdict.phi, c), Rational(4));
}

TEST(NormP, ClosureInvariance) {
  Sampler rng(12);
  for (int i = 0; i < 10; ++i) {
    RandomInstance inst = random_instance(rng);
    PositiveSet bigger = inst.space.positive_set();
    RVector w = rng.vector(inst.space.size(), 0, 2);
    if (w.is_zero()) continue;
    w *= inverse(w.sum() + 1);
    bigger.vectors.push_back(inst.space.combination(w));
    MajorizedSpace closed(inst.space.cone(), bigger);
    for (int j = 0; j < 4; ++j) {
      RVector v = random_in_ideal(rng, inst.space);
      EXPECT_EQ(norm_p(inst.space, v).value, norm_p(closed, v).value);
    }
  }
}
