#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ordvec/coherence.hpp"
#include "ordvec/error.hpp"
#include "ordvec/functionals.hpp"
#include "ordvec/random_instances.hpp"

using namespace ordvec;

namespace {

MajorizedSpace delta2() { return MajorizedSpace(Cone::orthant(2), PositiveSet{{RVector{1, 0}, RVector{0, 1}}}); }

}  // namespace

TEST(OpNorm, Examples) {
  EXPECT_EQ(op_norm(delta2(), RVector{1, 1}), Rational(1));
  EXPECT_EQ(op_norm(delta2(), RVector{0, 0}), Rational(0));
  EXPECT_EQ(op_norm(delta2(), RVector{2, 3}), Rational(3));
  EXPECT_EQ(op_norm(delta2(), RVector{1, -4}), Rational(4));
  EXPECT_THROW(op_norm(delta2(), RVector{1}), DimensionMismatch);
  MajorizedSpace lex(Cone::lex2(), PositiveSet{{RVector{1, 0}}});
  EXPECT_THROW(op_norm(lex, RVector{1, 0}), PreconditionViolation);
}

TEST(OpNorm, AgreesWithEnumerationOracle) {
  Sampler rng(31);
  InstanceBounds small{3, 3, 3};
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    RandomInstance inst = random_instance(rng, small);
    RMatrix a = oracle::halfspaces(inst.space.cone());
    if (2 * a.rows() + 1 > 12 || inst.space.dim() + inst.space.size() > 8) continue;
    RVector psi = rng.vector(inst.space.dim(), -3, 3);
    EXPECT_EQ(op_norm(inst.space, psi), oracle::op_norm(a, inst.space.positive_set().vectors, psi)) << "instance " << i;
    ++checked;
  }
  EXPECT_GT(checked, 15);
}

TEST(OpNorm, SqueezeAndHomogeneity) {
  Sampler rng(8);
  for (int i = 0; i < 20; ++i) {
    RandomInstance inst = random_instance(rng);
    const auto& m = inst.space.positive_set();
    Functional pos = random_positive_functional(rng, inst);
    EXPECT_EQ(op_norm(inst.space, pos), sup_over_m(pos, m));
    RVector psi = rng.vector(inst.space.dim(), -3, 3);
    Rational op = op_norm(inst.space, psi);
    EXPECT_LE(sup_over_m(psi, m), op);
    Rational q = rng.rational(-4, 4, 3);
    EXPECT_EQ(op_norm(inst.space, psi * q), abs(q) * op);
  }
}

TEST(SupOverM, Examples) {
  PositiveSet m{{RVector{1, 0}, RVector{0, 1}}};
  EXPECT_EQ(sup_over_m(RVector{1, 1}, m), Rational(1));
  EXPECT_EQ(sup_over_m(RVector{2, 3}, m), Rational(3));
  EXPECT_EQ(sup_over_m(RVector{-2, -3}, m), Rational(-2));
}

TEST(PositiveOnIdeal, Examples) {
  EXPECT_TRUE(is_positive_on_ideal(delta2(), RVector{1, 1}));
  EXPECT_FALSE(is_positive_on_ideal(delta2(), RVector{1, -1}));
  EXPECT_TRUE(is_positive_on_ideal(delta2(), RVector{0, 0}));
}

TEST(PositiveOnIdeal, CertificatesArePositive) {
  Sampler rng(12);
  for (int i = 0; i < 20; ++i) {
    RandomInstance inst = random_instance(rng, {}, true);
    auto v = check_coherent(inst.space);
    ASSERT_TRUE(v.coherent);
    EXPECT_TRUE(is_positive_on_ideal(inst.space, v.phi));
    EXPECT_EQ(op_norm(inst.space, v.phi), Rational(1));
  }
}

TEST(Continuity, Examples) {
  auto rep = continuity_bound_check(delta2(), RVector{2, 3}, {RVector{1, 0}, RVector{0, 0}, RVector{-1, 5}});
  EXPECT_TRUE(rep.positive);
  EXPECT_EQ(rep.bound, Rational(3));
  ASSERT_EQ(rep.rows.size(), 3U);
  EXPECT_EQ(rep.rows[0].lhs, Rational(2));
  EXPECT_EQ(rep.rows[1].rhs, Rational(0));
  EXPECT_EQ(rep.rows[2].lhs, Rational(13));
  EXPECT_EQ(rep.rows[2].rhs, Rational(18));
  EXPECT_TRUE(rep.pass());

  MajorizedSpace line(Cone::orthant(2), PositiveSet{{RVector{1, 0}}});
  auto out = continuity_bound_check(line, RVector{1, 0}, {RVector{1, 0}, RVector{0, 1}});
  EXPECT_EQ(out.first_outside, std::optional<std::size_t>(1));
  EXPECT_FALSE(out.pass());

  auto neg = continuity_bound_check(delta2(), RVector{1, -1}, {});
  EXPECT_FALSE(neg.positive);
  EXPECT_FALSE(neg.pass());
}

TEST(Continuity, RandomSamples) {
  Sampler rng(44);
  for (int i = 0; i < 10; ++i) {
    RandomInstance inst = random_instance(rng);
    Functional psi = random_positive_functional(rng, inst);
    std::vector<RVector> samples;
    for (int j = 0; j < 5; ++j) samples.push_back(random_in_ideal(rng, inst.space));
    EXPECT_TRUE(continuity_bound_check(inst.space, psi, samples).pass());
  }
}

TEST(ModulusBound, Examples) {
  auto b = modulus_bound_check(delta2(), RVector{1, -4});
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->op, Rational(4));
  EXPECT_EQ(b->modulus, Rational(4));
  EXPECT_TRUE(b->holds());

  MajorizedSpace mixed(Cone::orthant(2), PositiveSet{{RVector{1, 1}}});
  auto c = modulus_bound_check(mixed, RVector{1, -1});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->op, Rational(2));
  EXPECT_EQ(c->modulus, Rational(2));
  EXPECT_TRUE(c->holds());

  MajorizedSpace gen(Cone::generators({RVector{1, 0}, RVector{1, 1}}, 2), PositiveSet{{RVector{2, 1}}});
  EXPECT_FALSE(modulus_bound_check(gen, RVector{1, 0}).has_value());
}
