#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "marcs/arc.hpp"
#include "marcs/galois.hpp"
#include "oracles.hpp"

namespace marcs {
namespace {

Polynomial table_g(const FieldSpec& f, int m, ElemIndex alpha, ElemIndex beta) {
  std::vector<ElemIndex> c(static_cast<std::size_t>(m) + 1, 0);
  c[0] = beta;
  c[1] = alpha;
  c[2] = alpha;
  c.back() = 1;
  return Polynomial(f, c);
}

CurveSpec first_valid(const Field& f, int m, int r) {
  for (ElemIndex a = 1; a < f->order(); ++a)
    for (ElemIndex b = 1; b < f->order(); ++b) {
      if (a == b) continue;
      const auto g = table_g(*f, m, a, b);
      if (is_squarefree(g)) return CurveSpec::hyperelliptic(f, m, r, g);
    }
  throw std::logic_error("no squarefree g");
}

TEST(Specialize, MonomialZero) {
  auto f = make_field(11, 1);
  const auto c = CurveSpec::monomial(f, 5);
  EXPECT_EQ(specialize(c, f->zero(), f->zero(), f->zero()), Polynomial::monomial(f->one(), 5));
}

// Direct expansion of (t(x-a)+b)^2 x^n - g(x) coefficient by coefficient.
TEST(Specialize, HyperellipticMatchesExpansion) {
  auto f = make_field(13, 1);
  const auto c = first_valid(f, 8, 5);
  std::mt19937_64 rng(37);
  for (int i = 0; i < 3; ++i) {
    const auto a = f->element(static_cast<ElemIndex>(rng() % 13));
    const auto b = f->element(static_cast<ElemIndex>(rng() % 13));
    const auto t = f->element(static_cast<ElemIndex>(rng() % 13));
    const auto k0 = b - t * a;
    std::vector<FieldElement> want(9, f->zero());
    // (t x + k0)^2 x = t^2 x^3 + 2 t k0 x^2 + k0^2 x
    want[3] += t * t;
    want[2] += f->from_int(2) * t * k0;
    want[1] += k0 * k0;
    for (int d = 0; d <= 8; ++d) want[static_cast<std::size_t>(d)] -= c.g().coeff(d);
    EXPECT_EQ(specialize(c, a, b, t), Polynomial::from_elements(*f, want));
  }
}

TEST(Specialize, VanishesAtIntersection) {
  auto f = make_field(13, 1);
  const auto c = first_valid(f, 8, 5);
  const auto pts = rational_points(c);
  ASSERT_GE(pts.size(), 3u);
  const auto& p = pts[0];
  const auto a = f->from_int(5), b = f->from_int(7);
  if (p.x() == a) GTEST_SKIP();
  const auto t = (p.y() - b) / (p.x() - a);
  EXPECT_TRUE(specialize(c, a, b, t)(p.x()).is_zero());
}

TEST(CycleType, Examples) {
  auto f5 = make_field(5, 1);
  EXPECT_EQ(*frobenius_cycle_type(Polynomial(*f5, {0, -1, 0, 0, 0, 1}), 5), (CycleType{1, 1, 1, 1, 1}));
  auto f11 = make_field(11, 1);
  const Polynomial sq(*f11, {-1, 1});
  EXPECT_FALSE(frobenius_cycle_type(sq * sq * Polynomial(*f11, {1, 0, 1}), 4));
  EXPECT_FALSE(frobenius_cycle_type(Polynomial(*f11, {1, 0, 1}), 3));
  // x^5 - x - 1 style search for an irreducible quintic.
  for (std::int64_t c0 = 1; c0 < 11; ++c0) {
    const Polynomial q(*f11, {c0, -1, 0, 0, 0, 1});
    if (oracle::factor_degrees_by_trial_division(q) == std::vector<int>{5}) {
      EXPECT_EQ(*frobenius_cycle_type(q, 5), (CycleType{5}));
      return;
    }
  }
  FAIL() << "no irreducible quintic of that shape";
}

TEST(CycleType, AgreesWithTrialDivision) {
  std::mt19937_64 rng(41);
  for (const Field& f : oracle::small_fields(49)) {
    for (int deg = 2; deg <= 8; ++deg) {
      const auto g = oracle::random_polynomial(*f, deg, rng, true);
      const auto t = frobenius_cycle_type(g, deg);
      if (!is_squarefree(g)) {
        EXPECT_FALSE(t);
        continue;
      }
      ASSERT_TRUE(t);
      EXPECT_EQ(*t, oracle::factor_degrees_by_trial_division(g)) << f->description() << " " << to_string(g);
    }
  }
}

TEST(SplitSearch, MonomialLargeField) {
  auto f = make_field(1009, 1);
  const auto c = CurveSpec::monomial(f, 5);
  std::mt19937_64 rng(43);
  for (int i = 0; i < 3; ++i) {
    const auto a = f->element(static_cast<ElemIndex>(rng() % 1009));
    auto b = f->element(static_cast<ElemIndex>(1 + rng() % 1008));
    if (b == a.pow(5)) b = b + f->one();
    const auto t = totally_split_search(c, a, b);
    ASSERT_TRUE(t);
    const auto roots = roots_in_field(specialize(c, a, b, *t));
    ASSERT_EQ(roots.size(), 5u);
    for (const auto& x : roots) EXPECT_TRUE(c.contains(x, *t * (x - a) + b));
  }
  try {
    totally_split_search(c, f->from_int(2), f->from_int(32));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PointOnCurve);
  }
}

// Points m-covered by the curve points are exactly the ones with a split slope.
TEST(SplitSearch, AgreesWithCurveCoverage) {
  auto f = make_field(41, 1);
  const auto c = CurveSpec::monomial(f, 5);
  ArcSet seed(std::make_shared<const Plane>(f), 5);
  for (const auto& p : rational_points(c)) seed.add(p);
  int covered = 0;
  for (const auto& a : f->elements()) {
    for (const auto& b : f->elements()) {
      if (c.contains(a, b)) continue;
      const auto t = totally_split_search(c, a, b);
      EXPECT_EQ(t.has_value(), seed.covered(ProjectivePoint::affine(a, b).index()));
      if (!t) continue;
      ++covered;
      const auto roots = roots_in_field(specialize(c, a, b, *t));
      ASSERT_EQ(roots.size(), 5u);
      for (const auto& x : roots) EXPECT_TRUE(c.contains(x, *t * (x - a) + b));
    }
  }
  EXPECT_GT(covered, 0);
}

TEST(Histogram, MassAndDeterminism) {
  auto f = make_field(211, 1);
  const auto c = CurveSpec::monomial(f, 5);
  const auto h1 = cycle_type_histogram(c, f->zero(), f->one(), 1);
  const auto h4 = cycle_type_histogram(c, f->zero(), f->one(), 4);
  EXPECT_EQ(h1.total(), 211u);
  EXPECT_EQ(h1.counts, h4.counts);
  EXPECT_EQ(h1.ramified, h4.ramified);
  EXPECT_LE(h1.ramified, 2u * (0 + 5) + 1);
}

TEST(SnDistribution, SmallCases) {
  const auto d3 = sn_cycle_distribution(3);
  EXPECT_EQ(d3.at({1, 1, 1}), Rational(1, 6));
  EXPECT_EQ(d3.at({2, 1}), Rational(1, 2));
  EXPECT_EQ(d3.at({3}), Rational(1, 3));
  const auto d2 = sn_cycle_distribution(2);
  EXPECT_EQ(d2.at({1, 1}), Rational(1, 2));
  EXPECT_EQ(d2.at({2}), Rational(1, 2));
  const auto d8 = sn_cycle_distribution(8);
  EXPECT_EQ(d8.at({2, 1, 1, 1, 1, 1, 1}), Rational(28, 40320));
  EXPECT_EQ(d8.size(), 22u);
  Rational total = 0;
  for (const auto& [t, pr] : d8) total += pr;
  EXPECT_EQ(total, Rational(1));
}

TEST(Flags, Examples) {
  CycleHistogram h;
  h.m = 5;
  h.counts[{1, 1, 1, 1, 1}] = 3;
  auto fl = evidence_flags(h);
  EXPECT_FALSE(fl.has_transposition);
  EXPECT_FALSE(fl.has_full_cycle);
  EXPECT_TRUE(fl.alternating_consistent);
  h.counts[{2, 1, 1, 1}] = 1;
  fl = evidence_flags(h);
  EXPECT_TRUE(fl.has_transposition);
  EXPECT_FALSE(fl.alternating_consistent);
  h.counts[{3, 1, 1}] = 1;
  EXPECT_TRUE(evidence_flags(h, 3).has_r_cycle);
  EXPECT_FALSE(evidence_flags(h, 0).has_r_cycle);
  EXPECT_TRUE(is_even({3, 1, 1}));
  EXPECT_FALSE(is_even({4, 1}));
}

// The transposition class has density 28/8! in S_8, so at q=121 it shows up
// only on a few lines; scan a grid of external points for the first curves.
TEST(Flags, HyperellipticOver121) {
  auto f = make_field(11, 2);
  bool transposition = false;
  int curves = 0;
  for (ElemIndex al = 1; al < 121 && curves < 4 && !transposition; ++al) {
    for (ElemIndex be = 1; be < 121 && curves < 4 && !transposition; ++be) {
      const auto g = table_g(*f, 8, al, be);
      if (al == be || !is_squarefree(g)) continue;
      const auto c = CurveSpec::hyperelliptic(f, 8, 5, g);
      ++curves;
      for (ElemIndex i = 0; i < 121 * 121; i += 97) {
        const FieldElement a = f->element(i / 121), b = f->element(i % 121);
        if (c.contains(a, b)) continue;
        const auto h = cycle_type_histogram(c, a, b, 2);
        EXPECT_EQ(h.total(), 121u);
        const auto fl = evidence_flags(h, 5);
        EXPECT_FALSE(fl.alternating_consistent);
        transposition = transposition || fl.has_transposition;
      }
    }
  }
  EXPECT_TRUE(transposition);
}

TEST(Tv, Tolerances) {
  EXPECT_EQ(tv_tolerance(1009), 0.05);
  EXPECT_EQ(tv_tolerance(121), 0.15);
  EXPECT_FALSE(tv_tolerance(49));
  CycleHistogram h;
  h.m = 2;
  h.counts[{1, 1}] = 5;
  h.counts[{2}] = 5;
  EXPECT_NEAR(tv_distance(h), 0.0, 1e-12);
  h.counts[{2}] = 0;
  EXPECT_NEAR(tv_distance(h), 0.5, 1e-12);
}

TEST(Chebotarev, Constants) {
  EXPECT_EQ(chebotarev_constant(8, 0, 4), BigInt("2106910310400"));
  EXPECT_EQ(chebotarev_constant_printed(8), Rational(BigInt(9) * 169 * 40320 * 40320));
  EXPECT_LT(chebotarev_constant(7, 0, 3), chebotarev_constant(8, 0, 4));
  EXPECT_EQ(genus_hyperelliptic(8), 4);
  EXPECT_EQ(genus_hyperelliptic(11), 5);
  EXPECT_EQ(genus_hyperelliptic(9), 4);
  EXPECT_EQ(to_string(CycleType{3, 1, 1}), "3,1,1");
}

}  // namespace
}  // namespace marcs
