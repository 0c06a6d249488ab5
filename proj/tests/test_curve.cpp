#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "marcs/curve.hpp"
#include "oracles.hpp"

namespace marcs {
namespace {

Polynomial table_g(const FieldSpec& f, int m, std::int64_t alpha, std::int64_t beta) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(m) + 1, 0);
  c[0] = beta;
  c[1] = alpha;
  c[2] = alpha;
  c.back() = 1;
  std::vector<ElemIndex> idx;
  for (auto v : c) idx.push_back(f.from_integer(v));
  return Polynomial(f, idx);
}

// First few valid (alpha, beta) curves for m=8, r=5 over f.
std::vector<CurveSpec> valid_curves(const Field& f, int m, int r, std::size_t want) {
  std::vector<CurveSpec> out;
  for (std::int64_t a = 1; a < f->order() && out.size() < want; ++a) {
    for (std::int64_t b = 1; b < f->order() && out.size() < want; ++b) {
      if (a == b) continue;
      std::vector<ElemIndex> coeffs(static_cast<std::size_t>(m) + 1, 0);
      coeffs[0] = static_cast<ElemIndex>(b);
      coeffs[1] = coeffs[2] = static_cast<ElemIndex>(a);
      coeffs.back() = 1;
      const Polynomial g(*f, coeffs);
      if (!is_squarefree(g)) continue;
      out.push_back(CurveSpec::hyperelliptic(f, m, r, g));
    }
  }
  return out;
}

TEST(SelectR, Examples) {
  EXPECT_EQ(select_r(8, 11), 5);
  EXPECT_EQ(select_r(11, 13), 7);
  EXPECT_EQ(select_r(9, 17), 5);
  EXPECT_THROW(select_r(5, 7), Error);
}

TEST(Validate, Examples) {
  auto f11 = make_field(11, 1);
  const auto g = table_g(*f11, 8, 2, 3);
  if (is_squarefree(g)) {
    EXPECT_TRUE(validate(CurveSpec::hyperelliptic(f11, 8, 5, g)).empty());
  } else {
    EXPECT_THROW(CurveSpec::hyperelliptic(f11, 8, 5, g), Error);
  }
  const auto g0 = table_g(*f11, 8, 2, 0);
  try {
    CurveSpec::hyperelliptic(f11, 8, 5, g0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidCurve);
    EXPECT_NE(std::string(e.what()).find("g(0) != 0"), std::string::npos);
  }
  auto bad = validate(CurveSpec::monomial(make_field(5, 1), 5));
  EXPECT_NE(std::find(bad.begin(), bad.end(), "p does not divide m(m-1)"), bad.end());
  EXPECT_THROW(CurveSpec::hyperelliptic(make_field(3, 2), 8, 5, table_g(*make_field(3, 2), 8, 1, 2)), Error);
}

TEST(RationalPoints, MonomialGraph) {
  auto f = make_field(11, 1);
  const auto pts = rational_points(CurveSpec::monomial(f, 5));
  ASSERT_EQ(pts.size(), 12u);
  EXPECT_EQ(pts.back(), ProjectivePoint(f->zero(), f->one(), f->zero()));
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) EXPECT_EQ(pts[i].y(), pts[i].x().pow(5));
}

TEST(RationalPoints, HyperellipticMatchesScan) {
  for (std::uint32_t q : {11u, 13u}) {
    auto f = make_field(q, 1);
    for (const auto& c : valid_curves(f, 8, 5, 6)) {
      const auto pts = rational_points(c);
      EXPECT_EQ(pts.size(), oracle::affine_count_by_scan(*f, c.n(), c.g()) + 1);
      for (const auto& p : pts)
        if (p.is_affine()) EXPECT_TRUE(c.contains(p.x(), p.y()));
      EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end() - 1));
    }
  }
}

// Character-sum count against the q^2 scan, including g(0) = 0 and n = 0.
TEST(CountAffine, MatchesScanOracle) {
  std::mt19937_64 rng(23);
  for (const Field& f : oracle::small_fields(49)) {
    for (int n : {0, 1, 2, 3}) {
      for (int i = 0; i < 4; ++i) {
        auto g = oracle::random_polynomial(*f, 8, rng);
        if (i == 0) g = g * Polynomial::x(*f);
        EXPECT_EQ(affine_point_count(*f, n, g), oracle::affine_count_by_scan(*f, n, g))
            << f->description() << " n=" << n << " g=" << to_string(g);
      }
    }
  }
  auto f13 = make_field(13, 1);
  const auto c = CurveSpec::hyperelliptic(f13, 8, 5, table_g(*f13, 8, 1, 3));
  EXPECT_EQ(count_affine(c), oracle::affine_count_by_scan(*f13, 1, c.g()));
}

TEST(CountAffine, HasseRange) {
  for (auto [p, a] : {std::pair{23u, 1u}, std::pair{29u, 1u}, std::pair{7u, 2u}}) {
    auto f = make_field(p, a);
    const std::uint32_t q = f->order();
    for (const auto& c : valid_curves(f, 8, 5, 10)) {
      const double n = static_cast<double>(count_affine(c));
      const double slack = 2 * 4 * std::sqrt(static_cast<double>(q)) + 8 + 1 + 1;
      EXPECT_LE(std::abs(n - (q + 1)), slack) << c.description();
    }
  }
}

TEST(Tangent, MonomialExample) {
  auto f = make_field(11, 1);
  const auto c = CurveSpec::monomial(f, 5);
  const auto p = ProjectivePoint::affine(f->one(), f->one());
  EXPECT_EQ(tangent_line_at(c, p), ProjectiveLine::affine(f->from_int(5), f->from_int(-4)));
  const auto prof = line_intersection_profile(c, tangent_line_at(c, p));
  EXPECT_EQ(prof.multiplicity_at(p), 2);
  EXPECT_EQ(prof.total(), 5);
  EXPECT_THROW(tangent_line_at(c, ProjectivePoint(f->zero(), f->one(), f->zero())), Error);
  EXPECT_THROW(tangent_line_at(c, ProjectivePoint::affine(f->one(), f->from_int(2))), Error);
}

TEST(Tangent, HyperellipticTouchesAndVertical) {
  auto f = make_field(11, 1);
  for (const auto& c : valid_curves(f, 8, 5, 8)) {
    for (const auto& p : rational_points(c)) {
      if (!p.is_affine()) continue;
      const auto t = tangent_line_at(c, p);
      EXPECT_TRUE(point_on_line(p, t));
      if (p.y().is_zero()) EXPECT_EQ(t, ProjectiveLine::vertical(p.x()));
      try {
        EXPECT_GE(line_intersection_profile(c, t).multiplicity_at(p), 2) << to_string(p);
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InseparableProfile);
      }
    }
  }
}

// Rational entries of every profile equal the points found by scanning the line.
TEST(Profile, RationalPartMatchesScanAndBezout) {
  for (std::uint32_t q : {11u, 13u}) {
    auto f = make_field(q, 1);
    for (const auto& c : valid_curves(f, 8, 5, 3)) {
      for (const auto& l : all_lines(*f)) {
        IntersectionProfile prof;
        try {
          prof = line_intersection_profile(c, l);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::InseparableProfile);
          continue;
        }
        EXPECT_EQ(prof.total(), 8);
        std::set<PlaneIndex> want, got;
        for (const auto& p : line_points(l))
          if (p.is_affine() && c.contains(p.x(), p.y())) want.insert(p.index());
        for (const auto& e : prof.affine)
          if (e.point) got.insert(e.point->index());
        EXPECT_EQ(got, want) << to_string(l);
      }
    }
  }
}

TEST(Profile, VerticalThroughTwoPoints) {
  auto f = make_field(13, 1);
  const auto c = CurveSpec::hyperelliptic(f, 8, 5, table_g(*f, 8, 1, 3));
  for (const auto& x0 : f->elements()) {
    const auto v = c.g()(x0);
    if (x0.is_zero() || v.is_zero() || !is_square(v / x0)) continue;
    const auto prof = line_intersection_profile(c, ProjectiveLine::vertical(x0));
    ASSERT_EQ(prof.affine.size(), 2u);
    EXPECT_EQ(prof.affine[0].multiplicity, 1);
    EXPECT_EQ(prof.affine[1].multiplicity, 1);
    EXPECT_EQ(prof.infinity_multiplicity, 6);
  }
}

TEST(Profile, Secant) {
  auto f = make_field(11, 1);
  const auto c = CurveSpec::monomial(f, 5);
  const auto p = ProjectivePoint::affine(f->from_int(2), f->from_int(2).pow(5));
  const auto r = ProjectivePoint::affine(f->from_int(3), f->from_int(3).pow(5));
  const auto prof = line_intersection_profile(c, line_through(p, r));
  EXPECT_EQ(prof.multiplicity_at(p), 1);
  EXPECT_EQ(prof.multiplicity_at(r), 1);
  EXPECT_EQ(prof.total(), 5);
}

// Lambda by classifying all lines from their profiles.
TEST(Lambda, MatchesLineClassification) {
  for (std::uint32_t q : {11u, 13u}) {
    auto f = make_field(q, 1);
    for (const auto& c : valid_curves(f, 8, 5, 4)) {
      const auto lam = compute_lambda(c);
      EXPECT_LE(lam.size(), 474u);
      std::set<PlaneIndex> got;
      for (const auto& l : lam) got.insert(l.index());
      std::set<PlaneIndex> want;
      want.insert(ProjectiveLine::at_infinity(*f).index());
      want.insert(ProjectiveLine(f->zero(), f->one(), f->zero()).index());
      for (const auto& l : all_lines(*f)) {
        if (l.v().is_zero() && !l.u().is_zero()) {
          const auto x0 = -(l.w() / l.u());
          if (c.g()(x0).is_zero()) want.insert(l.index());
        }
        IntersectionProfile prof;
        try {
          prof = line_intersection_profile(c, l);
        } catch (const Error&) {
          bool tangent = false;
          for (const auto& p : line_points(l))
            if (p.is_affine() && c.contains(p.x(), p.y()) && tangent_line_at(c, p) == l) tangent = true;
          if (tangent) want.insert(l.index());
          continue;
        }
        bool touches = false;
        for (const auto& e : prof.affine)
          if (e.point && e.multiplicity >= 2) touches = true;
        if (touches && prof.distinct_closure_points < 7) want.insert(l.index());
      }
      EXPECT_EQ(got, want) << c.description();
    }
  }
}

TEST(Witnesses, BoundAndNoDiagonal) {
  for (std::uint32_t q : {11u, 13u, 17u}) {
    auto f = make_field(q, 1);
    for (const auto& c : valid_curves(f, 8, 5, 4)) {
      const auto w = double_tangency_witnesses(c);
      EXPECT_LE(w.size(), 416u);
      for (const auto& [x0, x1] : w) EXPECT_NE(x0, x1);
    }
  }
}

TEST(DoubleRoot, PolynomialShape) {
  auto f = make_field(11, 1);
  const auto a = f->zero(), b = f->one();
  const auto phi = double_root_polynomial(5, a, b);
  EXPECT_EQ(phi, Polynomial(*f, {-1, 0, 0, 0, 0, -4}));
  EXPECT_TRUE(is_squarefree(phi));
}

// The returned point is a double root of psi over the extension and psi has
// no other repeated root.
TEST(DoubleRoot, WitnessVerifiedByEvaluation) {
  std::mt19937_64 rng(29);
  for (std::uint32_t q : {11u, 13u}) {
    auto f = make_field(q, 1);
    for (int m : {5, 7}) {
      if ((m * (m - 1)) % static_cast<int>(q) == 0) continue;
      for (int i = 0; i < 5; ++i) {
        FieldElement a = f->element(static_cast<ElemIndex>(rng() % q));
        FieldElement b = f->element(static_cast<ElemIndex>(rng() % q));
        if (b.is_zero() || b == a.pow(m)) continue;
        const auto w = monomial_double_root_witness(m, a, b);
        const FieldSpec& K = *w.extension;
        const auto emb = field_embedding(*f, K);
        const auto aK = K.element(emb[a.index()]), bK = K.element(emb[b.index()]);
        const Polynomial psi = Polynomial::monomial(K.one(), m) - Polynomial::monomial(w.t, 1) +
                               Polynomial::constant(w.t * aK - bK);
        EXPECT_TRUE(psi(w.x).is_zero());
        EXPECT_TRUE(derivative(psi)(w.x).is_zero());
        EXPECT_EQ(gcd(psi, derivative(psi)).degree(), 1);
        std::vector<int> want(static_cast<std::size_t>(m - 1), 1);
        want[0] = 2;
        EXPECT_EQ(w.profile, want);
      }
    }
  }
}

TEST(DoubleRoot, ZeroSlopeIsBinomial) {
  auto f = make_field(13, 1);
  const auto phi = double_root_polynomial(7, f->zero(), f->from_int(3));
  EXPECT_EQ(phi.degree(), 7);
  for (int i = 1; i < 7; ++i) EXPECT_TRUE(phi.coeff(i).is_zero());
}

TEST(FieldEmbedding, IsRingHomomorphism) {
  for (auto [p, a, b] : {std::tuple{5u, 1u, 2u}, std::tuple{3u, 2u, 4u}, std::tuple{7u, 1u, 3u}, std::tuple{2u, 2u, 4u}}) {
    auto from = make_field(p, a), to = make_field(p, b);
    const auto e = field_embedding(*from, *to);
    std::set<ElemIndex> image(e.begin(), e.end());
    EXPECT_EQ(image.size(), from->order());
    for (const auto& x : from->elements())
      for (const auto& y : from->elements()) {
        EXPECT_EQ(e[(x + y).index()], to->add(e[x.index()], e[y.index()]));
        EXPECT_EQ(e[(x * y).index()], to->mul(e[x.index()], e[y.index()]));
      }
  }
  EXPECT_THROW(field_embedding(*make_field(5, 2), *make_field(5, 3)), Error);
}

TEST(Twist, Ex1Construction) {
  auto base = make_field(17, 1);
  const auto t = make_twist_g(TwistKind::Ex1, 9, *base);
  EXPECT_EQ(t.curve.r(), 5);
  EXPECT_EQ(t.curve.n(), 2);
  EXPECT_EQ(t.curve.field().order(), 289u);
  EXPECT_FALSE(is_square(t.curve.g().leading()));
  EXPECT_EQ(t.certified_bound, 289 - 8 * 17 + 27);
  EXPECT_EQ(t.stated_bound, 289 - 10 * 17 + 27);
  EXPECT_THROW(make_twist_g(TwistKind::Ex1, 9, *make_field(13, 1)), Error);
}

TEST(CurveSpecH, DegreeAndLeading) {
  auto f = make_field(13, 1);
  const auto c = CurveSpec::hyperelliptic(f, 8, 5, table_g(*f, 8, 1, 3));
  EXPECT_EQ(c.n(), 1);
  EXPECT_EQ(c.h().degree(), 8);
  EXPECT_EQ(c.h().leading(), f->from_int(7));
}

}  // namespace
}  // namespace marcs
