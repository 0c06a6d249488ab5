#include <gtest/gtest.h>

#include <set>

#include "marcs/plane.hpp"
#include "oracles.hpp"

namespace marcs {
namespace {

ProjectivePoint pt(const FieldSpec& f, std::int64_t x, std::int64_t y, std::int64_t z) {
  return ProjectivePoint(f.from_int(x), f.from_int(y), f.from_int(z));
}

ProjectiveLine ln(const FieldSpec& f, std::int64_t u, std::int64_t v, std::int64_t w) {
  return ProjectiveLine(f.from_int(u), f.from_int(v), f.from_int(w));
}

TEST(Incidence, Examples) {
  auto f = make_field(7, 1);
  EXPECT_TRUE(point_on_line(pt(*f, 0, 0, 1), ln(*f, 0, 1, 0)));
  EXPECT_TRUE(point_on_line(pt(*f, 1, 1, 1), ln(*f, 1, -1, 0)));
  EXPECT_TRUE(point_on_line(pt(*f, 1, 0, 0), ln(*f, 0, 0, 1)));
  EXPECT_FALSE(point_on_line(pt(*f, 1, 2, 1), ln(*f, 0, 1, 0)));
}

TEST(Normalization, ScalesToCanonicalTriple) {
  auto f = make_field(7, 1);
  EXPECT_EQ(pt(*f, 2, 4, 2), pt(*f, 1, 2, 1));
  EXPECT_EQ(pt(*f, 3, 5, 0), pt(*f, 1, 4, 0));
  EXPECT_EQ(pt(*f, 0, 6, 0), pt(*f, 0, 1, 0));
  EXPECT_THROW(pt(*f, 0, 0, 0), Error);
}

TEST(LineThrough, Examples) {
  auto f = make_field(5, 1);
  EXPECT_EQ(line_through(pt(*f, 0, 0, 1), pt(*f, 1, 0, 1)), ln(*f, 0, 1, 0));
  EXPECT_EQ(line_through(pt(*f, 1, 0, 0), pt(*f, 0, 1, 0)), ln(*f, 0, 0, 1));
  EXPECT_EQ(line_through(pt(*f, 3, 1, 1), pt(*f, 3, 4, 1)), ln(*f, 1, 0, -3));
  try {
    line_through(pt(*f, 1, 2, 1), pt(*f, 2, 4, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EqualPoints);
  }
}

TEST(Pencil, SizesAndOrder) {
  auto f3 = make_field(3, 1);
  auto pencil = lines_through_point(pt(*f3, 0, 0, 1));
  ASSERT_EQ(pencil.size(), 4u);
  EXPECT_EQ(pencil[0], ProjectiveLine::affine(f3->zero(), f3->zero()));
  EXPECT_EQ(pencil.back(), ProjectiveLine::vertical(f3->zero()));
  auto f7 = make_field(7, 1);
  auto at_inf = lines_through_point(pt(*f7, 1, 3, 0));
  ASSERT_EQ(at_inf.size(), 8u);
  EXPECT_EQ(at_inf.back(), ProjectiveLine::at_infinity(*f7));
  for (const auto& l : at_inf) EXPECT_TRUE(point_on_line(pt(*f7, 1, 3, 0), l));
}

TEST(LinePoints, LineAtInfinityOver3) {
  auto f = make_field(3, 1);
  auto pts = line_points(ln(*f, 0, 0, 1));
  std::set<PlaneIndex> got, want;
  for (const auto& p : pts) got.insert(p.index());
  for (auto p : {pt(*f, 1, 0, 0), pt(*f, 0, 1, 0), pt(*f, 1, 1, 0), pt(*f, 1, 2, 0)}) want.insert(p.index());
  EXPECT_EQ(got, want);
}

TEST(Enumeration, CountsAndOrder) {
  auto f2 = make_field(2, 1);
  EXPECT_EQ(all_points(*f2).size(), 7u);
  EXPECT_EQ(all_lines(*f2).size(), 7u);
  auto f11 = make_field(11, 1);
  const auto pts = all_points(*f11);
  ASSERT_EQ(pts.size(), 133u);
  EXPECT_EQ(pts[0], pt(*f11, 0, 0, 1));
  EXPECT_EQ(pts[1], pt(*f11, 0, 1, 1));
  EXPECT_EQ(pts[121], pt(*f11, 1, 0, 0));
  EXPECT_EQ(pts[132], pt(*f11, 0, 1, 0));
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(pts[i].index(), i);
  EXPECT_EQ(plane_size(*make_field(17, 2)), 83811u);
}

// Exhaustive plane axioms; the pencil and line_points use formulas, the
// table uses its own enumeration, and both are checked against incidence.
TEST(PlaneAxioms, ExhaustiveUpTo13) {
  for (const Field& f : oracle::small_fields(13, true)) {
    const std::uint32_t q = f->order();
    const auto pts = all_points(*f);
    const auto lines = all_lines(*f);
    Plane plane(f);
    for (const auto& l : lines) {
      const auto on = line_points(l);
      ASSERT_EQ(on.size(), q + 1);
      const auto span = plane.points_on(l.index());
      for (std::size_t i = 0; i < on.size(); ++i) {
        EXPECT_TRUE(point_on_line(on[i], l));
        EXPECT_EQ(on[i].index(), span[i]);
      }
      std::size_t count = 0;
      for (const auto& p : pts) count += point_on_line(p, l);
      EXPECT_EQ(count, q + 1);
    }
    for (const auto& p : pts) {
      const auto pencil = lines_through_point(p);
      ASSERT_EQ(pencil.size(), q + 1);
      std::set<PlaneIndex> distinct;
      for (const auto& l : pencil) {
        EXPECT_TRUE(point_on_line(p, l));
        distinct.insert(l.index());
      }
      EXPECT_EQ(distinct.size(), q + 1);
      const auto span = plane.lines_through(p.index());
      EXPECT_EQ(std::set<PlaneIndex>(span.begin(), span.end()), distinct);
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const auto l = line_through(pts[i], pts[j]);
        EXPECT_EQ(l, line_through(pts[j], pts[i]));
        EXPECT_TRUE(point_on_line(pts[i], l) && point_on_line(pts[j], l));
        EXPECT_EQ(plane.line_index_through(static_cast<PlaneIndex>(i), static_cast<PlaneIndex>(j)), l.index());
      }
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        int common = 0;
        for (PlaneIndex a : plane.points_on(static_cast<PlaneIndex>(i)))
          for (PlaneIndex b : plane.points_on(static_cast<PlaneIndex>(j))) common += a == b;
        EXPECT_EQ(common, 1);
      }
    }
  }
}

TEST(PointText, RoundTrip) {
  auto f = make_field(5, 2);
  for (const auto& p : all_points(*f)) EXPECT_EQ(parse_point(*f, to_string(p)), p);
  EXPECT_EQ(to_string(pt(*make_field(7, 1), 2, 3, 1)), "2:3:1");
  EXPECT_THROW(parse_point(*f, "1:2"), Error);
  EXPECT_EQ(parse_line(*f, "0:0:1"), ProjectiveLine::at_infinity(*f));
}

}  // namespace
}  // namespace marcs
