#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "marcs/gf.hpp"

namespace marcs {

/// Position of a point or line in the canonical enumeration of PG(2,q):
/// (x:y:1) at x*q + y, then (1:y:0) at q^2 + y, then (0:1:0) at q^2 + q.
/// Lines use the same encoding on their dual triple [u:v:w], which makes
/// incidence symmetric in the two index spaces.
using PlaneIndex = std::uint32_t;

namespace detail {

/// Homogeneous triple scaled so that z = 1, else x = 1, else y = 1.
template <class Tag>
class Homogeneous {
 public:
  Homogeneous(const FieldElement& a, const FieldElement& b, const FieldElement& c);

  const FieldSpec& field() const { return a_.field(); }
  const FieldElement& operator[](int i) const { return i == 0 ? a_ : (i == 1 ? b_ : c_); }
  PlaneIndex index() const;

  friend bool operator==(const Homogeneous& l, const Homogeneous& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_;
  }
  friend auto operator<=>(const Homogeneous& l, const Homogeneous& r) { return l.index() <=> r.index(); }

 private:
  FieldElement a_, b_, c_;
};

struct PointTag {};
struct LineTag {};

}  // namespace detail

class ProjectivePoint : public detail::Homogeneous<detail::PointTag> {
 public:
  using Homogeneous::Homogeneous;
  static ProjectivePoint affine(const FieldElement& x, const FieldElement& y);
  const FieldElement& x() const { return (*this)[0]; }
  const FieldElement& y() const { return (*this)[1]; }
  const FieldElement& z() const { return (*this)[2]; }
  bool is_affine() const { return !z().is_zero(); }
};

/// The line u x + v y + w z = 0.
class ProjectiveLine : public detail::Homogeneous<detail::LineTag> {
 public:
  using Homogeneous::Homogeneous;
  static ProjectiveLine at_infinity(const FieldSpec& field);
  /// y = slope * x + intercept
  static ProjectiveLine affine(const FieldElement& slope, const FieldElement& intercept);
  static ProjectiveLine vertical(const FieldElement& x0);
  const FieldElement& u() const { return (*this)[0]; }
  const FieldElement& v() const { return (*this)[1]; }
  const FieldElement& w() const { return (*this)[2]; }
};

ProjectivePoint point_at(const FieldSpec& field, PlaneIndex index);
ProjectiveLine line_at(const FieldSpec& field, PlaneIndex index);
std::uint32_t plane_size(const FieldSpec& field);

bool point_on_line(const ProjectivePoint& p, const ProjectiveLine& l);
/// Throws EqualPoints.
ProjectiveLine line_through(const ProjectivePoint& p, const ProjectivePoint& q);
/// The q+1 lines through p: slopes in element order, then the vertical
/// member (or the line at infinity when p is itself at infinity).
std::vector<ProjectiveLine> lines_through_point(const ProjectivePoint& p);
/// The q+1 points of l, ascending canonical index.
std::vector<ProjectivePoint> line_points(const ProjectiveLine& l);
std::vector<ProjectivePoint> all_points(const FieldSpec& field);
std::vector<ProjectiveLine> all_lines(const FieldSpec& field);

/// "x:y:z"
std::string to_string(const ProjectivePoint& p);
/// "u:v:w"
std::string to_string(const ProjectiveLine& l);
ProjectivePoint parse_point(const FieldSpec& field, std::string_view text);
ProjectiveLine parse_line(const FieldSpec& field, std::string_view text);

/// Materialized incidence structure of PG(2,q), shared read-only by the arc
/// routines.  Memory is (q^2+q+1)(q+1) indices.
class Plane {
 public:
  explicit Plane(Field field);

  const FieldSpec& field() const { return *field_; }
  const Field& field_handle() const { return field_; }
  std::uint32_t size() const { return size_; }
  std::uint32_t line_size() const { return order_ + 1; }

  /// Points of a line, ascending; equals line_points order.
  std::span<const PlaneIndex> points_on(PlaneIndex line) const;
  /// Lines through a point, ascending index.
  std::span<const PlaneIndex> lines_through(PlaneIndex point) const;
  PlaneIndex line_index_through(PlaneIndex p, PlaneIndex q) const;

 private:
  Field field_;
  std::uint32_t order_;
  std::uint32_t size_;
  std::vector<PlaneIndex> incidence_;
};

}  // namespace marcs
