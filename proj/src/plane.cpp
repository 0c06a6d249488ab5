#include "marcs/plane.hpp"

#include <algorithm>

namespace marcs {

namespace {

void check_field(const FieldElement& a, const FieldElement& b) {
  if (a.field_ptr() != b.field_ptr()) throw Error(ErrorCode::FieldMismatch, "coordinates from different fields");
}

PlaneIndex encode(const FieldSpec& f, ElemIndex a, ElemIndex b, ElemIndex c) {
  const std::uint32_t q = f.order();
  if (c != 0) return a * q + b;
  if (a != 0) return q * q + b;
  return q * q + q;
}

struct Triple {
  ElemIndex a, b, c;
};

Triple decode(const FieldSpec& f, PlaneIndex index) {
  const std::uint32_t q = f.order();
  if (index >= plane_size(f)) throw Error(ErrorCode::OutOfRange, "plane index " + std::to_string(index));
  if (index < q * q) return {index / q, index % q, 1};
  if (index < q * q + q) return {1, index - q * q, 0};
  return {0, 1, 0};
}

// Points of u x + v y + w z = 0 in ascending index order.
template <class Emit>
void for_points_of(const FieldSpec& f, ElemIndex u, ElemIndex v, ElemIndex w, Emit&& emit) {
  const std::uint32_t q = f.order();
  if (v != 0) {
    const ElemIndex m = f.neg(f.mul(u, f.inv(v)));  // slope
    const ElemIndex c = f.neg(f.mul(w, f.inv(v)));
    for (ElemIndex x = 0; x < q; ++x) emit(Triple{x, f.add(f.mul(m, x), c), 1});
    emit(Triple{1, m, 0});
  } else if (u != 0) {
    const ElemIndex x0 = f.neg(f.mul(w, f.inv(u)));
    for (ElemIndex y = 0; y < q; ++y) emit(Triple{x0, y, 1});
    emit(Triple{0, 1, 0});
  } else {
    for (ElemIndex y = 0; y < q; ++y) emit(Triple{1, y, 0});
    emit(Triple{0, 1, 0});
  }
}

Triple cross(const FieldSpec& f, Triple p, Triple r) {
  return {f.sub(f.mul(p.b, r.c), f.mul(p.c, r.b)), f.sub(f.mul(p.c, r.a), f.mul(p.a, r.c)),
          f.sub(f.mul(p.a, r.b), f.mul(p.b, r.a))};
}

template <class T>
Triple raw(const T& h) {
  return {h[0].index(), h[1].index(), h[2].index()};
}

template <class T>
T make(const FieldSpec& f, Triple t) {
  return T(f.element(t.a), f.element(t.b), f.element(t.c));
}

template <class T>
T parse_triple(const FieldSpec& field, std::string_view text) {
  std::vector<FieldElement> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(parse_element(field, text.substr(start, colon == std::string_view::npos ? colon : colon - start)));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 3) throw Error(ErrorCode::ParseError, "expected three coordinates in '" + std::string(text) + "'");
  return T(parts[0], parts[1], parts[2]);
}

template <class T>
std::string triple_text(const T& h) {
  return to_string(h[0]) + ":" + to_string(h[1]) + ":" + to_string(h[2]);
}

}  // namespace

namespace detail {

template <class Tag>
Homogeneous<Tag>::Homogeneous(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  check_field(a, b);
  check_field(a, c);
  FieldElement pivot;
  if (!c.is_zero())
    pivot = c;
  else if (!a.is_zero())
    pivot = a;
  else if (!b.is_zero())
    pivot = b;
  else
    throw Error(ErrorCode::BothZero, "all homogeneous coordinates vanish");
  const FieldElement s = pivot.inv();
  a_ = a * s;
  b_ = b * s;
  c_ = c * s;
}

template <class Tag>
PlaneIndex Homogeneous<Tag>::index() const {
  return encode(field(), a_.index(), b_.index(), c_.index());
}

template class Homogeneous<PointTag>;
template class Homogeneous<LineTag>;

}  // namespace detail

ProjectivePoint ProjectivePoint::affine(const FieldElement& x, const FieldElement& y) {
  return ProjectivePoint(x, y, x.field().one());
}

ProjectiveLine ProjectiveLine::at_infinity(const FieldSpec& field) {
  return ProjectiveLine(field.zero(), field.zero(), field.one());
}

ProjectiveLine ProjectiveLine::affine(const FieldElement& slope, const FieldElement& intercept) {
  const FieldSpec& f = slope.field();
  return ProjectiveLine(slope, -f.one(), intercept);
}

ProjectiveLine ProjectiveLine::vertical(const FieldElement& x0) {
  const FieldSpec& f = x0.field();
  return ProjectiveLine(f.one(), f.zero(), -x0);
}

std::uint32_t plane_size(const FieldSpec& field) {
  const std::uint32_t q = field.order();
  return q * q + q + 1;
}

ProjectivePoint point_at(const FieldSpec& field, PlaneIndex index) {
  return make<ProjectivePoint>(field, decode(field, index));
}

ProjectiveLine line_at(const FieldSpec& field, PlaneIndex index) {
  return make<ProjectiveLine>(field, decode(field, index));
}

bool point_on_line(const ProjectivePoint& p, const ProjectiveLine& l) {
  check_field(p.x(), l.u());
  return (p.x() * l.u() + p.y() * l.v() + p.z() * l.w()).is_zero();
}

ProjectiveLine line_through(const ProjectivePoint& p, const ProjectivePoint& q) {
  check_field(p.x(), q.x());
  if (p == q) throw Error(ErrorCode::EqualPoints, "line through " + to_string(p) + " needs two distinct points");
  return make<ProjectiveLine>(p.field(), cross(p.field(), raw(p), raw(q)));
}

std::vector<ProjectiveLine> lines_through_point(const ProjectivePoint& p) {
  const FieldSpec& f = p.field();
  std::vector<ProjectiveLine> out;
  out.reserve(f.order() + 1);
  if (p.is_affine()) {
    for (const FieldElement& t : f.elements()) out.push_back(ProjectiveLine::affine(t, p.y() - t * p.x()));
    out.push_back(ProjectiveLine::vertical(p.x()));
  } else if (!p.x().is_zero()) {
    for (const FieldElement& c : f.elements()) out.push_back(ProjectiveLine::affine(p.y(), c));
    out.push_back(ProjectiveLine::at_infinity(f));
  } else {
    for (const FieldElement& c : f.elements()) out.push_back(ProjectiveLine::vertical(c));
    out.push_back(ProjectiveLine::at_infinity(f));
  }
  return out;
}

std::vector<ProjectivePoint> line_points(const ProjectiveLine& l) {
  const FieldSpec& f = l.field();
  std::vector<ProjectivePoint> out;
  out.reserve(f.order() + 1);
  for_points_of(f, l.u().index(), l.v().index(), l.w().index(),
                [&](Triple t) { out.push_back(make<ProjectivePoint>(f, t)); });
  return out;
}

std::vector<ProjectivePoint> all_points(const FieldSpec& field) {
  std::vector<ProjectivePoint> out;
  const std::uint32_t n = plane_size(field);
  out.reserve(n);
  for (PlaneIndex i = 0; i < n; ++i) out.push_back(point_at(field, i));
  return out;
}

std::vector<ProjectiveLine> all_lines(const FieldSpec& field) {
  std::vector<ProjectiveLine> out;
  const std::uint32_t n = plane_size(field);
  out.reserve(n);
  for (PlaneIndex i = 0; i < n; ++i) out.push_back(line_at(field, i));
  return out;
}

std::string to_string(const ProjectivePoint& p) { return triple_text(p); }
std::string to_string(const ProjectiveLine& l) { return triple_text(l); }

ProjectivePoint parse_point(const FieldSpec& field, std::string_view text) {
  return parse_triple<ProjectivePoint>(field, text);
}

ProjectiveLine parse_line(const FieldSpec& field, std::string_view text) {
  return parse_triple<ProjectiveLine>(field, text);
}

Plane::Plane(Field field) : field_(std::move(field)), order_(field_->order()), size_(plane_size(*field_)) {
  const FieldSpec& f = *field_;
  incidence_.resize(static_cast<std::size_t>(size_) * (order_ + 1));
  auto it = incidence_.begin();
  for (PlaneIndex l = 0; l < size_; ++l) {
    const Triple t = decode(f, l);
    for_points_of(f, t.a, t.b, t.c, [&](Triple p) { *it++ = encode(f, p.a, p.b, p.c); });
  }
}

std::span<const PlaneIndex> Plane::points_on(PlaneIndex line) const {
  if (line >= size_) throw Error(ErrorCode::OutOfRange, "line index " + std::to_string(line));
  return {incidence_.data() + static_cast<std::size_t>(line) * (order_ + 1), order_ + 1};
}

// Incidence is symmetric under the shared encoding.
std::span<const PlaneIndex> Plane::lines_through(PlaneIndex point) const { return points_on(point); }

PlaneIndex Plane::line_index_through(PlaneIndex p, PlaneIndex q) const {
  if (p == q) throw Error(ErrorCode::EqualPoints, "identical point indices");
  const FieldSpec& f = *field_;
  const Triple t = cross(f, decode(f, p), decode(f, q));
  ElemIndex pivot = t.c != 0 ? t.c : (t.a != 0 ? t.a : t.b);
  const ElemIndex s = f.inv(pivot);
  return encode(f, f.mul(t.a, s), f.mul(t.b, s), f.mul(t.c, s));
}

}  // namespace marcs
