#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "marcs/curve.hpp"
#include "marcs/plane.hpp"

namespace marcs {

/// A point set in PG(2,q) with per-line incidence counts kept in step.
class ArcSet {
 public:
  ArcSet(std::shared_ptr<const Plane> plane, int m);

  const Plane& plane() const { return *plane_; }
  const std::shared_ptr<const Plane>& plane_handle() const { return plane_; }
  const FieldSpec& field() const { return plane_->field(); }
  int m() const { return m_; }
  std::size_t size() const { return size_; }
  bool contains(PlaneIndex p) const { return member_[p] != 0; }
  bool contains(const ProjectivePoint& p) const { return contains(p.index()); }

  /// No-op when already present.  Performs no arc check.
  void add(PlaneIndex p);
  void add(const ProjectivePoint& p) { add(p.index()); }
  void remove(PlaneIndex p);

  /// Ascending index order.
  std::vector<PlaneIndex> indices() const;
  std::vector<ProjectivePoint> points() const;
  std::span<const std::uint32_t> line_counts() const { return counts_; }
  std::uint32_t count_on(PlaneIndex line) const { return counts_[line]; }
  /// Some line through p already carries m points.  Ignores membership.
  bool covered(PlaneIndex p) const;

 private:
  std::shared_ptr<const Plane> plane_;
  int m_;
  std::size_t size_ = 0;
  std::vector<char> member_;
  std::vector<std::uint32_t> counts_;
};

struct ArcStatus {
  bool arc_ok;
  bool has_m_secant;
  std::optional<PlaneIndex> overfull_line;  // first line with > m points
};

ArcStatus is_m_arc(const ArcSet& a);
/// Throws PointInArc.
bool m_covers(const ArcSet& a, const ProjectivePoint& p);
std::vector<PlaneIndex> uncovered_points(const ArcSet& a, unsigned workers = 1);
bool is_complete(const ArcSet& a, unsigned workers = 1);

/// External points that could be added without an (m+1)-secant, recomputed
/// from coordinates and cross products instead of the incidence table.
std::vector<PlaneIndex> maximality_probe(const ArcSet& a, unsigned workers = 1);

/// Per-line record of the completion pass.
struct LineAdditions {
  PlaneIndex line;
  std::vector<PlaneIndex> added;
};

struct Completion {
  std::vector<LineAdditions> log;
  std::vector<PlaneIndex> safety_added;
  std::size_t line_added_total() const;
};

/// Greedy pass along `lines`, then the safety net.  Mutates `a`.
/// Throws ArcViolation if `a` is not an arc on entry.
Completion complete_from_lines(ArcSet& a, std::span<const PlaneIndex> lines);

struct BoundCheck {
  std::string name;
  std::int64_t value;
  std::int64_t bound;
  bool holds;
  bool advisory;
};

struct BuildReport {
  ArcSet arc;
  std::size_t seed_size;                  // |R_q|
  std::vector<PlaneIndex> trimmed;        // seed points removed
  std::vector<PlaneIndex> lines;          // completion lines in order
  Completion completion;
  ArcStatus status;
  bool complete;
  std::vector<BoundCheck> bound_checks;
};

/// Seeds with the rational points of c and completes along y = 0 and the
/// line at infinity (monomial) or along Lambda (hyperelliptic).
BuildReport build_complete_arc(const CurveSpec& c, std::shared_ptr<const Plane> plane, unsigned workers = 1);
BuildReport build_complete_arc(const CurveSpec& c, unsigned workers = 1);

/// Header `q=p^a m=m`, then one point per line.
void write_arc(std::ostream& out, const ArcSet& a);

struct ArcFile {
  Field field;
  int m;
  std::vector<ProjectivePoint> points;
};

/// Throws ParseError.
ArcFile read_arc(std::istream& in);

}  // namespace marcs
