#include "marcs/arc.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "marcs/parallel.hpp"

namespace marcs {

ArcSet::ArcSet(std::shared_ptr<const Plane> plane, int m)
    : plane_(std::move(plane)), m_(m), member_(plane_->size(), 0), counts_(plane_->size(), 0) {
  if (m < 1) throw Error(ErrorCode::OutOfRange, "m must be positive");
}

void ArcSet::add(PlaneIndex p) {
  if (member_.at(p)) return;
  member_[p] = 1;
  ++size_;
  for (PlaneIndex l : plane_->lines_through(p)) ++counts_[l];
}

void ArcSet::remove(PlaneIndex p) {
  if (!member_.at(p)) return;
  member_[p] = 0;
  --size_;
  for (PlaneIndex l : plane_->lines_through(p)) --counts_[l];
}

std::vector<PlaneIndex> ArcSet::indices() const {
  std::vector<PlaneIndex> out;
  out.reserve(size_);
  for (PlaneIndex i = 0; i < member_.size(); ++i)
    if (member_[i]) out.push_back(i);
  return out;
}

std::vector<ProjectivePoint> ArcSet::points() const {
  std::vector<ProjectivePoint> out;
  for (PlaneIndex i : indices()) out.push_back(point_at(field(), i));
  return out;
}

bool ArcSet::covered(PlaneIndex p) const {
  const auto m = static_cast<std::uint32_t>(m_);
  for (PlaneIndex l : plane_->lines_through(p))
    if (counts_[l] >= m) return true;
  return false;
}

ArcStatus is_m_arc(const ArcSet& a) {
  ArcStatus s{true, false, std::nullopt};
  const auto m = static_cast<std::uint32_t>(a.m());
  const auto counts = a.line_counts();
  for (PlaneIndex l = 0; l < counts.size(); ++l) {
    if (counts[l] > m && s.arc_ok) {
      s.arc_ok = false;
      s.overfull_line = l;
    }
    if (counts[l] == m) s.has_m_secant = true;
  }
  return s;
}

bool m_covers(const ArcSet& a, const ProjectivePoint& p) {
  if (a.contains(p)) throw Error(ErrorCode::PointInArc, to_string(p));
  return a.covered(p.index());
}

std::vector<PlaneIndex> uncovered_points(const ArcSet& a, unsigned workers) {
  auto parts = map_chunks(a.plane().size(), workers, [&](std::size_t lo, std::size_t hi) {
    std::vector<PlaneIndex> out;
    for (auto p = static_cast<PlaneIndex>(lo); p < hi; ++p)
      if (!a.contains(p) && !a.covered(p)) out.push_back(p);
    return out;
  });
  std::vector<PlaneIndex> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

bool is_complete(const ArcSet& a, unsigned workers) {
  return is_m_arc(a).arc_ok && uncovered_points(a, workers).empty();
}

namespace {

struct Raw {
  ElemIndex x, y, z;
};

// Canonical line index of the cross product, straight from coordinates.
PlaneIndex join_index(const FieldSpec& f, const Raw& p, const Raw& r) {
  ElemIndex u = f.sub(f.mul(p.y, r.z), f.mul(p.z, r.y));
  ElemIndex v = f.sub(f.mul(p.z, r.x), f.mul(p.x, r.z));
  ElemIndex w = f.sub(f.mul(p.x, r.y), f.mul(p.y, r.x));
  const std::uint32_t q = f.order();
  if (w != 0) {
    const ElemIndex s = f.inv(w);
    return f.mul(u, s) * q + f.mul(v, s);
  }
  if (u != 0) return q * q + f.mul(v, f.inv(u));
  return q * q + q;
}

}  // namespace

std::vector<PlaneIndex> maximality_probe(const ArcSet& a, unsigned workers) {
  const FieldSpec& f = a.field();
  std::vector<Raw> arc;
  for (const ProjectivePoint& p : a.points()) arc.push_back({p.x().index(), p.y().index(), p.z().index()});
  const std::uint32_t n = plane_size(f);
  const auto m = static_cast<std::uint32_t>(a.m());
  auto parts = map_chunks(n, workers, [&](std::size_t lo, std::size_t hi) {
    std::vector<PlaneIndex> addable;
    std::vector<std::uint32_t> tally(n, 0);
    std::vector<PlaneIndex> touched;
    for (auto i = static_cast<PlaneIndex>(lo); i < hi; ++i) {
      if (a.contains(i)) continue;
      const ProjectivePoint p = point_at(f, i);
      const Raw rp{p.x().index(), p.y().index(), p.z().index()};
      bool blocked = false;
      for (const Raw& r : arc) {
        const PlaneIndex l = join_index(f, rp, r);
        if (tally[l]++ == 0) touched.push_back(l);
        if (tally[l] >= m) blocked = true;
      }
      for (PlaneIndex l : touched) tally[l] = 0;
      touched.clear();
      if (!blocked) addable.push_back(i);
    }
    return addable;
  });
  std::vector<PlaneIndex> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::size_t Completion::line_added_total() const {
  std::size_t k = 0;
  for (const auto& e : log) k += e.added.size();
  return k;
}

Completion complete_from_lines(ArcSet& a, std::span<const PlaneIndex> lines) {
  const ArcStatus s = is_m_arc(a);
  if (!s.arc_ok)
    throw Error(ErrorCode::ArcViolation, "line " + to_string(line_at(a.field(), *s.overfull_line)) + " carries " +
                                             std::to_string(a.count_on(*s.overfull_line)) + " points");
  Completion out;
  for (PlaneIndex l : lines) {
    LineAdditions entry{l, {}};
    // A point that is not covered can always be added.
    for (PlaneIndex p : a.plane().points_on(l)) {
      if (a.contains(p) || a.covered(p)) continue;
      a.add(p);
      entry.added.push_back(p);
    }
    out.log.push_back(std::move(entry));
  }
  // Coverage only grows, so one sweep leaves nothing uncovered.
  for (PlaneIndex p = 0; p < a.plane().size(); ++p) {
    if (a.contains(p) || a.covered(p)) continue;
    a.add(p);
    out.safety_added.push_back(p);
  }
  return out;
}

BuildReport build_complete_arc(const CurveSpec& c, unsigned workers) {
  return build_complete_arc(c, std::make_shared<const Plane>(c.field_handle()), workers);
}

BuildReport build_complete_arc(const CurveSpec& c, std::shared_ptr<const Plane> plane, unsigned workers) {
  if (&plane->field() != &c.field()) throw Error(ErrorCode::FieldMismatch, "plane and curve over different fields");
  const FieldSpec& f = c.field();
  const int m = c.m();
  ArcSet arc(plane, m);
  const auto seed = rational_points(c);
  for (const ProjectivePoint& p : seed) arc.add(p);

  std::vector<PlaneIndex> trimmed;
  if (!is_m_arc(arc).arc_ok) {
    for (PlaneIndex l = 0; l < plane->size(); ++l) {
      const auto pts = plane->points_on(l);
      for (auto it = pts.rbegin(); it != pts.rend() && arc.count_on(l) > static_cast<std::uint32_t>(m); ++it) {
        if (!arc.contains(*it)) continue;
        arc.remove(*it);
        trimmed.push_back(*it);
      }
    }
  }

  std::vector<PlaneIndex> lines;
  std::size_t lambda_size = 0;
  if (c.family() == Family::Monomial) {
    lines.push_back(ProjectiveLine(f.zero(), f.one(), f.zero()).index());
    lines.push_back(ProjectiveLine::at_infinity(f).index());
  } else {
    for (const ProjectiveLine& l : compute_lambda(c)) lines.push_back(l.index());
    lambda_size = lines.size();
  }

  Completion completion = complete_from_lines(arc, lines);
  const ArcStatus status = is_m_arc(arc);
  const bool complete = status.arc_ok && uncovered_points(arc, workers).empty();
  if (!complete) throw Error(ErrorCode::ArcViolation, "completion did not produce a complete arc");

  std::vector<BoundCheck> checks;
  const std::int64_t q = f.order();
  const std::int64_t mm = m;
  const auto size = static_cast<std::int64_t>(arc.size());
  const auto k = static_cast<std::int64_t>(completion.line_added_total());
  std::int64_t per_line = 0;
  for (const auto& e : completion.log) per_line = std::max<std::int64_t>(per_line, static_cast<std::int64_t>(e.added.size()));
  checks.push_back({"per-line additions <= m", per_line, mm, per_line <= mm, false});
  if (c.family() == Family::Monomial) {
    checks.push_back({"size <= q+2m-1", size, q + 2 * mm - 1, size <= q + 2 * mm - 1, true});
  } else {
    const std::int64_t lam = 7 * mm * mm + 3 * mm + 2;
    const auto ls = static_cast<std::int64_t>(lambda_size);
    checks.push_back({"|Lambda| <= 7m^2+3m+2", ls, lam, ls <= lam, false});
    checks.push_back({"k <= (7m^2+3m+2)m", k, lam * mm, k <= lam * mm, false});
  }
  const auto safety = static_cast<std::int64_t>(completion.safety_added.size());
  checks.push_back({"safety additions", safety, 0, safety == 0, true});

  return {std::move(arc), seed.size(), std::move(trimmed), std::move(lines), std::move(completion),
          status, complete, std::move(checks)};
}

void write_arc(std::ostream& out, const ArcSet& a) {
  out << "q=" << a.field().description() << " m=" << a.m() << "\n";
  for (const ProjectivePoint& p : a.points()) out << to_string(p) << "\n";
}

ArcFile read_arc(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, "empty arc file");
  std::istringstream header(line);
  std::string qtok, mtok;
  header >> qtok >> mtok;
  if (qtok.rfind("q=", 0) != 0 || mtok.rfind("m=", 0) != 0)
    throw Error(ErrorCode::ParseError, "bad arc header '" + line + "'");
  ArcFile out{parse_field(qtok.substr(2)), 0, {}};
  try {
    out.m = std::stoi(mtok.substr(2));
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad m in header '" + line + "'");
  }
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    try {
      out.points.push_back(parse_point(*out.field, line));
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace marcs
