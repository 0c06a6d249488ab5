#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "marcs/gf.hpp"
#include "marcs/plane.hpp"
#include "marcs/poly.hpp"

namespace marcs {

enum class Family { Monomial, Hyperelliptic };

/// y = x^m, or x^n y^2 = g(x) with n = m - r - 2.
///
/// Construction rejects only structural defects (InvalidCurve).  The
/// arithmetic hypotheses on r and p are reported by validate() but not
/// enforced, since several tabulated fields violate them.
class CurveSpec {
 public:
  static CurveSpec monomial(Field field, int m);
  static CurveSpec hyperelliptic(Field field, int m, int r, Polynomial g);

  const FieldSpec& field() const { return *field_; }
  const Field& field_handle() const { return field_; }
  Family family() const { return family_; }
  bool is_hyperelliptic() const { return family_ == Family::Hyperelliptic; }
  int m() const { return m_; }
  int r() const { return r_; }
  /// Exponent of x on the left-hand side; 0 for the monomial family.
  int n() const { return family_ == Family::Hyperelliptic ? m_ - r_ - 2 : 0; }
  const Polynomial& g() const { return g_; }
  /// -n g + x g'
  const Polynomial& h() const { return h_; }

  bool contains(const FieldElement& x, const FieldElement& y) const;
  std::string description() const;

 private:
  CurveSpec(Field field, Family family, int m, int r, Polynomial g);

  Field field_;
  Family family_;
  int m_;
  int r_;
  Polynomial g_;
  Polynomial h_;
};

/// Every violated invariant, structural or arithmetic.  Empty means valid.
std::vector<std::string> validate(const CurveSpec& c);
/// Only the structural part; these make the curve unusable.
std::vector<std::string> structural_violations(Family family, const FieldSpec& field, int m, int r,
                                               const Polynomial& g);

/// Smallest prime r in (m/2, m-2] with m-r-2 >= 1 and p not dividing
/// r(r+2)(m-r-2).
int select_r(int m, std::uint32_t p);

/// Affine points ascending, then (0:1:0).
std::vector<ProjectivePoint> rational_points(const CurveSpec& c);

/// Affine solutions of x^n y^2 = g(x) by the quadratic-character sum.
std::uint64_t affine_point_count(const FieldSpec& field, int n, const Polynomial& g);
std::uint64_t count_affine(const CurveSpec& c);

ProjectiveLine tangent_line_at(const CurveSpec& c, const ProjectivePoint& p);

struct ProfileEntry {
  std::optional<ProjectivePoint> point;  // set when rational
  int cluster_degree;                    // 1 for rational points
  int multiplicity;
};

struct IntersectionProfile {
  std::vector<ProfileEntry> affine;
  int infinity_multiplicity = 0;
  int distinct_closure_points = 0;
  bool is_component = false;

  /// Sum of multiplicities over the closure, infinity included.
  int total() const;
  /// Multiplicity at a rational affine point, 0 if absent.
  int multiplicity_at(const ProjectivePoint& p) const;
};

/// Throws LineIsComponent, InseparableProfile.
IntersectionProfile line_intersection_profile(const CurveSpec& c, const ProjectiveLine& l);

/// Tangents at rational points meeting the curve in fewer than m-1 closure
/// points, the lines x = x0 over rational roots of g, y = 0 and the line at
/// infinity.  Sorted by line index.
std::vector<ProjectiveLine> compute_lambda(const CurveSpec& c);

std::vector<std::pair<FieldElement, FieldElement>> double_tangency_witnesses(const CurveSpec& c);

struct DoubleRootWitness {
  int degree;  // extension degree d over F_q
  Field extension;
  FieldElement t;
  FieldElement x;
  std::vector<int> profile;  // closure multiplicities, descending
};

/// Throws NoWitness.
DoubleRootWitness monomial_double_root_witness(int m, const FieldElement& a, const FieldElement& b);

/// phi = (1-m) x^m + a m x^{m-1} - b
Polynomial double_root_polynomial(int m, const FieldElement& a, const FieldElement& b);

/// Image of F_q inside a larger field of the same characteristic whose degree
/// is a multiple.  Maps each element of `from` to its encoding in `to`.
std::vector<ElemIndex> field_embedding(const FieldSpec& from, const FieldSpec& to);

enum class TwistKind { Ex1, Ex2 };

struct TwistConstruction {
  CurveSpec curve;        // over F_{q^2}
  std::uint32_t base_q;   // q
  std::int64_t certified_bound;
  std::int64_t stated_bound;
  std::int64_t arc_bound;  // q^2 - 2 floor(m/2) q + 7m^3 + 3m^2 + 5m + 1
};

/// x^n y^2 = xi (x^m + 1) over F_{q^2}, xi the first non-square.
/// `base` is F_q.  Throws HypothesisFailure.
TwistConstruction make_twist_g(TwistKind kind, int m, const FieldSpec& base);

}  // namespace marcs
