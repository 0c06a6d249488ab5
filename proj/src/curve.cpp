#include "marcs/curve.hpp"

#include <algorithm>
#include <sstream>

namespace marcs {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

bool divides(std::uint32_t p, std::int64_t v) { return v % static_cast<std::int64_t>(p) == 0; }

}  // namespace

CurveSpec::CurveSpec(Field field, Family family, int m, int r, Polynomial g)
    : field_(std::move(field)), family_(family), m_(m), r_(r), g_(std::move(g)), h_(*field_) {
  if (family_ == Family::Hyperelliptic) {
    const Polynomial x = Polynomial::x(*field_);
    h_ = g_ * field_->from_int(-n()) + x * derivative(g_);
  }
}

CurveSpec CurveSpec::monomial(Field field, int m) {
  if (!field) throw Error(ErrorCode::InvalidCurve, "missing field");
  auto bad = structural_violations(Family::Monomial, *field, m, 0, Polynomial(*field));
  if (!bad.empty()) throw Error(ErrorCode::InvalidCurve, join(bad));
  Polynomial g(*field);
  return CurveSpec(std::move(field), Family::Monomial, m, 0, std::move(g));
}

CurveSpec CurveSpec::hyperelliptic(Field field, int m, int r, Polynomial g) {
  if (!field) throw Error(ErrorCode::InvalidCurve, "missing field");
  if (&g.field() != field.get()) throw Error(ErrorCode::FieldMismatch, "g is over a different field");
  auto bad = structural_violations(Family::Hyperelliptic, *field, m, r, g);
  if (!bad.empty()) throw Error(ErrorCode::InvalidCurve, join(bad));
  return CurveSpec(std::move(field), Family::Hyperelliptic, m, r, std::move(g));
}

bool CurveSpec::contains(const FieldElement& x, const FieldElement& y) const {
  if (family_ == Family::Monomial) return y == x.pow(m_);
  return x.pow(n()) * y * y == g_(x);
}

std::string CurveSpec::description() const {
  if (family_ == Family::Monomial) return "y = x^" + std::to_string(m_) + " over F_" + field_->description();
  return "x^" + std::to_string(n()) + " y^2 = g(x), g = " + to_string(g_) + ", m=" + std::to_string(m_) +
         " r=" + std::to_string(r_) + " over F_" + field_->description();
}

std::vector<std::string> structural_violations(Family family, const FieldSpec& field, int m, int r,
                                               const Polynomial& g) {
  std::vector<std::string> out;
  if (family == Family::Monomial) {
    if (m < 2) out.push_back("m >= 2");
    return out;
  }
  if (field.characteristic() == 2) out.push_back("p odd");
  if (r < 1 || m - r - 2 < 1) out.push_back("m - r - 2 >= 1");
  if (g.degree() != m) out.push_back("deg g = m");
  if (g.is_zero() || g.coeff(0).is_zero()) out.push_back("g(0) != 0");
  if (!g.is_zero() && !is_squarefree(g)) out.push_back("g squarefree");
  return out;
}

std::vector<std::string> validate(const CurveSpec& c) {
  const std::uint32_t p = c.field().characteristic();
  std::vector<std::string> out =
      structural_violations(c.family(), c.field(), c.m(), c.r(), c.g());
  const int m = c.m();
  if (c.family() == Family::Monomial) {
    if (m < 5) out.push_back("m >= 5");
    if (divides(p, std::int64_t{m} * (m - 1))) out.push_back("p does not divide m(m-1)");
    return out;
  }
  const int r = c.r();
  if (!is_prime(static_cast<std::uint64_t>(std::max(r, 0)))) out.push_back("r prime");
  if (!(2 * r > m && r <= m - 2)) out.push_back("m/2 < r <= m-2");
  if (divides(p, r)) out.push_back("p does not divide r");
  if (divides(p, r + 2)) out.push_back("p does not divide r+2");
  if (m - r - 2 >= 1 && divides(p, m - r - 2)) out.push_back("p does not divide m-r-2");
  return out;
}

int select_r(int m, std::uint32_t p) {
  std::vector<std::string> why;
  for (int r = m / 2 + 1; r <= m - 2; ++r) {
    if (!is_prime(static_cast<std::uint64_t>(r))) continue;
    const int n = m - r - 2;
    if (n < 1) {
      why.push_back("r=" + std::to_string(r) + ": m-r-2 = 0");
      continue;
    }
    const std::int64_t factors[] = {r, r + 2, n};
    const auto hit = std::find_if(std::begin(factors), std::end(factors), [&](std::int64_t v) { return divides(p, v); });
    if (hit == std::end(factors)) return r;
    why.push_back("r=" + std::to_string(r) + ": p | " + std::to_string(*hit));
  }
  if (why.empty()) why.push_back("no prime in (m/2, m-2]");
  throw Error(ErrorCode::NoAdmissiblePrime, "m=" + std::to_string(m) + " p=" + std::to_string(p) + ": " + join(why));
}

std::vector<ProjectivePoint> rational_points(const CurveSpec& c) {
  const FieldSpec& f = c.field();
  std::vector<ProjectivePoint> out;
  if (c.family() == Family::Monomial) {
    for (const FieldElement& x : f.elements()) out.push_back(ProjectivePoint::affine(x, x.pow(c.m())));
  } else {
    for (const FieldElement& x : f.elements()) {
      if (x.is_zero()) continue;
      const FieldElement v = c.g()(x) / x.pow(c.n());
      if (auto y = sqrt(v)) {
        out.push_back(ProjectivePoint::affine(x, *y));
        if (!y->is_zero()) out.push_back(ProjectivePoint::affine(x, -*y));
      }
    }
    std::sort(out.begin(), out.end());
  }
  out.emplace_back(f.zero(), f.one(), f.zero());
  return out;
}

std::uint64_t affine_point_count(const FieldSpec& f, int n, const Polynomial& g) {
  if (f.characteristic() == 2) throw Error(ErrorCode::EvenCharacteristic, "point count needs odd q");
  std::int64_t total = 0;
  const ElemIndex g0 = g.eval(0);
  if (n == 0)
    total += 1 + f.quadratic_character(g0);
  else if (g0 == 0)
    total += f.order();  // x = 0 is a component
  const bool odd_n = n % 2 != 0;
  for (ElemIndex x = 1; x < f.order(); ++x) {
    int chi = f.quadratic_character(g.eval(x));
    if (odd_n) chi *= f.quadratic_character(x);
    total += 1 + chi;
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t count_affine(const CurveSpec& c) {
  if (!c.is_hyperelliptic()) throw Error(ErrorCode::InvalidCurve, "count_affine expects the hyperelliptic family");
  return affine_point_count(c.field(), c.n(), c.g());
}

ProjectiveLine tangent_line_at(const CurveSpec& c, const ProjectivePoint& p) {
  if (!p.is_affine()) throw Error(ErrorCode::SingularPoint, "the point at infinity is singular");
  const FieldElement& x0 = p.x();
  const FieldElement& y0 = p.y();
  if (!c.contains(x0, y0)) throw Error(ErrorCode::NotOnCurve, to_string(p));
  const FieldSpec& f = c.field();
  FieldElement fx, fy;
  if (c.family() == Family::Monomial) {
    fx = -(f.from_int(c.m()) * x0.pow(c.m() - 1));
    fy = f.one();
  } else {
    const int n = c.n();
    fx = f.from_int(n) * x0.pow(n - 1) * y0 * y0 - derivative(c.g())(x0);
    fy = f.from_int(2) * x0.pow(n) * y0;
  }
  if (fx.is_zero() && fy.is_zero()) throw Error(ErrorCode::SingularPoint, to_string(p));
  return ProjectiveLine(fx, fy, -(fx * x0 + fy * y0));
}

int IntersectionProfile::total() const {
  int s = infinity_multiplicity;
  for (const auto& e : affine) s += e.cluster_degree * e.multiplicity;
  return s;
}

int IntersectionProfile::multiplicity_at(const ProjectivePoint& p) const {
  for (const auto& e : affine)
    if (e.point && *e.point == p) return e.multiplicity;
  return 0;
}

IntersectionProfile line_intersection_profile(const CurveSpec& c, const ProjectiveLine& l) {
  const FieldSpec& f = c.field();
  if (&l.field() != &f) throw Error(ErrorCode::FieldMismatch, "line over a different field");
  IntersectionProfile prof;
  const int m = c.m();
  const Polynomial x = Polynomial::x(f);

  if (l.u().is_zero() && l.v().is_zero()) {
    prof.infinity_multiplicity = m;
    prof.distinct_closure_points = 1;
    return prof;
  }

  Polynomial s(f);
  bool vertical = l.v().is_zero();
  FieldElement slope, icept, x0;
  if (!vertical) {
    slope = -(l.u() / l.v());
    icept = -(l.w() / l.v());
    const Polynomial line = x * slope + Polynomial::constant(icept);
    if (c.family() == Family::Monomial)
      s = line - Polynomial::monomial(f.one(), m);
    else
      s = Polynomial::monomial(f.one(), c.n()) * line * line - c.g();
  } else {
    x0 = -(l.w() / l.u());
    if (c.family() == Family::Monomial)
      s = x - Polynomial::constant(x0.pow(m));
    else
      s = Polynomial::monomial(x0.pow(c.n()), 2) - Polynomial::constant(c.g()(x0));
  }
  if (s.is_zero()) {
    prof.is_component = true;
    throw Error(ErrorCode::LineIsComponent, to_string(l));
  }
  prof.infinity_multiplicity = m - s.degree();

  std::vector<SquarefreeFactor> parts;
  try {
    parts = squarefree_decomposition(s);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InseparableInput) throw;
    throw Error(ErrorCode::InseparableProfile, to_string(l));
  }

  auto point_of = [&](const FieldElement& t) {
    return vertical ? ProjectivePoint::affine(x0, t) : ProjectivePoint::affine(t, slope * t + icept);
  };
  for (const auto& [fac, mult] : parts) {
    Polynomial rest = fac;
    for (const FieldElement& t : roots_in_field(fac)) {
      prof.affine.push_back({point_of(t), 1, mult});
      rest = rest / (x - Polynomial::constant(t));
    }
    if (rest.degree() > 0) {
      for (const DegreePart& dp : distinct_degree_pattern(rest))
        for (int k = 0; k < dp.total_degree / dp.degree; ++k) prof.affine.push_back({std::nullopt, dp.degree, mult});
    }
    prof.distinct_closure_points += fac.degree();
  }
  if (prof.infinity_multiplicity > 0) ++prof.distinct_closure_points;
  return prof;
}

std::vector<ProjectiveLine> compute_lambda(const CurveSpec& c) {
  if (!c.is_hyperelliptic()) throw Error(ErrorCode::InvalidCurve, "Lambda is defined for the hyperelliptic family");
  const FieldSpec& f = c.field();
  std::vector<ProjectiveLine> out;
  for (const ProjectivePoint& p : rational_points(c)) {
    if (!p.is_affine()) continue;
    const ProjectiveLine t = tangent_line_at(c, p);
    try {
      if (line_intersection_profile(c, t).distinct_closure_points < c.m() - 1) out.push_back(t);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InseparableProfile) throw;
      out.push_back(t);
    }
  }
  for (const FieldElement& r : roots_in_field(c.g())) out.push_back(ProjectiveLine::vertical(r));
  out.emplace_back(f.zero(), f.one(), f.zero());
  out.push_back(ProjectiveLine::at_infinity(f));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<FieldElement, FieldElement>> double_tangency_witnesses(const CurveSpec& c) {
  if (!c.is_hyperelliptic()) throw Error(ErrorCode::InvalidCurve, "witnesses are defined for the hyperelliptic family");
  const FieldSpec& f = c.field();
  const std::uint32_t q = f.order();
  std::vector<ElemIndex> G(q), H(q), X(q);
  for (ElemIndex x = 0; x < q; ++x) {
    G[x] = c.g().eval(x);
    H[x] = c.h().eval(x);
    X[x] = f.pow(x, static_cast<std::uint64_t>(c.m() - c.r()));
  }
  const ElemIndex two = f.from_integer(2);
  std::vector<std::pair<FieldElement, FieldElement>> out;
  for (ElemIndex x0 = 0; x0 < q; ++x0) {
    for (ElemIndex x1 = 0; x1 < q; ++x1) {
      if (x0 == x1) continue;
      const ElemIndex lhs5 = f.mul(f.mul(f.mul(H[x1], H[x1]), X[x0]), G[x0]);
      const ElemIndex rhs5 = f.mul(f.mul(f.mul(H[x0], H[x0]), X[x1]), G[x1]);
      if (lhs5 != rhs5) continue;
      const ElemIndex lhs7 = f.mul(f.mul(f.mul(two, H[x0]), x1), G[x1]);
      const ElemIndex inner = f.add(f.mul(f.sub(x1, x0), H[x0]), f.mul(f.mul(two, x0), G[x0]));
      if (lhs7 != f.mul(H[x1], inner)) continue;
      out.emplace_back(f.element(x0), f.element(x1));
    }
  }
  return out;
}

Polynomial double_root_polynomial(int m, const FieldElement& a, const FieldElement& b) {
  const FieldSpec& f = a.field();
  return Polynomial::monomial(f.from_int(1 - m), m) + Polynomial::monomial(a * f.from_int(m), m - 1) -
         Polynomial::constant(b);
}

std::vector<ElemIndex> field_embedding(const FieldSpec& from, const FieldSpec& to) {
  if (from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0)
    throw Error(ErrorCode::FieldMismatch, "F_" + from.description() + " does not embed in F_" + to.description());
  const std::uint32_t p = from.characteristic();
  std::vector<ElemIndex> out(from.order());
  if (from.degree() == 1) {
    for (ElemIndex i = 0; i < from.order(); ++i) out[i] = to.from_integer(i);
    return out;
  }
  std::vector<ElemIndex> mod;
  for (std::uint32_t c : from.modulus()) mod.push_back(to.from_integer(c));
  const auto roots = roots_in_field(Polynomial(to, mod));
  if (roots.empty()) throw Error(ErrorCode::FieldMismatch, "modulus has no root in the target field");
  const ElemIndex theta = roots.front().index();
  for (ElemIndex i = 0; i < from.order(); ++i) {
    ElemIndex v = 0, pw = to.one().index(), rest = i;
    for (std::uint32_t k = 0; k < from.degree(); ++k) {
      v = to.add(v, to.mul(to.from_integer(rest % p), pw));
      rest /= p;
      pw = to.mul(pw, theta);
    }
    out[i] = v;
  }
  return out;
}

DoubleRootWitness monomial_double_root_witness(int m, const FieldElement& a, const FieldElement& b) {
  const FieldSpec& f = a.field();
  const std::uint32_t p = f.characteristic();
  if (divides(p, std::int64_t{m} * (m - 1))) throw Error(ErrorCode::HypothesisFailure, "p divides m(m-1)");
  if (b.is_zero() || b == a.pow(m)) throw Error(ErrorCode::HypothesisFailure, "b must avoid 0 and a^m");
  const Polynomial phi = double_root_polynomial(m, a, b);
  if (!is_squarefree(phi)) throw Error(ErrorCode::NoWitness, "phi is not squarefree");

  for (const DegreePart& part : distinct_degree_pattern(phi)) {
    const int d = part.degree;
    Field K = make_field(p, f.degree() * static_cast<std::uint32_t>(d));
    const auto emb = field_embedding(f, *K);
    std::vector<ElemIndex> lifted;
    for (ElemIndex c : phi.raw()) lifted.push_back(emb[c]);
    const FieldElement aK = K->element(emb[a.index()]);
    const FieldElement bK = K->element(emb[b.index()]);
    const FieldElement mK = K->from_int(m);
    for (const FieldElement& xbar : roots_in_field(Polynomial(*K, lifted))) {
      const FieldElement t = mK * xbar.pow(m - 1);
      if (t.is_zero() || t == mK) continue;
      const Polynomial psi = Polynomial::monomial(K->one(), m) - Polynomial::monomial(t, 1) +
                             Polynomial::constant(t * aK - bK);
      std::vector<int> profile;
      for (const auto& [fac, mult] : squarefree_decomposition(psi))
        profile.insert(profile.end(), static_cast<std::size_t>(fac.degree()), mult);
      std::sort(profile.rbegin(), profile.rend());
      std::vector<int> want(static_cast<std::size_t>(m - 1), 1);
      want[0] = 2;
      if (profile == want) return {d, K, t, xbar, profile};
    }
  }
  std::ostringstream msg;
  msg << "m=" << m << " a=" << to_string(a) << " b=" << to_string(b) << " over F_" << f.description();
  throw Error(ErrorCode::NoWitness, msg.str());
}

TwistConstruction make_twist_g(TwistKind kind, int m, const FieldSpec& base) {
  const std::int64_t q = base.order();
  const std::uint32_t p = base.characteristic();
  if (p == 2) throw Error(ErrorCode::HypothesisFailure, "p odd");
  if (kind == TwistKind::Ex1) {
    if (m % 2 == 0) throw Error(ErrorCode::HypothesisFailure, "m odd");
    if ((q + 1) % m != 0) throw Error(ErrorCode::HypothesisFailure, "m | q+1");
  } else {
    if (m % 2 != 0) throw Error(ErrorCode::HypothesisFailure, "m even");
    if ((q + 1) % (2 * m) != 0 && (q - 1 - m) % (2 * m) != 0)
      throw Error(ErrorCode::HypothesisFailure, "2m | q+1 or 2m | q-1-m");
  }
  const int r = select_r(m, p);
  const int n = m - r - 2;
  if (kind == TwistKind::Ex1 && n % 2 != 0) throw Error(ErrorCode::HypothesisFailure, "(m-r-2)/2 integral");
  if (kind == TwistKind::Ex2 && (m - r - 1) % 2 != 0) throw Error(ErrorCode::HypothesisFailure, "(m-r-1)/2 integral");

  Field big = make_field(p, 2 * base.degree());
  const FieldElement xi = first_nonsquare(*big);
  const Polynomial g = (Polynomial::monomial(big->one(), m) + Polynomial::constant(big->one())) * xi;
  CurveSpec curve = CurveSpec::hyperelliptic(big, m, r, g);

  const std::int64_t q2 = q * q;
  std::int64_t certified, stated;
  if (kind == TwistKind::Ex1) {
    certified = q2 - (m - 1) * q + 3 * m;
    stated = q2 - (m + 1) * q + 3 * m;
  } else {
    certified = stated = q2 - m * q + 3 * m + 1;
  }
  const std::int64_t mm = m;
  const std::int64_t arc = q2 - 2 * (mm / 2) * q + 7 * mm * mm * mm + 3 * mm * mm + 5 * mm + 1;
  return {std::move(curve), static_cast<std::uint32_t>(q), certified, stated, arc};
}

}  // namespace marcs
