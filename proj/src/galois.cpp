#include "marcs/galois.hpp"

#include <algorithm>
#include <cmath>

#include "marcs/parallel.hpp"

namespace marcs {

Polynomial specialize(const CurveSpec& c, const FieldElement& a, const FieldElement& b, const FieldElement& t0) {
  const FieldSpec& f = c.field();
  if (&a.field() != &f || &b.field() != &f || &t0.field() != &f)
    throw Error(ErrorCode::FieldMismatch, "specialization over a different field");
  const int m = c.m();
  if (c.family() == Family::Monomial) {
    return Polynomial::monomial(f.one(), m) - Polynomial::monomial(t0, 1) + Polynomial::constant(t0 * a - b);
  }
  const Polynomial line = Polynomial::monomial(t0, 1) + Polynomial::constant(b - t0 * a);
  return Polynomial::monomial(f.one(), c.n()) * line * line - c.g();
}

std::optional<CycleType> frobenius_cycle_type(const Polynomial& f, int m) {
  if (f.degree() < m || !is_squarefree(f)) return std::nullopt;
  CycleType t;
  for (const DegreePart& part : distinct_degree_pattern(f)) t.insert(t.end(), part.total_degree / part.degree, part.degree);
  std::sort(t.rbegin(), t.rend());
  return t;
}

namespace {

void require_off_curve(const CurveSpec& c, const FieldElement& a, const FieldElement& b) {
  if (c.contains(a, b)) throw Error(ErrorCode::PointOnCurve, "(" + to_string(a) + ", " + to_string(b) + ")");
}

}  // namespace

std::optional<FieldElement> totally_split_search(const CurveSpec& c, const FieldElement& a, const FieldElement& b) {
  require_off_curve(c, a, b);
  for (const FieldElement& t0 : c.field().elements()) {
    const Polynomial s = specialize(c, a, b, t0);
    if (s.degree() == c.m() && static_cast<int>(roots_in_field(s).size()) == c.m()) return t0;
  }
  return std::nullopt;
}

std::uint64_t CycleHistogram::unramified() const {
  std::uint64_t s = 0;
  for (const auto& [t, n] : counts) s += n;
  return s;
}

CycleHistogram cycle_type_histogram(const CurveSpec& c, const FieldElement& a, const FieldElement& b,
                                    unsigned workers) {
  require_off_curve(c, a, b);
  const FieldSpec& f = c.field();
  auto parts = map_chunks(f.order(), workers, [&](std::size_t lo, std::size_t hi) {
    CycleHistogram h;
    for (std::size_t i = lo; i < hi; ++i) {
      const auto t = frobenius_cycle_type(specialize(c, a, b, f.element(static_cast<ElemIndex>(i))), c.m());
      if (t)
        ++h.counts[*t];
      else
        ++h.ramified;
    }
    return h;
  });
  CycleHistogram out;
  out.m = c.m();
  for (const auto& h : parts) {
    out.ramified += h.ramified;
    for (const auto& [t, n] : h.counts) out.counts[t] += n;
  }
  return out;
}

std::map<CycleType, Rational> sn_cycle_distribution(int m) {
  if (m < 1) throw Error(ErrorCode::OutOfRange, "m must be positive");
  std::map<CycleType, Rational> out;
  CycleType cur;
  // partitions with parts <= cap
  auto rec = [&](auto&& self, int left, int cap) -> void {
    if (left == 0) {
      BigInt z = 1;
      for (std::size_t i = 0; i < cur.size();) {
        std::size_t j = i;
        while (j < cur.size() && cur[j] == cur[i]) ++j;
        for (std::size_t k = 1; k <= j - i; ++k) z *= BigInt(cur[i]) * k;
        i = j;
      }
      out[cur] = Rational(BigInt(1), z);
      return;
    }
    for (int d = std::min(left, cap); d >= 1; --d) {
      cur.push_back(d);
      self(self, left - d, d);
      cur.pop_back();
    }
  };
  rec(rec, m, m);
  return out;
}

bool is_even(const CycleType& t) {
  int m = 0;
  for (int d : t) m += d;
  return (m - static_cast<int>(t.size())) % 2 == 0;
}

EvidenceFlags evidence_flags(const CycleHistogram& hist, int r) {
  EvidenceFlags e{false, false, false, true};
  for (const auto& [t, n] : hist.counts) {
    if (n == 0) continue;
    if (!t.empty() && t[0] == 2 && (t.size() == 1 || t[1] == 1)) e.has_transposition = true;
    if (t.size() == 1) e.has_full_cycle = true;
    if (r > 0 && std::find(t.begin(), t.end(), r) != t.end()) e.has_r_cycle = true;
    if (!is_even(t)) e.alternating_consistent = false;
  }
  return e;
}

double tv_distance(const CycleHistogram& hist) {
  const std::uint64_t u = hist.unramified();
  if (u == 0) return 1.0;
  double s = 0;
  const auto dist = sn_cycle_distribution(hist.m);
  for (const auto& [t, prob] : dist) {
    const auto it = hist.counts.find(t);
    const double obs = it == hist.counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(u);
    s += std::abs(obs - prob.convert_to<double>());
  }
  for (const auto& [t, n] : hist.counts)
    if (!dist.contains(t)) s += static_cast<double>(n) / static_cast<double>(u);
  return s / 2;
}

std::optional<double> tv_tolerance(std::uint64_t q) {
  if (q >= 1000) return 0.05;
  if (q >= 100) return 0.15;
  return std::nullopt;
}

namespace {

BigInt factorial(int m) {
  BigInt f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

BigInt chebotarev_constant(int m, int genus_f, int genus_l) {
  const BigInt s = BigInt(genus_f) + genus_l + m;
  const BigInt f = factorial(m);
  return 9 * s * s * f * f;
}

Rational chebotarev_constant_printed(int m) {
  const Rational s = Rational(1) + Rational(BigInt(m), BigInt(2)) + m;
  const BigInt f = factorial(m);
  return Rational(9) * s * s * Rational(f * f);
}

int genus_hyperelliptic(int m) { return m / 2; }

std::string to_string(const CycleType& t) {
  std::string out;
  for (int d : t) {
    if (!out.empty()) out += ',';
    out += std::to_string(d);
  }
  return out;
}

}  // namespace marcs
