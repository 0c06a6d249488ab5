#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "marcs/curve.hpp"
#include "marcs/poly.hpp"

namespace marcs {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parts in non-increasing order.
using CycleType = std::vector<int>;

struct SpecializationOutcome {
  FieldElement t0;
  std::optional<CycleType> cycle_type;  // empty when ramified
  bool ramified() const { return !cycle_type; }
};

/// monomial: x^m - t0 x + t0 a - b
/// hyperelliptic: (t0 (x - a) + b)^2 x^n - g(x)
Polynomial specialize(const CurveSpec& c, const FieldElement& a, const FieldElement& b, const FieldElement& t0);

/// Empty (ramified) when deg f < m or f is not squarefree.
std::optional<CycleType> frobenius_cycle_type(const Polynomial& f, int m);

/// First slope in element order whose specialization has m distinct roots.
/// Throws PointOnCurve.
std::optional<FieldElement> totally_split_search(const CurveSpec& c, const FieldElement& a, const FieldElement& b);

struct CycleHistogram {
  int m = 0;
  std::map<CycleType, std::uint64_t> counts;
  std::uint64_t ramified = 0;
  std::uint64_t unramified() const;
  std::uint64_t total() const { return unramified() + ramified; }
};

/// Classifies every t0.  Throws PointOnCurve.
CycleHistogram cycle_type_histogram(const CurveSpec& c, const FieldElement& a, const FieldElement& b,
                                    unsigned workers = 1);

/// Exact class densities of S_m by cycle type.
std::map<CycleType, Rational> sn_cycle_distribution(int m);

/// True for even permutations.
bool is_even(const CycleType& t);

struct EvidenceFlags {
  bool has_transposition;
  bool has_full_cycle;
  bool has_r_cycle;
  bool alternating_consistent;
};

/// r = 0 leaves has_r_cycle false.
EvidenceFlags evidence_flags(const CycleHistogram& hist, int r = 0);

/// Half the L1 distance between observed unramified frequencies and S_m.
double tv_distance(const CycleHistogram& hist);

/// TV tolerance for a field of order q; empty below 100 (advisory only).
std::optional<double> tv_tolerance(std::uint64_t q);

/// 9 (gF + gL + m)^2 (m!)^2
BigInt chebotarev_constant(int m, int genus_f, int genus_l);
/// The specialised form 9 (1 + m/2 + m)^2 (m!)^2 as printed.
Rational chebotarev_constant_printed(int m);

int genus_hyperelliptic(int m);

/// "3,1,1" style.
std::string to_string(const CycleType& t);

}  // namespace marcs
