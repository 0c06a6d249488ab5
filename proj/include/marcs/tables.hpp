#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "marcs/gf.hpp"

namespace marcs {

/// Published point-count sets for g = x^m + alpha x^2 + alpha x + beta.
struct TableFixture {
  int m;
  int r;
  std::map<std::uint32_t, std::vector<int>> rows;  // q -> sorted counts
};

/// Fixtures exist for (8,5) and (11,7); nullptr otherwise.
const TableFixture* table_fixture(int m, int r);

struct SweepSample {
  ElemIndex alpha;
  ElemIndex beta;
  std::uint64_t count;
};

struct SweepResult {
  std::uint32_t q;
  int m;
  int r;
  std::vector<SweepSample> samples;  // squarefree g only, (alpha, beta) order
  std::vector<SweepSample> skipped;  // non-squarefree g
  std::vector<int> counts;           // distinct values over samples, ascending

  /// Frequency of each count value among the samples.
  std::map<int, std::uint64_t> frequencies() const;
};

/// All alpha != beta in F_q^*.
SweepResult table_sweep(const FieldSpec& field, int m, int r, unsigned workers = 1);

struct CountDiff {
  std::vector<int> missing;  // expected but not produced
  std::vector<int> extra;    // produced but not expected
  bool equal() const { return missing.empty() && extra.empty(); }
};

CountDiff diff_counts(const std::vector<int>& computed, const std::vector<int>& expected);

}  // namespace marcs
