#include "marcs/tables.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "marcs/curve.hpp"
#include "marcs/parallel.hpp"
#include "marcs/poly.hpp"

namespace marcs {

namespace {

const TableFixture kTable85{
    8,
    5,
    {
      {11, {4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16}},
      {13, {4, 5, 6, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19}},
      {17, {7, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 26, 28}},
      {19, {6, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 26, 27, 29}},
      {23, {11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 36}},
      {25, {10, 12, 13, 14, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 38}},
      {27, {12, 15, 16, 18, 19, 21, 22, 24, 25, 27, 28, 30, 31, 33, 34, 36, 37, 40}},
      {29, {15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 40, 41}},
      {31, {14, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 46}},
      {37, {18, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49, 50, 51, 53}},
      {41, {22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49, 50, 51, 52, 53, 54, 55, 56, 58}},
      {43, {18, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49, 50, 51, 52, 53, 54, 55, 56, 58, 59, 60, 64}},
      {47, {23, 24, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49, 50, 51, 52, 53, 54, 55, 56, 57, 58, 59, 60, 61, 62, 64, 65, 66}},
      {49, {30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49, 50, 51, 52, 53, 54, 55, 56, 57, 58, 59, 60, 61, 62, 63, 64, 65, 66, 68}},
    }};

const TableFixture kTable117{
    11,
    7,
    {
      {11, {1, 8, 10, 12, 19}},
      {13, {4, 5, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18}},
      {17, {6, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24}},
      {19, {6, 8, 9, 10, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 28, 30}},
      {23, {8, 9, 10, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 35, 36}},
      {25, {13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36}},
      {27, {13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38}},
      {29, {12, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43}},
      {31, {15, 16, 17, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 51}},
      {37, {14, 18, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49, 50, 51, 54, 56}},
      {41, {23, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49, 50, 51, 52, 53, 54, 55, 56, 57, 59, 60, 64}},
      {43, {21, 24, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49, 50, 51, 52, 53, 54, 55, 56, 57, 58, 60, 61}},
      {47, {24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49, 50, 51, 52, 53, 54, 55, 56, 57, 58, 59, 60, 61, 62, 63, 64, 68}},
      {49, {22, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49, 50, 51, 52, 53, 54, 55, 56, 57, 58, 59, 60, 61, 62, 63, 64, 65, 68}},
    }};

}  // namespace

const TableFixture* table_fixture(int m, int r) {
  if (m == 8 && r == 5) return &kTable85;
  if (m == 11 && r == 7) return &kTable117;
  return nullptr;
}

std::map<int, std::uint64_t> SweepResult::frequencies() const {
  std::map<int, std::uint64_t> out;
  for (const auto& s : samples) ++out[static_cast<int>(s.count)];
  return out;
}

SweepResult table_sweep(const FieldSpec& field, int m, int r, unsigned workers) {
  const std::uint32_t q = field.order();
  const int n = m - r - 2;
  if (m < 3 || n < 0) throw Error(ErrorCode::OutOfRange, "need m >= 3 and r <= m-2");
  struct Part {
    std::vector<SweepSample> good, bad;
  };
  auto parts = map_chunks(q > 0 ? q - 1 : 0, workers, [&](std::size_t lo, std::size_t hi) {
    Part part;
    std::vector<ElemIndex> c(static_cast<std::size_t>(m) + 1, 0);
    c[static_cast<std::size_t>(m)] = 1;
    for (auto alpha = static_cast<ElemIndex>(lo + 1); alpha <= hi; ++alpha) {
      for (ElemIndex beta = 1; beta < q; ++beta) {
        if (alpha == beta) continue;
        c[0] = beta;
        c[1] = alpha;
        c[2] = alpha;
        const Polynomial g(field, c);
        const SweepSample s{alpha, beta, affine_point_count(field, n, g)};
        (is_squarefree(g) ? part.good : part.bad).push_back(s);
      }
    }
    return part;
  });
  SweepResult out{q, m, r, {}, {}, {}};
  std::set<int> seen;
  for (auto& p : parts) {
    for (const auto& s : p.good) seen.insert(static_cast<int>(s.count));
    out.samples.insert(out.samples.end(), p.good.begin(), p.good.end());
    out.skipped.insert(out.skipped.end(), p.bad.begin(), p.bad.end());
  }
  out.counts.assign(seen.begin(), seen.end());
  return out;
}

CountDiff diff_counts(const std::vector<int>& computed, const std::vector<int>& expected) {
  CountDiff d;
  std::set_difference(expected.begin(), expected.end(), computed.begin(), computed.end(), std::back_inserter(d.missing));
  std::set_difference(computed.begin(), computed.end(), expected.begin(), expected.end(), std::back_inserter(d.extra));
  return d;
}

}  // namespace marcs
