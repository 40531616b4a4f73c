#include "lincert/rank.hpp"

#include <algorithm>
#include <cstdint>

#include <omp.h>

namespace lincert {

namespace {

constexpr std::size_t kParallelThreshold = 1 << 14;

}  // namespace

std::size_t rank(ConditionMatrix matrix) {
  const std::size_t rows = matrix.rows;
  const std::size_t cols = matrix.cols;
  if (rows == 0 || cols == 0) return 0;
  const MontgomeryField field(matrix.prime);
  u64* data = matrix.entries.data();
  for (std::size_t i = 0; i < rows * cols; ++i) data[i] = field.to_mont(data[i]);

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && data[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) std::swap_ranges(data + pivot * cols + c, data + pivot * cols + cols, data + r * cols + c);

    u64* prow = data + r * cols;
    const u64 inv = field.inv(prow[c]);
    for (std::size_t j = c; j < cols; ++j) prow[j] = field.mul(prow[j], inv);

    const auto below = static_cast<std::int64_t>(rows - r - 1);
    const bool parallel = static_cast<std::size_t>(below) * (cols - c) >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t k = 0; k < below; ++k) {
      u64* row = data + (r + 1 + static_cast<std::size_t>(k)) * cols;
      const u64 f = row[c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) row[j] = field.sub(row[j], field.mul(f, prow[j]));
    }
    ++r;
  }
  return r;
}

std::size_t rank_reference(ConditionMatrix matrix) {
  const std::size_t rows = matrix.rows;
  const std::size_t cols = matrix.cols;
  if (rows == 0 || cols == 0) return 0;
  const PrimeField field(matrix.prime);

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && matrix.at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(matrix.at(pivot, j), matrix.at(r, j));
    const u64 inv = field.inv(matrix.at(r, c));
    for (std::size_t i = r + 1; i < rows; ++i) {
      const u64 f = field.mul(matrix.at(i, c), inv);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        matrix.at(i, j) = field.sub(matrix.at(i, j), field.mul(f, matrix.at(r, j)));
      }
    }
    ++r;
  }
  return r;
}

}  // namespace lincert
