#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "lincert/system.hpp"

namespace lincert {

using Triple = std::array<std::size_t, 3>;

struct QuadraticStep {
  LinearSystem before;
  // Positions into before.multiplicities(); a position past the end names an
  // extra general point of multiplicity 0.
  Triple indices;
  LinearSystem after;
  Int zeros_stripped = 0;

  friend bool operator==(const QuadraticStep&, const QuadraticStep&) = default;
};

// The transformation law on unnormalized data: d' = 2d - (mi + mj + mk), and
// each chosen multiplicity ma becomes d - (sum of the other two). Positions are
// kept, so applying the law twice at the same triple can be compared directly.
// The vector is zero-extended if an index lies past its end. No sign checks.
struct RawSystem {
  Int degree;
  std::vector<Int> multiplicities;
};

RawSystem apply_quadratic_law(RawSystem raw, const Triple& indices);

QuadraticStep quadratic_step(const LinearSystem& system, const Triple& indices);

inline LinearSystem quadratic_transform(const LinearSystem& system, const Triple& indices) {
  return quadratic_step(system, indices).after;
}

struct CremonaReduction {
  LinearSystem result;
  std::vector<QuadraticStep> steps;
};

/// Applies quadratic transformations at the three largest multiplicities
/// (leftmost on ties) until e >= 0. Requires hypothesis clauses (i) and (iii).
/// Failures are thrown as TracedError<QuadraticStep>.
CremonaReduction cremona_reduce(const LinearSystem& system);

}  // namespace lincert
