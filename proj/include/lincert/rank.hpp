#pragma once

#include <cstddef>

#include "lincert/condition_matrix.hpp"

namespace lincert {

/// Exact rank over F_p. Gaussian elimination in Montgomery form; the row
/// updates below each pivot run as an OpenMP parallel loop once the trailing
/// block is large enough. Result is independent of the thread count.
std::size_t rank(ConditionMatrix matrix);

/// Serial elimination with plain 128-bit modular reduction. Kept as the
/// reference the parallel kernel is tested against.
std::size_t rank_reference(ConditionMatrix matrix);

}  // namespace lincert
