#pragma once

#include <vector>

#include "lincert/system.hpp"

namespace lincert {

/// All primitive systems of degree <= max_degree satisfying hypothesis H,
/// ordered by degree and then lexicographically on the multiplicity list.
std::vector<LinearSystem> enumerate_h_systems(Int max_degree);

}  // namespace lincert
