#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lincert/prime_field.hpp"
#include "lincert/system.hpp"

namespace lincert {

struct Point {
  u64 x = 0;
  u64 y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Dense row-major matrix of canonical residues modulo `prime`.
struct ConditionMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  u64 prime = 0;
  std::vector<u64> entries;

  u64& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  u64 at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

std::size_t monomial_count(Int degree);
std::size_t condition_count(const LinearSystem& system);

/// Vanishing conditions for plane curves of degree d in the affine chart z = 1.
/// Columns are the monomials x^a y^b with a + b <= d, ordered by total degree
/// and then by decreasing a. For the point (u, v) of multiplicity m there is a
/// row for every order (i, j) with i + j <= m - 1, holding the Hasse derivative
///   C(a, i) C(b, j) u^(a-i) v^(b-j)
/// of each monomial. Throws Error(DuplicatePoint) or Error(PreconditionViolated)
/// when the points do not match the multiplicities.
ConditionMatrix build_matrix(const LinearSystem& system, std::span<const Point> points, const PrimeField& field);

}  // namespace lincert
