#include "lincert/condition_matrix.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace lincert {

std::size_t monomial_count(Int degree) {
  const auto d = static_cast<std::size_t>(degree);
  return (d + 1) * (d + 2) / 2;
}

std::size_t condition_count(const LinearSystem& system) {
  std::size_t rows = 0;
  for (Int m : system.multiplicities()) rows += static_cast<std::size_t>(m * (m + 1) / 2);
  return rows;
}

ConditionMatrix build_matrix(const LinearSystem& system, std::span<const Point> points, const PrimeField& field) {
  if (points.size() != system.size()) {
    throw Error(Errc::PreconditionViolated, "one point per multiplicity is required");
  }
  {
    std::set<std::pair<u64, u64>> seen;
    for (const Point& pt : points) {
      if (!seen.emplace(pt.x, pt.y).second) throw Error(Errc::DuplicatePoint, "base points must be distinct");
    }
  }

  const auto d = static_cast<std::size_t>(system.degree());
  std::vector<std::pair<std::size_t, std::size_t>> monomials;
  monomials.reserve(monomial_count(system.degree()));
  for (std::size_t total = 0; total <= d; ++total) {
    for (std::size_t a = total + 1; a-- > 0;) monomials.emplace_back(a, total - a);
  }

  // Pascal triangle mod p.
  std::vector<std::vector<u64>> binom(d + 1);
  for (std::size_t n = 0; n <= d; ++n) {
    binom[n].assign(n + 1, 1 % field.modulus());
    for (std::size_t k = 1; k < n; ++k) binom[n][k] = field.add(binom[n - 1][k - 1], binom[n - 1][k]);
  }

  ConditionMatrix mat;
  mat.rows = condition_count(system);
  mat.cols = monomials.size();
  mat.prime = field.modulus();
  mat.entries.assign(mat.rows * mat.cols, 0);

  std::vector<u64> xpow(d + 1);
  std::vector<u64> ypow(d + 1);
  std::size_t row = 0;
  for (std::size_t p = 0; p < points.size(); ++p) {
    const u64 u = field.reduce(points[p].x);
    const u64 v = field.reduce(points[p].y);
    xpow[0] = ypow[0] = 1 % field.modulus();
    for (std::size_t k = 1; k <= d; ++k) {
      xpow[k] = field.mul(xpow[k - 1], u);
      ypow[k] = field.mul(ypow[k - 1], v);
    }
    const auto m = static_cast<std::size_t>(system.mult(p));
    for (std::size_t order = 0; order < m; ++order) {
      for (std::size_t i = order + 1; i-- > 0;) {
        const std::size_t j = order - i;
        for (std::size_t c = 0; c < monomials.size(); ++c) {
          const auto [a, b] = monomials[c];
          if (i > a || j > b) continue;
          const u64 coeff = field.mul(binom[a][i], binom[b][j]);
          mat.at(row, c) = field.mul(coeff, field.mul(xpow[a - i], ypow[b - j]));
        }
        ++row;
      }
    }
  }
  return mat;
}

}  // namespace lincert
