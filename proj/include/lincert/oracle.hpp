#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lincert/certifier.hpp"
#include "lincert/condition_matrix.hpp"
#include "lincert/system.hpp"

namespace lincert {

// Randomized rank oracle. Full column rank at any specialization of the base
// points (and mod any prime) lower-bounds the generic rank, so corank 0 in a
// single trial certifies emptiness for general points. A positive corank in
// every trial only suggests a dimension.

struct OracleReport {
  LinearSystem system;  // as given; the matrices are built for scale(system, k)
  Int k = 1;
  std::vector<u64> primes;         // one per trial
  std::vector<std::size_t> ranks;  // one per trial
  int trials = 0;
  std::size_t columns = 0;
  std::size_t rows = 0;
  std::size_t best_rank = 0;
  std::size_t corank = 0;
  double wall_ms = 0.0;

  bool certified_empty() const noexcept { return corank == 0; }
  // Projective dimension suggested by the best trial; meaningful when corank > 0.
  Int likely_dimension() const noexcept { return static_cast<Int>(corank) - 1; }
};

u64 trial_prime(u64 seed, int trial);

/// `count` distinct uniform points in F_p x F_p, reproducible from (seed, trial).
std::vector<Point> sample_points(std::size_t count, u64 prime, u64 seed, int trial);

OracleReport oracle_dim(const LinearSystem& system, Int k, int trials, u64 seed);

struct AgreementCheck {
  Int k = 1;
  std::string expectation;
  OracleReport report;
  bool agrees = false;
};

struct AgreementReport {
  bool applicable = false;  // only EmptyAllMultiples and Exception verdicts are checkable
  std::vector<AgreementCheck> checks;

  bool agrees() const noexcept;
};

/// Runs the oracle on scale(input, k) for each k. EmptyAllMultiples must give
/// corank 0. A multiple t of L_1(1) must give corank k t + 1 (curves of degree
/// kt with a point of multiplicity kt), a multiple of L_3(1^9) corank 1.
AgreementReport verify_certificate(const Certificate& certificate, std::span<const Int> ks, int trials, u64 seed);

}  // namespace lincert
