#include "lincert/oracle.hpp"

#include <chrono>
#include <random>
#include <set>
#include <utility>

#include "lincert/literal.hpp"
#include "lincert/rank.hpp"

namespace lincert {

namespace {

u64 splitmix64(u64 x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

u64 trial_prime(u64 seed, int trial) {
  const auto primes = oracle_primes();
  return primes[(splitmix64(seed) + static_cast<u64>(trial)) % primes.size()];
}

std::vector<Point> sample_points(std::size_t count, u64 prime, u64 seed, int trial) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<u64>(trial) + 1)));
  std::uniform_int_distribution<u64> coord(0, prime - 1);
  std::set<std::pair<u64, u64>> seen;
  std::vector<Point> points;
  points.reserve(count);
  while (points.size() < count) {
    const Point pt{coord(rng), coord(rng)};
    if (seen.emplace(pt.x, pt.y).second) points.push_back(pt);
  }
  return points;
}

OracleReport oracle_dim(const LinearSystem& system, Int k, int trials, u64 seed) {
  if (trials < 1) throw Error(Errc::PreconditionViolated, "oracle needs at least one trial");
  const auto start = std::chrono::steady_clock::now();
  const LinearSystem scaled = scale(system, k);

  OracleReport report{system, k, {}, {}, trials};
  report.columns = monomial_count(scaled.degree());
  report.rows = condition_count(scaled);
  report.primes.resize(static_cast<std::size_t>(trials));
  report.ranks.resize(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    report.primes[static_cast<std::size_t>(t)] = trial_prime(seed, t);
    if (report.primes[static_cast<std::size_t>(t)] <= static_cast<u64>(scaled.degree())) {
      throw Error(Errc::PreconditionViolated, "degree exceeds oracle prime");
    }
  }

#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < trials; ++t) {
    const auto idx = static_cast<std::size_t>(t);
    const PrimeField field(report.primes[idx]);
    const auto points = sample_points(scaled.size(), field.modulus(), seed, t);
    report.ranks[idx] = rank(build_matrix(scaled, points, field));
  }

  for (std::size_t r : report.ranks) report.best_rank = std::max(report.best_rank, r);
  report.corank = report.columns - report.best_rank;
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool AgreementReport::agrees() const noexcept {
  if (!applicable) return false;
  for (const auto& c : checks) {
    if (!c.agrees) return false;
  }
  return true;
}

AgreementReport verify_certificate(const Certificate& certificate, std::span<const Int> ks, int trials, u64 seed) {
  AgreementReport out;
  const bool empty = std::holds_alternative<EmptyAllMultiples>(certificate.verdict);
  const auto* exception = std::get_if<ExceptionVerdict>(&certificate.verdict);
  if (!empty && exception == nullptr) return out;
  out.applicable = true;
  for (Int k : ks) {
    OracleReport report = oracle_dim(certificate.input, k, trials, seed);
    Int expected = 0;
    if (exception != nullptr) expected = exception->exception == ExceptionId::A ? k * exception->t + 1 : 1;
    const bool agrees = static_cast<Int>(report.corank) == expected;
    out.checks.push_back({k, "corank " + std::to_string(expected), std::move(report), agrees});
  }
  return out;
}

}  // namespace lincert
