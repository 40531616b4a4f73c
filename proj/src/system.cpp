#include "lincert/system.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace lincert {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::NonPositiveDegree: return "NonPositiveDegree";
    case Errc::NegativeMultiplicity: return "NegativeMultiplicity";
    case Errc::Overflow: return "Overflow";
    case Errc::InvalidIndex: return "InvalidIndex";
    case Errc::DegenerateDegree: return "DegenerateDegree";
    case Errc::InsufficientSimplePoints: return "InsufficientSimplePoints";
    case Errc::DegreeBound: return "DegreeBound";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::PostconditionViolated: return "PostconditionViolated";
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

const char* to_string(HClause clause) {
  switch (clause) {
    case HClause::I: return "i";
    case HClause::II: return "ii";
    case HClause::III: return "iii";
  }
  return "?";
}

namespace checked {

Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer overflow in addition");
  return r;
}

Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer overflow in subtraction");
  return r;
}

Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer overflow in multiplication");
  return r;
}

}  // namespace checked

LinearSystem LinearSystem::normalize(Int degree, std::vector<Int> raw) {
  if (degree < 1) {
    throw Error(Errc::NonPositiveDegree, "degree must be >= 1, got " + std::to_string(degree));
  }
  for (Int m : raw) {
    if (m < 0) throw Error(Errc::NegativeMultiplicity, "negative multiplicity " + std::to_string(m));
  }
  std::erase(raw, Int{0});
  std::sort(raw.begin(), raw.end(), std::greater<>());
  return LinearSystem(degree, std::move(raw));
}

std::strong_ordering operator<=>(const LinearSystem& a, const LinearSystem& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.mults_.begin(), a.mults_.end(), b.mults_.begin(),
                                                b.mults_.end());
}

Int count_at_least_two(const LinearSystem& system) {
  auto m = system.multiplicities();
  return std::count_if(m.begin(), m.end(), [](Int x) { return x >= 2; });
}

Int count_simple(const LinearSystem& system) {
  auto m = system.multiplicities();
  return std::count(m.begin(), m.end(), Int{1});
}

Int excess(const LinearSystem& system) {
  return system.degree() - system.mult(0) - system.mult(1) - system.mult(2);
}

SystemStats stats(const LinearSystem& system) {
  using namespace checked;
  const Int d = system.degree();
  SystemStats s;
  Int sum = 0;
  Int sum_sq = 0;
  Int sum_tri = 0;  // sum m(m+1)/2
  for (Int m : system.multiplicities()) {
    if (m >= 2) ++s.big_n;
    if (m == 1) ++s.h;
    sum = add(sum, m);
    const Int sq = mul(m, m);
    sum_sq = add(sum_sq, sq);
    sum_tri = add(sum_tri, mul(m, add(m, 1)) / 2);
  }
  s.e = sub(sub(sub(d, system.mult(0)), system.mult(1)), system.mult(2));
  s.self_int = sub(mul(d, d), sum_sq);
  s.anticanonical = sub(mul(3, d), sum);
  s.virt_dim = sub(mul(d, add(d, 3)) / 2, sum_tri);
  return s;
}

HReport hypothesis_h(const LinearSystem& system) {
  HReport report;
  const Int d = system.degree();
  if (d < system.mult(0)) report.failed.push_back({HClause::I, d - system.mult(0)});
  const SystemStats s = stats(system);
  if (s.e < 0) report.failed.push_back({HClause::II, s.e});
  if (s.self_int != 0) report.failed.push_back({HClause::III, s.self_int});
  report.holds = report.failed.empty();
  return report;
}

LinearSystem scale(const LinearSystem& system, Int k) {
  if (k < 1) throw Error(Errc::PreconditionViolated, "scale factor must be >= 1");
  std::vector<Int> m(system.multiplicities().begin(), system.multiplicities().end());
  for (Int& x : m) x = checked::mul(x, k);
  return LinearSystem::normalize(checked::mul(system.degree(), k), std::move(m));
}

PrimitivePart primitive_part(const LinearSystem& system) {
  Int t = system.degree();
  for (Int m : system.multiplicities()) t = std::gcd(t, m);
  std::vector<Int> m(system.multiplicities().begin(), system.multiplicities().end());
  for (Int& x : m) x /= t;
  return {LinearSystem::normalize(system.degree() / t, std::move(m)), t};
}

std::optional<Int> is_multiple_of(const LinearSystem& system, const LinearSystem& base) {
  if (system.size() != base.size() || system.degree() % base.degree() != 0) return std::nullopt;
  const Int t = system.degree() / base.degree();
  for (std::size_t i = 0; i < base.size(); ++i) {
    Int prod;
    if (__builtin_mul_overflow(base.mult(i), t, &prod) || prod != system.mult(i)) return std::nullopt;
  }
  return t;
}

}  // namespace lincert
