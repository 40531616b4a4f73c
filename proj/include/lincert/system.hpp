#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lincert {

using Int = std::int64_t;

enum class Errc {
  NonPositiveDegree,
  NegativeMultiplicity,
  Overflow,
  InvalidIndex,
  DegenerateDegree,
  InsufficientSimplePoints,
  DegreeBound,
  PreconditionViolated,
  PostconditionViolated,
  DuplicatePoint,
  SyntaxError,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// An error raised in the middle of a multi-step reduction; carries the steps
// completed before the failure.
template <typename Step>
class TracedError : public Error {
 public:
  TracedError(const Error& cause, std::vector<Step> partial)
      : Error(cause.code(), cause.what()), partial_(std::move(partial)) {}
  const std::vector<Step>& partial_trace() const noexcept { return partial_; }

 private:
  std::vector<Step> partial_;
};

/// Numerical data of a planar linear system L_d(m_1, ..., m_n) with general
/// base points. Multiplicities are kept sorted descending with zeros removed;
/// reading past the end yields 0.
class LinearSystem {
 public:
  static LinearSystem normalize(Int degree, std::vector<Int> raw);

  Int degree() const noexcept { return degree_; }
  std::span<const Int> multiplicities() const noexcept { return mults_; }
  std::size_t size() const noexcept { return mults_.size(); }
  Int mult(std::size_t i) const noexcept { return i < mults_.size() ? mults_[i] : 0; }

  friend bool operator==(const LinearSystem&, const LinearSystem&) = default;
  // Degree first, then lexicographic on the multiplicity list.
  friend std::strong_ordering operator<=>(const LinearSystem& a, const LinearSystem& b);

 private:
  LinearSystem(Int degree, std::vector<Int> mults) : degree_(degree), mults_(std::move(mults)) {}

  Int degree_;
  std::vector<Int> mults_;
};

struct SystemStats {
  Int big_n = 0;          // multiplicities >= 2
  Int h = 0;              // multiplicities == 1
  Int e = 0;              // d - (m1 + m2 + m3)
  Int self_int = 0;       // d^2 - sum m_i^2
  Int anticanonical = 0;  // 3d - sum m_i
  Int virt_dim = 0;       // d(d+3)/2 - sum m_i(m_i+1)/2

  friend bool operator==(const SystemStats&, const SystemStats&) = default;
};

/// Throws Error(Overflow) when any intermediate leaves the int64 range.
SystemStats stats(const LinearSystem& system);

// Cheap accessors used on hot paths; no overflow checking beyond stats().
Int count_at_least_two(const LinearSystem& system);
Int count_simple(const LinearSystem& system);
Int excess(const LinearSystem& system);

enum class HClause { I, II, III };

const char* to_string(HClause clause);

struct ClauseFailure {
  HClause clause;
  // (i): d - m1; (ii): e; (iii): d^2 - sum m_i^2.
  Int value;

  friend bool operator==(const ClauseFailure&, const ClauseFailure&) = default;
};

struct HReport {
  bool holds = true;
  std::vector<ClauseFailure> failed;

  friend bool operator==(const HReport&, const HReport&) = default;
};

HReport hypothesis_h(const LinearSystem& system);

/// L_{kd}(k m_1, ..., k m_n). Requires k >= 1.
LinearSystem scale(const LinearSystem& system, Int k);

struct PrimitivePart {
  LinearSystem system;
  Int t;
};

PrimitivePart primitive_part(const LinearSystem& system);

/// t such that system == scale(base, t), if any.
std::optional<Int> is_multiple_of(const LinearSystem& system, const LinearSystem& base);

namespace checked {

Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);

}  // namespace checked

}  // namespace lincert
