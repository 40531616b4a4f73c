#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lincert/cremona.hpp"
#include "lincert/system.hpp"

namespace lincert {

// ---------------------------------------------------------------------------
// Axiom and exception tables
// ---------------------------------------------------------------------------

enum class AxiomId { Nagata, CM21, Special6A, Special6B, Special9 };
enum class ExceptionId { A, B };

struct AxiomEntry {
  AxiomId id;
  std::string_view name;      // stable identifier used in JSON
  std::string_view pattern;   // human-readable description of what matches
  std::string_view citation;  // source of the imported emptiness statement
  std::optional<LinearSystem> base;  // set for the axioms matched as multiples
};

std::span<const AxiomEntry> axiom_table();
const AxiomEntry& axiom(AxiomId id);
std::string_view name_of(AxiomId id);
std::string_view name_of(ExceptionId id);  // "a" or "b"

/// L_1(1) for (a), L_3(1^9) for (b).
const LinearSystem& exception_base(ExceptionId id);

/// Multiplicity factor t when `system` matches the axiom. Nagata and CM21 are
/// patterns and always report t = 1.
std::optional<Int> match_axiom(AxiomId id, const LinearSystem& system);
std::optional<Int> match_exception(ExceptionId id, const LinearSystem& system);

// ---------------------------------------------------------------------------
// Reduction trace
// ---------------------------------------------------------------------------

struct LemmaTwoStep {
  Int a = 0;  // 2 m1 + 1 simple points absorbed
  Int b = 0;  // h - 2 m1 - 1 simple points left; b == 0 is permitted and flagged
  LinearSystem before;
  LinearSystem after;

  bool b_zero() const noexcept { return b == 0; }
  friend bool operator==(const LemmaTwoStep&, const LemmaTwoStep&) = default;
};

struct PrimitiveStep {
  Int t = 1;
  LinearSystem before;
  LinearSystem after;
  friend bool operator==(const PrimitiveStep&, const PrimitiveStep&) = default;
};

struct AxiomStep {
  AxiomId axiom;
  Int t = 1;
  LinearSystem system;
  friend bool operator==(const AxiomStep&, const AxiomStep&) = default;
};

struct ExceptionStep {
  ExceptionId exception;
  Int t = 1;
  LinearSystem system;
  friend bool operator==(const ExceptionStep&, const ExceptionStep&) = default;
};

using ReductionStep = std::variant<LemmaTwoStep, QuadraticStep, PrimitiveStep, AxiomStep, ExceptionStep>;

/// System a step starts from / ends at. Axiom and exception matches start and
/// end at the matched system.
const LinearSystem& step_before(const ReductionStep& step);
const LinearSystem& step_after(const ReductionStep& step);

// ---------------------------------------------------------------------------
// Verdicts and certificates
// ---------------------------------------------------------------------------

struct EmptyAllMultiples {
  friend bool operator==(const EmptyAllMultiples&, const EmptyAllMultiples&) = default;
};
struct ExceptionVerdict {
  ExceptionId exception;
  Int t;
  friend bool operator==(const ExceptionVerdict&, const ExceptionVerdict&) = default;
};
struct HypothesisFailed {
  HReport report;
  friend bool operator==(const HypothesisFailed&, const HypothesisFailed&) = default;
};
struct OutOfScope {
  std::string reason;
  friend bool operator==(const OutOfScope&, const OutOfScope&) = default;
};
struct InternalLimit {
  std::string reason;
  friend bool operator==(const InternalLimit&, const InternalLimit&) = default;
};

using Verdict = std::variant<EmptyAllMultiples, ExceptionVerdict, HypothesisFailed, OutOfScope, InternalLimit>;

std::string_view verdict_name(const Verdict& verdict);

struct Certificate {
  LinearSystem input;
  Verdict verdict;
  std::vector<ReductionStep> trace;
  std::set<AxiomId> axioms_used;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Raises m1 by one and absorbs 2 m1 + 1 simple points; degree unchanged, e
/// drops by one. Requires hypothesis H, h >= 2 m1 + 1 and d >= m1 + 1.
LemmaTwoStep lemma_two_step(const LinearSystem& system);

inline LinearSystem lemma_two_rewrite(const LinearSystem& system) {
  return lemma_two_step(system).after;
}

struct BasicMove {
  LinearSystem result;
  std::vector<ReductionStep> steps;
};

/// One rewrite, Cremona reduction, then rewrites until e = 0. Requires H,
/// e = 0, 2 <= N <= 8 and that the input is not a multiple of a degree 6 or
/// degree 9 special system. Failures throw TracedError<ReductionStep>.
BasicMove basic_move(const LinearSystem& system);

Certificate certify(const LinearSystem& system);

bool replay(const Certificate& certificate);

/// Exit status of the `certify` subcommand for a verdict.
int exit_code(const Verdict& verdict);

}  // namespace lincert
