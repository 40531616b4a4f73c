#include "lincert/certifier.hpp"

#include <algorithm>

#include "lincert/literal.hpp"

namespace lincert {

namespace {

constexpr std::array<AxiomId, 3> kSpecials = {AxiomId::Special6A, AxiomId::Special6B, AxiomId::Special9};
constexpr std::array<ExceptionId, 2> kExceptions = {ExceptionId::A, ExceptionId::B};

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <typename... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void fail(Errc code, const std::string& what, std::vector<ReductionStep> partial = {}) {
  throw TracedError<ReductionStep>(Error(code, what), std::move(partial));
}

bool multiple_of_special(const LinearSystem& system) {
  return std::any_of(kSpecials.begin(), kSpecials.end(),
                     [&](AxiomId id) { return match_axiom(id, system).has_value(); });
}

bool clauses_one_and_three(const LinearSystem& system) {
  const HReport h = hypothesis_h(system);
  return std::all_of(h.failed.begin(), h.failed.end(),
                     [](const ClauseFailure& f) { return f.clause == HClause::II; });
}

}  // namespace

const LinearSystem& step_before(const ReductionStep& step) {
  return std::visit(Overloaded{
                        [](const AxiomStep& s) -> const LinearSystem& { return s.system; },
                        [](const ExceptionStep& s) -> const LinearSystem& { return s.system; },
                        [](const auto& s) -> const LinearSystem& { return s.before; },
                    },
                    step);
}

const LinearSystem& step_after(const ReductionStep& step) {
  return std::visit(Overloaded{
                        [](const AxiomStep& s) -> const LinearSystem& { return s.system; },
                        [](const ExceptionStep& s) -> const LinearSystem& { return s.system; },
                        [](const auto& s) -> const LinearSystem& { return s.after; },
                    },
                    step);
}

std::string_view verdict_name(const Verdict& verdict) {
  return std::visit(Overloaded{
                        [](const EmptyAllMultiples&) { return std::string_view("EmptyAllMultiples"); },
                        [](const ExceptionVerdict&) { return std::string_view("Exception"); },
                        [](const HypothesisFailed&) { return std::string_view("HypothesisFailed"); },
                        [](const OutOfScope&) { return std::string_view("OutOfScope"); },
                        [](const InternalLimit&) { return std::string_view("InternalLimit"); },
                    },
                    verdict);
}

int exit_code(const Verdict& verdict) {
  return std::visit(Overloaded{
                        [](const EmptyAllMultiples&) { return 0; },
                        [](const ExceptionVerdict&) { return 10; },
                        [](const HypothesisFailed&) { return 11; },
                        [](const OutOfScope&) { return 12; },
                        [](const InternalLimit&) { return 2; },
                    },
                    verdict);
}

LemmaTwoStep lemma_two_step(const LinearSystem& system) {
  if (!hypothesis_h(system).holds) {
    throw Error(Errc::PreconditionViolated, "rewrite requires hypothesis H: " + format_system(system));
  }
  const Int d = system.degree();
  const Int m1 = system.mult(0);
  if (d < m1 + 1) {
    throw Error(Errc::DegreeBound, "rewrite requires d >= m1 + 1: " + format_system(system));
  }
  const Int a = 2 * m1 + 1;
  // With m1 = 1 the first point is itself simple and is not absorbed.
  const Int h = count_simple(system) - (m1 == 1 ? 1 : 0);
  if (h < a) {
    throw Error(Errc::InsufficientSimplePoints, "rewrite of " + format_system(system) + " needs " +
                                                    std::to_string(a) + " simple points, has " +
                                                    std::to_string(h));
  }
  std::vector<Int> m(system.multiplicities().begin(), system.multiplicities().end());
  m[0] += 1;
  m.resize(m.size() - static_cast<std::size_t>(a));  // simple points sit at the tail
  return {a, h - a, system, LinearSystem::normalize(d, std::move(m))};
}

BasicMove basic_move(const LinearSystem& system) {
  if (!hypothesis_h(system).holds) {
    fail(Errc::PreconditionViolated, "basic move requires hypothesis H: " + format_system(system));
  }
  if (excess(system) != 0) {
    fail(Errc::PreconditionViolated, "basic move requires e = 0: " + format_system(system));
  }
  const Int n = count_at_least_two(system);
  if (n < 2 || n > 8) {
    fail(Errc::PreconditionViolated, "basic move requires 2 <= N <= 8: " + format_system(system));
  }
  if (multiple_of_special(system)) {
    fail(Errc::PreconditionViolated,
         "basic move is not defined on multiples of the special systems: " + format_system(system));
  }

  BasicMove move{system, {}};
  try {
    LemmaTwoStep first = lemma_two_step(system);
    move.result = first.after;
    move.steps.emplace_back(std::move(first));

    CremonaReduction reduced = cremona_reduce(move.result);
    for (auto& q : reduced.steps) move.steps.emplace_back(std::move(q));
    move.result = reduced.result;

    while (excess(move.result) > 0) {
      LemmaTwoStep again = lemma_two_step(move.result);
      move.result = again.after;
      move.steps.emplace_back(std::move(again));
    }
  } catch (const TracedError<QuadraticStep>& err) {
    for (const auto& q : err.partial_trace()) move.steps.emplace_back(q);
    throw TracedError<ReductionStep>(err, std::move(move.steps));
  } catch (const Error& err) {
    throw TracedError<ReductionStep>(err, std::move(move.steps));
  }

  const LinearSystem& out = move.result;
  const char* violated = nullptr;
  if (!hypothesis_h(out).holds) {
    violated = "result fails hypothesis H";
  } else if (excess(out) != 0) {
    violated = "result has e != 0";
  } else if (out.degree() >= system.degree()) {
    violated = "degree did not decrease";
  } else if (match_exception(ExceptionId::A, out) || match_exception(ExceptionId::B, out)) {
    violated = "result is a multiple of an exceptional system";
  }
  if (violated != nullptr) {
    fail(Errc::PostconditionViolated,
         std::string("basic move ") + format_system(system) + " -> " + format_system(out) + ": " + violated,
         std::move(move.steps));
  }
  return move;
}

namespace {

// Tests the exception, special-axiom, N = 0 and N = 1 cases in that order.
// Returns true once the certificate has a verdict.
bool settle(const LinearSystem& current, Int primitive_factor, Certificate& cert) {
  for (ExceptionId ex : kExceptions) {
    if (auto t = match_exception(ex, current)) {
      cert.trace.emplace_back(ExceptionStep{ex, *t, current});
      cert.verdict = ExceptionVerdict{ex, checked::mul(*t, primitive_factor)};
      return true;
    }
  }
  auto accept = [&](AxiomId id, Int t) {
    cert.trace.emplace_back(AxiomStep{id, t, current});
    cert.axioms_used.insert(id);
    cert.verdict = EmptyAllMultiples{};
    return true;
  };
  for (AxiomId id : kSpecials) {
    if (auto t = match_axiom(id, current)) return accept(id, *t);
  }
  const Int n = count_at_least_two(current);
  if (n == 0) {
    if (auto t = match_axiom(AxiomId::Nagata, current)) return accept(AxiomId::Nagata, *t);
    cert.verdict = InternalLimit{"N = 0 system outside every known case: " + format_system(current)};
    return true;
  }
  if (n == 1) {
    if (auto t = match_axiom(AxiomId::CM21, current)) return accept(AxiomId::CM21, *t);
    cert.verdict = InternalLimit{"N = 1 system outside every known case: " + format_system(current)};
    return true;
  }
  return false;
}

}  // namespace

Certificate certify(const LinearSystem& input) {
  Certificate cert{input, InternalLimit{"not started"}, {}, {}};
  try {
    auto [current, t] = primitive_part(input);
    cert.trace.emplace_back(PrimitiveStep{t, input, current});

    HReport h = hypothesis_h(current);
    if (!h.holds) {
      cert.verdict = HypothesisFailed{std::move(h)};
      return cert;
    }
    if (settle(current, t, cert)) return cert;
    if (count_at_least_two(current) > 8) {
      cert.verdict = OutOfScope{"N = " + std::to_string(count_at_least_two(current)) + " exceeds 8"};
      return cert;
    }

    while (excess(current) > 0) {
      LemmaTwoStep step = lemma_two_step(current);
      current = step.after;
      cert.trace.emplace_back(std::move(step));
    }
    if (settle(current, t, cert)) return cert;

    // Every basic move lowers the degree, so this budget is never reached.
    const Int budget = current.degree();
    for (Int moves = 0; moves < budget; ++moves) {
      BasicMove move = basic_move(current);
      for (auto& s : move.steps) cert.trace.emplace_back(std::move(s));
      current = std::move(move.result);
      if (settle(current, t, cert)) return cert;
    }
    cert.verdict = InternalLimit{"basic move budget exhausted at " + format_system(current)};
  } catch (const TracedError<ReductionStep>& err) {
    for (const auto& s : err.partial_trace()) cert.trace.push_back(s);
    cert.verdict = InternalLimit{err.what()};
  } catch (const Error& err) {
    cert.verdict = InternalLimit{err.what()};
  }
  return cert;
}

bool replay(const Certificate& cert) {
  if (cert.trace.empty()) return false;
  const auto* prim = std::get_if<PrimitiveStep>(&cert.trace.front());
  if (prim == nullptr || prim->before != cert.input) return false;

  const bool claims_empty = std::holds_alternative<EmptyAllMultiples>(cert.verdict);
  std::set<AxiomId> used;
  const LinearSystem* current = &cert.input;

  try {
    for (std::size_t i = 0; i < cert.trace.size(); ++i) {
      const ReductionStep& step = cert.trace[i];
      if (step_before(step) != *current) return false;
      const bool last = i + 1 == cert.trace.size();
      const bool ok = std::visit(
          Overloaded{
              [&](const PrimitiveStep& s) {
                if (i != 0) return false;
                const PrimitivePart p = primitive_part(s.before);
                return p.t == s.t && p.system == s.after;
              },
              [&](const LemmaTwoStep& s) { return lemma_two_step(s.before) == s; },
              [&](const QuadraticStep& s) { return quadratic_step(s.before, s.indices) == s; },
              [&](const AxiomStep& s) {
                used.insert(s.axiom);
                return last && match_axiom(s.axiom, s.system) == s.t;
              },
              [&](const ExceptionStep& s) { return last && match_exception(s.exception, s.system) == s.t; },
          },
          step);
      if (!ok) return false;
      if (claims_empty && i > 0 && !clauses_one_and_three(step_after(step))) return false;
      current = &step_after(step);
    }

    const ReductionStep& tail = cert.trace.back();
    return std::visit(
        Overloaded{
            [&](const EmptyAllMultiples&) {
              return std::holds_alternative<AxiomStep>(tail) && hypothesis_h(*current).holds &&
                     used == cert.axioms_used;
            },
            [&](const ExceptionVerdict& v) {
              const auto* s = std::get_if<ExceptionStep>(&tail);
              return s != nullptr && s->exception == v.exception && v.t == s->t * prim->t &&
                     cert.axioms_used.empty();
            },
            [&](const HypothesisFailed& v) {
              return cert.trace.size() == 1 && hypothesis_h(*current) == v.report && !v.report.holds;
            },
            [&](const OutOfScope&) {
              return cert.trace.size() == 1 && hypothesis_h(*current).holds &&
                     count_at_least_two(*current) > 8;
            },
            [](const InternalLimit&) { return false; },
        },
        cert.verdict);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace lincert
