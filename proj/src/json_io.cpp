#include "lincert/json_io.hpp"

#include "lincert/literal.hpp"

namespace lincert {

using nlohmann::json;

namespace {

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <typename... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

json failures_json(const HReport& report) {
  json out = json::array();
  for (const auto& f : report.failed) out.push_back({{"clause", to_string(f.clause)}, {"value", f.value}});
  return out;
}

json quadratic_json(const QuadraticStep& q) {
  return {{"step", "Quadratic"},
          {"indices", {q.indices[0], q.indices[1], q.indices[2]}},
          {"zeros_stripped", q.zeros_stripped},
          {"before", format_system(q.before)},
          {"after", format_system(q.after)}};
}

json verdict_json(const Verdict& verdict) {
  json out = {{"kind", verdict_name(verdict)}};
  std::visit(Overloaded{
                 [](const EmptyAllMultiples&) {},
                 [&](const ExceptionVerdict& v) {
                   out["exception"] = name_of(v.exception);
                   out["t"] = v.t;
                 },
                 [&](const HypothesisFailed& v) { out["failed"] = failures_json(v.report); },
                 [&](const OutOfScope& v) { out["reason"] = v.reason; },
                 [&](const InternalLimit& v) { out["reason"] = v.reason; },
             },
             verdict);
  return out;
}

}  // namespace

json stats_json(const LinearSystem& system, const SystemStats& s) {
  return {{"schema", kSchemaVersion}, {"system", format_system(system)},
          {"N", s.big_n},             {"h", s.h},
          {"e", s.e},                 {"self_int", s.self_int},
          {"anticanonical", s.anticanonical}, {"virt_dim", s.virt_dim}};
}

json hreport_json(const LinearSystem& system, const HReport& report) {
  return {{"schema", kSchemaVersion},
          {"system", format_system(system)},
          {"holds", report.holds},
          {"failed", failures_json(report)}};
}

json reduction_json(const LinearSystem& input, const CremonaReduction& reduction) {
  json steps = json::array();
  for (const auto& q : reduction.steps) steps.push_back(quadratic_json(q));
  return {{"schema", kSchemaVersion},
          {"input", format_system(input)},
          {"result", format_system(reduction.result)},
          {"steps", std::move(steps)}};
}

json step_json(const ReductionStep& step) {
  return std::visit(
      Overloaded{
          [](const PrimitiveStep& s) -> json {
            return {{"step", "PrimitiveExtraction"},
                    {"t", s.t},
                    {"before", format_system(s.before)},
                    {"after", format_system(s.after)}};
          },
          [](const LemmaTwoStep& s) -> json {
            return {{"step", "LemmaTwo"},
                    {"a", s.a},
                    {"b", s.b},
                    {"b_zero", s.b_zero()},
                    {"before", format_system(s.before)},
                    {"after", format_system(s.after)}};
          },
          [](const QuadraticStep& s) -> json { return quadratic_json(s); },
          [](const AxiomStep& s) -> json {
            const auto sys = format_system(s.system);
            return {{"step", "AxiomMatch"}, {"axiom", name_of(s.axiom)}, {"t", s.t}, {"before", sys}, {"after", sys}};
          },
          [](const ExceptionStep& s) -> json {
            const auto sys = format_system(s.system);
            return {{"step", "ExceptionMatch"},
                    {"exception", name_of(s.exception)},
                    {"t", s.t},
                    {"before", sys},
                    {"after", sys}};
          },
      },
      step);
}

json certificate_json(const Certificate& cert) {
  json trace = json::array();
  for (const auto& s : cert.trace) trace.push_back(step_json(s));
  json used = json::array();
  json citations = json::object();
  for (AxiomId id : cert.axioms_used) {
    used.push_back(name_of(id));
    citations[std::string(name_of(id))] = axiom(id).citation;
  }
  return {{"schema", kSchemaVersion},
          {"input", format_system(cert.input)},
          {"verdict", verdict_json(cert.verdict)},
          {"trace", std::move(trace)},
          {"axioms_used", std::move(used)},
          {"citations", std::move(citations)}};
}

json oracle_json(const OracleReport& r) {
  json verdict = r.certified_empty() ? json{{"kind", "CertifiedEmpty"}}
                                     : json{{"kind", "LikelyDimension"}, {"dimension", r.likely_dimension()}};
  return {{"schema", kSchemaVersion},
          {"system", format_system(r.system)},
          {"k", r.k},
          {"primes", r.primes},
          {"ranks", r.ranks},
          {"trials", r.trials},
          {"columns", r.columns},
          {"rows", r.rows},
          {"best_rank", r.best_rank},
          {"corank", r.corank},
          {"verdict", std::move(verdict)},
          {"wall_time_ms", r.wall_ms}};
}

json agreement_json(const Certificate& cert, const AgreementReport& agreement) {
  json checks = json::array();
  for (const auto& c : agreement.checks) {
    checks.push_back({{"k", c.k}, {"expected", c.expectation}, {"agrees", c.agrees}, {"oracle", oracle_json(c.report)}});
  }
  return {{"schema", kSchemaVersion},
          {"certificate", certificate_json(cert)},
          {"applicable", agreement.applicable},
          {"agrees", agreement.agrees()},
          {"checks", std::move(checks)}};
}

}  // namespace lincert
