#pragma once

#include <json.hpp>

#include "lincert/certifier.hpp"
#include "lincert/cremona.hpp"
#include "lincert/oracle.hpp"
#include "lincert/system.hpp"

namespace lincert {

inline constexpr int kSchemaVersion = 1;

nlohmann::json stats_json(const LinearSystem& system, const SystemStats& stats);
nlohmann::json hreport_json(const LinearSystem& system, const HReport& report);
nlohmann::json reduction_json(const LinearSystem& input, const CremonaReduction& reduction);
nlohmann::json step_json(const ReductionStep& step);
nlohmann::json certificate_json(const Certificate& certificate);
nlohmann::json oracle_json(const OracleReport& report);
nlohmann::json agreement_json(const Certificate& certificate, const AgreementReport& agreement);

}  // namespace lincert
