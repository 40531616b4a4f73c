#include "lincert/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "lincert/certifier.hpp"
#include "lincert/cremona.hpp"
#include "lincert/enumerate.hpp"
#include "lincert/json_io.hpp"
#include "lincert/literal.hpp"
#include "lincert/oracle.hpp"

namespace lincert {

namespace {

struct OracleFlags {
  Int k = 1;
  int trials = 3;
  u64 seed = 0;
};

void add_oracle_flags(CLI::App* cmd, OracleFlags& flags, bool with_k) {
  if (with_k) cmd->add_option("--k", flags.k, "Scale factor")->check(CLI::PositiveNumber);
  cmd->add_option("--trials", flags.trials, "Independent random trials")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", flags.seed, "Seed for primes and base points");
}

std::string describe_failures(const HReport& report) {
  std::ostringstream os;
  for (std::size_t i = 0; i < report.failed.size(); ++i) {
    const auto& f = report.failed[i];
    if (i != 0) os << "; ";
    switch (f.clause) {
      case HClause::I: os << "(i) d - m1 = " << f.value; break;
      case HClause::II: os << "(ii) e = " << f.value; break;
      case HClause::III: os << "(iii) d^2 - sum m_i^2 = " << f.value; break;
    }
  }
  return os.str();
}

std::string describe_step(const ReductionStep& step) {
  std::ostringstream os;
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, PrimitiveStep>) {
          os << "PrimitiveExtraction t=" << s.t << "  " << format_system(s.before) << " -> "
             << format_system(s.after);
        } else if constexpr (std::is_same_v<S, LemmaTwoStep>) {
          os << "LemmaTwo a=" << s.a << " b=" << s.b << (s.b_zero() ? " (b = 0)" : "") << "  "
             << format_system(s.before) << " -> " << format_system(s.after);
        } else if constexpr (std::is_same_v<S, QuadraticStep>) {
          os << "Quadratic [" << s.indices[0] << "," << s.indices[1] << "," << s.indices[2] << "]  "
             << format_system(s.before) << " -> " << format_system(s.after);
        } else if constexpr (std::is_same_v<S, AxiomStep>) {
          os << "AxiomMatch " << name_of(s.axiom) << " t=" << s.t << "  " << format_system(s.system);
        } else {
          os << "ExceptionMatch (" << name_of(s.exception) << ") t=" << s.t << "  " << format_system(s.system);
        }
      },
      step);
  return os.str();
}

std::string describe_verdict(const Verdict& verdict) {
  std::ostringstream os;
  os << verdict_name(verdict);
  if (const auto* ex = std::get_if<ExceptionVerdict>(&verdict)) {
    os << "(" << name_of(ex->exception) << ", t=" << ex->t << ")";
  } else if (const auto* hf = std::get_if<HypothesisFailed>(&verdict)) {
    os << ": " << describe_failures(hf->report);
  } else if (const auto* oos = std::get_if<OutOfScope>(&verdict)) {
    os << ": " << oos->reason;
  } else if (const auto* lim = std::get_if<InternalLimit>(&verdict)) {
    os << ": " << lim->reason;
  }
  return os.str();
}

void print_certificate(std::ostream& out, const Certificate& cert) {
  out << "input    " << format_system(cert.input) << "\n";
  out << "verdict  " << describe_verdict(cert.verdict) << "\n";
  out << "trace\n";
  for (const auto& s : cert.trace) out << "  " << describe_step(s) << "\n";
  for (AxiomId id : cert.axioms_used) out << "axiom    " << name_of(id) << ": " << axiom(id).citation << "\n";
}

std::string describe_oracle_verdict(const OracleReport& r) {
  return r.certified_empty() ? "CertifiedEmpty" : "LikelyDimension(" + std::to_string(r.likely_dimension()) + ")";
}

void print_oracle(std::ostream& out, const OracleReport& r) {
  out << "system     " << format_system(r.system) << "  k=" << r.k << "\n";
  out << "columns    " << r.columns << "\n";
  out << "rows       " << r.rows << "\n";
  for (std::size_t t = 0; t < r.ranks.size(); ++t) {
    out << "trial " << t << "    p=" << r.primes[t] << "  rank " << r.ranks[t] << "\n";
  }
  out << "best_rank  " << r.best_rank << "\n";
  out << "corank     " << r.corank << "\n";
  out << "verdict    " << describe_oracle_verdict(r) << "\n";
  out << "wall_ms    " << std::fixed << std::setprecision(2) << r.wall_ms << "\n";
}

struct EnumerateItem {
  std::string line;
  nlohmann::json record;
  std::string verdict;
  bool disagreement = false;
  std::size_t oracle_checks = 0;
};

EnumerateItem enumerate_one(const LinearSystem& system, bool do_certify, bool do_oracle,
                            const std::vector<Int>& ks, const OracleFlags& flags) {
  EnumerateItem item;
  std::ostringstream os;
  const Int n = count_at_least_two(system);
  os << std::left << std::setw(28) << format_system(system) << " N=" << n;
  item.record = {{"system", format_system(system)}, {"N", n}};

  if (do_certify) {
    const Certificate cert = certify(system);
    item.verdict = std::string(verdict_name(cert.verdict));
    os << "  " << describe_verdict(cert.verdict);
    item.record["verdict"] = certificate_json(cert)["verdict"];
    const bool in_scope = n <= 8;
    const bool resolved = std::holds_alternative<EmptyAllMultiples>(cert.verdict) ||
                          std::holds_alternative<ExceptionVerdict>(cert.verdict);
    if (in_scope && (!resolved || !replay(cert))) item.disagreement = true;
    if (do_oracle && resolved) {
      const AgreementReport agreement = verify_certificate(cert, ks, flags.trials, flags.seed);
      nlohmann::json checks = nlohmann::json::array();
      for (const auto& c : agreement.checks) {
        os << "  [k=" << c.k << " corank " << c.report.corank << (c.agrees ? " ok" : " DISAGREE") << "]";
        checks.push_back({{"k", c.k}, {"corank", c.report.corank}, {"agrees", c.agrees}});
        ++item.oracle_checks;
      }
      item.record["oracle"] = std::move(checks);
      if (!agreement.agrees()) item.disagreement = true;
    }
  } else if (do_oracle) {
    nlohmann::json checks = nlohmann::json::array();
    for (Int k : ks) {
      const OracleReport r = oracle_dim(system, k, flags.trials, flags.seed);
      os << "  [k=" << k << " " << describe_oracle_verdict(r) << "]";
      checks.push_back({{"k", k}, {"corank", r.corank}});
      ++item.oracle_checks;
    }
    item.record["oracle"] = std::move(checks);
  }
  item.line = os.str();
  return item;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Emptiness certificates and rank cross-checks for planar linear systems"};
  app.require_subcommand(1);

  std::string literal;
  bool json = false;
  OracleFlags flags;
  std::vector<Int> ks{1, 2};
  Int max_degree = 0;
  bool do_certify = false;
  bool do_oracle = false;

  auto* stats_cmd = app.add_subcommand("stats", "Print numerical invariants");
  auto* check_cmd = app.add_subcommand("check", "Check hypothesis H; exit 0 iff it holds");
  auto* certify_cmd = app.add_subcommand("certify", "Build an emptiness certificate");
  auto* reduce_cmd = app.add_subcommand("reduce", "Cremona-reduce a system");
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact rank of the interpolation matrix over F_p");
  auto* verify_cmd = app.add_subcommand("verify", "Certify, then cross-check with the rank oracle");
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Walk all primitive systems satisfying H");

  for (auto* cmd : {stats_cmd, check_cmd, certify_cmd, reduce_cmd, oracle_cmd, verify_cmd}) {
    cmd->add_option("system", literal, "System literal such as 6(2^8,1^4)")->required();
  }
  for (auto* cmd : {stats_cmd, check_cmd, certify_cmd, reduce_cmd, oracle_cmd, verify_cmd, enumerate_cmd}) {
    cmd->add_flag("--json", json, "Emit JSON");
  }
  add_oracle_flags(oracle_cmd, flags, true);
  add_oracle_flags(verify_cmd, flags, false);
  verify_cmd->add_option("--ks", ks, "Scale factors to check")->delimiter(',')->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--max-degree", max_degree, "Largest degree")->required()->check(CLI::PositiveNumber);
  enumerate_cmd->add_flag("--certify", do_certify, "Certify every system");
  enumerate_cmd->add_flag("--oracle", do_oracle, "Cross-check with the rank oracle");
  enumerate_cmd->add_option("--ks", ks, "Scale factors for the oracle")->delimiter(',')->check(CLI::PositiveNumber);
  OracleFlags enumerate_flags;
  enumerate_flags.trials = 1;
  add_oracle_flags(enumerate_cmd, enumerate_flags, false);

  std::vector<const char*> argv{"lincert"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "lincert: " << e.what() << "\n" << "Run with --help for usage.\n";
    return kExitUsage;
  }

  std::optional<LinearSystem> system;
  if (!literal.empty() || !enumerate_cmd->parsed()) {
    try {
      system = parse_system(literal);
    } catch (const Error& e) {
      err << "lincert: invalid system literal '" << literal << "': " << e.what() << "\n";
      return kExitUsage;
    }
  }

  try {
    if (stats_cmd->parsed()) {
      const SystemStats s = stats(*system);
      if (json) {
        out << stats_json(*system, s).dump(2) << "\n";
      } else {
        out << "system         " << format_system(*system) << "\n"
            << "N              " << s.big_n << "\n"
            << "h              " << s.h << "\n"
            << "e              " << s.e << "\n"
            << "self_int       " << s.self_int << "\n"
            << "anticanonical  " << s.anticanonical << "\n"
            << "virt_dim       " << s.virt_dim << "\n";
      }
      return 0;
    }

    if (check_cmd->parsed()) {
      const HReport h = hypothesis_h(*system);
      if (json) {
        out << hreport_json(*system, h).dump(2) << "\n";
      } else if (h.holds) {
        out << format_system(*system) << ": hypothesis H holds\n";
      } else {
        out << format_system(*system) << ": hypothesis H fails: " << describe_failures(h) << "\n";
      }
      return h.holds ? 0 : 1;
    }

    if (certify_cmd->parsed()) {
      const Certificate cert = certify(*system);
      if (json) {
        out << certificate_json(cert).dump(2) << "\n";
      } else {
        print_certificate(out, cert);
      }
      return exit_code(cert.verdict);
    }

    if (reduce_cmd->parsed()) {
      std::optional<CremonaReduction> red;
      try {
        red = cremona_reduce(*system);
      } catch (const TracedError<QuadraticStep>& e) {
        err << "lincert: " << to_string(e.code()) << ": " << e.what() << "\n";
        for (const auto& q : e.partial_trace()) err << "  " << describe_step(q) << "\n";
        return 1;
      }
      if (json) {
        out << reduction_json(*system, *red).dump(2) << "\n";
      } else {
        out << "input   " << format_system(*system) << "\n";
        for (const auto& q : red->steps) out << "  " << describe_step(q) << "\n";
        out << "result  " << format_system(red->result) << "  (" << red->steps.size() << " steps)\n";
      }
      return 0;
    }

    if (oracle_cmd->parsed()) {
      const OracleReport r = oracle_dim(*system, flags.k, flags.trials, flags.seed);
      if (json) {
        out << oracle_json(r).dump(2) << "\n";
      } else {
        print_oracle(out, r);
      }
      return r.certified_empty() ? 0 : 10;
    }

    if (verify_cmd->parsed()) {
      const Certificate cert = certify(*system);
      const AgreementReport agreement = verify_certificate(cert, ks, flags.trials, flags.seed);
      if (json) {
        out << agreement_json(cert, agreement).dump(2) << "\n";
      } else {
        print_certificate(out, cert);
        if (!agreement.applicable) out << "oracle   not applicable to this verdict\n";
        for (const auto& c : agreement.checks) {
          out << "oracle   k=" << c.k << "  rank " << c.report.best_rank << "/" << c.report.columns << " (rows "
              << c.report.rows << ")  expected " << c.expectation << "  "
              << (c.agrees ? "agree" : "DISAGREE") << "\n";
        }
      }
      if (!agreement.applicable) return exit_code(cert.verdict);
      return agreement.agrees() ? 0 : 1;
    }

    if (enumerate_cmd->parsed()) {
      const std::vector<LinearSystem> corpus = enumerate_h_systems(max_degree);
      std::vector<EnumerateItem> items(corpus.size());
      const auto count = static_cast<std::int64_t>(corpus.size());
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        items[idx] = enumerate_one(corpus[idx], do_certify, do_oracle, ks, enumerate_flags);
      }

      std::map<std::string, std::size_t> per_verdict;
      std::size_t disagreements = 0;
      std::size_t oracle_checks = 0;
      for (const auto& item : items) {
        if (json) {
          out << item.record.dump() << "\n";
        } else {
          out << item.line << "\n";
        }
        if (!item.verdict.empty()) ++per_verdict[item.verdict];
        if (item.disagreement) ++disagreements;
        oracle_checks += item.oracle_checks;
      }
      if (json) {
        out << nlohmann::json{{"summary", {{"systems", corpus.size()},
                                           {"verdicts", per_verdict},
                                           {"oracle_checks", oracle_checks},
                                           {"disagreements", disagreements}}}}
                   .dump()
            << "\n";
      } else {
        out << "---\n" << std::left << std::setw(20) << "systems" << corpus.size() << "\n";
        for (const auto& [name, n] : per_verdict) out << std::setw(20) << name << n << "\n";
        if (do_oracle) out << std::setw(20) << "oracle checks" << oracle_checks << "\n";
        out << std::setw(20) << "disagreements" << disagreements << "\n";
      }
      return disagreements == 0 ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "lincert: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}

}  // namespace lincert
