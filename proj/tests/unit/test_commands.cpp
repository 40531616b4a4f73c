#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "lincert/commands.hpp"

using namespace lincert;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("certify exit codes follow the verdict") {
  CHECK(invoke({"certify", "6(2^8,1^4)"}).code == 0);
  CHECK(invoke({"certify", "6(2^8,1^4)", "--json"}).code == 0);
  CHECK(invoke({"certify", "3(1^9)"}).code == 10);
  CHECK(invoke({"certify", "2(1^4)"}).code == 11);
  CHECK(invoke({"certify", "10(3,2^9,1^55)"}).code == 12);
}

TEST_CASE("certify --json emits the certificate") {
  const Result r = invoke({"certify", "6(2^8,1^4)", "--json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"]["kind"] == "EmptyAllMultiples");
  CHECK(j["schema"] == 1);
  CHECK(j["trace"].back()["axiom"] == "SPECIAL_6A");
}

TEST_CASE("oracle subcommand") {
  const Result cubic = invoke({"oracle", "3(1^9)"});
  CHECK(cubic.code == 10);
  CHECK(cubic.out.find("corank     1") != std::string::npos);
  CHECK(cubic.out.find("LikelyDimension(0)") != std::string::npos);

  const Result empty = invoke({"oracle", "6(2^8,1^4)", "--k", "2", "--trials", "1", "--json"});
  CHECK(empty.code == 0);
  const auto j = nlohmann::json::parse(empty.out);
  CHECK(j["columns"] == 91);
  CHECK(j["rows"] == 92);
  CHECK(j["best_rank"] == 91);

  // Seeds change the primes but not the verdict.
  const auto a = nlohmann::json::parse(invoke({"oracle", "3(1^9)", "--seed", "5", "--json"}).out);
  const auto b = nlohmann::json::parse(invoke({"oracle", "3(1^9)", "--seed", "5", "--json"}).out);
  CHECK(a["primes"] == b["primes"]);
  CHECK(a["ranks"] == b["ranks"]);
  CHECK(a["trials"] == 3);
  CHECK(a["ranks"].size() == 3);
}

TEST_CASE("stats, check and reduce") {
  const Result s = invoke({"stats", "7(3,2^5,1^20)", "--json"});
  CHECK(s.code == 0);
  const auto j = nlohmann::json::parse(s.out);
  CHECK(j["anticanonical"] == -12);

  CHECK(invoke({"check", "6(2^8,1^4)"}).code == 0);
  const Result bad = invoke({"check", "L_2(1^4)"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("(ii) e = -1") != std::string::npos);

  const Result red = invoke({"reduce", "7(4,2^5,1^13)"});
  CHECK(red.code == 0);
  CHECK(red.out.find("result  5(2^2,1^17)  (2 steps)") != std::string::npos);
  CHECK(invoke({"reduce", "5(3^2)"}).code == 1);
}

TEST_CASE("verify subcommand") {
  CHECK(invoke({"verify", "6(2^8,1^4)", "--ks", "1,2", "--trials", "1"}).code == 0);
  CHECK(invoke({"verify", "3(1^9)"}).code == 0);
  CHECK(invoke({"verify", "2(1^4)"}).code == 11);
}

TEST_CASE("usage errors exit 64") {
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"frobnicate"}).code == kExitUsage);
  const Result r = invoke({"certify", "6(2^8,)"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("offset 5") != std::string::npos);
  CHECK(r.out.empty());
  CHECK(invoke({"oracle", "3(1^9)", "--trials", "0"}).code == kExitUsage);
  CHECK(invoke({"enumerate"}).code == kExitUsage);
  CHECK(invoke({"certify", "--help"}).code == 0);
}

TEST_CASE("enumerate cross-check on a small corpus") {
  const Result r = invoke({"enumerate", "--max-degree", "6", "--certify", "--oracle"});
  CHECK(r.code == 0);
  CHECK(r.out.find("disagreements       0") != std::string::npos);

  const Result j = invoke({"enumerate", "--max-degree", "4", "--certify", "--json"});
  CHECK(j.code == 0);
  std::istringstream lines(j.out);
  std::string line, last;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    last = line;
    ++n;
  }
  const auto summary = nlohmann::json::parse(last)["summary"];
  CHECK(summary["systems"] == n - 1);
  CHECK(summary["disagreements"] == 0);
}

TEST_CASE("exit codes do not depend on output format") {
  for (const char* lit : {"6(2^8,1^4)", "3(1^9)", "2(1^4)", "9(3^9)", "10(3,2^9,1^55)"}) {
    CHECK(invoke({"certify", lit}).code == invoke({"certify", lit, "--json"}).code);
    CHECK(invoke({"oracle", lit, "--trials", "1"}).code == invoke({"oracle", lit, "--trials", "1", "--json"}).code);
  }
}
