#include <doctest.h>

#include <set>

#include <json.hpp>

#include "lzeta/commands.hpp"

using namespace lzeta;

namespace {

RunConfig config(const std::string& command, std::uint32_t p, unsigned n = 1) {
  RunConfig c;
  c.command = command;
  c.p = p;
  c.n = n;
  return c;
}

int code_of(const RunConfig& c) {
  try {
    return run(c).exit_code;
  } catch (const Error& e) {
    return exit_code(e.kind());
  }
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("orbit tables") {
    const auto j = nlohmann::json::parse(run(config("orbits", 7)).text);
    CHECK(j["total"] == 21);
    CHECK(j["fibers"].size() == 6);
    CHECK(j["fibers"][0]["count"] == 4);
    CHECK(j["fibers"][0]["nonregular"] == 2);
    CHECK(j["fibers"][1]["count"] == 3);
  }

  TEST_CASE("fiber over an odd exceptional point") {
    RunConfig c = config("fibers", 5);
    c.zeta = "basic-odd";
    c.point = "ext-left:t=2";
    const auto j = nlohmann::json::parse(run(c).text);
    CHECK(j["size"] == 1);
    CHECK(j["ramified"] == true);
    CHECK(j["fiber"].size() == 2);
  }

  TEST_CASE("verify passes and is deterministic") {
    RunConfig c = config("verify", 5, 2);
    c.zeta = "basic-even";
    const RunOutput a = run(c);
    CHECK(a.exit_code == 0);
    CHECK(a.text == run(c).text);
    const auto j = nlohmann::json::parse(a.text);
    CHECK(j["pass"] == true);
    std::set<std::string> names;
    for (const auto& chk : j["checks"]) names.insert(chk["name"].get<std::string>());
    CHECK(names.count("theorem-even") == 1);
    CHECK(names.count("commuting-square-even") == 1);
  }

  TEST_CASE("central characters that need the quadratic extension") {
    RunConfig c = config("curve", 5);
    c.zeta = "0:3";
    const auto j = nlohmann::json::parse(run(c).text);
    CHECK(j["working_degree"] == 2);
  }

  TEST_CASE("distinct exit codes") {
    RunConfig bad_point = config("fibers", 5);
    bad_point.point = "node-9";
    RunConfig mismatch = config("fibers", 5);
    mismatch.zeta = "basic-even";
    mismatch.point = "ext-left:t=2";
    const std::set<int> codes{code_of(config("orbits", 3)), code_of(bad_point), code_of(mismatch),
                              code_of(config("nonsense", 5))};
    CHECK(codes.size() == 4);
    CHECK(code_of(config("orbits", 3)) == exit_code(ErrorKind::UnsupportedPrime));
    CHECK(code_of(bad_point) == exit_code(ErrorKind::UnknownPoint));
    CHECK(code_of(mismatch) == exit_code(ErrorKind::ParityMismatch));
    CHECK(code_of(config("orbits", 5, 5)) == exit_code(ErrorKind::InvalidArgument));
  }

  TEST_CASE("dot output") {
    RunConfig c = config("curve", 7);
    c.zeta = "basic-odd";
    c.format = OutputFormat::Dot;
    const std::string dot = run(c).text;
    CHECK(dot.rfind("graph X_zeta {", 0) == 0);
    CHECK(dot.find("n0 -- n1") != std::string::npos);
    CHECK(dot.find("t=2") != std::string::npos);
  }
}
