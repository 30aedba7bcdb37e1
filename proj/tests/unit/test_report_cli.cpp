#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "unmix/cli.hpp"
#include "unmix/decomp.hpp"
#include "unmix/report.hpp"

using namespace unmix;

namespace {
CliResult run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  return run_cli(args, in);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

struct EnvGuard {
  std::string name;
  EnvGuard(const std::string& n, const std::string& value) : name(n) {
    setenv(n.c_str(), value.c_str(), 1);
  }
  ~EnvGuard() { unsetenv(name.c_str()); }
};
}  // namespace

TEST_CASE("json report of the second worked system") {
  auto sys = oracle::load_fixture("example_2_2_8.psys");
  auto d = unm_var_dec(sys.polys);
  REQUIRE(d.components.size() == 1);
  CHECK(d.components[0].dimension == 1);
  auto json = emit_result(*sys.order, d.components, Format::json);
  CHECK(json.find("\"dimension\": 1") != std::string::npos);
  CHECK(json.find("\"source_chain\"") != std::string::npos);
  CHECK(json == emit_result(*sys.order, d.components, Format::json));

  auto text = emit_result(*sys.order, d.components, Format::text);
  CHECK(text.rfind("vars x1 x2 x3 x4\ncomponents 1\n\ndim=1\n", 0) == 0);
}

TEST_CASE("uset subcommand") {
  auto r = run({"uset", oracle::fixture_path("example_2_2_5.psys")});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("U_T = {x2}") != std::string::npos);
  auto star = run({"uset", oracle::fixture_path("example_2_2_5_tstar.psys")});
  CHECK(star.out.find("U_T = {}") != std::string::npos);
}

TEST_CASE("standard input and files agree") {
  for (std::string cmd : {"parse", "uset", "charset", "charser", "gb", "sat", "decompose"}) {
    auto path = oracle::fixture_path(cmd == "uset" || cmd == "sat" ? "example_2_2_5.psys"
                                                                  : "example_2_2_8.psys");
    auto from_file = run({cmd, path});
    auto from_stdin = run({cmd, "-"}, slurp(path));
    CAPTURE(cmd);
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.out == from_stdin.out);
  }
  auto file = run({"prem", "--poly", "x4^3", oracle::fixture_path("example_2_2_5.psys")});
  auto in = run({"prem", "--poly", "x4^3", "-"}, slurp(oracle::fixture_path("example_2_2_5.psys")));
  CHECK(file.exit_code == 0);
  CHECK(file.out == in.out);
}

TEST_CASE("decompose output") {
  auto r = run({"decompose", oracle::fixture_path("example_4_3.psys"), "--format", "json"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"dimension\": 2") != std::string::npos);
  CHECK(r.out.rfind("{\n  \"vars\"", 0) == 0);
}

TEST_CASE("verify flag") {
  auto r = run({"decompose", oracle::fixture_path("example_4_3.psys"), "--verify"});
  CHECK(r.exit_code == 0);
  CHECK(r.err.find("verify: same variety as --method classic: ok") != std::string::npos);
  CHECK(r.err.find("FAILED") == std::string::npos);
}

TEST_CASE("errors and exit codes") {
  auto malformed = run({"parse", "-"}, "vars x1\nx1+*\n");
  CHECK(malformed.exit_code == 2);
  CHECK(malformed.err.rfind("error: ", 0) == 0);
  CHECK(malformed.err.find("line 2") != std::string::npos);
  CHECK(malformed.out.empty());

  CHECK(run({"parse", "/nonexistent/file.psys"}).exit_code == 2);
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate", "-"}).exit_code == 2);
  CHECK(run({"gb", "-", "--format", "xml"}, "vars x\nx\n").exit_code == 2);
  CHECK(run({"prem", "-"}, "vars x\nx\n").exit_code == 2);
  CHECK(run({"gb", "-", "--max-pairs", "0"}, "vars x\nx\n").exit_code == 2);

  auto limited = run({"charser", oracle::fixture_path("example_4_3.psys"), "--max-pops", "1"});
  CHECK(limited.exit_code == 3);
  CHECK(limited.err.rfind("error: resource limit", 0) == 0);

  CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("environment ceilings and flag precedence") {
  auto path = oracle::fixture_path("example_4_3.psys");
  {
    EnvGuard env("UNMIX_MAX_POPS", "1");
    CHECK(run({"charser", path}).exit_code == 3);
    CHECK(run({"charser", path, "--max-pops", "10000"}).exit_code == 0);
  }
  {
    EnvGuard env("UNMIX_MAX_PAIRS", "1");
    CHECK(run({"gb", path}).exit_code == 3);
    CHECK(run({"gb", path, "--max-pairs", "100000"}).exit_code == 0);
  }
  CHECK(run({"charser", path}).exit_code == 0);
}

TEST_CASE("outputs are byte-identical across runs and thread counts") {
  auto path = oracle::fixture_path("example_4_3.psys");
  auto base = run({"decompose", path, "--format", "json"});
  for (std::string threads : {"1", "2", "4"}) {
    auto again = run({"decompose", path, "--format", "json", "--threads", threads});
    CHECK(again.out == base.out);
  }
  CHECK(run({"decompose", path, "--format", "json", "--serial"}).out == base.out);
  auto cs = run({"charser", path});
  CHECK(run({"charser", path, "--serial"}).out == cs.out);
}
