#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = freefam::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("cumulants subcommand") {
  auto r = run({"cumulants", "--num", "1", "--den", "1,-1", "--m0", "0", "--order", "6"});
  CHECK(r.code == freefam::cli::kExitOk);
  CHECK(r.out == "[0,1,1,2,5,14]\n");
  CHECK(r.err.empty());
}

TEST_CASE("check subcommand") {
  auto r = run({"check", "--num", "1,0,-2", "--den", "1", "--m0", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"overall\":false") != std::string::npos);
  CHECK(r.out.find("\"name\":\"second_derivative_bound\",\"passed\":false") != std::string::npos);

  auto ok = run({"check", "--num", "1"});
  CHECK(ok.out.find("\"overall\":true") != std::string::npos);
  CHECK(ok.out.find("\"infinitely_divisible\":true") != std::string::npos);
}

TEST_CASE("meixner subcommand") {
  auto r = run({"meixner", "--a", "2", "--b", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "[{\"location\":-0.5,\"mass\":0.75}]\n");

  auto csv = run({"meixner", "--a", "2", "--b", "0", "--output", "csv", "--points", "10"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("x,density\n", 0) == 0);
  CHECK(lines(csv.out) == 11);

  auto clamped = run({"meixner", "--a", "1", "--b", "-0.5"});
  CHECK(clamped.code == 0);
  CHECK(clamped.err.find("clamped") != std::string::npos);

  CHECK(run({"meixner", "--a", "0", "--b", "-2"}).code == freefam::cli::kExitValidation);
}

TEST_CASE("sequence subcommands") {
  CHECK(run({"variance", "--values", "0,1,1,2,5,14,42"}).out == "[1,1,1,1,1,1]\n");
  CHECK(run({"moments", "--from", "cumulants", "--values", "0,1,0,0,0,0"}).out == "[0,1,0,2,0,5]\n");
  CHECK(run({"moments", "--from", "moments", "--values", "0,1,0,2,0,5"}).out == "[0,1,0,0,0,0]\n");
  CHECK(run({"moments", "--values", "0,1,0,0", "--order", "4"}).out == "[0,1,0,2]\n");
  CHECK(run({"convolve", "--left", "0,1,0", "--right", "0,1,0"}).out == "[0,2,0]\n");
  CHECK(run({"clt", "--values", "0,1,1,1", "--n", "100"}).out == "[0,1,0.1,0.01]\n");
  CHECK(run({"clt", "--values", "1,1", "--n", "100"}).code == 2);
}

TEST_CASE("power subcommand") {
  auto r = run({"power", "--num", "1", "--lambda", "2", "--order", "4"});
  CHECK(r.out == "{\"cumulants\":[0,0.5,0,0],\"formal\":false}\n");
  CHECK(run({"power", "--num", "1", "--lambda", "0.5"}).code == 2);
  auto formal = run({"power", "--num", "1", "--lambda", "0.5", "--formal", "--order", "4"});
  CHECK(formal.code == 0);
  CHECK(formal.out == "{\"cumulants\":[0,2,0,0],\"formal\":true}\n");
}

TEST_CASE("family subcommand") {
  auto r = run({"family", "--num", "1", "--m", "0.5", "--points", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("x,density\n", 0) == 0);
  CHECK(lines(r.out) == 6);
  CHECK(run({"family", "--num", "1", "--m", "1.5"}).code == 2);
  CHECK(run({"family", "--num", "1", "--m", "0.2", "--mean", "1"}).code == 2);
  auto meixner = run({"family", "--num", "1,2", "--generator", "meixner", "--a", "2", "--b", "0", "--m", "0.1",
                      "--output", "json"});
  CHECK(meixner.code == 0);
  CHECK(meixner.out.find("\"location\":-0.5") != std::string::npos);
}

TEST_CASE("mp-approx subcommand") {
  auto r = run({"mp-approx", "--num", "1,1", "--m", "0.3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("{\"grid\":[100,1000,10000],\"distances\":[", 0) == 0);
  CHECK(run({"mp-approx", "--num", "1,1", "--m", "0.9"}).code == 2);
}

TEST_CASE("exit codes and diagnostics") {
  auto bogus = run({"bogus"});
  CHECK(bogus.code == freefam::cli::kExitValidation);
  CHECK(lines(bogus.err) == 1);
  CHECK(bogus.out.empty());

  auto malformed = run({"cumulants", "--num", "1,x"});
  CHECK(malformed.code == 2);
  CHECK(lines(malformed.err) == 1);

  CHECK(run({}).code == 2);
  CHECK(run({"cumulants"}).code == 2);
  CHECK(run({"cumulants", "--num", "1", "--order", "2"}).code == 2);
  CHECK(run({"cumulants", "--num", "0,1"}).code == 2);
  CHECK(run({"cumulants", "--num", "1", "--output", "xml"}).code == 2);

  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("mp-approx") != std::string::npos);
  auto sub_help = run({"cumulants", "--help"});
  CHECK(sub_help.code == 0);
  CHECK(sub_help.out.find("--num") != std::string::npos);
}

TEST_CASE("FREEFAM_ORDER sets the default order") {
  ::setenv("FREEFAM_ORDER", "5", 1);
  auto r = run({"cumulants", "--num", "1", "--den", "1,-1"});
  auto explicit_order = run({"cumulants", "--num", "1", "--den", "1,-1", "--order", "4"});
  ::unsetenv("FREEFAM_ORDER");
  CHECK(r.out == "[0,1,1,2,5]\n");
  CHECK(explicit_order.out == "[0,1,1,2]\n");
  CHECK(lines(run({"cumulants", "--num", "1"}).out) == 1);
  CHECK(run({"cumulants", "--num", "1"}).out == "[0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0]\n");
}

TEST_CASE("output is byte-deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"cumulants", "--num", "1,0.3,0.7", "--den", "1,0.1", "--m0", "0.2"},
      {"check", "--num", "1,-1", "--den", "1,1"},
      {"meixner", "--a", "0.7", "--b", "0.3", "--output", "csv"},
      {"mp-approx", "--num", "1,1,1", "--m", "0.2"},
  };
  for (const auto& cmd : commands) {
    auto first = run(cmd);
    auto second = run(cmd);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
  }
  // Shortest round-trip: 0.1 stays 0.1 and 1/3 keeps 17 significant digits.
  CHECK(run({"convolve", "--left", "0.1", "--right", "0.23333333333333334"}).out == "[0.33333333333333337]\n");
}
