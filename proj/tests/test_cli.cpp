#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "efg/cli.hpp"
#include "efg/wire.hpp"

using efg::Json;
using efg::cli::run_command;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bernoulli json") {
  const Run r = run({"bernoulli", "--order", "8", "--format", "json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j == Json::array({"1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30"}));
}

TEST_CASE("ap single prime") {
  const Run r = run({"ap", "--a", "-1", "--b", "0", "--p", "5", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out) == Json{{"p", 5}, {"ap", -2}, {"type", "good"}});
}

TEST_CASE("honda exit codes") {
  Run r = run({"honda", "--a", "-1", "--b", "0", "--pmax", "7", "--order", "11"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2 passed, 0 failed") != std::string::npos);
  r = run({"honda", "--a", "-1", "--b", "0", "--pmax", "11", "--order", "11"});
  CHECK(r.code == 2);
}

TEST_CASE("text table for honda") {
  const Run r = run({"honda", "--a", "0", "--b", "1", "--pmax", "7", "--order", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("     p           b_p     a_p  pass") != std::string::npos);
  CHECK(r.out.find("     7             3      -4  yes") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"nosuch"}).code == 2);
  CHECK(run({"honda", "--a", "1"}).code == 2);
  CHECK(run({"honda", "--a", "1", "--b", "1", "--g2", "1", "--g3", "1"}).code == 2);
  CHECK(run({"wp-expand", "--g2", "0", "--g3", "0"}).code == 2);
  CHECK(run({"bernoulli", "--format", "xml"}).code == 2);
  CHECK(run({"ap", "--a", "1", "--b", "1", "--p", "4"}).code == 2);
  CHECK(run({"wp-expand", "--g2", "1/0", "--g3", "1"}).code == 2);
  const Run r = run({"asd", "--a", "-1", "--b", "0"});
  CHECK(r.code == 2);
  CHECK(!r.err.empty());
}

TEST_CASE("every subcommand has help naming its identity") {
  const std::vector<std::pair<std::string, std::string>> expect = {
      {"bernoulli", "T/(e^T - 1)"},     {"hurwitz-bh", "BH_k = 2k G_k"},
      {"wp-expand", "4x^3 - g2 x - g3"}, {"formal-log", "sum a_n/n T^n"},
      {"formal-exp", "f_E(f_L(T)) = T"}, {"group-law", "f_E(f_L(X) + f_L(Y))"},
      {"ap", "sum a_n n^-s"},           {"an", "sum a_n n^-s"},
      {"honda", "f_L(T) = sum a_n/n T^n"}, {"asd", "b_np - a_p b_n"},
      {"bh-compare", "BH_k = 2k G_k"},  {"eq10", "F(X, Y) = f_E(f_L(X) + f_L(Y))"}};
  for (const auto& [cmd, phrase] : expect) {
    const Run r = run({cmd, "--help"});
    CAPTURE(cmd);
    CHECK(r.code == 0);
    CHECK(r.out.find(phrase) != std::string::npos);
  }
}

TEST_CASE("byte-identical output") {
  const std::vector<std::string> args = {"group-law", "--ainvs", "0,-1,1,-10,-20", "--order", "8",
                                         "--format", "json"};
  const Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.back() == '\n');
}

TEST_CASE("empty report") {
  CHECK(efg::cli::emit_report({}, efg::cli::Format::json) == "{}\n");
}

TEST_CASE("curve forms") {
  // (g2, g3) = (1, 0) converts with u = 2
  Run r = run({"formal-log", "--g2", "1", "--g3", "0", "--order", "6", "--format", "json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["model"]["scale"] == "2");
  CHECK(j["model"]["a4"] == "-4");
  CHECK(j["b_n"]["5"] == "-8");

  // --a/--b feeds y^2 = 4x^3 - g2 x - g3 with g2 = -4a, g3 = -4b
  r = run({"hurwitz-bh", "--a", "-1", "--b", "0", "--order", "4", "--source", "eisenstein",
           "--format", "json"});
  j = Json::parse(r.out);
  CHECK(j["g2"] == "4");
  CHECK(j["values"]["4"] == "8/5");
}

TEST_CASE("remaining subcommands run") {
  CHECK(run({"wp-expand", "--g2", "1/2", "--g3", "3"}).code == 0);
  CHECK(run({"formal-exp", "--a", "2", "--b", "-1", "--order", "10"}).code == 0);
  CHECK(run({"an", "--ainvs", "0,-1,1,-10,-20", "--nmax", "30"}).code == 0);
  CHECK(run({"ap", "--a", "-1", "--b", "1", "--pmax", "50", "--format", "json"}).code == 0);
  CHECK(run({"asd", "--a", "-1", "--b", "0", "--p", "5", "--order", "26"}).code == 0);
  CHECK(run({"bh-compare", "--g2", "3", "--g3", "5", "--order", "8"}).code == 0);
  CHECK(run({"eq10", "--a", "-2", "--b", "3", "--order", "10"}).code == 0);
}

TEST_CASE("output file") {
  const std::string path =
      (std::filesystem::temp_directory_path() / "efg_cli_test_output.json").string();
  CHECK(run({"bernoulli", "--order", "2", "--format", "json", "--output", path}).code == 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  f.close();
  std::filesystem::remove(path);
  CHECK(Json::parse(ss.str()) == Json::array({"1", "-1/2", "1/6"}));
}
