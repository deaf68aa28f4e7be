#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int exit_code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HANOI_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("verify stab12 reports order 108", "[cli]") {
  const auto r = run("verify stab12 --depth 2");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.at("command") == "verify");
  REQUIRE(j.at("pass") == true);
  REQUIRE(j.at("results")[0].at("computed").at("|Stab(1)/Stab(2)|") == "108");
}

TEST_CASE("kernel-report gives the Klein four-group", "[cli]") {
  const auto r = run("kernel-report --n-max 2 --depth 4");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.at("results")[0].at("computed").at("kernel order") == "4");
  REQUIRE(j.at("results")[0].at("computed").at("kernel type") == "Klein four-group");
}

TEST_CASE("game commands", "[cli]") {
  const auto act = run("game act --state 2,1,3,2,2,1 --move b");
  REQUIRE(act.exit_code == 0);
  REQUIRE(nlohmann::json::parse(act.out).at("results")[0].at("computed") == "2,3,3,2,2,1");
  const auto solve = run("game solve --disks 3");
  REQUIRE(solve.exit_code == 0);
  REQUIRE(nlohmann::json::parse(solve.out).at("results")[0].at("computed").at("length") == 7);
}

TEST_CASE("exit codes for usage and resource errors", "[cli]") {
  REQUIRE(run("verify nope").exit_code == 2);
  REQUIRE(run("frobnicate").exit_code == 2);
  REQUIRE(run("qtable --depth 5").exit_code == 3);
  REQUIRE(run("game solve --disks 20").exit_code == 3);
  REQUIRE(run("game act --state 1,4 --move a").exit_code == 2);
}

TEST_CASE("verify --list covers every lemma id", "[cli]") {
  const auto r = run("verify --list");
  REQUIRE(r.exit_code == 0);
  REQUIRE(nlohmann::json::parse(r.out).at("lemmas").size() == 12);
}

TEST_CASE("relators and export", "[cli]") {
  const auto rel = run("relators --max-tau 2 --depth 5");
  REQUIRE(rel.exit_code == 0);
  REQUIRE(nlohmann::json::parse(rel.out).at("results").size() == 3 + 4 * 3 + 1);
  const auto dot = run("export portrait acab --depth 2 --format dot");
  REQUIRE(dot.exit_code == 0);
  REQUIRE(dot.out.find("digraph") != std::string::npos);
  const auto json = run("export portrait 'tau(w1)' --depth 3 --format json");
  REQUIRE(json.exit_code == 0);
  REQUIRE(nlohmann::json::parse(json.out).at("depth") == 3);
}

TEST_CASE("output is byte-stable across runs", "[cli]") {
  REQUIRE(run("verify all --depth 3").out == run("verify all --depth 3").out);
}
