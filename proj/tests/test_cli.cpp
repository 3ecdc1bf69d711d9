#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(TORIC_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) {
    res.out.append(buf.data(), n);
    if (n < buf.size()) break;
  }
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string data(const std::string& name) {
  return std::string(DATA_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = "/tmp/ktoric_cli_" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("fan validate exit codes and payloads") {
  RunResult ok = run("fan validate " + data("p2.json"));
  CHECK(ok.exit_code == 0);
  CHECK(Json::parse(ok.out)["valid"] == true);

  RunResult bad = run("fan validate " + data("nonsmooth.json"));
  CHECK(bad.exit_code == 1);
  Json j = Json::parse(bad.out);
  CHECK(j["valid"] == false);
  bool names_cone = false;
  for (const auto& issue : j["issues"])
    if (issue["check"] == "smoothness" &&
        issue["detail"].get<std::string>().find("0-1") != std::string::npos)
      names_cone = true;
  CHECK(names_cone);
}

TEST_CASE("malformed input gives exit 1 and a structured error") {
  std::string path = write_temp("garbage.json", "{\"rank\": \"zz\"}");
  RunResult res = run("fan validate " + path);
  CHECK(res.exit_code == 1);
  CHECK(Json::parse(res.out).contains("error"));
}

TEST_CASE("fan limits on complete and non-complete fans") {
  RunResult p2 = run("fan limits " + data("p2.json"));
  CHECK(p2.exit_code == 0);
  Json j = Json::parse(p2.out);
  CHECK(j["enough_limits"] == true);
  CHECK(j["witness"].is_null());

  RunResult torus = run("fan limits " + data("torus.json"));
  CHECK(torus.exit_code == 1);
  CHECK(Json::parse(torus.out)["enough_limits"] == false);
}

TEST_CASE("kt member matches the spec example") {
  std::string elt = write_temp(
      "p1_t0.json",
      R"({"components": {"0": [{"exp":[1],"coeff":1}], "1": []}})");
  RunResult res = run("kt member " + data("p1.json") + " --mode all-pairs " + elt);
  CHECK(res.exit_code == 1);
  Json j = Json::parse(res.out);
  CHECK(j["compatible"] == false);
  CHECK(j["failing_pair"] == Json::array({0, 1}));
}

TEST_CASE("kt relations on p1xp1") {
  RunResult res = run("kt relations " + data("p1xp1.json"));
  CHECK(res.exit_code == 0);
  Json j = Json::parse(res.out);
  CHECK(j["nonfaces"] == Json::array({Json::array({0, 2}), Json::array({1, 3})}));
  CHECK(j["generators"].size() == 2);
}

TEST_CASE("kt express round-trips through kt member") {
  std::string elt = write_temp(
      "p1_u0.json",
      R"({"components": {"0": [{"exp":[1],"coeff":1}], "1": [{"exp":[0],"coeff":1}]}})");
  RunResult res = run("kt express " + data("p1.json") + " " + elt);
  CHECK(res.exit_code == 0);
  Json j = Json::parse(res.out);
  CHECK(j["compatible"] == true);
  // q = x0 is the one-step answer.
  CHECK(j["expr"] == Json::parse(R"([{"exp":[1,0],"coeff":1}])"));
}

TEST_CASE("kt k0-rank") {
  RunResult res = run("kt k0-rank " + data("p2.json"));
  CHECK(res.exit_code == 0);
  Json j = Json::parse(res.out);
  CHECK(j["rank"] == 3);
  CHECK(j["verified_against_max_cones"] == true);
}

TEST_CASE("gkm export and member") {
  RunResult graph = run("gkm export " + data("p1.json"));
  CHECK(graph.exit_code == 0);
  std::string gpath = write_temp("p1_graph.json", graph.out);

  std::string good = write_temp(
      "gkm_good.json",
      R"({"vertices": [[{"exp":[1],"coeff":1}], [{"exp":[0],"coeff":1}]]})");
  CHECK(run("gkm member " + gpath + " " + good).exit_code == 0);

  std::string bad = write_temp(
      "gkm_bad.json", R"({"vertices": [[{"exp":[1],"coeff":1}], []]})");
  RunResult res = run("gkm member " + gpath + " " + bad);
  CHECK(res.exit_code == 1);
  CHECK(Json::parse(res.out)["failing_edge"] == 0);
}

TEST_CASE("read-only commands are byte-stable") {
  for (std::string cmd : {"fan validate ", "kt relations ", "kt u-basis ",
                          "gkm export "}) {
    RunResult a = run(cmd + data("p2.json"));
    RunResult b = run(cmd + data("p2.json"));
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);
  }
}

TEST_CASE("test ideals is seed-reproducible") {
  RunResult a = run("test ideals --seed 42 --count 25");
  RunResult b = run("test ideals --seed 42 --count 25");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["ok"] == true);
}
