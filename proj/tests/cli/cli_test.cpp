#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "gtest/gtest.h"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string command = std::string(GLUING_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args) {
  const auto r = run(args + " --json");
  EXPECT_EQ(r.code, 0) << args;
  return nlohmann::json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("gluing_cli_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

TEST(Cli, GluingsCensus) {
  const auto doc = run_json("gluings --components std:C3,std:C4");
  std::multiset<int> s;
  for (const auto& g : doc["gluings"]) s.insert(g["s"].get<int>());
  EXPECT_EQ(s, (std::multiset<int>{1, 1, 2, 3}));
  const auto repeated = run_json("gluings --components g6:A_ --components std:P3");
  EXPECT_EQ(repeated["gluings"].size(), 5u);
}

TEST(Cli, CountMethodsAgree) {
  const std::string host = temp_file("host.el", "6 9\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n0 3\n1 4\n2 5\n");
  const std::string args = "count --pattern g6:FwCGg --host " + host;  // C3 + C4
  const auto formula = run_json(args + " --method formula");
  const auto direct = run_json(args + " --method direct");
  const auto oracle = run_json(args + " --method oracle");
  EXPECT_EQ(formula["count"], direct["count"]);
  EXPECT_EQ(formula["count"], oracle["count"]);
  const auto k3 = run_json("count --pattern std:C3 --host std:K5");
  EXPECT_EQ(k3["count"].get<int>(), 10);
}

TEST(Cli, Coefficients) {
  const auto doc = run_json("coeffs --components std:P1,std:P2");
  int negative_sum = 0;
  for (const auto& t : doc["terms"]) {
    if (t["monomial"].size() == 1) negative_sum -= t["coefficient"].get<int>();
  }
  EXPECT_EQ(negative_sum, 2 + 2 + 3 + 3);
}

TEST(Cli, Compose) {
  const auto pair = run_json("compose --components std:C3,std:C4");
  EXPECT_EQ(pair["s"].get<int>(), 1);
  EXPECT_TRUE(pair["uniqueness_verified"].get<bool>());
  const auto chain = run_json("compose --components std:C3,std:C4,std:C5");
  EXPECT_EQ(chain["case"], "CHAIN");
  EXPECT_EQ(run("compose --components std:C3,g6:Bw").code, 2);
  EXPECT_EQ(run("compose --components std:C3").code, 2);
  EXPECT_EQ(run("compose --components std:C3,std:K4,std:C5").code, 2);
}

TEST(Cli, Classify) {
  const auto doc = run_json("classify --g1 std:P1 --g2 std:P3 --q 2 --n 20");
  EXPECT_EQ(doc["mass"], (nlohmann::json{"3/4", "1/4"}));
  const auto point = run_json("classify --g1 std:E1 --g2 std:C3 --q 4 --n 23");
  EXPECT_EQ(point["mass"], (nlohmann::json{"1/1", "0/1", "0/1", "0/1"}));
}

TEST(Cli, ExperimentIsDeterministic) {
  const std::string args =
      "experiment --components std:P1,std:P3 --n 12 --q 2 --samples 200 --seed 5";
  const auto one = run_json(args + " --jobs 1");
  const auto three = run_json(args + " --jobs 3");
  EXPECT_EQ(one["counts"], three["counts"]);
  EXPECT_EQ(one["config"]["seed"].get<int>(), 5);
  EXPECT_TRUE(one.contains("generator"));
  const auto formula = run_json(args + " --method formula");
  EXPECT_EQ(formula["counts"], one["counts"]);
}

TEST(Cli, ExperimentWithPredictionFile) {
  const std::string spec = temp_file("spec.json", R"({"q": 4, "mass": ["1", 0, 0, 0]})");
  const auto r = run("experiment --components std:E1,std:C3 --n 23 --q 4 --samples 50 --predict " +
                     spec + " --json");
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["tv"].get<double>(), 0.0);
  EXPECT_EQ(doc["predicted"]["law"], "custom");
  // A prediction that cannot hold fails verification.
  const std::string wrong = temp_file("wrong.json", R"([0, 1, 0, 0])");
  EXPECT_EQ(run("experiment --components std:E1,std:C3 --n 23 --q 4 --samples 50 --predict " +
                wrong)
                .code,
            1);
}

TEST(Cli, UsageAndParseErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("count --pattern std:C3").code, 2);
  EXPECT_EQ(run("count --pattern std:C3 --host g6:~~~").code, 2);
  EXPECT_EQ(run("count --pattern std:Q9 --host std:K4").code, 2);
  EXPECT_EQ(run("count --pattern std:C3 --host /nonexistent/file").code, 2);
  const std::string bad = temp_file("bad.el", "2 1\n0 2\n");
  EXPECT_EQ(run("count --pattern std:C3 --host " + bad).code, 2);
  EXPECT_EQ(run("experiment --components std:C3,std:C4 --n 5 --q 2").code, 2);
  EXPECT_EQ(run("experiment --components std:C3,std:C4,std:C5 --n 15 --q 2 --samples 5").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, SelftestQuick) {
  const auto r = run("selftest --level quick");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

}  // namespace
