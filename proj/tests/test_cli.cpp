#include "cteleport/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

using namespace cteleport;
using namespace cteleport::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cteleport");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_with_args(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(cli, parse_theta_aliases) {
  EXPECT_DOUBLE_EQ(parse_theta("0"), 0.0);
  EXPECT_DOUBLE_EQ(parse_theta("0.7853981633974483"), 0.7853981633974483);
  EXPECT_DOUBLE_EQ(parse_theta("pi/4"), std::numbers::pi / 4);
  EXPECT_DOUBLE_EQ(parse_theta("pi/2"), std::numbers::pi / 2);
  EXPECT_DOUBLE_EQ(parse_theta("-pi/2"), -std::numbers::pi / 2);
  EXPECT_DOUBLE_EQ(parse_theta("3*pi/4"), 3 * std::numbers::pi / 4);
  EXPECT_DOUBLE_EQ(parse_theta("pi"), std::numbers::pi);
  EXPECT_THROW(parse_theta("45deg"), std::invalid_argument);
  EXPECT_THROW(parse_theta("pi*2"), std::invalid_argument);
  EXPECT_THROW(parse_theta("pi/0"), std::invalid_argument);
}

TEST(cli, parse_pair_and_coefficients) {
  EXPECT_EQ(parse_pair("1,4"), (std::array<int, 2>{1, 4}));
  EXPECT_THROW(parse_pair("1"), std::invalid_argument);
  EXPECT_THROW(parse_pair("1,x"), std::invalid_argument);
  const auto c = parse_coefficients("0.5,0.5:0.5,-0.5,0:1");
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[1], Amplitude(0.5, 0.5));
  EXPECT_EQ(c[3], Amplitude(0, 1));
  EXPECT_THROW(parse_coefficients("1:2:3"), std::invalid_argument);
}

TEST(cli, purity_json) {
  const auto r = invoke({"purity", "--state", "man_m5", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["pairs"]["13"].get<double>(), 0.5);
  EXPECT_EQ(j["pairs"]["24"].get<double>(), 0.5);
  for (const auto& key : {"12", "23", "34", "45", "35", "14", "25", "15"}) {
    EXPECT_NEAR(j["pairs"][key].get<double>(), 0.25, 1e-12) << key;
  }
  EXPECT_FALSE(j["mmes"].get<bool>());
  EXPECT_EQ(j["worst_pair"], "13");
  EXPECT_NEAR(j["max_deviation"].get<double>(), 0.25, 1e-12);
}

TEST(cli, criterion_fail_exit_code) {
  const auto r = invoke({"criterion", "--state", "brown", "--alice", "1,4", "--bob", "2,3",
                         "--charlie", "5", "--theta", "0.7853981633974483"});
  EXPECT_EQ(r.code, kExitVerdictFail);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);

  const auto ok = invoke({"criterion", "--state", "brown", "--theta", "1.234", "--output", "json"});
  EXPECT_EQ(ok.code, kExitOk);
  const auto j = Json::parse(ok.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["assignment"]["alice"], Json::parse("[1,2]"));
  EXPECT_EQ(j["assignment"]["charlie"], 5);
  for (const auto& key : {"theta", "sigma111_defect", "sigma112_defect", "purity_alice_pair",
                          "purity_bob_pair"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(cli, teleport_brown) {
  const auto r = invoke({"teleport", "--state", "brown", "--alice", "1,2", "--bob", "3,4",
                         "--charlie", "5", "--theta", "0", "--input", "1,0,0,0", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  ASSERT_EQ(j["records"].size(), 32u);
  for (const auto& rec : j["records"]) {
    EXPECT_NEAR(rec["probability"].get<double>(), 0.03125, 1e-15);
    EXPECT_NEAR(rec["fidelity"].get<double>(), 1.0, 1e-12);
  }
  EXPECT_EQ(j["records"][0]["outcome"], Json::parse("[1,1,1]"));
  EXPECT_NEAR(j["average_fidelity"].get<double>(), 1.0, 1e-12);
}

TEST(cli, seeded_output_is_byte_identical) {
  const std::vector<std::string> args{"teleport", "--state", "man_m5", "--input", "random",
                                      "--seed", "42", "--theta", "pi/4", "--output", "json"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Json::parse(a.out)["seed"], 42);
  const auto c = invoke({"teleport", "--state", "man_m5", "--input", "random", "--seed", "43",
                         "--theta", "pi/4", "--output", "json"});
  EXPECT_NE(a.out, c.out);
}

TEST(cli, table_carries_json_values) {
  const std::vector<std::string> base{"criterion", "--state", "man_m5", "--theta", "0.3"};
  auto json_args = base;
  json_args.insert(json_args.end(), {"--output", "json"});
  const auto j = Json::parse(invoke(json_args).out);
  const auto table = invoke(base).out;
  char buf[40];
  for (const auto& key : {"sigma111_defect", "sigma112_defect", "purity_alice_pair"}) {
    std::snprintf(buf, sizeof buf, "%.17g", j[key].get<double>());
    EXPECT_NE(table.find(buf), std::string::npos) << key;
    EXPECT_EQ(std::stod(buf), j[key].get<double>());
  }
}

TEST(cli, scan_and_eq5check) {
  const auto s = invoke({"scan", "--state", "brown", "--output", "json"});
  ASSERT_EQ(s.code, 0) << s.err;
  const auto j = Json::parse(s.out);
  ASSERT_EQ(j.size(), 30u);
  EXPECT_EQ(j[0]["kind"], "all_theta");
  for (const auto& key : {"alice", "bob", "charlie", "kind", "roots", "min_defect",
                          "argmin_theta", "purity_alice", "purity_bob"}) {
    EXPECT_TRUE(j[0].contains(key)) << key;
  }
  EXPECT_NE(invoke({"scan", "--state", "brown"}).out.find("discrete_theta"), std::string::npos);

  const auto e = invoke({"eq5check", "--state", "man_m5", "--theta", "0.3", "--output", "json"});
  ASSERT_EQ(e.code, 0);
  EXPECT_TRUE(Json::parse(e.out)["holds"].get<bool>());
}

TEST(cli, input_errors_exit_2) {
  EXPECT_EQ(invoke({"purity", "--state", "nonexistent_state"}).code, kExitInputError);
  EXPECT_EQ(invoke({"purity"}).code, kExitInputError);
  EXPECT_EQ(invoke({"bogus"}).code, kExitInputError);
  EXPECT_EQ(invoke({"purity", "--state", "bell_phi_plus"}).code, kExitInputError);
  EXPECT_EQ(invoke({"criterion", "--state", "brown", "--alice", "1,2", "--bob", "2,3"}).code,
            kExitInputError);
  EXPECT_EQ(invoke({"criterion", "--state", "brown", "--theta", "abc"}).code, kExitInputError);
  EXPECT_EQ(invoke({"criterion", "--state", "brown", "--tol", "0"}).code, kExitInputError);
  EXPECT_EQ(invoke({"teleport", "--state", "brown", "--input", "1,1,0,0"}).code, kExitInputError);
  EXPECT_EQ(invoke({"teleport", "--state", "brown", "--input", "1,0,0"}).code, kExitInputError);
  EXPECT_EQ(invoke({"purity", "--state", "brown", "--output", "xml"}).code, kExitInputError);
}

TEST(cli, malformed_file_names_line) {
  const auto path = std::filesystem::temp_directory_path() / "cteleport_cli_bad.txt";
  {
    std::ofstream out(path);
    out << "00000 1 0\nzzzzz 0 0\n";
  }
  const auto r = invoke({"purity", "--state", path.string()});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find(path.string() + ":2:"), std::string::npos) << r.err;
  std::filesystem::remove(path);
}

TEST(cli, state_file_input) {
  const auto path = std::filesystem::temp_directory_path() / "cteleport_cli_ghz.json";
  {
    std::ofstream out(path);
    Json amps = Json::array();
    for (int k = 0; k < 32; ++k) amps.push_back({k == 0 || k == 31 ? std::sqrt(0.5) : 0.0, 0.0});
    out << Json{{"num_qubits", 5}, {"amplitudes", amps}}.dump();
  }
  const auto r = invoke({"purity", "--state", path.string(), "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(Json::parse(r.out)["pairs"]["12"].get<double>(), 0.5, 1e-12);
  std::filesystem::remove(path);
}
