#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "moorekit/cli.hpp"

namespace {

using moorekit::cli::run;
using json = nlohmann::ordered_json;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

TEST(Cli, SplitList) {
  using moorekit::cli::split_list;
  EXPECT_EQ(split_list("1, w ,w^2+1"), (std::vector<std::string>{"1", "w", "w^2+1"}));
  EXPECT_EQ(split_list("2^2:[1,0],2^2:[0,1]"), (std::vector<std::string>{"2^2:[1,0]", "2^2:[0,1]"}));
  EXPECT_TRUE(split_list("").empty());
}

TEST(Cli, MooreDet) {
  const auto r = call({"moore", "det", "--p", "2", "--s", "1", "--t", "2", "--tuple", "1,w"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1\n");
  const auto d = call({"moore", "det", "--p", "2", "--t", "2", "--tuple", "1,1"});
  EXPECT_EQ(d.out, "0\n");
  const auto i = call({"moore", "indep", "--p", "2", "--t", "2", "--tuple", "1,w"});
  EXPECT_EQ(i.out, "independent\n");
}

TEST(Cli, JsonOutputCarriesSchema) {
  const auto r = call({"--json", "moore", "cofactors", "--p", "3", "--t", "2", "--tuple", "1,w", "--signed"});
  ASSERT_EQ(r.status, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["schema"], "moorekit.report/1");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["cofactors"].size(), 2u);
}

TEST(Cli, VerifySmallestCase) {
  const auto r = call({"verify", "thm1", "--n", "2", "--m", "0", "--q", "2", "--mode", "exact"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("PASS thm1", 0), 0u) << r.out;
  const auto j = json::parse(call({"verify", "phi", "--n", "3", "--q", "2", "--trials", "20", "--format", "json"}).out);
  EXPECT_EQ(j["reports"][0]["identity_id"], "phi");
  EXPECT_EQ(j["reports"][0]["trials"], 20);
}

TEST(Cli, ExitStatuses) {
  EXPECT_EQ(call({"moore", "det", "--tuple"}).status, 2);
  EXPECT_EQ(call({"nonsense"}).status, 2);
  EXPECT_EQ(call({"moore", "det", "--p", "2", "--t", "2", "--tuple", "1,zz"}).status, 2);
  EXPECT_EQ(call({"verify", "all"}).status, 2);
  EXPECT_EQ(call({"moore", "det", "--p", "4", "--tuple", "1"}).status, 3);
  EXPECT_EQ(call({"forms", "build", "--p", "2", "--t", "4", "--basis", "1,1"}).status, 3);
  EXPECT_EQ(call({"etale", "analyze", "--p", "2", "--field", "2", "--f", "1,1"}).status, 3);
  EXPECT_EQ(call({"--help"}).status, 0);
}

TEST(Cli, OtherSubcommands) {
  auto ok = [](const std::vector<std::string>& args) {
    const auto r = call(args);
    EXPECT_EQ(r.status, 0) << r.err;
    return r.out;
  };
  EXPECT_EQ(ok({"addpoly", "subspace", "--p", "2", "--t", "2", "--basis", "1"}), "X^2 + X\n");
  EXPECT_EQ(ok({"addpoly", "kernel", "--p", "2", "--t", "2", "--coeffs", "0,1"}), "[]\n");
  EXPECT_EQ(ok({"addpoly", "compose", "--p", "2", "--t", "2", "--coeffs", "1,1", "--with", "1,1"}), "X^4 + X\n");
  EXPECT_EQ(ok({"addpoly", "divide", "--p", "2", "--t", "2", "--coeffs", "0,1,1", "--with", "1,1"}), "X^2\n");
  ok({"addpoly", "reverse", "--p", "2", "--t", "4", "--coeffs", "w,1,1"});
  ok({"addpoly", "hyperplane", "--p", "2", "--t", "4", "--basis", "1,w", "--alpha", "1,1"});
  ok({"forms", "build", "--p", "2", "--t", "4", "--basis", "1,w"});
  ok({"forms", "residues", "--p", "2", "--t", "4", "--basis", "1,w", "--alpha", "1,0"});
  EXPECT_EQ(ok({"forms", "gamma", "--p", "2", "--t", "2", "--basis", "1,w"}).rfind("gamma = ", 0), 0u);
  ok({"pairing", "gram", "--p", "3", "--t", "2", "--basis", "1,w"});
  ok({"pairing", "check-equal", "--p", "2", "--t", "4", "--basis", "1,w,w^2"});
  const auto e = json::parse(ok({"--json", "etale", "verify", "--p", "2", "--field", "2", "--f", "1,w"}));
  EXPECT_EQ(e["r"], 1);
  EXPECT_EQ(e["factor_count"], 2);
  EXPECT_EQ(e["action_table"].size(), 4u);
  EXPECT_EQ(ok({"etale", "build", "--p", "2", "--field", "1", "--f", "1"}), "r = 1, I = {1}\nQ(W) = W^2 + W + 1\nfactors: 1\n");
}

}  // namespace
