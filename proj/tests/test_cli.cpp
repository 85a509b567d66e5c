#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "lidzeta/cli.hpp"
#include "lidzeta/output.hpp"
#include "test_support.hpp"

using namespace lidzeta;
using lidzeta::testing::Gen;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ZetaCsvTable) {
  const CliRun r = run({"zeta", "--n-max", "5", "--digits", "15", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find("\r\n")), "n,lambda_prime_at_one,coefficient,pi_power,zeta");
  for (const char* v : {"1/3", "-1/45", "2/945", "-1/4725", "2/93555"}) EXPECT_NE(r.out.find(v), std::string::npos) << v;
  EXPECT_NE(r.out.find("1,1/3,1/6,2,1.64493406684823\r\n"), std::string::npos);
}

TEST(Cli, ZetaSingleRow) {
  const CliRun r = run({"zeta", "--n-max", "1", "--digits", "15"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("coefficient: 1/6"), std::string::npos);
  EXPECT_NE(r.out.find("1.64493406684823"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"zeta", "--n-max", "0"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"zeta", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({"zeta", "--n-max", "abc"}).code, kExitUsage);
  EXPECT_EQ(run({"zeta", "--digits", "100000"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "everything"}).code, kExitUsage);
  EXPECT_EQ(run({"decay", "--m-list", "10,5"}).code, kExitUsage);
  EXPECT_EQ(run({"lidstone", "--k", "-1"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, Lidstone) {
  EXPECT_NE(run({"lidstone", "--k", "0"}).out.find("polynomial: x\n"), std::string::npos);
  const CliRun one = run({"lidstone", "--k", "1"});
  EXPECT_NE(one.out.find("coefficients: {3: 1/6, 1: -1/6}"), std::string::npos);
  EXPECT_NE(run({"lidstone", "--k", "2"}).out.find("lambda_prime_at_one: -1/45"), std::string::npos);

  const CliRun table = run({"lidstone", "--k", "6", "--table", "--format", "json"});
  const auto doc = nlohmann::json::parse(table.out);
  EXPECT_EQ(doc["kind"], "lambda");
  ASSERT_EQ(doc["rows"].size(), 7u);
  for (const auto& row : doc["rows"]) EXPECT_EQ(row["agree"], "true");
}

TEST(Cli, VerifyMoments) {
  const CliRun r = run({"verify", "moments", "--n-max", "10", "--k-max", "20", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["kind"], "verification");
  EXPECT_EQ(doc["rows"].size(), 200u);
  EXPECT_NE(r.err.find("200/200"), std::string::npos);
}

TEST(Cli, VerifyKernelAndDecay) {
  EXPECT_EQ(run({"verify", "kernel", "--m", "100", "--samples", "1000", "--tol", "1e-12"}).code, kExitOk);
  const CliRun decay = run({"verify", "decay", "--n", "1", "--m-list", "1,10,100"});
  EXPECT_EQ(decay.code, kExitOk) << decay.out;
}

TEST(Cli, VerifyFailureExitsOne) {
  // No residual can beat a tolerance below the working precision.
  EXPECT_EQ(run({"verify", "kernel", "--m", "5", "--samples", "10", "--tol", "1e-80"}).code, kExitVerificationFailed);
  // Decay cannot reach a ratio of 1e-9 over three values of m.
  EXPECT_EQ(run({"verify", "decay", "--m-list", "1,2,3", "--ratio", "1e-9"}).code, kExitVerificationFailed);
}

TEST(Cli, DecayAndIdentitySubcommands) {
  const CliRun d = run({"decay", "--n", "1", "--m-list", "1,10,100", "--format", "csv", "--digits", "20"});
  ASSERT_EQ(d.code, kExitOk);
  EXPECT_NE(d.out.find("1,1,-0.64493406684822643647,0.64493406684822643647"), std::string::npos) << d.out;
  const CliRun i = run({"identity", "--n", "1,2", "--m-list", "1,10", "--format", "json"});
  ASSERT_EQ(i.code, kExitOk) << i.err;
  const auto doc = nlohmann::json::parse(i.out);
  EXPECT_EQ(doc["rows"].size(), 4u);
  EXPECT_EQ(doc["rows"][1]["partial_sum_exact"], "1968329/1270080");
}

TEST(Cli, CsvAndJsonCarryTheSameCells) {
  const std::vector<std::string> base{"zeta", "--n-max", "4", "--digits", "20"};
  auto csv_args = base;
  csv_args.insert(csv_args.end(), {"--format", "csv"});
  auto json_args = base;
  json_args.insert(json_args.end(), {"--format", "json"});
  const CliRun csv = run(csv_args);
  const OutputRecord rec = from_json(run(json_args).out);
  EXPECT_EQ(to_csv(rec), csv.out);
  EXPECT_EQ(run(csv_args).out, csv.out);
}

TEST(Output, CsvQuoting) {
  OutputRecord rec{RecordKind::Verification, {}};
  rec.rows.push_back({{"check", "a,b"}, {"note", "say \"hi\""}, {"plain", "x"}});
  EXPECT_EQ(to_csv(rec), "check,note,plain\r\n\"a,b\",\"say \"\"hi\"\"\",x\r\n");
}

TEST(Output, PiTermsRoundTrip) {
  const PiNumber v = PiNumber::term(2, Rational(-1, 3)) + PiNumber(Rational(1)) + PiNumber::term(-1, Rational(1, 2));
  const std::string enc = encode_pi_terms(v);
  EXPECT_EQ(enc, R"([{"exponent":2,"rational":"-1/3"},{"exponent":0,"rational":"1"},{"exponent":-1,"rational":"1/2"}])");
  EXPECT_EQ(decode_pi_terms(enc), v);
  EXPECT_THROW(decode_pi_terms("{"), std::invalid_argument);
}

TEST(OutputProperty, JsonRoundTrip) {
  Gen gen(4005);
  const RecordKind kinds[] = {RecordKind::Zeta, RecordKind::Lambda, RecordKind::LidstonePoly, RecordKind::Verification};
  for (int trial = 0; trial < 50; ++trial) {
    OutputRecord rec{kinds[gen.integer(0, 3)], {}};
    const int cols = gen.integer(1, 5);
    for (int r = gen.integer(0, 6); r > 0; --r) {
      OutputRecord::Row row;
      for (int c = 0; c < cols; ++c) {
        std::string cell = gen.rational(1000).str();
        if (gen.integer(0, 3) == 0) cell = encode_pi_terms(gen.pi_number());
        if (gen.integer(0, 5) == 0) cell += ", \"quoted\"\n";
        row.emplace_back("col" + std::to_string(c), cell);
      }
      rec.rows.push_back(std::move(row));
    }
    EXPECT_EQ(from_json(to_json(rec)), rec);
  }
  EXPECT_THROW(from_json("{\"kind\": \"zeta\"}"), std::invalid_argument);
  EXPECT_THROW(from_json("{\"kind\": \"nope\", \"rows\": []}"), std::invalid_argument);
}
