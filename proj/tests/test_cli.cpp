#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "dtable_cache.hpp"
#include "envelope.hpp"

using namespace dpc::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dpc");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return Run{code, out.str(), err.str()};
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("dpc-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("dvalue prints the exact integer") {
    CHECK(run({"dvalue", "--r", "1", "--t", "2", "--n", "5"}).out == "3\n");
    CHECK(run({"dvalue", "--r", "1", "--t", "1", "--n", "6"}).out == "8\n");
    CHECK(run({"dvalue", "--r", "3", "--t", "3", "--n", "0"}).out == "0\n");
    for (const char* method : {"table", "single", "brute"}) {
      CHECK(run({"dvalue", "--r", "2", "--t", "5", "--n", "40", "--method", method}).out ==
            run({"dvalue", "--r", "2", "--t", "5", "--n", "40"}).out);
    }
  }

  TEST_CASE("exit codes") {
    CHECK(run({"dvalue", "--r", "4", "--t", "3", "--n", "1"}).code == kExitInvalidArgs);
    CHECK(run({"dvalue", "--r", "1", "--t", "3"}).code == kExitInvalidArgs);
    CHECK(run({"no-such-command"}).code == kExitInvalidArgs);
    CHECK(run({"dvalue", "--r", "1", "--t", "3", "--n", "61", "--method", "brute"}).code == kExitCapacity);
    CHECK(run({"dvalue", "--r", "1", "--t", "3", "--n", "1000000"}).code == kExitCapacity);
    CHECK(run({"check-effective", "--r", "1", "--t", "5", "--n", "1000"}).code == kExitInvalidArgs);
    CHECK(run({"verify-corollary", "--t", "1"}).code == kExitInvalidArgs);
    CHECK(run({"verify-corollary", "--t", "2", "--exhaustive-to", "200000"}).code == kExitInvalidArgs);
    CHECK(run({"arc-check", "--lemma", "bogus", "--t", "2"}).code == kExitInvalidArgs);
    CHECK(run({"--precision", "8", "dvalue", "--r", "1", "--t", "2", "--n", "5"}).code == kExitInvalidArgs);
    CHECK(run({"--help"}).code == kExitOk);
  }

  TEST_CASE("JSON output round-trips and is byte-stable") {
    const std::vector<std::string> args{"check-effective", "--r", "1", "--t", "2", "--n", "600"};
    const Run first = run(args);
    const Run second = run(args);
    REQUIRE(first.code == kExitOk);
    CHECK(first.out == second.out);
    const OutputEnvelope env = envelope_from_json(Json::parse(first.out));
    CHECK(env.command == "check-effective");
    CHECK(env.parameters["n"].get<long>() == 600);
    CHECK(env.results["pass"].get<bool>());
    CHECK(env.precision_bits == 256);
    CHECK(serialize(env) == first.out);
  }

  TEST_CASE("precision flag and environment variable") {
    const Run flag = run({"--precision", "128", "check-effective", "--r", "1", "--t", "2", "--n", "600"});
    CHECK(Json::parse(flag.out)["precision_bits"].get<long>() == 128);
    setenv("DPC_PRECISION", "192", 1);
    const Run env = run({"check-effective", "--r", "1", "--t", "2", "--n", "600"});
    unsetenv("DPC_PRECISION");
    CHECK(Json::parse(env.out)["precision_bits"].get<long>() == 192);
    // The decision and exact value do not depend on the working precision.
    CHECK(Json::parse(flag.out)["results"]["pass"] == Json::parse(env.out)["results"]["pass"]);
    CHECK(Json::parse(flag.out)["results"]["d_exact"] == Json::parse(env.out)["results"]["d_exact"]);
  }

  TEST_CASE("table1 formats") {
    const Run json = run({"table1", "--nmax", "100"});
    REQUIRE(json.code == kExitOk);
    const Json doc = Json::parse(json.out);
    CHECK(doc["results"]["rows"].size() == 6);
    CHECK(doc["results"]["rows"][0]["q"] == "1.159706");
    const Run csv = run({"--format", "csv", "table1", "--nmax", "100"});
    CHECK(csv.out.rfind("r,n,q\n1,10,1.159706\n", 0) == 0);
    const Run md = run({"--format", "md", "table1", "--nmax", "100"});
    CHECK(md.out.find("| Q_2 | 0.904238 | 1.003913 |") != std::string::npos);
  }

  TEST_CASE("scan and arc commands") {
    const Run scan = run({"--jobs", "3", "scan-counterexamples", "--t", "4", "--nmax", "100"});
    const Json list = Json::parse(scan.out)["results"]["counterexamples"];
    CHECK(list.size() == 3);
    CHECK(list[1] == Json::array({2, 3, 4}));
    const Run arc = run({"arc-check", "--lemma", "l_minor", "--samples", "50", "--t", "2", "--r", "1"});
    CHECK(arc.code == kExitOk);
    CHECK(Json::parse(arc.out)["results"]["holds"].get<long>() >= 50);
  }

  TEST_CASE("table cache stores, reloads and rejects stale snapshots") {
    const auto dir = fresh_dir("cache");
    const std::string d = dir.string();
    const Run first = run({"--cache-dir", d, "dvalue", "--r", "2", "--t", "3", "--n", "300"});
    DTableCache cache(dir);
    const dpc::CongruenceClass cls(2, 3);
    REQUIRE(std::filesystem::exists(cache.path_for(cls)));
    CHECK(cache.load(cls, 250).has_value());
    CHECK_FALSE(cache.load(cls, 301).has_value());
    CHECK_FALSE(cache.load(dpc::CongruenceClass(1, 3), 10).has_value());
    const Run second = run({"--cache-dir", d, "dvalue", "--r", "2", "--t", "3", "--n", "300"});
    CHECK(first.out == second.out);

    // Rewrite the header with another version: the snapshot must be ignored.
    std::ifstream in(cache.path_for(cls));
    std::stringstream body;
    body << in.rdbuf();
    std::string text = body.str();
    text.replace(0, text.find('\n'), "dpc-dtable 0 2 3 300");
    std::ofstream(cache.path_for(cls)) << text;
    CHECK_FALSE(cache.load(cls, 10).has_value());
    std::filesystem::remove_all(dir);
  }
}
