#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cli.hpp"

using namespace sgcount;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const cli::Hooks& hooks = {}) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err, hooks);
  return {code, out.str(), err.str()};
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("count examples") {
  CHECK(run({"count", "--d", "2", "--mu", "1", "--growth", "power:3", "--quantity", "N"}).out == "45\n");
  CHECK(run({"count", "--d", "3", "--mu", "4", "--growth", "linear", "--quantity", "N"}).out == "35\n");
  CHECK(run({"count", "--d", "2", "--mu", "2", "--growth", "linear", "--quantity", "Nsigma"}).out == "14\n");
  for (const char* m : {"closed", "recursion", "genfun", "auto"}) {
    CHECK(run({"count", "--d", "3", "--mu", "2", "--growth", "power:3", "--method", m}).out == "999\n");
  }
  CHECK(run({"count", "--d", "3", "--mu", "2", "--growth", "power:3", "--method", "oracle", "--family",
             "chebyshev1"})
            .out == "999\n");
  const auto json = run({"--format", "json", "count", "--d", "2", "--mu", "1", "--growth", "power:3"});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"value\":\"45\"") != std::string::npos);
}

TEST_CASE("count errors exit nonzero") {
  const auto r = run({"count", "--d", "2", "--mu", "1", "--growth", "clenshaw_curtis", "--method", "closed"});
  CHECK(r.code == cli::kUsage);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"count", "--d", "2", "--mu", "1", "--growth", "power:3", "--method", "oracle"}).code == cli::kUsage);
  CHECK(run({"count", "--d", "2", "--mu", "1", "--growth", "bogus"}).code == cli::kUsage);
  CHECK(run({"count", "--mu", "1", "--growth", "linear"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
}

TEST_CASE("table examples") {
  const auto r = run({"table", "--d", "1..3", "--mu", "0..2", "--growth", "power:3", "--quantities", "N"});
  REQUIRE(r.code == 0);
  CHECK(count_of(r.out, "\n") == 10);
  for (const char* row : {"2,0,power:3,9\n", "2,1,power:3,45\n", "2,2,power:3,189\n", "3,0,power:3,27\n",
                          "3,1,power:3,189\n", "3,2,power:3,999\n"}) {
    CHECK(r.out.find(row) != std::string::npos);
  }
  const auto single = run({"table", "--d", "1..1", "--mu", "0..0", "--growth", "linear"});
  CHECK(single.out == "d,mu,growth,N\n1,0,linear,1\n");
  const auto odd = run({"table", "--d", "2..2", "--mu", "0..3", "--growth", "odd"});
  for (const char* row : {"2,0,odd,1\n", "2,1,odd,5\n", "2,2,odd,13\n", "2,3,odd,25\n"}) {
    CHECK(odd.out.find(row) != std::string::npos);
  }
  CHECK(run({"table", "--d", "0..2", "--growth", "linear"}).code == cli::kUsage);
  CHECK(run({"table", "--d", "1..2", "--mu", "0..9", "--growth", "custom:1,2,3"}).code != 0);
  CHECK(run({"--format", "json", "table", "--d", "2", "--mu", "1", "--growth", "power:3"}).out.find("\"45\"") !=
        std::string::npos);
}

TEST_CASE("verify single cell reports 999 from every path") {
  const auto r = run({"verify", "--d-min", "3", "--d-max", "3", "--mu-min", "2", "--mu-max", "2", "--growth",
                      "power:3", "--family", "chebyshev1", "--detail"});
  CHECK(r.code == 0);
  for (const char* path : {"nested_closed = 999", "nested_recursion = 999", "nested_genfun = 999",
                           "grid_oracle[chebyshev1] = 999"}) {
    CHECK(r.out.find(path) != std::string::npos);
  }
}

TEST_CASE("default verify agrees and exercises every method") {
  const auto r = run({"--format", "json", "verify"});
  CHECK(r.code == 0);
  const std::string exercised = r.out.substr(r.out.find("methods_exercised"));
  for (Method m : kAllMethods) CHECK(exercised.find("\"" + std::string(method_name(m)) + "\"") != std::string::npos);
  CHECK(r.out.find("\"all_agree\": true") != std::string::npos);
}

TEST_CASE("verify reports an injected fault") {
  cli::Hooks hooks;
  hooks.verify.tamper = [](Method m, std::optional<NodeFamilyId>, BigInt& v) {
    if (m == Method::NestedGenFun) v += 1;
  };
  const auto r = run({"verify", "--d-max", "2", "--mu-max", "2"}, hooks);
  CHECK(r.code == cli::kVerifyFailed);
  CHECK(r.err.find("verification failed at d=1 mu=0") != std::string::npos);
}

TEST_CASE("grid examples") {
  const auto svg = run({"--format", "svg", "grid", "--d", "2", "--mu", "2", "--family", "chebyshev1", "--growth",
                        "power:3"});
  CHECK(svg.code == 0);
  CHECK(count_of(svg.out, "<circle") == 189);
  CHECK(svg.err.find("189") != std::string::npos);

  const auto csv = run({"grid", "--d", "3", "--mu", "0", "--family", "chebyshev1", "--growth", "power:3"});
  CHECK(count_of(csv.out, "\n") == 28);

  const auto json = run({"--format", "json", "grid", "--d", "2", "--mu", "0", "--family", "leja", "--growth",
                         "linear"});
  CHECK(json.out.find("\"cardinality\":\"1\"") != std::string::npos);

  CHECK(run({"--format", "svg", "grid", "--d", "3", "--mu", "0", "--family", "chebyshev1", "--growth",
             "power:3"})
            .code == cli::kUsage);
  CHECK(run({"grid", "--d", "7", "--mu", "6", "--family", "chebyshev1", "--growth", "power:3"}).code ==
        cli::kResourceGuard);
  // A non-nested pairing falls back to the full index set.
  const auto loose = run({"grid", "--d", "2", "--mu", "1", "--family", "chebyshev1", "--growth", "linear"});
  CHECK(loose.code == 0);
  const auto general = run({"grid", "--d", "2", "--mu", "1", "--family", "chebyshev1", "--growth", "power:3",
                            "--general"});
  CHECK(count_of(general.out, "\n") == 46);
}

TEST_CASE("grid --out writes a file and prints the cardinality") {
  const auto path = std::filesystem::temp_directory_path() / "sgcount_test_grid.csv";
  const auto r = run({"--out", path.string(), "grid", "--d", "2", "--mu", "1", "--family", "chebyshev1",
                      "--growth", "power:3"});
  CHECK(r.code == 0);
  CHECK(r.out == "45\n");
  std::ifstream in(path);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 46);
  std::filesystem::remove(path);
}

TEST_CASE("leja examples") {
  CHECK(run({"leja", "--n", "3", "--seed", "1"}).out.substr(0, 5) == "1\n-1\n");
  const auto three = run({"leja", "--n", "3"});
  std::istringstream ss(three.out);
  std::vector<double> xs;
  for (double x; ss >> x;) xs.push_back(x);
  REQUIRE(xs.size() == 3);
  CHECK(std::abs(xs[2]) < 1e-12);
  CHECK(run({"leja", "--n", "1", "--seed", "0.5"}).out == "0.5\n");
  const auto sym = run({"leja", "--n", "3", "--symmetric"});
  CHECK(sym.out == "0\n-1\n1\n");
  CHECK(run({"leja", "--n", "10001"}).code == cli::kResourceGuard);
  CHECK(run({"leja", "--n", "2", "--seed", "3"}).code == cli::kUsage);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"--format", "json", "table", "--d", "1..4", "--mu", "0..4", "--growth",
                                      "clenshaw_curtis", "--quantities", "N,Ndup,Nsigma"};
  CHECK(run(args).out == run(args).out);
}
