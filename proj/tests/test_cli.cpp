#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pscalc/bernoulli.hpp"
#include "pscalc/cli.hpp"
#include "pscalc/serialize.hpp"

using namespace pscalc;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Result run_uncached(std::vector<std::string> args) {
  args.insert(args.begin(), "--no-cache");
  return run(std::move(args));
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("pscalc-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("documented examples") {
  auto r = run_uncached({"tconst", "6", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"m\":6,\"value\":\"1414477\",\"factors\":[\"2047\",\"691\"]}\n");

  r = run_uncached({"ko", "--group", "3"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["kind"] == "zero");

  r = run_uncached({"sweep", "--max", "10", "--strategy", "cross_check"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["failures"].empty());
  CHECK_FALSE(Json::parse(r.out).contains("seconds"));
}

TEST_CASE("each command emits parseable JSON") {
  const std::vector<std::vector<std::string>> commands{
      {"bernoulli", "6"},
      {"bernoulli", "5", "--all"},
      {"aconst", "6", "2"},
      {"primes", "--below", "100", "--very-regular"},
      {"genus", "--builtin", "k3"},
      {"genus", "--polynomials", "2"},
      {"lattice", "--form", "k3", "--represent", "-12", "--bound", "8"},
      {"lattice", "--form", "h", "--represent", "40", "--even"},
      {"ko", "--report", "6", "1"},
      {"report", "6", "--kmax", "10"},
  };
  for (const auto& command : commands) {
    const auto r = run_uncached(command);
    INFO(command.front());
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(Json::accept(r.out));
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
  }
}

TEST_CASE("output values") {
  auto j = Json::parse(run_uncached({"genus", "--builtin", "plumbing8"}).out);
  CHECK(j["ahat"] == "1");
  CHECK(j["signature"] == "-224");
  CHECK(j["ko_ahat"]["generator"] == "β");

  j = Json::parse(run_uncached({"primes", "--below", "100", "--very-regular"}).out);
  std::vector<std::uint64_t> primes;
  for (const auto& p : j["primes"]) primes.push_back(p["p"].get<std::uint64_t>());
  CHECK(primes == std::vector<std::uint64_t>{3, 5, 11, 13, 17, 19, 29, 41, 43, 53, 61, 83, 97});

  j = Json::parse(run_uncached({"lattice", "--form", "h", "--represent", "40", "--even"}).out);
  CHECK(j["represent"]["found"] == false);  // needs |v_i| <= 10
  j = Json::parse(run_uncached(
      {"lattice", "--form", "h", "--represent", "40", "--even", "--bound", "10"}).out);
  CHECK(j["represent"]["vector"] == Json::parse("[2,10]"));
  j = Json::parse(run_uncached({"lattice", "--form", "e8neg", "--represent", "1"}).out);
  CHECK(j["represent"]["found"] == false);
  CHECK(j["represent"]["vector"].is_null());
  CHECK(j["signature"] == -8);

  j = Json::parse(run_uncached({"report", "6", "--kmax", "10"}).out);
  CHECK(j.size() == 11);
}

TEST_CASE("other formats") {
  auto r = run_uncached({"--format", "csv", "sweep", "--max", "5", "--strategy", "full_gcd"});
  CHECK(r.code == 0);
  CHECK(r.out == "m,gcd\n2,1\n3,1\n4,1\n5,1\n");
  r = run_uncached({"tconst", "6", "--format", "table"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1414477") != std::string::npos);
  r = run_uncached({"report", "6", "--kmax", "2", "--format", "table"});
  CHECK(r.out.rfind("| d | k |", 0) == 0);
  r = run_uncached({"genus", "--polynomials", "2", "--kind", "ahat", "--format", "csv"});
  CHECK(r.out.find("ahat,2,p1^2,7/5760") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run_uncached({}).code == 2);
  CHECK(run_uncached({"frobnicate"}).code == 2);
  CHECK(run_uncached({"tconst"}).code == 2);
  CHECK(run_uncached({"tconst", "6", "--bogus"}).code == 2);
  CHECK(run_uncached({"--format", "xml", "tconst", "6"}).code == 2);
  CHECK(run_uncached({"genus"}).code == 2);
  CHECK(run_uncached({"lattice", "--form", "k3", "--gram", "x.json"}).code == 2);
  CHECK(run_uncached({"--help"}).code == 0);

  auto r = run_uncached({"bernoulli", "0"});
  CHECK(r.code == 1);
  const auto error = Json::parse(r.err);
  CHECK(error["error"] == "domain_error");
  CHECK(error["message"] == "index starts at 1");
  CHECK(run_uncached({"ko", "--report", "5", "0"}).code == 1);
  CHECK(run_uncached({"sweep", "--max", "1"}).code == 1);
  CHECK(run_uncached({"genus", "--manifold", "/nonexistent.json"}).code == 1);
  CHECK(run_uncached({"lattice", "--form", "e8neg", "--represent", "-2000", "--bound",
                      "1000"}).code == 1);
}

TEST_CASE("input files") {
  const auto dir = scratch_dir("files");
  {
    std::ofstream(dir / "m.json") << R"({"name":"hp2","dimension":8,"pontrjagin":{"p1^2":4,"p2":7}})";
    std::ofstream(dir / "g.json") << "[[2,1],[1,2]]";
    std::ofstream(dir / "bad.json") << "[[2,1],";
  }
  auto j = Json::parse(run_uncached({"genus", "--manifold", (dir / "m.json").string()}).out);
  CHECK(j["signature"] == "1");
  CHECK(j["ko_ahat"]["coefficient"] == "0");
  j = Json::parse(run_uncached({"lattice", "--gram", (dir / "g.json").string()}).out);
  CHECK(j["determinant"] == "3");
  CHECK(j["signature"] == 2);
  CHECK(run_uncached({"lattice", "--gram", (dir / "bad.json").string()}).code == 1);
  fs::remove_all(dir);
}

TEST_CASE("determinism") {
  const std::vector<std::string> sweep{"sweep", "--max", "120", "--workers", "4"};
  const auto first = run_uncached(sweep);
  BernoulliCache::global().clear();
  const auto second = run_uncached(sweep);
  const auto single = run_uncached({"sweep", "--max", "120", "--workers", "1"});
  CHECK(first.out == second.out);
  CHECK(first.out == single.out);
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"report", "8"}, {"primes", "--below", "300"}, {"bernoulli", "30", "--all"}}) {
    CHECK(run_uncached(args).out == run_uncached(args).out);
  }
}

TEST_CASE("Bernoulli cache directory") {
  const auto dir = scratch_dir("cache");
  BernoulliCache::global().clear();
  auto r = run({"--cache-dir", dir.string(), "bernoulli", "40"});
  CHECK(r.code == 0);
  const auto file = dir / cli::kCacheFile;
  REQUIRE(fs::exists(file));
  {
    std::ifstream in(file);
    std::string header;
    std::getline(in, header);
    CHECK(header.rfind("bernoulli-ms-v1 max_m=", 0) == 0);
  }

  BernoulliCache::global().clear();
  BernoulliCache loaded;
  {
    std::ifstream in(file);
    loaded.load(in);
  }
  CHECK(loaded.max_m() >= 40);
  const auto again = run({"--cache-dir", dir.string(), "bernoulli", "40"});
  CHECK(again.out == r.out);
  CHECK(BernoulliCache::global().max_m() == loaded.max_m());

  {
    std::ofstream(file) << "garbage\n";
  }
  BernoulliCache::global().clear();
  r = run({"--cache-dir", dir.string(), "bernoulli", "3"});
  CHECK(r.code == 0);
  CHECK(r.err.find("ignoring Bernoulli cache") != std::string::npos);
  {
    std::ifstream in(file);
    std::string header;
    std::getline(in, header);
    CHECK(header.rfind("bernoulli-ms-v1 max_m=", 0) == 0);
  }
  fs::remove_all(dir);
}

TEST_CASE("cache directory resolution") {
  CHECK(cli::cache_directory("/x") == fs::path("/x"));
  ::setenv(cli::kCacheEnv, "/from-env", 1);
  CHECK(cli::cache_directory("") == fs::path("/from-env"));
  CHECK(cli::cache_directory("/flag") == fs::path("/flag"));
  ::unsetenv(cli::kCacheEnv);
  ::setenv("XDG_CACHE_HOME", "/xdg", 1);
  CHECK(cli::cache_directory("") == fs::path("/xdg/pscalc"));
  ::unsetenv("XDG_CACHE_HOME");
}
