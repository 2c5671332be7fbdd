#include "doctest.h"
#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::initializer_list<const char*> args) {
  std::vector<const char*> argv = {"nilcomm"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = nilcomm::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("reduce") {
  const Outcome r = call({"reduce", "BDI", "aba/a/b"});
  CHECK(r.code == 0);
  CHECK(r.out == "ababa\n");
  CHECK(call({"reduce", "AI", "5"}).out == "none\n");
  const auto doc = nlohmann::json::parse(call({"--format", "json", "reduce", "AI", "3,1"}).out);
  CHECK(doc["target"] == "4");
}

TEST_CASE("enumerate and invariants") {
  CHECK(call({"enumerate", "AI", "3"}).out == "3\n2,1\n1,1,1\n");
  const Outcome inv = call({"invariants", "AI", "2,1"});
  CHECK(inv.code == 0);
  CHECK(nlohmann::json::parse(inv.out)["defect"] == 1);
}

TEST_CASE("reports") {
  const Outcome e4 = call({"exceptional", "EIV"});
  CHECK(e4.code == 0);
  CHECK(e4.out.find("components: 1") != std::string::npos);
  CHECK(call({"exceptional", "EI"}).out.find("range 4-6") != std::string::npos);
  CHECK(call({"components", "AI", "5"}).out.find("components: 1") != std::string::npos);
  CHECK(call({"closure-graph", "AI", "4"}).out.rfind("digraph closure", 0) == 0);
  CHECK(call({"selflarge", "AI", "3,1"}).out.find("self-large") != std::string::npos);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"reduce", "AI"}).code == 2);
  CHECK(call({"invariants", "XYZ", "2,1"}).code == 2);
  CHECK(call({"invariants", "BDI", "abba"}).code == 2);
  CHECK(call({"exceptional", "EX"}).code == 2);
  CHECK(call({"--format", "xml", "enumerate", "AI", "3"}).code == 2);
}

TEST_CASE("config file") {
  const auto path = std::filesystem::temp_directory_path() / "nilcomm_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"format": "json", "bound": 4})";
  }
  const auto cfg = nilcomm::cli::load_config(path.string());
  CHECK(cfg.format == nilcomm::cli::Format::json);
  CHECK(cfg.bound == 4);
  ::setenv("NILCOMM_CONFIG", path.string().c_str(), 1);
  const Outcome ok = call({"enumerate", "AI", "2"});
  const Outcome over = call({"enumerate", "AI", "5"});
  ::unsetenv("NILCOMM_CONFIG");
  CHECK(nlohmann::json::parse(ok.out).size() == 2);
  CHECK(over.code == 2);
  std::filesystem::remove(path);
  CHECK_THROWS(nilcomm::cli::load_config("/nonexistent/nilcomm.json"));
}
