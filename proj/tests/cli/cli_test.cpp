#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kGolden = std::string(TVSUM_DATA_DIR) + "/golden/";

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = tvsum::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string w; in >> w;) v.push_back(w);
  return v;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("golden reports regenerate exactly") {
  // TVSUM_UPDATE_GOLDEN=1 rewrites them instead
  const bool update = std::getenv("TVSUM_UPDATE_GOLDEN") != nullptr;
  std::ifstream list(kGolden + "commands.txt");
  REQUIRE(list);
  int n = 0;
  for (std::string line; std::getline(list, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    const std::string name = line.substr(0, colon);
    auto args = split(line.substr(colon + 1));
    args.push_back("--no-timing");
    CAPTURE(name);
    auto r = run(args);
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    const std::string path = kGolden + name + ".txt";
    if (update) {
      std::ofstream(path) << r.out;
    } else {
      REQUIRE(fs::exists(path));
      CHECK(slurp(path) == r.out);
    }
    ++n;
  }
  CHECK(n >= 10);
}

TEST_CASE("documented examples") {
  auto r = run(split("invariant --triangulation s3_2tet --category vect_Z2_theta1 --all-orbits --no-timing"));
  CHECK(r.code == 0);
  CHECK(r.out.find("invariants[0].value: [1]\n") != std::string::npos);
  CHECK(r.out.find("invariants[1]") == std::string::npos);
  r = run(split("dw --triangulation s3_2tet --group Z2 --theta 1 --no-timing"));
  CHECK(r.out.find("partition: [1/2]\n") != std::string::npos);
  r = run(split("validate-category --category fibonacci --no-timing"));
  CHECK(r.code == 0);
  CHECK(r.out.find("ok: true\n") != std::string::npos);
}

TEST_CASE("json mirrors text and reports repeat") {
  const auto args = split("partition --triangulation rp3 --category vect_Z2_theta1");
  auto a = run(args), b = run(args);
  auto strip = [](const std::string& s) { return s.substr(0, s.find("timing.")); };
  CHECK(strip(a.out) == strip(b.out));
  auto j = run([&] {
    auto v = args;
    v.push_back("--json");
    return v;
  }());
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["command"] == "partition");
  CHECK(doc["convention"] == tvsum::cli::kConventionVersion);
  CHECK(a.out.find("aggregate: " + doc["results"]["aggregate"].get<std::string>()) != std::string::npos);
  CHECK(doc["inputs"].size() == 2);
}

TEST_CASE("results do not depend on the worker count") {
  const auto base = split("partition --triangulation s3_5tet --category fibonacci --no-timing");
  auto one = base, four = base;
  one.push_back("--workers=1");
  four.push_back("--workers=4");
  CHECK(run(one).out == run(four).out);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run(split("frobnicate")).code == 2);
  CHECK(run(split("invariant --triangulation s3_2tet --category fibonacci --bogus")).code == 2);
  CHECK(run(split("invariant --triangulation no_such_file --category fibonacci")).code == 4);
  CHECK(run(split("invariant --triangulation s3_2tet --category no_such_category")).code == 2);
  CHECK(run(split("invariant --triangulation s3_2tet --category vect_Z2_theta1 --labeling 1,0,0,0,0,0")).code == 2);
  CHECK(run(split("invariant --triangulation s3_2tet --category vect_Z2_theta1 --orbit 7")).code == 3);
  CHECK(run(split("pachner --triangulation l41 --move 2-3 --at 0")).code == 3);
  auto r = run(split("dw --triangulation s3_2tet --group Z2 --theta 5"));
  CHECK(r.code == 2);
  CHECK(r.err.find("tvsum dw:") == 0);
  auto h = run(split("--help"));
  CHECK(h.code == 0);
  CHECK(h.out.find("cobordism-map") != std::string::npos);
  CHECK(h.out.find("Exit codes") != std::string::npos);
}

TEST_CASE("result cache") {
  const auto dir = fs::temp_directory_path() / "tvsum_cli_cache_test";
  fs::remove_all(dir);
  setenv("TVSUM_CACHE_DIR", dir.c_str(), 1);
  const auto args = split("invariant --triangulation rp3 --category vect_Z2_theta1 --all-orbits");
  auto a = run(args), b = run(args);
  unsetenv("TVSUM_CACHE_DIR");
  CHECK(a.out.find("timing.cache: miss") != std::string::npos);
  CHECK(b.out.find("timing.cache: hit") != std::string::npos);
  auto strip = [](const std::string& s) { return s.substr(0, s.find("timing.")); };
  CHECK(strip(a.out) == strip(b.out));
  fs::remove_all(dir);
}
