#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tvsum/catdata.hpp"
#include "tvsum/complexes.hpp"
#include "tvsum/hqft.hpp"
#include "tvsum/statesum.hpp"

namespace tvsum::cli {

using Json = nlohmann::ordered_json;

struct Input {
  std::string kind;
  std::string name;
  std::string digest;
};

// State shared by one run: recorded inputs, results and worker settings.
struct Context {
  std::string command;
  std::vector<std::string> args;  // canonical arguments for the cache key
  std::vector<Input> inputs;
  Json results = Json::object();
  StateSumOptions opt;
  std::string cache_dir;
  bool cache_hit = false;
  int exit_code = 0;

  GFusionData category(const std::string& arg);
  Triangulation triangulation(const std::string& arg);
  Skeleton skeleton(const std::string& arg);
  SurfaceSkeleton surface(const std::string& arg);
  CobordismSkeleton cobordism(const std::string& arg);
  ColoredGraph graph(const std::string& arg);

  // Runs fn unless the cache already holds results for these inputs.
  void cached(const std::function<void()>& fn);
};

std::string data_dir();
std::string digest(const std::string& bytes);
FiniteGroup parse_group(const std::string& name);
std::vector<int> parse_ints(const std::string& csv);
Json to_json(const FieldElement& x);
Json to_json(const std::vector<int>& v);

}  // namespace tvsum::cli
