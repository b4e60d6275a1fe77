#pragma once

#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "context.hpp"

namespace tvsum::cli {

struct Options {
  std::string category, triangulation, skeleton, graph, surface, cobordism, group;
  std::string labeling, move, output;
  int orbit = -1;
  int theta = 0;
  int at = 0;
  int outer_face = -1;
  bool all_orbits = false;
  bool per_class = false;
};

struct Command {
  CLI::App* app = nullptr;
  bool cacheable = true;
  std::function<void(Context&)> action;
};

std::vector<Command> add_commands(CLI::App& app, Options& o);

}  // namespace tvsum::cli
