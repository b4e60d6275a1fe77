#include "context.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <regex>
#include <sstream>

#include "tvsum/error.hpp"

namespace tvsum::cli {

namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A path as given, else the shipped file of that name.
std::string locate(const std::string& arg, const std::string& folder, const std::string& ext) {
  if (fs::is_regular_file(arg)) return arg;
  const std::string shipped = data_dir() + "/" + folder + "/" + arg + ext;
  if (fs::is_regular_file(shipped)) return shipped;
  throw IoError("no such " + folder + " file: " + arg);
}

}  // namespace

std::string data_dir() {
  if (const char* d = std::getenv("TVSUM_DATA_DIR")) return d;
  return TVSUM_DEFAULT_DATA_DIR;
}

// FNV-1a, enough to tell inputs apart in reports and cache keys
std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

FiniteGroup parse_group(const std::string& name) {
  std::smatch m;
  static const std::regex kFamily("([ZDS])([0-9]+)");
  if (name == "1" || name == "trivial") return FiniteGroup::trivial();
  if (std::regex_match(name, m, kFamily)) {
    const int n = std::stoi(m[2]);
    if (n >= 1) {
      if (m[1] == "Z") return FiniteGroup::cyclic(n);
      if (m[1] == "D" && n >= 3) return FiniteGroup::dihedral(n);
      if (m[1] == "S" && n <= 4) return FiniteGroup::symmetric(n);
    }
  }
  throw ValidationError("unknown group " + name + " (use Zn, Dn or Sn with n <= 4)");
}

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ValidationError("not an integer list: " + csv);
    }
  }
  return out;
}

Json to_json(const FieldElement& x) { return x.to_string(); }
Json to_json(const std::vector<int>& v) { return Json(v); }

GFusionData Context::category(const std::string& arg) {
  GFusionData d;
  std::string path;
  try {
    path = locate(arg, "categories", ".json");
  } catch (const IoError&) {
    d = builtin_category(arg);
    inputs.push_back({"category", arg, digest(serialize_category(d))});
    return d;
  }
  const auto text = slurp(path);
  d = parse_category(text);
  inputs.push_back({"category", arg, digest(text)});
  return d;
}

Triangulation Context::triangulation(const std::string& arg) {
  const auto text = slurp(locate(arg, "triangulations", ".tri"));
  inputs.push_back({"triangulation", arg, digest(text)});
  return parse_triangulation(text);
}

Skeleton Context::skeleton(const std::string& arg) {
  const auto text = slurp(locate(arg, "skeletons", ".json"));
  inputs.push_back({"skeleton", arg, digest(text)});
  return parse_skeleton(text);
}

SurfaceSkeleton Context::surface(const std::string& arg) {
  const auto text = slurp(locate(arg, "surfaces", ".json"));
  inputs.push_back({"surface", arg, digest(text)});
  return parse_surface(text);
}

CobordismSkeleton Context::cobordism(const std::string& arg) {
  const auto text = slurp(locate(arg, "cobordisms", ".json"));
  inputs.push_back({"cobordism", arg, digest(text)});
  return parse_cobordism(text);
}

ColoredGraph Context::graph(const std::string& arg) {
  const auto text = slurp(locate(arg, "graphs", ".json"));
  inputs.push_back({"graph", arg, digest(text)});
  return parse_graph(text);
}

void Context::cached(const std::function<void()>& fn) {
  if (cache_dir.empty()) {
    fn();
    return;
  }
  std::string key = command;
  for (const auto& a : args) key += "\n" + a;
  for (const auto& in : inputs) key += "\n" + in.kind + "=" + in.digest;
  const fs::path file = fs::path(cache_dir) / (digest(key).substr(8) + ".json");
  if (fs::is_regular_file(file)) {
    try {
      auto j = Json::parse(slurp(file.string()));
      results = j.at("results");
      exit_code = j.at("exit").get<int>();
      cache_hit = true;
      return;
    } catch (const Json::exception&) {
      // unreadable entry: recompute and overwrite
    }
  }
  fn();
  std::error_code ec;
  fs::create_directories(cache_dir, ec);
  std::ofstream out(file);
  if (!out) throw IoError("cannot write cache entry " + file.string());
  out << Json{{"results", results}, {"exit", exit_code}}.dump() << "\n";
}

}  // namespace tvsum::cli
