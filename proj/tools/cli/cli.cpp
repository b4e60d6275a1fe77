#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include "commands.hpp"
#include "tvsum/error.hpp"

namespace tvsum::cli {

namespace {

const char* kFormats = R"(File formats (a shipped name may replace any path):
  category       JSON: field, group, unit, simples with grades,
                 duals, dims and pivotal coefficients, sparse fusion and F tables
  triangulation  text: "tetrahedra N" then one "(t,f) -> (t',f') perm" per gluing
  skeleton       JSON: regions (chi, orientation), edges with signed cyclic branch
                 lists, vertex links as graphs
  graph          JSON: {"vertices", "edges": [[tail, head, color]],
                 "rotation": [[[edge, "t"|"h"], ...]]}, rotations clockwise
  surface        JSON, format "tvsum-surface-1": graph on a surface with genus and
                 base face per component, edge colors are group labels
  cobordism      JSON, format "tvsum-cobordism-1": skeleton with in/out surfaces,
                 boundary vertices and boundary edges
Environment: TVSUM_DATA_DIR (shipped data), TVSUM_CACHE_DIR (result cache).
Exit codes: 0 success, 2 validation failure, 3 domain error, 4 I/O error.)";

void render(std::ostream& out, const std::string& key, const Json& j) {
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render(out, key.empty() ? k : key + "." + k, v);
    return;
  }
  if (j.is_array()) {
    bool flat = true;
    for (const auto& v : j) flat = flat && v.is_primitive();
    if (flat) {
      out << key << ":";
      for (const auto& v : j) out << " " << scalar(v);
      out << "\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) render(out, key + "[" + std::to_string(i) + "]", j[i]);
    }
    return;
  }
  out << key << ": " << scalar(j) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Exact state sums for 3-manifolds with maps to K(G,1)", "tvsum");
  app.footer(kFormats);
  app.require_subcommand(1);
  bool json = false, no_timing = false;
  int workers = 0;
  app.add_flag("--json", json, "print the report as JSON");
  app.add_flag("--no-timing", no_timing, "omit wall time and cache status");
  app.add_option("--workers", workers, "worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
  Options o;
  auto cmds = add_commands(app, o);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Command* cmd = nullptr;
  for (const auto& c : cmds)
    if (c.app->parsed()) cmd = &c;
  Context ctx;
  ctx.command = cmd->app->get_name();
  for (const auto& a : args)
    if (a != "--json" && a != "--no-timing" && a.rfind("--workers", 0) != 0) ctx.args.push_back(a);
  ctx.opt.workers = workers;
  if (const char* dir = std::getenv("TVSUM_CACHE_DIR"); dir && cmd->cacheable) ctx.cache_dir = dir;

  const auto t0 = std::chrono::steady_clock::now();
  try {
    cmd->action(ctx);
  } catch (const ValidationError& e) {
    err << "tvsum " << ctx.command << ": validation error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "tvsum " << ctx.command << ": domain error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    err << "tvsum " << ctx.command << ": i/o error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    err << "tvsum " << ctx.command << ": error: " << e.what() << "\n";
    return 3;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  Json report;
  report["command"] = ctx.command;
  report["convention"] = kConventionVersion;
  report["inputs"] = Json::array();
  for (const auto& in : ctx.inputs) report["inputs"].push_back(Json{{"kind", in.kind}, {"name", in.name}, {"digest", in.digest}});
  report["results"] = ctx.results;
  report["exit"] = ctx.exit_code;
  if (!no_timing) {
    const int w = workers ? workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    report["timing"] = Json{{"seconds", seconds},
                            {"workers", w},
                            {"cache", ctx.cache_dir.empty() ? "off" : ctx.cache_hit ? "hit" : "miss"}};
  }
  if (json) {
    out << report.dump(2) << "\n";
  } else {
    out << "command: " << ctx.command << "\nconvention: " << kConventionVersion << "\n";
    for (const auto& in : ctx.inputs) out << "input." << in.kind << ": " << in.name << " " << in.digest << "\n";
    render(out, "", ctx.results);
    out << "exit: " << ctx.exit_code << "\n";
    if (!no_timing) render(out, "timing", report["timing"]);
  }
  return ctx.exit_code;
}

}  // namespace tvsum::cli
