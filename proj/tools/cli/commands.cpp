#include "commands.hpp"

#include <fstream>

#include "tvsum/error.hpp"
#include "tvsum/oracle.hpp"

namespace tvsum::cli {

namespace {

Json cells(const Triangulation& t) {
  return Json{{"tetrahedra", t.size()},
              {"triangles", t.num_triangles()},
              {"edges", t.num_edges()},
              {"vertices", t.num_vertices()}};
}

// --triangulation goes through the dual skeleton
Skeleton manifold(Context& ctx, const Options& o) {
  if (o.triangulation.empty() == o.skeleton.empty())
    throw ValidationError("give exactly one of --triangulation and --skeleton");
  return o.triangulation.empty() ? ctx.skeleton(o.skeleton) : dual_skeleton(ctx.triangulation(o.triangulation));
}

void manifold_options(CLI::App* sub, Options& o) {
  sub->add_option("--triangulation", o.triangulation, "triangulation file or shipped name");
  sub->add_option("--skeleton", o.skeleton, "skeleton file or shipped name");
}

CocycleTable cocycle(const FiniteGroup& g, const std::string& name, int q) {
  if (name.size() > 1 && name[0] == 'Z') {
    const int n = g.order();
    if (q < 0 || q >= n) throw ValidationError("--theta must lie in 0.." + std::to_string(n - 1));
    return CocycleTable::standard_cyclic(n, q);
  }
  if (q != 0) throw ValidationError("--theta is only available for cyclic groups");
  return CocycleTable::trivial(g, FieldSpec::rational());
}

void validate_category_cmd(Context& ctx, const Options& o) {
  const auto d = ctx.category(o.category);
  const auto rep = validate_category(d);
  auto& r = ctx.results;
  r["category"] = d.name;
  r["group_order"] = d.group.order();
  r["simples"] = d.num_simples();
  r["field"] = d.field.to_string();
  r["checks"] = Json::array();
  for (const auto& c : rep.checks)
    r["checks"].push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  r["ok"] = rep.ok();
  if (rep.ok()) r["neutral_dimension"] = to_json(neutral_dimension(d));
  if (!rep.ok()) ctx.exit_code = 2;
}

void eval_graph_cmd(Context& ctx, const Options& o) {
  const auto g = ctx.graph(o.graph);
  const auto d = ctx.category(o.category);
  ctx.cached([&] {
    EvalOptions eo;
    eo.outer_face = o.outer_face;
    const auto t = evaluate_graph(d, g, eo);
    auto& r = ctx.results;
    r["vertices"] = g.num_vertices;
    r["edges"] = g.edges.size();
    r["faces"] = g.faces().size();
    r["basis_sizes"] = Json::array();
    for (const auto& b : t.bases) r["basis_sizes"].push_back(b.size());
    r["values"] = Json::array();
    for (const auto& v : t.values) r["values"].push_back(to_json(v));
  });
}

void labelings_cmd(Context& ctx, const Options& o) {
  const auto s = manifold(ctx, o);
  const auto g = parse_group(o.group);
  ctx.cached([&] {
    const auto labs = enumerate_labelings(s, g);
    const auto orbits = gauge_orbits(s, g, labs);
    auto& r = ctx.results;
    r["regions"] = s.num_regions();
    r["balls"] = s.num_balls;
    r["labelings"] = labs.size();
    r["orbits"] = Json::array();
    for (const auto& ob : orbits)
      r["orbits"].push_back(Json{{"representative", ob.representative}, {"size", ob.members.size()}});
  });
}

void invariant_cmd(Context& ctx, const Options& o) {
  const auto s = manifold(ctx, o);
  const auto d = ctx.category(o.category);
  const int picks = (o.labeling.empty() ? 0 : 1) + (o.orbit >= 0 ? 1 : 0) + (o.all_orbits ? 1 : 0);
  if (picks > 1) throw ValidationError("--labeling, --orbit and --all-orbits exclude each other");
  ctx.cached([&] {
    std::vector<std::pair<GLabeling, std::size_t>> todo;
    if (!o.labeling.empty()) {
      auto l = parse_ints(o.labeling);
      if (!is_labeling(s, d.group, l)) throw ValidationError("--labeling violates the product condition");
      todo.push_back({l, 0});
    } else if (o.orbit >= 0 || o.all_orbits) {
      const auto labs = enumerate_labelings(s, d.group);
      const auto orbits = gauge_orbits(s, d.group, labs);
      if (o.orbit >= static_cast<int>(orbits.size()))
        throw DomainError("orbit " + std::to_string(o.orbit) + " does not exist (" + std::to_string(orbits.size()) +
                          " orbits)");
      for (std::size_t k = 0; k < orbits.size(); ++k)
        if (o.all_orbits || static_cast<int>(k) == o.orbit) todo.push_back({orbits[k].representative, orbits[k].members.size()});
    } else {
      todo.push_back({GLabeling(s.num_regions(), d.group.identity()), 0});
    }
    auto& rows = ctx.results["invariants"] = Json::array();
    for (const auto& [l, size] : todo) {
      const auto res = closed_invariant(s, l, d, ctx.opt);
      Json row{{"labeling", l}};
      if (size) row["orbit_size"] = size;
      row["value"] = to_json(res.value);
      row["colorings"] = res.visited;
      row["admissible"] = res.admissible;
      rows.push_back(std::move(row));
    }
  });
}

void partition_cmd(Context& ctx, const Options& o) {
  const auto s = manifold(ctx, o);
  const auto d = ctx.category(o.category);
  ctx.cached([&] {
    const auto t = partition_all_classes(s, d, ctx.opt);
    auto& r = ctx.results;
    r["labelings"] = t.labelings;
    r["classes"] = Json::array();
    for (const auto& row : t.rows)
      r["classes"].push_back(
          Json{{"representative", row.representative}, {"orbit_size", row.orbit_size}, {"value", to_json(row.value)}});
    r["aggregate"] = to_json(t.aggregate);
  });
}

void dw_cmd(Context& ctx, const Options& o) {
  const auto t = ctx.triangulation(o.triangulation);
  const auto g = parse_group(o.group);
  const auto theta = cocycle(g, o.group, o.theta);
  ctx.cached([&] {
    const auto ot = order_triangulation(t);
    auto& r = ctx.results;
    r["subdivided"] = ot.subdivided;
    r["partition"] = to_json(dw_partition(ot, theta));
    if (o.per_class) {
      r["classes"] = Json::array();
      for (const auto& c : tree_gauge_colorings(ot, theta.group()))
        r["classes"].push_back(Json{{"coloring", c}, {"value", to_json(dw_class_value(ot, c, theta))}});
    }
  });
}

void pachner_cmd(Context& ctx, const Options& o) {
  const auto t = ctx.triangulation(o.triangulation);
  const auto out = pachner(t, parse_pachner_kind(o.move), o.at);
  const auto text = serialize_triangulation(out, o.triangulation + "_" + o.move + "_" + std::to_string(o.at));
  auto& r = ctx.results;
  r["move"] = o.move;
  r["at"] = o.at;
  r["before"] = cells(t);
  r["after"] = cells(out);
  r["result_digest"] = digest(text);
  if (!o.output.empty()) {
    std::ofstream f(o.output);
    if (!f) throw IoError("cannot write " + o.output);
    f << text;
  }
}

void hqft_rank_cmd(Context& ctx, const Options& o) {
  const auto s = ctx.surface(o.surface);
  const auto d = ctx.category(o.category);
  s.validate(d.group);
  ctx.cached([&] {
    const auto h = cylinder_projector(s, d, ctx.opt);
    auto& r = ctx.results;
    r["surface"] = s.name;
    r["genus"] = s.genus;
    r["graph_vertices"] = s.graph.num_vertices;
    r["graph_edges"] = s.graph.edges.size();
    r["blocks"] = Json::array();
    for (std::size_t k = 0; k < h.layout.colorings.size(); ++k) {
      const int end = k + 1 < h.layout.offsets.size() ? h.layout.offsets[k + 1] : h.layout.dim;
      r["blocks"].push_back(Json{{"coloring", h.layout.colorings[k]}, {"dim", end - h.layout.offsets[k]}});
    }
    r["dim"] = h.layout.dim;
    r["idempotent"] = true;
    r["rank"] = h.rank;
  });
}

void cobordism_map_cmd(Context& ctx, const Options& o) {
  const auto p = ctx.cobordism(o.cobordism);
  const auto d = ctx.category(o.category);
  p.validate(d.group);
  ctx.cached([&] {
    const auto m = cobordism_matrix(p, d, ctx.opt);
    auto& r = ctx.results;
    r["cobordism"] = p.name;
    r["rows"] = m.rows();
    r["cols"] = m.cols();
    r["rank"] = m.rank();
    if (p.in == p.out) r["idempotent"] = m * m == m;
    r["entries"] = Json::array();
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) r["entries"].push_back(Json{{"row", i}, {"col", j}, {"value", to_json(m(i, j))}});
  });
}

}  // namespace

std::vector<Command> add_commands(CLI::App& app, Options& o) {
  std::vector<Command> cmds;
  auto add = [&](const char* name, const char* help, bool cacheable, void (*fn)(Context&, const Options&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    cmds.push_back({sub, cacheable, [fn, &o](Context& c) { fn(c, o); }});
    return sub;
  };
  auto* s = add("validate-category", "structural, pentagon and sphericality checks", false, validate_category_cmd);
  s->add_option("--category", o.category, "category file or name")->required();

  s = add("eval-graph", "evaluate a colored graph on S^2", true, eval_graph_cmd);
  s->add_option("--graph", o.graph, "graph file or shipped name")->required();
  s->add_option("--category", o.category, "category file or name")->required();
  s->add_option("--outer-face", o.outer_face, "face pushed to infinity");

  s = add("labelings", "G-labelings of a skeleton and their gauge orbits", true, labelings_cmd);
  manifold_options(s, o);
  s->add_option("--group", o.group, "Zn, Dn or Sn")->required();

  s = add("invariant", "state sum of one labeled skeleton", true, invariant_cmd);
  manifold_options(s, o);
  s->add_option("--category", o.category, "category file or name")->required();
  s->add_option("--labeling", o.labeling, "comma separated region labels");
  s->add_option("--orbit", o.orbit, "index of a gauge orbit");
  s->add_flag("--all-orbits", o.all_orbits, "one value per gauge orbit");

  s = add("partition", "values of all homotopy classes and their weighted sum", true, partition_cmd);
  manifold_options(s, o);
  s->add_option("--category", o.category, "category file or name")->required();

  s = add("dw", "simplicial Dijkgraaf-Witten oracle", true, dw_cmd);
  s->add_option("--triangulation", o.triangulation, "triangulation file or shipped name")->required();
  s->add_option("--group", o.group, "Zn, Dn or Sn")->required();
  s->add_option("--theta", o.theta, "standard cocycle index for Zn");
  s->add_flag("--per-class", o.per_class, "list each flat coloring up to tree gauge");

  s = add("pachner", "apply one Pachner move", false, pachner_cmd);
  s->add_option("--triangulation", o.triangulation, "triangulation file or shipped name")->required();
  s->add_option("--move", o.move, "1-4, 2-3, 3-2 or 4-1")->required();
  s->add_option("--at", o.at, "tetrahedron, triangle, edge or vertex index");
  s->add_option("--output", o.output, "write the result here");

  s = add("hqft-rank", "cylinder projector of a surface skeleton", true, hqft_rank_cmd);
  s->add_option("--surface", o.surface, "surface file or shipped name")->required();
  s->add_option("--category", o.category, "category file or name")->required();

  s = add("cobordism-map", "matrix of a cobordism skeleton", true, cobordism_map_cmd);
  s->add_option("--cobordism", o.cobordism, "cobordism file or shipped name")->required();
  s->add_option("--category", o.category, "category file or name")->required();
  return cmds;
}

}  // namespace tvsum::cli
