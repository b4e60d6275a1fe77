#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "tvsum/error.hpp"
#include "tvsum/hqft.hpp"

namespace tvsum {

namespace {

using nlohmann::json;

std::vector<Branch> opposite_branches(const std::vector<Branch>& b) {
  const int n = static_cast<int>(b.size());
  std::vector<Branch> out(n);
  for (int i = 0; i < n; ++i) out[i] = {b[(n - i) % n].region, -b[(n - i) % n].sign};
  return out;
}

}  // namespace

CobordismSkeleton cylinder(const SurfaceSkeleton& mid, const std::vector<int>& in_edges,
                           const std::vector<int>& out_edges) {
  const auto& g = mid.graph;
  const int V = g.num_vertices, E = static_cast<int>(g.edges.size());
  CobordismSkeleton p;
  p.name = mid.name + "_cylinder";
  p.in = restrict_surface(mid, in_edges);
  p.out = restrict_surface(mid, out_edges);
  std::vector<int> in_of(E, -1), out_of(E, -1);
  for (std::size_t k = 0; k < in_edges.size(); ++k) in_of[in_edges[k]] = static_cast<int>(k);
  for (std::size_t k = 0; k < out_edges.size(); ++k) out_of[out_edges[k]] = static_cast<int>(k);
  for (int e = 0; e < E; ++e)
    if (in_of[e] < 0 && out_of[e] < 0) throw ValidationError("cylinder: edge " + std::to_string(e) + " lies on neither end");
  p.num_balls = V ? p.in.num_faces() + p.out.num_faces() : 0;

  // regions: middle faces, then D_a below, then D_a above
  const auto faces = g.faces();
  std::vector<std::vector<int>> face_at(V);
  for (int v = 0; v < V; ++v) face_at[v].assign(g.rotation[v].size(), -1);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (auto [v, i] : faces[f]) face_at[v][i] = static_cast<int>(f);
    p.chi.push_back(1);
    p.labels.push_back(0);
  }
  std::vector<int> below(E, -1), above(E, -1);
  for (int e = 0; e < E; ++e)
    if (in_of[e] >= 0) {
      below[e] = p.num_regions();
      p.chi.push_back(1);
      p.labels.push_back(g.edges[e].color);
    }
  for (int e = 0; e < E; ++e)
    if (out_of[e] >= 0) {
      above[e] = p.num_regions();
      p.chi.push_back(1);
      p.labels.push_back(g.edges[e].color);
    }

  // vertices: v x 1/2 are 0..V-1, then the bottom copy of A_0, then the top copy of A_1
  auto bottom = [&](int v) { return V + v; };
  auto top = [&](int v) { return 2 * V + v; };
  std::vector<int> e_bot(V), e_top(V), e_mid(E);
  for (int v = 0; v < V; ++v) {
    SkeletonEdge down{v, bottom(v), {}}, up{v, top(v), {}};
    for (const auto& h : g.rotation[v]) {
      if (below[h.edge] >= 0) down.branches.push_back({below[h.edge], ColoredGraph::sign(h)});
      if (above[h.edge] >= 0) up.branches.push_back({above[h.edge], ColoredGraph::sign(h)});
    }
    up.branches = opposite_branches(up.branches);
    e_bot[v] = static_cast<int>(p.edges.size());
    p.edges.push_back(std::move(down));
    e_top[v] = static_cast<int>(p.edges.size());
    p.edges.push_back(std::move(up));
    p.boundary.push_back({0, v, e_bot[v]});
  }
  for (int v = 0; v < V; ++v) p.boundary.push_back({1, v, e_top[v]});
  // a x 1/2 : [D_above -, right face +, D_below +, left face -]
  std::vector<int> right(E), left(E);
  for (int v = 0; v < V; ++v) {
    const int n = static_cast<int>(g.rotation[v].size());
    for (int i = 0; i < n; ++i) {
      const auto& h = g.rotation[v][i];
      if (!h.tail) continue;
      right[h.edge] = face_at[v][i];
      left[h.edge] = face_at[v][(i + n - 1) % n];
    }
  }
  for (int e = 0; e < E; ++e) {
    SkeletonEdge m{g.edges[e].tail, g.edges[e].head, {}};
    if (above[e] >= 0) m.branches.push_back({above[e], -1});
    m.branches.push_back({right[e], 1});
    if (below[e] >= 0) m.branches.push_back({below[e], 1});
    m.branches.push_back({left[e], -1});
    e_mid[e] = static_cast<int>(p.edges.size());
    p.edges.push_back(std::move(m));
  }
  // boundary edges; the incoming copy runs against a
  for (int s = 0; s < 2; ++s) {
    const auto& keep = s == 0 ? in_edges : out_edges;
    for (std::size_t k = 0; k < keep.size(); ++k) {
      const auto& a = g.edges[keep[k]];
      SkeletonEdge b = s == 0 ? SkeletonEdge{bottom(a.head), bottom(a.tail), {{below[keep[k]], 1}}}
                              : SkeletonEdge{top(a.tail), top(a.head), {{above[keep[k]], 1}}};
      p.boundary_edges.push_back({s, static_cast<int>(k), static_cast<int>(p.edges.size())});
      p.edges.push_back(std::move(b));
    }
  }

  // link of v x 1/2: S and N for the vertical edges, m_i per half-edge
  for (int v = 0; v < V; ++v) {
    const auto& rot = g.rotation[v];
    const int n = static_cast<int>(rot.size());
    VertexLink L;
    const int S = n, N = n + 1;
    L.graph.num_vertices = n + 2;
    L.graph.rotation.resize(n + 2);
    for (int i = 0; i < n; ++i) L.at.push_back({e_mid[rot[i].edge], rot[i].tail});
    L.at.push_back({e_bot[v], true});
    L.at.push_back({e_top[v], true});
    std::vector<int> to_s(n, -1), to_n(n, -1), corner(n, -1);
    auto add = [&](int from, int to, int region) {
      L.graph.edges.push_back({from, to, region});
      return static_cast<int>(L.graph.edges.size()) - 1;
    };
    for (int i = 0; i < n; ++i) {
      const int eps = ColoredGraph::sign(rot[i]);
      // a link edge points at S when its branch on the edge below is positive
      if (below[rot[i].edge] >= 0) to_s[i] = eps > 0 ? add(i, S, below[rot[i].edge]) : add(S, i, below[rot[i].edge]);
      if (above[rot[i].edge] >= 0) to_n[i] = -eps > 0 ? add(i, N, above[rot[i].edge]) : add(N, i, above[rot[i].edge]);
      corner[i] = add((i + 1) % n, i, face_at[v][i]);
    }
    auto half = [&](int le, int at) { return HalfEdge{le, L.graph.edges[le].tail == at}; };
    for (int i = 0; i < n; ++i)
      if (to_s[i] >= 0) L.graph.rotation[S].push_back(half(to_s[i], S));
    std::vector<HalfEdge> around_n;
    for (int i = 0; i < n; ++i)
      if (to_n[i] >= 0) around_n.push_back(half(to_n[i], N));
    if (!around_n.empty()) {
      L.graph.rotation[N].push_back(around_n[0]);
      for (std::size_t k = around_n.size() - 1; k >= 1; --k) L.graph.rotation[N].push_back(around_n[k]);
    }
    for (int i = 0; i < n; ++i) {
      // clockwise at m_i: N, m_{i+1}, S, m_{i-1}; anchored at branch 0 of the middle edge
      std::vector<HalfEdge> cw;
      if (to_n[i] >= 0) cw.push_back(half(to_n[i], i));
      cw.push_back(half(corner[i], i));
      if (to_s[i] >= 0) cw.push_back(half(to_s[i], i));
      cw.push_back(half(corner[(i + n - 1) % n], i));
      int anchor = 0;
      if (to_n[i] < 0 && !rot[i].tail) anchor = static_cast<int>(cw.size()) - 1;
      std::rotate(cw.begin(), cw.begin() + anchor, cw.end());
      L.graph.rotation[i] = std::move(cw);
    }
    p.links.push_back(std::move(L));
  }
  return p;
}

CobordismSkeleton cylinder(const SurfaceSkeleton& a) {
  std::vector<int> all(a.graph.edges.size());
  std::iota(all.begin(), all.end(), 0);
  return cylinder(a, all, all);
}

CobordismSkeleton glue(const CobordismSkeleton& p0, const CobordismSkeleton& p1) {
  if (!(p0.out == p1.in)) throw ValidationError("glue: outgoing surface of the first piece differs from the incoming one");
  const auto& mid = p0.out;
  const int I0 = p0.num_interior(), I1 = p1.num_interior();
  CobordismSkeleton p;
  p.name = p0.name + "+" + p1.name;
  p.in = p0.in;
  p.out = p1.out;
  p.num_balls = p0.num_balls + p1.num_balls - (mid.graph.num_vertices ? mid.num_faces() : 0);

  // regions: D_a of the second piece merge into D_a of the first
  std::vector<int> region1(p1.num_regions(), -1);
  p.chi = p0.chi;
  p.labels = p0.labels;
  for (std::size_t a = 0; a < mid.graph.edges.size(); ++a) {
    const int r0 = p0.disk_region(1, static_cast<int>(a)), r1 = p1.disk_region(0, static_cast<int>(a));
    region1[r1] = r0;
    p.chi[r0] += p1.chi[r1] - 1;
  }
  for (int r = 0; r < p1.num_regions(); ++r)
    if (region1[r] < 0) {
      region1[r] = p.num_regions();
      p.chi.push_back(p1.chi[r]);
      p.labels.push_back(p1.labels[r]);
    }

  // vertices: interiors of both, then the new boundary
  std::vector<int> vert0(I0 + p0.boundary.size(), -1), vert1(I1 + p1.boundary.size(), -1);
  for (int v = 0; v < I0; ++v) vert0[v] = v;
  for (int v = 0; v < I1; ++v) vert1[v] = I0 + v;
  int next = I0 + I1;
  for (std::size_t k = 0; k < p0.boundary.size(); ++k)
    if (p0.boundary[k].side == 0) vert0[I0 + k] = next++;
  for (std::size_t k = 0; k < p1.boundary.size(); ++k)
    if (p1.boundary[k].side == 1) vert1[I1 + k] = next++;

  // edges: drop boundary edges on the glued surface, fuse transversal pairs
  std::vector<char> drop0(p0.edges.size(), 0), drop1(p1.edges.size(), 0);
  for (const auto& b : p0.boundary_edges)
    if (b.side == 1) drop0[b.p_edge] = 1;
  for (const auto& b : p1.boundary_edges)
    if (b.side == 0) drop1[b.p_edge] = 1;
  std::vector<int> tv0(mid.graph.num_vertices, -1), tv1(mid.graph.num_vertices, -1);
  for (const auto& b : p0.boundary)
    if (b.side == 1) tv0[b.vertex] = b.edge, drop0[b.edge] = 1;
  for (const auto& b : p1.boundary)
    if (b.side == 0) tv1[b.vertex] = b.edge, drop1[b.edge] = 1;
  std::vector<int> edge0(p0.edges.size(), -1), edge1(p1.edges.size(), -1);
  auto copy_edge = [&](const SkeletonEdge& ed, const std::vector<int>& vert, const std::vector<int>& reg) {
    SkeletonEdge e = ed;
    if (!e.is_circle()) e.tail = vert[e.tail], e.head = vert[e.head];
    for (auto& b : e.branches) b.region = reg[b.region];
    p.edges.push_back(std::move(e));
    return static_cast<int>(p.edges.size()) - 1;
  };
  std::vector<int> id0(p0.num_regions());
  std::iota(id0.begin(), id0.end(), 0);
  for (std::size_t e = 0; e < p0.edges.size(); ++e)
    if (!drop0[e]) edge0[e] = copy_edge(p0.edges[e], vert0, id0);
  for (std::size_t e = 0; e < p1.edges.size(); ++e)
    if (!drop1[e]) edge1[e] = copy_edge(p1.edges[e], vert1, region1);
  // fused edge runs from the first interior to the second, flipping link ends as needed
  std::vector<char> flip0(p0.edges.size(), 0), flip1(p1.edges.size(), 0);
  for (int v = 0; v < mid.graph.num_vertices; ++v) {
    const auto& a = p0.edges[tv0[v]];
    const auto& b = p1.edges[tv1[v]];
    const bool a_toward = a.head >= I0, b_away = b.tail >= I1;
    SkeletonEdge e;
    e.tail = vert0[a_toward ? a.tail : a.head];
    e.head = vert1[b_away ? b.head : b.tail];
    e.branches = a_toward ? a.branches : opposite_branches(a.branches);
    flip0[tv0[v]] = !a_toward;
    flip1[tv1[v]] = !b_away;
    edge0[tv0[v]] = edge1[tv1[v]] = static_cast<int>(p.edges.size());
    p.edges.push_back(std::move(e));
  }
  for (int s = 0; s < 2; ++s) {
    const auto& q = s == 0 ? p0 : p1;
    const auto& edge = s == 0 ? edge0 : edge1;
    const auto& flip = s == 0 ? flip0 : flip1;
    const auto& reg = s == 0 ? id0 : region1;
    for (const auto& L : q.links) {
      VertexLink M = L;
      for (auto& ge : M.graph.edges) ge.color = reg[ge.color];
      for (auto& at : M.at) {
        at.tail = flip[at.edge] ? !at.tail : at.tail;
        at.edge = edge[at.edge];
      }
      p.links.push_back(std::move(M));
    }
  }
  for (const auto& b : p0.boundary)
    if (b.side == 0) p.boundary.push_back({0, b.vertex, edge0[b.edge]});
  for (const auto& b : p1.boundary)
    if (b.side == 1) p.boundary.push_back({1, b.vertex, edge1[b.edge]});
  for (const auto& b : p0.boundary_edges)
    if (b.side == 0) p.boundary_edges.push_back({0, b.edge, edge0[b.p_edge]});
  for (const auto& b : p1.boundary_edges)
    if (b.side == 1) p.boundary_edges.push_back({1, b.edge, edge1[b.p_edge]});
  return p;
}

// ------------------------------------------------------------- IO

std::string serialize_cobordism(const CobordismSkeleton& p) {
  json j;
  j["format"] = "tvsum-cobordism-1";
  j["name"] = p.name;
  j["balls"] = p.num_balls;
  j["regions"] = json::array();
  for (int r = 0; r < p.num_regions(); ++r) j["regions"].push_back({{"chi", p.chi[r]}, {"label", p.labels[r]}});
  j["edges"] = json::array();
  for (const auto& ed : p.edges) {
    json e;
    e["ends"] = ed.is_circle() ? json(nullptr) : json{ed.tail, ed.head};
    e["branches"] = json::array();
    for (const auto& b : ed.branches) e["branches"].push_back({b.region, b.sign > 0 ? "+" : "-"});
    j["edges"].push_back(e);
  }
  j["vertices"] = json::array();
  for (const auto& L : p.links) {
    json v;
    v["ends"] = json::array();
    for (const auto& a : L.at) v["ends"].push_back({a.edge, a.tail ? "t" : "h"});
    v["link"] = json::parse(serialize_graph(L.graph));
    j["vertices"].push_back(v);
  }
  j["in"] = json::parse(serialize_surface(p.in));
  j["out"] = json::parse(serialize_surface(p.out));
  j["boundary"] = json::array();
  for (const auto& b : p.boundary) j["boundary"].push_back({{"side", b.side}, {"vertex", b.vertex}, {"edge", b.edge}});
  j["boundary_edges"] = json::array();
  for (const auto& b : p.boundary_edges)
    j["boundary_edges"].push_back({{"side", b.side}, {"edge", b.edge}, {"p_edge", b.p_edge}});
  // one line per top-level entry keeps diffs readable
  std::ostringstream os;
  os << "{\n";
  bool first = true;
  for (const char* key : {"format", "name", "balls", "regions", "edges", "vertices", "in", "out", "boundary", "boundary_edges"}) {
    os << (first ? "" : ",\n") << "  \"" << key << "\": " << j[key].dump();
    first = false;
  }
  os << "\n}\n";
  return os.str();
}

CobordismSkeleton parse_cobordism(const std::string& text) {
  try {
    json j = json::parse(text);
    CobordismSkeleton p;
    p.name = j.value("name", "");
    p.num_balls = j.at("balls").get<int>();
    for (const auto& r : j.at("regions")) {
      p.chi.push_back(r.at("chi").get<int>());
      p.labels.push_back(r.at("label").get<int>());
    }
    for (const auto& e : j.at("edges")) {
      SkeletonEdge ed;
      if (!e.at("ends").is_null()) {
        ed.tail = e["ends"].at(0).get<int>();
        ed.head = e["ends"].at(1).get<int>();
      }
      for (const auto& b : e.at("branches")) {
        const std::string sg = b.at(1).get<std::string>();
        if (sg != "+" && sg != "-") throw ValidationError("cobordism: branch sign must be \"+\" or \"-\"");
        ed.branches.push_back({b.at(0).get<int>(), sg == "+" ? 1 : -1});
      }
      p.edges.push_back(std::move(ed));
    }
    for (const auto& v : j.at("vertices")) {
      VertexLink L;
      for (const auto& a : v.at("ends")) L.at.push_back({a.at(0).get<int>(), a.at(1).get<std::string>() == "t"});
      L.graph = parse_graph(v.at("link").dump());
      p.links.push_back(std::move(L));
    }
    p.in = parse_surface(j.at("in").dump());
    p.out = parse_surface(j.at("out").dump());
    for (const auto& b : j.at("boundary"))
      p.boundary.push_back({b.at("side").get<int>(), b.at("vertex").get<int>(), b.at("edge").get<int>()});
    for (const auto& b : j.at("boundary_edges"))
      p.boundary_edges.push_back({b.at("side").get<int>(), b.at("edge").get<int>(), b.at("p_edge").get<int>()});
    return p;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed cobordism file: ") + e.what());
  }
}

CobordismSkeleton load_cobordism(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read cobordism file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_cobordism(ss.str());
}

}  // namespace tvsum
