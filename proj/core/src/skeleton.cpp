#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tvsum/complexes.hpp"
#include "tvsum/error.hpp"

namespace tvsum {

bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.num_vertices != b.num_vertices || a.edges.size() != b.edges.size() || a.rotation != b.rotation) return false;
  for (std::size_t i = 0; i < a.edges.size(); ++i)
    if (a.edges[i].tail != b.edges[i].tail || a.edges[i].head != b.edges[i].head ||
        a.edges[i].color != b.edges[i].color)
      return false;
  return true;
}

bool operator==(const VertexLink& a, const VertexLink& b) { return a.at == b.at && a.graph == b.graph; }

bool Skeleton::operator==(const Skeleton& o) const {
  return num_balls == o.num_balls && regions == o.regions && edges == o.edges && links == o.links;
}

CyclicCSet Skeleton::edge_set(int e, const std::vector<int>& coloring) const {
  CyclicCSet s;
  for (const auto& b : edges[e].branches) s.push_back({coloring[b.region], b.sign});
  return s;
}

void Skeleton::validate() const {
  auto fail = [](const std::string& m) { throw ValidationError("skeleton: " + m); };
  if (num_balls < 1) fail("needs at least one ball");
  const int R = num_regions(), V = num_vertices();
  for (int r = 0; r < R; ++r) {
    const auto& reg = regions[r];
    if (reg.chi > 2) fail("region " + std::to_string(r) + " has Euler characteristic above 2");
    if (reg.ball_minus < 0 || reg.ball_minus >= num_balls || reg.ball_plus < 0 || reg.ball_plus >= num_balls)
      fail("region " + std::to_string(r) + " names an unknown ball");
  }
  std::vector<int> seen_tail(edges.size(), 0), seen_head(edges.size(), 0);
  for (int e = 0; e < num_edges(); ++e) {
    const auto& ed = edges[e];
    const std::string tag = "edge " + std::to_string(e);
    if ((ed.tail < 0) != (ed.head < 0)) fail(tag + " has exactly one endpoint");
    if (ed.tail >= V || ed.head >= V) fail(tag + " names an unknown vertex");
    if (ed.branches.size() < 2) fail(tag + " has fewer than two branches");
    for (const auto& b : ed.branches) {
      if (b.region < 0 || b.region >= R) fail(tag + " names an unknown region");
      if (b.sign != 1 && b.sign != -1) fail(tag + " has a branch sign other than +1/-1");
    }
  }
  for (int v = 0; v < V; ++v) {
    const auto& L = links[v];
    const std::string tag = "link of vertex " + std::to_string(v);
    if (L.graph.num_vertices != static_cast<int>(L.at.size())) fail(tag + ": vertex table size mismatch");
    try {
      L.graph.validate();
    } catch (const ValidationError& e) {
      fail(tag + ": " + e.what());
    }
    for (const auto& ge : L.graph.edges)
      if (ge.color < 0 || ge.color >= R) fail(tag + ": link edge names an unknown region");
    for (int k = 0; k < L.graph.num_vertices; ++k) {
      const LinkEnd& end = L.at[k];
      if (end.edge < 0 || end.edge >= num_edges()) fail(tag + ": unknown skeleton edge");
      const auto& ed = edges[end.edge];
      if ((end.tail ? ed.tail : ed.head) != v) fail(tag + ": edge end does not sit at this vertex");
      (end.tail ? seen_tail : seen_head)[end.edge]++;
      const int n = static_cast<int>(ed.branches.size());
      const auto& rot = L.graph.rotation[k];
      if (static_cast<int>(rot.size()) != n) fail(tag + ": link vertex valence differs from the edge's branch count");
      for (int i = 0; i < n; ++i) {
        const Branch& b = ed.branches[end.tail ? i : (n - i) % n];
        const HalfEdge& h = rot[i];
        if (L.graph.edges[h.edge].color != b.region)
          fail(tag + ": link edge region differs from the branch of edge " + std::to_string(end.edge));
        if (ColoredGraph::sign(h) != (end.tail ? b.sign : -b.sign))
          fail(tag + ": link edge orientation disagrees with the branch sign of edge " + std::to_string(end.edge));
      }
    }
  }
  for (int e = 0; e < num_edges(); ++e) {
    const int want = edges[e].is_circle() ? 0 : 1;
    if (seen_tail[e] != want || seen_head[e] != want)
      fail("edge " + std::to_string(e) + " must have each end in exactly one link");
  }
}

bool is_labeling(const Skeleton& s, const FiniteGroup& g, const std::vector<int>& labels) {
  if (static_cast<int>(labels.size()) != s.num_regions()) return false;
  for (int x : labels)
    if (x < 0 || x >= g.order()) return false;
  for (const auto& e : s.edges) {
    int p = g.identity();
    for (const auto& b : e.branches) p = g.mul(p, b.sign > 0 ? labels[b.region] : g.inv(labels[b.region]));
    if (p != g.identity()) return false;
  }
  return true;
}

// ------------------------------------------------------------- dual skeleton

namespace {

// Branch orders and links are read against the tetrahedron signs. With this
// choice pointed categories reproduce the simplicial cocycle pairing exactly
// (checked by the oracle on chiral lens spaces); the other choice conjugates.
constexpr int kLinkHandedness = -1;

// Face vertices of (t, f) in the cyclic order used for the dual edge through f.
std::array<int, 3> outward_traversal(const Triangulation& T, int t, int f) {
  std::array<int, 3> v{};
  int k = 0;
  for (int i = 0; i < 4; ++i)
    if (i != f) v[k++] = i;
  if (kLinkHandedness * T.orientation(t) * (f % 2 ? -1 : 1) != 1) std::swap(v[1], v[2]);
  return v;
}

}  // namespace

Skeleton dual_skeleton(const Triangulation& T) {
  Skeleton s;
  s.num_balls = T.num_vertices();
  for (int e = 0; e < T.num_edges(); ++e) {
    const auto& r = T.edge_rep(e);
    s.regions.push_back({1, T.vertex_class(r.tet, r.from), T.vertex_class(r.tet, r.to)});
  }
  for (int tr = 0; tr < T.num_triangles(); ++tr) {
    auto [t, f] = T.triangle_rep(tr);
    SkeletonEdge ed;
    ed.tail = t;
    ed.head = T.gluing(t, f).tet;
    auto v = outward_traversal(T, t, f);
    for (int k = 0; k < 3; ++k) {
      int x = v[k], y = v[(k + 1) % 3];
      ed.branches.push_back({T.edge_class(t, x, y), T.edge_direction(t, x, y)});
    }
    s.edges.push_back(std::move(ed));
  }
  for (int t = 0; t < T.size(); ++t) {
    VertexLink L;
    L.graph.num_vertices = 4;
    L.graph.rotation.resize(4);
    for (int le = 0; le < 6; ++le) {
      const int i = kEdgeVertices[le][0], j = kEdgeVertices[le][1];
      int k = -1, l = -1;
      for (int x = 0; x < 4; ++x)
        if (x != i && x != j) (k < 0 ? k : l) = x;
      // orientation from the branch sign at link vertex k
      auto v = outward_traversal(T, t, k);
      int sign = 0;
      for (int a = 0; a < 3; ++a) {
        int x = v[a], y = v[(a + 1) % 3];
        if (local_edge(x, y) == le) sign = T.edge_direction(t, x, y);
      }
      if (sign > 0) L.graph.edges.push_back({l, k, T.edge_class(t, i, j)});
      else L.graph.edges.push_back({k, l, T.edge_class(t, i, j)});
    }
    auto half = [&](int le, int at_vertex) { return HalfEdge{le, L.graph.edges[le].tail == at_vertex}; };
    for (int f = 0; f < 4; ++f) {
      const int tr = T.triangle_class(t, f);
      auto [tc, fc] = T.triangle_rep(tr);
      const bool tail = tc == t && fc == f;
      L.at.push_back({tr, tail});
      if (tail) {
        auto v = outward_traversal(T, t, f);
        for (int a = 0; a < 3; ++a) L.graph.rotation[f].push_back(half(local_edge(v[a], v[(a + 1) % 3]), f));
      } else {
        const Gluing& g = T.gluing(tc, fc);
        auto v = outward_traversal(T, tc, fc);
        for (int a = 0; a < 3; ++a) {
          const int b = (3 - a) % 3;
          const int le = local_edge(g.perm[v[b]], g.perm[v[(b + 1) % 3]]);
          L.graph.rotation[f].push_back(half(le, f));
        }
      }
    }
    s.links.push_back(std::move(L));
  }
  s.validate();
  return s;
}

// ------------------------------------------------------------- IO

namespace {

using nlohmann::json;

json graph_json(const ColoredGraph& g) { return json::parse(serialize_graph(g)); }

}  // namespace

std::string serialize_skeleton(const Skeleton& s) {
  std::ostringstream os;
  os << "{\n  \"format\": \"tvsum-skeleton-1\",\n  \"balls\": " << s.num_balls << ",\n  \"regions\": [\n";
  for (int r = 0; r < s.num_regions(); ++r) {
    const auto& reg = s.regions[r];
    os << "    " << json{{"chi", reg.chi}, {"balls", {reg.ball_minus, reg.ball_plus}}}.dump()
       << (r + 1 < s.num_regions() ? ",\n" : "\n");
  }
  os << "  ],\n  \"edges\": [\n";
  for (int e = 0; e < s.num_edges(); ++e) {
    const auto& ed = s.edges[e];
    json j;
    j["ends"] = ed.is_circle() ? json(nullptr) : json{ed.tail, ed.head};
    j["branches"] = json::array();
    for (const auto& b : ed.branches) j["branches"].push_back({b.region, b.sign > 0 ? "+" : "-"});
    os << "    " << j.dump() << (e + 1 < s.num_edges() ? ",\n" : "\n");
  }
  os << "  ],\n  \"vertices\": [\n";
  for (int v = 0; v < s.num_vertices(); ++v) {
    const auto& L = s.links[v];
    json j;
    j["ends"] = json::array();
    for (const auto& a : L.at) j["ends"].push_back({a.edge, a.tail ? "t" : "h"});
    j["link"] = graph_json(L.graph);
    os << "    " << j.dump() << (v + 1 < s.num_vertices() ? ",\n" : "\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

Skeleton parse_skeleton(const std::string& text) {
  try {
    json j = json::parse(text);
    Skeleton s;
    s.num_balls = j.at("balls").get<int>();
    for (const auto& r : j.at("regions"))
      s.regions.push_back({r.at("chi").get<int>(), r.at("balls").at(0).get<int>(), r.at("balls").at(1).get<int>()});
    for (const auto& e : j.at("edges")) {
      SkeletonEdge ed;
      if (!e.at("ends").is_null()) {
        ed.tail = e["ends"].at(0).get<int>();
        ed.head = e["ends"].at(1).get<int>();
      }
      for (const auto& b : e.at("branches")) {
        const std::string sg = b.at(1).get<std::string>();
        if (sg != "+" && sg != "-") throw ValidationError("skeleton: branch sign must be \"+\" or \"-\"");
        ed.branches.push_back({b.at(0).get<int>(), sg == "+" ? 1 : -1});
      }
      s.edges.push_back(std::move(ed));
    }
    for (const auto& v : j.at("vertices")) {
      VertexLink L;
      for (const auto& a : v.at("ends")) L.at.push_back({a.at(0).get<int>(), a.at(1).get<std::string>() == "t"});
      L.graph = parse_graph(v.at("link").dump());
      s.links.push_back(std::move(L));
    }
    s.validate();
    return s;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed skeleton file: ") + e.what());
  }
}

Skeleton load_skeleton(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read skeleton file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_skeleton(ss.str());
}

}  // namespace tvsum
