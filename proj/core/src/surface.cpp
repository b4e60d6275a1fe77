#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "tvsum/error.hpp"
#include "tvsum/hqft.hpp"

namespace tvsum {

namespace {

using nlohmann::json;

int end_vertex(const ColoredGraph& g, const HalfEdge& h) { return h.tail ? g.edges[h.edge].tail : g.edges[h.edge].head; }

// Rotation consistency, valence, and the Euler characteristic of each component.
void check_embedding(const SurfaceSkeleton& s) {
  auto fail = [&](const std::string& m) { throw ValidationError("surface " + s.name + ": " + m); };
  const auto& g = s.graph;
  if (static_cast<int>(g.rotation.size()) != g.num_vertices) fail("rotation system size mismatch");
  std::vector<int> count(2 * g.edges.size(), 0);
  for (const auto& e : g.edges)
    if (e.tail < 0 || e.tail >= g.num_vertices || e.head < 0 || e.head >= g.num_vertices)
      fail("edge endpoint out of range");
  for (int v = 0; v < g.num_vertices; ++v) {
    if (g.rotation[v].size() < 2) fail("vertex " + std::to_string(v) + " has valence below 2");
    for (const auto& h : g.rotation[v]) {
      if (h.edge < 0 || h.edge >= static_cast<int>(g.edges.size())) fail("rotation names an unknown edge");
      if (end_vertex(g, h) != v) fail("half-edge listed at the wrong vertex");
      ++count[2 * h.edge + (h.tail ? 0 : 1)];
    }
  }
  for (int c : count)
    if (c != 1) fail("every half-edge must appear exactly once in the rotation system");
  const auto comps = g.components();
  if (comps.size() != s.genus.size()) fail("genus list does not match the number of components");
  if (s.base_faces.size() != s.genus.size()) fail("need one base point per component");
  std::vector<int> comp_of(g.num_vertices);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
  const auto faces = g.faces();
  std::vector<int> chi(comps.size(), 0);
  for (int v = 0; v < g.num_vertices; ++v) ++chi[comp_of[v]];
  for (const auto& e : g.edges) --chi[comp_of[e.tail]];
  for (const auto& f : faces) ++chi[comp_of[f.front().first]];
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (s.genus[c] < 0) fail("negative genus");
    if (chi[c] != 2 - 2 * s.genus[c]) fail("component " + std::to_string(c) + " does not have the declared genus");
    const int f = s.base_faces[c];
    if (f < 0 || f >= static_cast<int>(faces.size())) fail("base point names an unknown face");
    if (comp_of[faces[f].front().first] != static_cast<int>(c)) fail("base point lies in another component");
  }
}

json surface_json(const SurfaceSkeleton& s) {
  json j;
  j["format"] = "tvsum-surface-1";
  j["name"] = s.name;
  j["genus"] = s.genus;
  j["base_faces"] = s.base_faces;
  j["edges"] = json::array();
  for (const auto& e : s.graph.edges) j["edges"].push_back({e.tail, e.head, e.color});
  j["rotation"] = json::array();
  for (const auto& r : s.graph.rotation) {
    json row = json::array();
    for (const auto& h : r) row.push_back({h.edge, h.tail ? "t" : "h"});
    j["rotation"].push_back(row);
  }
  return j;
}

SurfaceSkeleton surface_from_json(const json& j) {
  SurfaceSkeleton s;
  s.name = j.value("name", "");
  s.genus = j.at("genus").get<std::vector<int>>();
  s.base_faces = j.at("base_faces").get<std::vector<int>>();
  for (const auto& e : j.at("edges")) s.graph.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
  for (const auto& r : j.at("rotation")) {
    std::vector<HalfEdge> rot;
    for (const auto& h : r) rot.push_back({h.at(0).get<int>(), h.at(1).get<std::string>() == "t"});
    s.graph.rotation.push_back(std::move(rot));
  }
  s.graph.num_vertices = static_cast<int>(s.graph.rotation.size());
  check_embedding(s);
  return s;
}

std::string read_file(const std::string& path, const std::string& what) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + what + " file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

CyclicCSet SurfaceSkeleton::vertex_set(int v, const std::vector<int>& c) const {
  CyclicCSet out;
  for (const auto& h : graph.rotation[v]) out.push_back({c[h.edge], ColoredGraph::sign(h)});
  return out;
}

void SurfaceSkeleton::validate(const FiniteGroup& g) const {
  check_embedding(*this);
  for (const auto& e : graph.edges)
    if (e.color < 0 || e.color >= g.order()) throw ValidationError("surface " + name + ": label outside the group");
  for (int v = 0; v < graph.num_vertices; ++v) {
    int p = g.identity();
    for (const auto& h : graph.rotation[v]) {
      const int l = graph.edges[h.edge].color;
      p = g.mul(p, ColoredGraph::sign(h) > 0 ? l : g.inv(l));
    }
    if (p != g.identity())
      throw ValidationError("surface " + name + ": labels violate the product condition at vertex " + std::to_string(v));
  }
}

bool SurfaceSkeleton::operator==(const SurfaceSkeleton& o) const {
  return graph == o.graph && genus == o.genus && base_faces == o.base_faces;
}

SurfaceSkeleton parse_surface(const std::string& text) {
  try {
    return surface_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed surface file: ") + e.what());
  }
}

SurfaceSkeleton load_surface(const std::string& path) { return parse_surface(read_file(path, "surface")); }

std::string serialize_surface(const SurfaceSkeleton& s) { return surface_json(s).dump(2) + "\n"; }

SurfaceSkeleton restrict_surface(const SurfaceSkeleton& s, const std::vector<int>& edges) {
  const auto& g = s.graph;
  std::vector<int> now(g.edges.size(), -1);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k] < 0 || edges[k] >= static_cast<int>(g.edges.size()) || now[edges[k]] >= 0)
      throw ValidationError("restriction lists an unknown or repeated edge");
    now[edges[k]] = static_cast<int>(k);
  }
  SurfaceSkeleton r;
  r.name = s.name;
  r.genus = s.genus;
  r.graph.num_vertices = g.num_vertices;
  for (int e : edges) r.graph.edges.push_back(g.edges[e]);
  r.graph.rotation.resize(g.num_vertices);
  for (int v = 0; v < g.num_vertices; ++v)
    for (const auto& h : g.rotation[v])
      if (now[h.edge] >= 0) r.graph.rotation[v].push_back({now[h.edge], h.tail});
  // a base point stays in the merged face containing its old corner
  const auto old_faces = g.faces();
  const auto new_faces = r.graph.faces();
  for (int f : s.base_faces) {
    auto [v, i] = old_faces[f].front();
    const auto& rot = g.rotation[v];
    const int n = static_cast<int>(rot.size());
    int j = i;
    for (int step = 0; step < n && now[rot[j].edge] < 0; ++step) j = (j + n - 1) % n;
    if (now[rot[j].edge] < 0) throw ValidationError("restriction removes every edge at a vertex");
    const HalfEdge kept{now[rot[j].edge], rot[j].tail};
    const auto& nrot = r.graph.rotation[v];
    const int ni = static_cast<int>(std::find(nrot.begin(), nrot.end(), kept) - nrot.begin());
    for (std::size_t nf = 0; nf < new_faces.size(); ++nf)
      for (const auto& corner : new_faces[nf])
        if (corner == std::make_pair(v, ni)) r.base_faces.push_back(static_cast<int>(nf));
  }
  check_embedding(r);
  return r;
}

std::optional<std::vector<int>> find_restriction(const SurfaceSkeleton& big, const SurfaceSkeleton& small) {
  const int n = static_cast<int>(big.graph.edges.size()), k = static_cast<int>(small.graph.edges.size());
  if (k > n || big.graph.num_vertices != small.graph.num_vertices) return std::nullopt;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<int> sel;
    for (int i = 0; i < n; ++i)
      if (pick[i]) sel.push_back(i);
    do {
      try {
        auto r = restrict_surface(big, sel);
        if (r.graph == small.graph && r.genus == small.genus) return sel;
      } catch (const ValidationError&) {
      }
    } while (std::next_permutation(sel.begin(), sel.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return std::nullopt;
}

std::vector<std::vector<int>> surface_colorings(const SurfaceSkeleton& s, const GFusionData& cat) {
  std::vector<std::vector<int>> out;
  const int E = static_cast<int>(s.graph.edges.size());
  std::vector<int> c(E, 0);
  auto rec = [&](auto&& self, int e) -> void {
    if (e == E) {
      out.push_back(c);
      return;
    }
    for (int i = 0; i < cat.num_simples(); ++i)
      if (cat.grade[i] == s.graph.edges[e].color) {
        c[e] = i;
        self(self, e + 1);
      }
  };
  rec(rec, 0);
  return out;
}

// ------------------------------------------------------------- cobordisms

int CobordismSkeleton::disk_region(int s, int a) const {
  for (const auto& b : boundary_edges)
    if (b.side == s && b.edge == a) return edges[b.p_edge].branches.front().region;
  throw ValidationError("cobordism: no boundary edge for surface edge " + std::to_string(a));
}

void CobordismSkeleton::validate(const FiniteGroup& g) const {
  auto fail = [&](const std::string& m) { throw ValidationError("cobordism " + name + ": " + m); };
  in.validate(g);
  out.validate(g);
  const int R = num_regions(), I = num_interior(), B = static_cast<int>(boundary.size());
  if (static_cast<int>(labels.size()) != R) fail("label count differs from region count");
  for (int r = 0; r < R; ++r) {
    if (labels[r] < 0 || labels[r] >= g.order()) fail("region label outside the group");
    if (chi[r] > 2) fail("region " + std::to_string(r) + " has Euler characteristic above 2");
  }
  const int half_open = (in.graph.num_vertices ? in.num_faces() : 0) + (out.graph.num_vertices ? out.num_faces() : 0);
  if (num_balls < half_open || (num_balls == 0 && R > 0)) fail("ball count is too small");

  // boundary vertices and edges biject with those of A_0 and A_1
  std::vector<std::vector<int>> vid(2);
  for (int s = 0; s < 2; ++s) vid[s].assign(side(s).graph.num_vertices, -1);
  for (int k = 0; k < B; ++k) {
    const auto& b = boundary[k];
    if (b.side < 0 || b.side > 1 || b.vertex < 0 || b.vertex >= side(b.side).graph.num_vertices)
      fail("boundary vertex names an unknown surface vertex");
    if (vid[b.side][b.vertex] >= 0) fail("surface vertex listed twice");
    vid[b.side][b.vertex] = I + k;
  }
  for (int s = 0; s < 2; ++s)
    for (int x : vid[s])
      if (x < 0) fail("surface vertex missing from the boundary of P");
  std::vector<char> is_boundary_edge(edges.size(), 0);
  std::set<std::pair<int, int>> seen_a;
  std::set<int> disks;
  for (const auto& b : boundary_edges) {
    if (b.side < 0 || b.side > 1 || b.edge < 0 || b.edge >= static_cast<int>(side(b.side).graph.edges.size()))
      fail("boundary edge names an unknown surface edge");
    if (b.p_edge < 0 || b.p_edge >= static_cast<int>(edges.size())) fail("boundary edge names an unknown edge of P");
    if (!seen_a.insert({b.side, b.edge}).second || is_boundary_edge[b.p_edge]) fail("boundary edge listed twice");
    is_boundary_edge[b.p_edge] = 1;
    const auto& a = side(b.side).graph.edges[b.edge];
    const auto& e = edges[b.p_edge];
    const int t = vid[b.side][b.side == 0 ? a.head : a.tail], h = vid[b.side][b.side == 0 ? a.tail : a.head];
    if (e.tail != t || e.head != h) fail("boundary edge " + std::to_string(b.p_edge) + " does not match its surface edge");
    // a single disk branch, oriented along the edge, labelled by l(a)
    if (e.branches.size() != 1 || e.branches[0].sign != 1) fail("boundary edge needs exactly one positive branch");
    const int r = e.branches[0].region;
    if (r < 0 || r >= R) fail("boundary edge names an unknown region");
    if (chi[r] != 1) fail("region along a boundary edge must be a disk");
    if (labels[r] != a.color) fail("region label differs from the boundary label");
    if (!disks.insert(r).second) fail("region meets the boundary in two edges");
  }
  for (int s = 0; s < 2; ++s)
    if (static_cast<int>(side(s).graph.edges.size()) != static_cast<int>(std::count_if(
            boundary_edges.begin(), boundary_edges.end(), [s](const BoundaryEdge& b) { return b.side == s; })))
      fail("surface edge missing from the boundary of P");

  // edges and their ends
  std::vector<int> transversal(B, 0);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const auto& ed = edges[e];
    const std::string tag = "edge " + std::to_string(e);
    if ((ed.tail < 0) != (ed.head < 0)) fail(tag + " has exactly one endpoint");
    if (ed.tail >= I + B || ed.head >= I + B) fail(tag + " names an unknown vertex");
    for (const auto& b : ed.branches) {
      if (b.region < 0 || b.region >= R) fail(tag + " names an unknown region");
      if (b.sign != 1 && b.sign != -1) fail(tag + " has a branch sign other than +1/-1");
    }
    if (is_boundary_edge[e]) continue;
    if (ed.branches.size() < 2) fail(tag + " has fewer than two branches");
    const bool tb = ed.tail >= I, hb = ed.head >= I;
    if (tb && hb) fail(tag + " joins two boundary vertices but is not a boundary edge");
    if (tb) ++transversal[ed.tail - I];
    if (hb) ++transversal[ed.head - I];
  }
  // one transversal edge per boundary vertex, carrying the disks around v
  for (int k = 0; k < B; ++k) {
    const auto& bv = boundary[k];
    const std::string tag = "boundary vertex " + std::to_string(k);
    if (transversal[k] != 1 || bv.edge < 0 || bv.edge >= static_cast<int>(edges.size()) || is_boundary_edge[bv.edge])
      fail(tag + " needs exactly one transversal edge");
    const auto& ed = edges[bv.edge];
    if (ed.tail != I + k && ed.head != I + k) fail(tag + ": listed edge does not end there");
    std::vector<Branch> toward = ed.branches;
    if (ed.tail == I + k) {
      const int n = static_cast<int>(toward.size());
      for (int i = 0; i < n; ++i) toward[i] = {ed.branches[(n - i) % n].region, -ed.branches[(n - i) % n].sign};
    }
    const auto& A = side(bv.side);
    std::vector<Branch> want;
    for (const auto& h : A.graph.rotation[bv.vertex]) want.push_back({disk_region(bv.side, h.edge), ColoredGraph::sign(h)});
    if (bv.side == 1) {
      const int n = static_cast<int>(want.size());
      std::vector<Branch> opp(n);
      for (int i = 0; i < n; ++i) opp[i] = {want[(n - i) % n].region, -want[(n - i) % n].sign};
      want = opp;
    }
    if (toward != want) fail(tag + ": branches of the transversal edge differ from the surface vertex");
  }

  // interior links, as for closed skeletons
  std::vector<int> seen_tail(edges.size(), 0), seen_head(edges.size(), 0);
  for (int v = 0; v < I; ++v) {
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
      if (end.edge < 0 || end.edge >= static_cast<int>(edges.size()) || is_boundary_edge[end.edge])
        fail(tag + ": link vertex names a boundary or unknown edge");
      const auto& ed = edges[end.edge];
      if ((end.tail ? ed.tail : ed.head) != v) fail(tag + ": edge end does not sit at this vertex");
      (end.tail ? seen_tail : seen_head)[end.edge]++;
      const int n = static_cast<int>(ed.branches.size());
      const auto& rot = L.graph.rotation[k];
      if (static_cast<int>(rot.size()) != n) fail(tag + ": link vertex valence differs from the edge's branch count");
      for (int i = 0; i < n; ++i) {
        const Branch& b = ed.branches[end.tail ? i : (n - i) % n];
        if (L.graph.edges[rot[i].edge].color != b.region) fail(tag + ": link edge region differs from the branch");
        if (ColoredGraph::sign(rot[i]) != (end.tail ? b.sign : -b.sign)) fail(tag + ": link edge orientation disagrees");
      }
    }
  }
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (is_boundary_edge[e]) continue;
    const auto& ed = edges[e];
    const int wt = ed.is_circle() || ed.tail >= I ? 0 : 1, wh = ed.is_circle() || ed.head >= I ? 0 : 1;
    if (seen_tail[e] != wt || seen_head[e] != wh) fail("edge " + std::to_string(e) + " must have each interior end in one link");
    int p = g.identity();
    for (const auto& b : ed.branches) p = g.mul(p, b.sign > 0 ? labels[b.region] : g.inv(labels[b.region]));
    if (p != g.identity()) fail("labels violate the product condition at edge " + std::to_string(e));
  }
}

CobordismSkeleton closed_cobordism(const Skeleton& s, const GLabeling& l) {
  CobordismSkeleton p;
  p.name = "closed";
  p.num_balls = s.num_balls;
  for (const auto& r : s.regions) p.chi.push_back(r.chi);
  p.labels = l;
  p.edges = s.edges;
  p.links = s.links;
  return p;
}

}  // namespace tvsum
