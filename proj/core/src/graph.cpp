#include <algorithm>
#include <numeric>
#include <random>

#include "json.hpp"
#include "tvsum/error.hpp"
#include "tvsum/graphcalc.hpp"

namespace tvsum {

namespace {

int find_half_edge(const std::vector<HalfEdge>& rot, const HalfEdge& h) {
  auto it = std::find(rot.begin(), rot.end(), h);
  return it == rot.end() ? -1 : static_cast<int>(it - rot.begin());
}

int vertex_of(const ColoredGraph& g, const HalfEdge& h) {
  return h.tail ? g.edges[h.edge].tail : g.edges[h.edge].head;
}

int tag_of(const HalfEdge& h) { return 2 * h.edge + (h.tail ? 0 : 1); }

}  // namespace

CyclicCSet ColoredGraph::vertex_set(int v) const {
  CyclicCSet s;
  for (const auto& h : rotation[v]) s.push_back({edges[h.edge].color, sign(h)});
  return s;
}

std::vector<std::vector<std::pair<int, int>>> ColoredGraph::faces() const {
  std::vector<std::vector<char>> seen(num_vertices);
  for (int v = 0; v < num_vertices; ++v) seen[v].assign(rotation[v].size(), 0);
  std::vector<std::vector<std::pair<int, int>>> out;
  for (int v = 0; v < num_vertices; ++v)
    for (std::size_t i = 0; i < rotation[v].size(); ++i) {
      if (seen[v][i]) continue;
      std::vector<std::pair<int, int>> face;
      int cv = v, ci = static_cast<int>(i);
      while (!seen[cv][ci]) {
        seen[cv][ci] = 1;
        face.emplace_back(cv, ci);
        const auto& rot = rotation[cv];
        HalfEdge h = rot[(ci + 1) % rot.size()];
        HalfEdge other{h.edge, !h.tail};
        int w = vertex_of(*this, other);
        ci = find_half_edge(rotation[w], other);
        cv = w;
      }
      out.push_back(std::move(face));
    }
  return out;
}

std::vector<std::vector<int>> ColoredGraph::components() const {
  std::vector<int> comp(num_vertices, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < num_vertices; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> q{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < q.size(); ++k)
      for (const auto& h : rotation[q[k]]) {
        int w = vertex_of(*this, HalfEdge{h.edge, !h.tail});
        if (comp[w] < 0) comp[w] = comp[s], q.push_back(w);
      }
    out.push_back(std::move(q));
  }
  return out;
}

void ColoredGraph::validate() const {
  if (static_cast<int>(rotation.size()) != num_vertices) throw ValidationError("rotation system size mismatch");
  std::vector<int> count(2 * edges.size(), 0);
  for (int v = 0; v < num_vertices; ++v) {
    if (rotation[v].empty()) throw ValidationError("vertex " + std::to_string(v) + " is isolated");
    for (const auto& h : rotation[v]) {
      if (h.edge < 0 || h.edge >= static_cast<int>(edges.size())) throw ValidationError("rotation names unknown edge");
      if (vertex_of(*this, h) != v) throw ValidationError("half-edge listed at the wrong vertex");
      ++count[tag_of(h)];
    }
  }
  for (int c : count)
    if (c != 1) throw ValidationError("every half-edge must appear exactly once in the rotation system");
  auto faces_all = faces();
  auto comps = components();
  std::vector<int> comp_of(num_vertices);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
  std::vector<int> V(comps.size(), 0), E(comps.size(), 0), F(comps.size(), 0);
  for (int v = 0; v < num_vertices; ++v) ++V[comp_of[v]];
  for (const auto& e : edges) ++E[comp_of[e.tail]];
  for (const auto& f : faces_all) ++F[comp_of[f.front().first]];
  for (std::size_t c = 0; c < comps.size(); ++c)
    if (V[c] - E[c] + F[c] != 2) throw ValidationError("rotation system is not a sphere embedding (V-E+F != 2)");
}

// ------------------------------------------------------------- IO

ColoredGraph parse_graph(const std::string& text) {
  using nlohmann::json;
  try {
    json j = json::parse(text);
    ColoredGraph g;
    g.num_vertices = j.at("vertices").get<int>();
    for (const auto& e : j.at("edges")) g.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
    for (const auto& r : j.at("rotation")) {
      std::vector<HalfEdge> rot;
      // half-edge as [edge, "t"|"h"]
      for (const auto& h : r) rot.push_back({h.at(0).get<int>(), h.at(1).get<std::string>() == "t"});
      g.rotation.push_back(std::move(rot));
    }
    for (const auto& e : g.edges)
      if (e.tail < 0 || e.tail >= g.num_vertices || e.head < 0 || e.head >= g.num_vertices)
        throw ValidationError("edge endpoint out of range");
    g.validate();
    return g;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed graph file: ") + e.what());
  }
}

std::string serialize_graph(const ColoredGraph& g) {
  using nlohmann::json;
  json j;
  j["vertices"] = g.num_vertices;
  j["edges"] = json::array();
  for (const auto& e : g.edges) j["edges"].push_back({e.tail, e.head, e.color});
  j["rotation"] = json::array();
  for (const auto& r : g.rotation) {
    json row = json::array();
    for (const auto& h : r) row.push_back({h.edge, h.tail ? "t" : "h"});
    j["rotation"].push_back(row);
  }
  return j.dump() + "\n";
}

// ------------------------------------------------------------- evaluation

namespace {

TreeState vertex_state(const GFusionData& data, const ColoredGraph& g, int v, const std::vector<int>& chain) {
  std::vector<TreeState::Strand> strands;
  for (const auto& h : g.rotation[v]) strands.push_back({g.edges[h.edge].color, ColoredGraph::sign(h), tag_of(h)});
  return TreeState::basis_vector(data, std::move(strands), chain);
}

int position_of_tag(const TreeState& s, int tag) {
  for (int i = 0; i < s.size(); ++i)
    if (s.strands()[i].tag == tag) return i;
  return -1;
}

FieldElement evaluate_component(const GFusionData& data, const ColoredGraph& g, const std::vector<int>& comp,
                                const std::vector<std::vector<int>>& chains, int root, int root_shift,
                                unsigned seed) {
  // BFS spanning tree.
  std::vector<int> order{root};
  std::vector<int> via(g.num_vertices, -2);  // tree half-edge at the child end
  via[root] = -1;
  std::mt19937 rng(seed);
  for (std::size_t k = 0; k < order.size(); ++k) {
    int v = order[k];
    std::vector<HalfEdge> rot = g.rotation[v];
    if (seed) std::shuffle(rot.begin(), rot.end(), rng);
    for (const auto& h : rot) {
      HalfEdge o{h.edge, !h.tail};
      int w = vertex_of(g, o);
      if (via[w] != -2) continue;
      via[w] = tag_of(o);
      order.push_back(w);
    }
  }
  if (order.size() != comp.size()) throw DomainError("component traversal mismatch");

  TreeState blob = vertex_state(data, g, root, chains[root]);
  blob.rotate(root_shift);
  for (std::size_t k = 1; k < order.size(); ++k) {
    int w = order[k];
    int child_tag = via[w];
    int parent_tag = child_tag ^ 1;
    int p = position_of_tag(blob, parent_tag);
    if (p < 0) throw DomainError("spanning tree edge missing from the merged boundary");
    blob.rotate(p + 1);
    TreeState child = vertex_state(data, g, w, chains[w]);
    int q = position_of_tag(child, child_tag);
    child.rotate(q);
    const int n = blob.size();
    blob.insert(n, child);
    blob.cap(n - 1);
    if (blob.is_zero()) return FieldElement::zero(data.field);
  }
  // Remaining strands pair up as a non-crossing chord diagram.
  while (blob.size() > 0) {
    bool capped = false;
    for (int j = 0; j + 1 < blob.size(); ++j) {
      if (blob.strands()[j].tag / 2 == blob.strands()[j + 1].tag / 2) {
        blob.cap(j);
        capped = true;
        break;
      }
    }
    if (capped) continue;
    if (blob.strands().front().tag / 2 == blob.strands().back().tag / 2) {
      blob.rotate_once();
      continue;
    }
    throw DomainError("graph loops do not close up in the plane");
  }
  return blob.scalar();
}

}  // namespace

FieldElement evaluate_graph_on(const GFusionData& data, const ColoredGraph& g,
                               const std::vector<std::vector<int>>& chains, const EvalOptions& opt) {
  if (static_cast<int>(chains.size()) != g.num_vertices) throw DomainError("need one basis tree per vertex");
  for (const auto& e : g.edges)
    if (e.color < 0 || e.color >= data.num_simples()) throw ValidationError("edge color is not a simple index");
  auto comps = g.components();
  int root_face_vertex = -1, root_shift = 0;
  if (opt.outer_face >= 0) {
    auto fs = g.faces();
    if (opt.outer_face >= static_cast<int>(fs.size())) throw DomainError("outer face index out of range");
    root_face_vertex = fs[opt.outer_face].front().first;
    root_shift = fs[opt.outer_face].front().second + 1;
  }
  FieldElement total = FieldElement::one(data.field);
  for (const auto& comp : comps) {
    int root = comp.front(), shift = 0;
    if (std::find(comp.begin(), comp.end(), root_face_vertex) != comp.end()) {
      root = root_face_vertex;
      shift = root_shift % static_cast<int>(g.rotation[root].size());
    }
    total *= evaluate_component(data, g, comp, chains, root, shift, opt.seed);
    if (total.is_zero()) break;
  }
  return total;
}

GraphTensor evaluate_graph(const GFusionData& data, const ColoredGraph& g, const EvalOptions& opt) {
  g.validate();
  GraphTensor t;
  std::size_t total = 1;
  for (int v = 0; v < g.num_vertices; ++v) {
    t.bases.push_back(multiplicity_basis(data, g.vertex_set(v)));
    total *= t.bases.back().size();
  }
  t.values.assign(total, FieldElement::zero(data.field));
  std::vector<int> idx(g.num_vertices, 0);
  std::vector<std::vector<int>> chains(g.num_vertices);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t r = flat;
    for (int v = g.num_vertices - 1; v >= 0; --v) {
      idx[v] = static_cast<int>(r % t.bases[v].size());
      r /= t.bases[v].size();
      chains[v] = t.bases[v].trees[idx[v]];
    }
    t.values[flat] = evaluate_graph_on(data, g, chains, opt);
  }
  return t;
}

Matrix pairing_gram(const GFusionData& data, const CyclicCSet& set) {
  const int n = static_cast<int>(set.size());
  if (n == 0) throw DomainError("cyclic set must be non-empty");
  ColoredGraph g;
  g.num_vertices = 2;
  g.rotation.resize(2);
  for (int i = 0; i < n; ++i) {
    // + means the edge points at vertex 0
    if (set[i].sign > 0) g.edges.push_back({1, 0, set[i].color});
    else g.edges.push_back({0, 1, set[i].color});
  }
  for (int i = 0; i < n; ++i) g.rotation[0].push_back({i, set[i].sign < 0});
  for (int k = 0; k < n; ++k) {
    int i = (n - k) % n;
    g.rotation[1].push_back({i, set[i].sign > 0});
  }
  GraphTensor t = evaluate_graph(data, g);
  const int a = t.bases[0].size(), b = t.bases[1].size();
  Matrix m(data.field, b, a);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) m(j, i) = t.values[static_cast<std::size_t>(i) * b + j];
  return m;
}

}  // namespace tvsum
