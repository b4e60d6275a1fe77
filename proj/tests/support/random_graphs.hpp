#pragma once

#include <random>

#include "tvsum/graphcalc.hpp"

namespace tvsum::testing {

// Random connected plane graph grown by pendant vertices and face-splitting edges.
inline ColoredGraph random_plane_graph(std::mt19937& rng, int max_vertices, int extra_edges) {
  ColoredGraph g;
  g.num_vertices = 2;
  g.edges.push_back({0, 1, 0});
  g.rotation = {{{0, true}}, {{0, false}}};
  auto coin = [&] { return static_cast<bool>(rng() % 2); };
  auto new_edge = [&](int a, int b) {
    int id = static_cast<int>(g.edges.size());
    bool flip = coin();
    g.edges.push_back({flip ? b : a, flip ? a : b, 0});
    return std::pair<HalfEdge, HalfEdge>{{id, !flip}, {id, flip}};  // ends at a, at b
  };
  int added = 0;
  while (g.num_vertices < max_vertices || added < extra_edges) {
    bool pendant = g.num_vertices < max_vertices && (added >= extra_edges || coin());
    if (pendant) {
      int v = static_cast<int>(rng() % g.num_vertices);
      int w = g.num_vertices++;
      auto [hv, hw] = new_edge(v, w);
      auto& rot = g.rotation[v];
      rot.insert(rot.begin() + rng() % (rot.size() + 1), hv);
      g.rotation.push_back({hw});
    } else {
      auto faces = g.faces();
      const auto& f = faces[rng() % faces.size()];
      auto c1 = f[rng() % f.size()], c2 = f[rng() % f.size()];
      auto [h1, h2] = new_edge(c1.first, c2.first);
      if (c1.first == c2.first) {
        auto& rot = g.rotation[c1.first];
        int i1 = c1.second, i2 = c2.second;
        if (i1 == i2) {
          rot.insert(rot.begin() + i1 + 1, h2);
          rot.insert(rot.begin() + i1 + 1, h1);
        } else if (i1 < i2) {
          rot.insert(rot.begin() + i2 + 1, h2);
          rot.insert(rot.begin() + i1 + 1, h1);
        } else {
          rot.insert(rot.begin() + i1 + 1, h1);
          rot.insert(rot.begin() + i2 + 1, h2);
        }
      } else {
        auto& r1 = g.rotation[c1.first];
        r1.insert(r1.begin() + c1.second + 1, h1);
        auto& r2 = g.rotation[c2.first];
        r2.insert(r2.begin() + c2.second + 1, h2);
      }
      ++added;
    }
  }
  return g;
}

// Random colors with every vertex admissible; false if none found.
inline bool colorize(const GFusionData& d, ColoredGraph& g, std::mt19937& rng, int tries = 20000,
                     bool allow_unit = true) {
  const int n = d.num_simples();
  for (int t = 0; t < tries; ++t) {
    for (auto& e : g.edges) {
      do e.color = static_cast<int>(rng() % n);
      while (!allow_unit && n > 1 && e.color == d.unit);
    }
    bool ok = true;
    for (int v = 0; v < g.num_vertices && ok; ++v) ok = hom_dim(d, g.vertex_set(v)) > 0;
    if (ok) return true;
  }
  return false;
}

inline ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b) {
  ColoredGraph g = a;
  const int off_v = a.num_vertices, off_e = static_cast<int>(a.edges.size());
  g.num_vertices += b.num_vertices;
  for (auto e : b.edges) g.edges.push_back({e.tail + off_v, e.head + off_v, e.color});
  for (auto rot : b.rotation) {
    for (auto& h : rot) h.edge += off_e;
    g.rotation.push_back(rot);
  }
  return g;
}

}  // namespace tvsum::testing
