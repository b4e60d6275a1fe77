#include <algorithm>
#include <numeric>

#include "tvsum/complexes.hpp"
#include "tvsum/error.hpp"

namespace tvsum {

namespace {

std::vector<int> keep_map(const std::vector<char>& drop) {
  std::vector<int> m(drop.size(), -1);
  int k = 0;
  for (std::size_t i = 0; i < drop.size(); ++i)
    if (!drop[i]) m[i] = k++;
  return m;
}

void compact_link(VertexLink& L, const std::vector<char>& drop_vertex, const std::vector<char>& drop_edge) {
  auto vm = keep_map(drop_vertex), em = keep_map(drop_edge);
  ColoredGraph g;
  std::vector<LinkEnd> at;
  for (std::size_t e = 0; e < L.graph.edges.size(); ++e) {
    if (drop_edge[e]) continue;
    GraphEdge ge = L.graph.edges[e];
    ge.tail = vm[ge.tail];
    ge.head = vm[ge.head];
    g.edges.push_back(ge);
  }
  for (int v = 0; v < L.graph.num_vertices; ++v) {
    if (drop_vertex[v]) continue;
    std::vector<HalfEdge> rot;
    for (const auto& h : L.graph.rotation[v]) rot.push_back({em[h.edge], h.tail});
    g.rotation.push_back(std::move(rot));
    at.push_back(L.at[v]);
  }
  g.num_vertices = static_cast<int>(g.rotation.size());
  L.graph = std::move(g);
  L.at = std::move(at);
}

struct Drops {
  std::vector<char> region, edge, vertex, ball;
  explicit Drops(const Skeleton& s)
      : region(s.num_regions(), 0), edge(s.num_edges(), 0), vertex(s.num_vertices(), 0), ball(s.num_balls, 0) {}
};

void compact(LabeledSkeleton& ls, const Drops& d) {
  Skeleton& s = ls.skeleton;
  auto rm = keep_map(d.region), em = keep_map(d.edge), vm = keep_map(d.vertex), bm = keep_map(d.ball);
  Skeleton out;
  out.num_balls = static_cast<int>(std::count(d.ball.begin(), d.ball.end(), 0));
  std::vector<int> labels;
  for (int r = 0; r < s.num_regions(); ++r) {
    if (d.region[r]) continue;
    SkeletonRegion reg = s.regions[r];
    reg.ball_minus = bm[reg.ball_minus];
    reg.ball_plus = bm[reg.ball_plus];
    out.regions.push_back(reg);
    if (!ls.labels.empty()) labels.push_back(ls.labels[r]);
  }
  for (int e = 0; e < s.num_edges(); ++e) {
    if (d.edge[e]) continue;
    SkeletonEdge ed = s.edges[e];
    if (!ed.is_circle()) {
      ed.tail = vm[ed.tail];
      ed.head = vm[ed.head];
    }
    for (auto& b : ed.branches) b.region = rm[b.region];
    out.edges.push_back(std::move(ed));
  }
  for (int v = 0; v < s.num_vertices(); ++v) {
    if (d.vertex[v]) continue;
    VertexLink L = s.links[v];
    for (auto& a : L.at) a.edge = em[a.edge];
    for (auto& ge : L.graph.edges) ge.color = rm[ge.color];
    out.links.push_back(std::move(L));
  }
  ls.skeleton = std::move(out);
  ls.labels = std::move(labels);
}

int position_in_link(const VertexLink& L, int edge, bool tail) {
  for (std::size_t k = 0; k < L.at.size(); ++k)
    if (L.at[k].edge == edge && L.at[k].tail == tail) return static_cast<int>(k);
  throw DomainError("edge end missing from its vertex link");
}

// Branch occurrence (edge, branch index) reached by half-edge position i at link vertex k.
std::pair<int, int> occurrence(const Skeleton& s, const VertexLink& L, int k, int i) {
  const LinkEnd& end = L.at[k];
  const int n = static_cast<int>(s.edges[end.edge].branches.size());
  return {end.edge, end.tail ? i : (n - i) % n};
}

// Connected pieces of region r: branch occurrences joined through link edges.
std::vector<std::vector<std::pair<int, int>>> region_pieces(const Skeleton& s, int r) {
  std::vector<std::pair<int, int>> occ;
  for (int e = 0; e < s.num_edges(); ++e)
    for (std::size_t b = 0; b < s.edges[e].branches.size(); ++b)
      if (s.edges[e].branches[b].region == r) occ.emplace_back(e, static_cast<int>(b));
  std::vector<int> parent(occ.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto idx = [&](std::pair<int, int> o) {
    return static_cast<int>(std::lower_bound(occ.begin(), occ.end(), o) - occ.begin());
  };
  for (const auto& L : s.links) {
    std::vector<std::vector<std::pair<int, int>>> ends(L.graph.edges.size());
    for (int k = 0; k < L.graph.num_vertices; ++k)
      for (std::size_t i = 0; i < L.graph.rotation[k].size(); ++i)
        ends[L.graph.rotation[k][i].edge].push_back(occurrence(s, L, k, static_cast<int>(i)));
    for (std::size_t e = 0; e < ends.size(); ++e) {
      if (L.graph.edges[e].color != r || ends[e].size() != 2) continue;
      parent[find(idx(ends[e][0]))] = find(idx(ends[e][1]));
    }
  }
  std::vector<std::vector<std::pair<int, int>>> pieces;
  std::vector<int> slot(occ.size(), -1);
  for (std::size_t i = 0; i < occ.size(); ++i) {
    int root = find(static_cast<int>(i));
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(pieces.size());
      pieces.emplace_back();
    }
    pieces[slot[root]].push_back(occ[i]);
  }
  return pieces;
}

void check_vertex(const Skeleton& s, int v, const char* what) {
  if (v < 0 || v >= s.num_vertices()) throw DomainError(std::string(what) + ": no vertex " + std::to_string(v));
}

LabeledSkeleton move_t4(const LabeledSkeleton& in, const FiniteGroup& G, int r, int g) {
  const Skeleton& s = in.skeleton;
  if (r < 0 || r >= s.num_regions()) throw DomainError("T4: no region " + std::to_string(r));
  if (g < 0 || g >= G.order()) throw DomainError("T4: label is not a group element");
  LabeledSkeleton out = in;
  Skeleton& t = out.skeleton;
  const int B = t.num_balls++;
  const int dm = t.num_regions(), dp = dm + 1;
  const SkeletonRegion base = t.regions[r];
  t.regions[r].chi -= 1;
  t.regions.push_back({1, base.ball_minus, B});
  t.regions.push_back({1, B, base.ball_plus});
  if (!out.labels.empty()) {
    out.labels.push_back(G.mul(out.labels[r], G.inv(g)));
    out.labels.push_back(g);
  }
  const int x = t.num_vertices(), e = t.num_edges();
  t.edges.push_back({x, x, {{r, -1}, {dm, 1}, {dp, 1}}});
  VertexLink L;
  L.at = {{e, true}, {e, false}};
  L.graph.num_vertices = 2;
  L.graph.edges = {{0, 1, r}, {1, 0, dm}, {1, 0, dp}};
  L.graph.rotation = {{{0, true}, {1, false}, {2, false}}, {{0, false}, {2, true}, {1, true}}};
  t.links.push_back(std::move(L));
  t.validate();
  return out;
}

LabeledSkeleton move_t4_inverse(const LabeledSkeleton& in, int x) {
  const Skeleton& s = in.skeleton;
  check_vertex(s, x, "T4^-1");
  const VertexLink& L = s.links[x];
  if (L.at.size() != 2 || L.at[0].edge != L.at[1].edge)
    throw DomainError("T4^-1: vertex is not a bubble vertex (its link is not a theta graph of one loop edge)");
  const int e = L.at[0].edge;
  auto br = s.edges[e].branches;
  if (br.size() != 3) throw DomainError("T4^-1: the loop edge must have three branches");
  // occurrences of each region outside this edge
  std::vector<int> uses(s.num_regions(), 0);
  for (int f = 0; f < s.num_edges(); ++f)
    if (f != e)
      for (const auto& b : s.edges[f].branches) ++uses[b.region];
  for (int pass = 0; pass < 2; ++pass) {
    if (pass == 1) {
      CyclicCSet tmp;
      for (const auto& b : br) tmp.push_back({b.region, b.sign});
      tmp = opposite(tmp);
      for (int i = 0; i < 3; ++i) br[i] = {tmp[i].color, tmp[i].sign};
    }
    for (int rot = 0; rot < 3; ++rot) {
      const Branch& a = br[rot];
      const Branch& m = br[(rot + 1) % 3];
      const Branch& p = br[(rot + 2) % 3];
      if (a.sign != -1 || m.sign != 1 || p.sign != 1) continue;
      if (a.region == m.region || a.region == p.region || m.region == p.region) continue;
      const auto& R = s.regions[a.region];
      const auto& M = s.regions[m.region];
      const auto& P = s.regions[p.region];
      if (M.chi != 1 || P.chi != 1 || uses[m.region] || uses[p.region]) continue;
      const int B = M.ball_plus;
      if (P.ball_minus != B || M.ball_minus != R.ball_minus || P.ball_plus != R.ball_plus) continue;
      bool ball_free = true;
      for (int r = 0; r < s.num_regions(); ++r)
        if (r != m.region && r != p.region && (s.regions[r].ball_minus == B || s.regions[r].ball_plus == B))
          ball_free = false;
      if (!ball_free || B == R.ball_minus || B == R.ball_plus) continue;
      LabeledSkeleton out = in;
      out.skeleton.regions[a.region].chi += 1;
      Drops d(s);
      d.region[m.region] = d.region[p.region] = 1;
      d.edge[e] = 1;
      d.vertex[x] = 1;
      d.ball[B] = 1;
      compact(out, d);
      out.skeleton.validate();
      return out;
    }
  }
  throw DomainError("T4^-1: no bubble (disks D-, D+ bounding an otherwise unused ball) at this vertex");
}

LabeledSkeleton move_t2(const LabeledSkeleton& in, int e) {
  const Skeleton& s = in.skeleton;
  if (e < 0 || e >= s.num_edges()) throw DomainError("T2: no edge " + std::to_string(e));
  const SkeletonEdge& ed = s.edges[e];
  if (ed.is_circle()) throw DomainError("T2: edge has no endpoints");
  const int u = ed.tail, w = ed.head;
  if (u == w) throw DomainError("T2: allowed only when the endpoints of the edge are distinct");
  const VertexLink& Lu = s.links[u];
  const VertexLink& Lw = s.links[w];
  if (Lu.at.size() < 2 && Lw.at.size() < 2)
    throw DomainError("T2: neither endpoint is the endpoint of another edge");
  const int pu = position_in_link(Lu, e, true), pw = position_in_link(Lw, e, false);
  const int n = static_cast<int>(ed.branches.size());
  auto far_end = [](const VertexLink& L, int p, const HalfEdge& h) {
    const GraphEdge& ge = L.graph.edges[h.edge];
    if (ge.tail == p && ge.head == p) throw DomainError("T2: link edge is a loop at the contracted edge end");
    return h.tail ? ge.head : ge.tail;
  };
  VertexLink M;
  // vertices: Lu without pu, then Lw without pw
  std::vector<int> map_u(Lu.at.size(), -1), map_w(Lw.at.size(), -1);
  for (std::size_t k = 0; k < Lu.at.size(); ++k)
    if (static_cast<int>(k) != pu) map_u[k] = static_cast<int>(M.at.size()), M.at.push_back(Lu.at[k]);
  for (std::size_t k = 0; k < Lw.at.size(); ++k)
    if (static_cast<int>(k) != pw) map_w[k] = static_cast<int>(M.at.size()), M.at.push_back(Lw.at[k]);
  M.graph.num_vertices = static_cast<int>(M.at.size());
  M.graph.rotation.resize(M.at.size());
  // link edges: untouched ones keep their relative order, merged ones follow
  std::vector<int> emap_u(Lu.graph.edges.size(), -1), emap_w(Lw.graph.edges.size(), -1);
  std::vector<char> at_pu(Lu.graph.edges.size(), 0), at_pw(Lw.graph.edges.size(), 0);
  for (const auto& h : Lu.graph.rotation[pu]) at_pu[h.edge] = 1;
  for (const auto& h : Lw.graph.rotation[pw]) at_pw[h.edge] = 1;
  for (std::size_t i = 0; i < Lu.graph.edges.size(); ++i)
    if (!at_pu[i]) {
      GraphEdge ge = Lu.graph.edges[i];
      emap_u[i] = static_cast<int>(M.graph.edges.size());
      M.graph.edges.push_back({map_u[ge.tail], map_u[ge.head], ge.color});
    }
  for (std::size_t i = 0; i < Lw.graph.edges.size(); ++i)
    if (!at_pw[i]) {
      GraphEdge ge = Lw.graph.edges[i];
      emap_w[i] = static_cast<int>(M.graph.edges.size());
      M.graph.edges.push_back({map_w[ge.tail], map_w[ge.head], ge.color});
    }
  for (int b = 0; b < n; ++b) {
    const HalfEdge hu = Lu.graph.rotation[pu][b];
    const HalfEdge hw = Lw.graph.rotation[pw][(n - b) % n];
    const int qu = map_u[far_end(Lu, pu, hu)], qw = map_w[far_end(Lw, pw, hw)];
    const int id = static_cast<int>(M.graph.edges.size());
    emap_u[hu.edge] = id;
    emap_w[hw.edge] = id;
    if (ed.branches[b].sign > 0) M.graph.edges.push_back({qu, qw, ed.branches[b].region});
    else M.graph.edges.push_back({qw, qu, ed.branches[b].region});
  }
  auto copy_rot = [&](const VertexLink& L, int skip, const std::vector<int>& vmap, const std::vector<int>& emap) {
    for (std::size_t k = 0; k < L.at.size(); ++k) {
      if (static_cast<int>(k) == skip) continue;
      auto& rot = M.graph.rotation[vmap[k]];
      for (const auto& h : L.graph.rotation[k]) {
        const int id = emap[h.edge];
        rot.push_back({id, M.graph.edges[id].tail == vmap[k] && (h.tail || M.graph.edges[id].head != vmap[k])});
      }
    }
  };
  copy_rot(Lu, pu, map_u, emap_u);
  copy_rot(Lw, pw, map_w, emap_w);
  LabeledSkeleton out = in;
  Skeleton& t = out.skeleton;
  t.links[u] = std::move(M);
  for (auto& f : t.edges) {
    if (f.tail == w) f.tail = u;
    if (f.head == w) f.head = u;
  }
  Drops d(t);
  d.edge[e] = 1;
  d.vertex[w] = 1;
  compact(out, d);
  out.skeleton.validate();
  return out;
}

LabeledSkeleton move_t1(const LabeledSkeleton& in, const MoveSpec& mv) {
  const Skeleton& s = in.skeleton;
  const int r = mv.region;
  if (r < 0 || r >= s.num_regions()) throw DomainError("T1: no region " + std::to_string(r));
  if (s.regions[r].chi != 1) throw DomainError("T1: supported only on disk regions");
  check_vertex(s, mv.vertex_a, "T1");
  check_vertex(s, mv.vertex_b, "T1");
  if (mv.vertex_a == mv.vertex_b) throw DomainError("T1: the new edge must connect distinct vertices");
  auto check_corner = [&](int v, int le) {
    const auto& g = s.links[v].graph;
    if (le < 0 || le >= static_cast<int>(g.edges.size()) || g.edges[le].color != r)
      throw DomainError("T1: link edge " + std::to_string(le) + " at vertex " + std::to_string(v) +
                        " is not a corner of region " + std::to_string(r));
  };
  check_corner(mv.vertex_a, mv.link_edge_a);
  check_corner(mv.vertex_b, mv.link_edge_b);
  LabeledSkeleton out = in;
  Skeleton& t = out.skeleton;
  const int e = t.num_edges();
  t.edges.push_back({mv.vertex_a, mv.vertex_b, {{r, 1}, {r, -1}}});
  // split a link edge at a new link vertex; `in_part_first` puts the incoming half first
  auto split = [&](VertexLink& L, int le, bool tail_end) {
    const int p = L.graph.num_vertices++;
    const int ne = static_cast<int>(L.graph.edges.size());
    const int old_head = L.graph.edges[le].head;
    L.graph.edges[le].head = p;
    L.graph.edges.push_back({p, old_head, r});
    for (auto& h : L.graph.rotation[old_head])
      if (h.edge == le && !h.tail) h.edge = ne;
    if (tail_end) L.graph.rotation.push_back({{le, false}, {ne, true}});
    else L.graph.rotation.push_back({{ne, true}, {le, false}});
    L.at.push_back({e, tail_end});
  };
  split(t.links[mv.vertex_a], mv.link_edge_a, true);
  split(t.links[mv.vertex_b], mv.link_edge_b, false);
  auto pieces = region_pieces(t, r);
  if (pieces.size() != 2) throw DomainError("T1: the arc does not cut the region into two pieces");
  const int fresh = t.num_regions();
  t.regions[r].chi = 1;
  t.regions.push_back(t.regions[r]);
  if (!out.labels.empty()) out.labels.push_back(out.labels[r]);
  const auto& moved = std::find(pieces[0].begin(), pieces[0].end(), std::make_pair(e, 0)) != pieces[0].end()
                          ? pieces[1]
                          : pieces[0];
  for (auto [f, b] : moved) t.edges[f].branches[b].region = fresh;
  for (auto& L : t.links) {
    for (int k = 0; k < L.graph.num_vertices; ++k)
      for (std::size_t i = 0; i < L.graph.rotation[k].size(); ++i) {
        auto o = occurrence(t, L, k, static_cast<int>(i));
        if (std::find(moved.begin(), moved.end(), o) != moved.end())
          L.graph.edges[L.graph.rotation[k][i].edge].color = fresh;
      }
  }
  t.validate();
  return out;
}

LabeledSkeleton move_t1_inverse(const LabeledSkeleton& in, int e) {
  const Skeleton& s = in.skeleton;
  if (e < 0 || e >= s.num_edges()) throw DomainError("T1^-1: no edge " + std::to_string(e));
  const SkeletonEdge& ed = s.edges[e];
  if (ed.is_circle() || ed.branches.size() != 2) throw DomainError("T1^-1: edge must be 2-valent with endpoints");
  const int u = ed.tail, w = ed.head;
  if (u == w) throw DomainError("T1^-1: endpoints must be distinct");
  if (s.links[u].at.size() < 2 || s.links[w].at.size() < 2)
    throw DomainError("T1^-1: both endpoints must be endpoints of other edges");
  if (ed.branches[0].sign != -ed.branches[1].sign)
    throw DomainError("T1^-1: orientations of the two adjacent regions are not compatible");
  const int r0 = ed.branches[0].region, r1 = ed.branches[1].region;
  const int keep = std::min(r0, r1), gone = std::max(r0, r1);
  if (r0 != r1) {
    if (!(s.regions[r0].ball_minus == s.regions[r1].ball_minus && s.regions[r0].ball_plus == s.regions[r1].ball_plus))
      throw DomainError("T1^-1: adjacent regions separate different balls");
    if (!in.labels.empty() && in.labels[r0] != in.labels[r1])
      throw DomainError("T1^-1: adjacent regions carry different labels");
  }
  LabeledSkeleton out = in;
  Skeleton& t = out.skeleton;
  auto smooth = [&](VertexLink& L, bool tail_end) {
    const int p = position_in_link(L, e, tail_end);
    const auto rot = L.graph.rotation[p];
    const int x = rot[0].edge, y = rot[1].edge;
    if (x == y) throw DomainError("T1^-1: link edge is a loop at the removed edge end");
    // incoming half at p, then outgoing half
    const int in_e = rot[0].tail ? y : x, out_e = rot[0].tail ? x : y;
    if (L.graph.edges[in_e].head != p || L.graph.edges[out_e].tail != p)
      throw DomainError("T1^-1: link orientation is not compatible");
    const int kept = std::min(x, y), dropped = std::max(x, y);
    const int tail = L.graph.edges[in_e].tail, head = L.graph.edges[out_e].head;
    L.graph.edges[kept] = {tail, head, keep};
    for (int k = 0; k < L.graph.num_vertices; ++k)
      if (k != p)
        for (auto& h : L.graph.rotation[k])
          if (h.edge == dropped || h.edge == kept) h.edge = kept;
    std::vector<char> dv(L.graph.num_vertices, 0), de(L.graph.edges.size(), 0);
    dv[p] = 1;
    de[dropped] = 1;
    compact_link(L, dv, de);
  };
  smooth(t.links[u], true);
  smooth(t.links[w], false);
  if (r0 != r1) {
    t.regions[keep].chi = s.regions[r0].chi + s.regions[r1].chi - 1;
    for (auto& f : t.edges)
      for (auto& b : f.branches)
        if (b.region == gone) b.region = keep;
    for (auto& L : t.links)
      for (auto& ge : L.graph.edges)
        if (ge.color == gone) ge.color = keep;
  } else {
    t.regions[keep].chi -= 1;
  }
  Drops d(t);
  d.edge[e] = 1;
  if (r0 != r1) d.region[gone] = 1;
  compact(out, d);
  out.skeleton.validate();
  return out;
}

}  // namespace

LabeledSkeleton apply_move(const LabeledSkeleton& in, const FiniteGroup& g, const MoveSpec& move) {
  if (!in.labels.empty() && !is_labeling(in.skeleton, g, in.labels))
    throw DomainError("input labeling violates the product condition");
  LabeledSkeleton out;
  switch (move.kind) {
    case MoveKind::T1: out = move_t1(in, move); break;
    case MoveKind::T1Inverse: out = move_t1_inverse(in, move.edge); break;
    case MoveKind::T2: out = move_t2(in, move.edge); break;
    case MoveKind::T4: out = move_t4(in, g, move.region, move.label); break;
    case MoveKind::T4Inverse: out = move_t4_inverse(in, move.vertex); break;
  }
  if (!out.labels.empty() && !is_labeling(out.skeleton, g, out.labels))
    throw DomainError("move produced a labeling that violates the product condition");
  return out;
}

}  // namespace tvsum
