#include "tvsum/oracle.hpp"

#include <algorithm>
#include <map>

#include "tvsum/error.hpp"

namespace tvsum {

namespace {

std::vector<std::array<int, 4>> all_perms() {
  std::vector<std::array<int, 4>> out;
  std::array<int, 4> p{0, 1, 2, 3};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Branching order of tetrahedron t under edge directions dir, or nullopt if cyclic.
std::optional<std::array<int, 4>> tet_order(const Triangulation& T, int t, const std::vector<int>& dir) {
  std::array<int, 4> outdeg{};
  for (int le = 0; le < 6; ++le) {
    const int i = kEdgeVertices[le][0], j = kEdgeVertices[le][1];
    const int d = T.edge_direction(t, i, j) * dir[T.edge_class(t, i, j)];
    ++outdeg[d > 0 ? i : j];
  }
  std::array<int, 4> order{-1, -1, -1, -1};
  for (int v = 0; v < 4; ++v) {
    int& slot = order[3 - outdeg[v]];
    if (slot >= 0) return std::nullopt;
    slot = v;
  }
  return order;
}

std::optional<OrderedTriangulation> find_branching(const Triangulation& T) {
  const int E = T.num_edges();
  std::vector<std::vector<int>> closing(E);
  for (int t = 0; t < T.size(); ++t) {
    int last = 0;
    for (int le = 0; le < 6; ++le) last = std::max(last, T.edge_class(t, kEdgeVertices[le][0], kEdgeVertices[le][1]));
    closing[last].push_back(t);
  }
  std::vector<int> dir(E, 1);
  auto rec = [&](auto&& self, int e) -> bool {
    if (e == E) return true;
    for (int d : {1, -1}) {
      dir[e] = d;
      bool ok = true;
      for (int t : closing[e])
        if (!tet_order(T, t, dir)) {
          ok = false;
          break;
        }
      if (ok && self(self, e + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  OrderedTriangulation ot{T, {}, {}, false};
  for (int t = 0; t < T.size(); ++t) {
    auto o = *tet_order(T, t, dir);
    ot.order.push_back(o);
    ot.sign.push_back(T.orientation(t) * perm_sign(o));
  }
  return ot;
}

int color(const OrderedTriangulation& ot, int t, int a, int b, const FlatColoring& c) {
  return c[ot.tri.edge_class(t, ot.order[t][a], ot.order[t][b])];
}

struct FaceCheck {
  int tet;
  std::array<int, 3> pos;  // positions in the branching order, ascending
};

// Triangles with their positions; each triangle is checked once its last edge is set.
std::vector<std::vector<FaceCheck>> closing_faces(const OrderedTriangulation& ot, const std::vector<int>& rank) {
  const Triangulation& T = ot.tri;
  std::vector<std::vector<FaceCheck>> closing(T.num_edges());
  for (int tr = 0; tr < T.num_triangles(); ++tr) {
    auto [t, f] = T.triangle_rep(tr);
    FaceCheck fc{t, {}};
    int k = 0;
    for (int p = 0; p < 4; ++p)
      if (ot.order[t][p] != f) fc.pos[k++] = p;
    int last = -1, last_rank = -1;
    for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {0, 2}}) {
      int e = T.edge_class(t, ot.order[t][fc.pos[a]], ot.order[t][fc.pos[b]]);
      if (rank[e] > last_rank) last_rank = rank[e], last = e;
    }
    closing[last].push_back(fc);
  }
  return closing;
}

std::vector<FlatColoring> enumerate_flat(const OrderedTriangulation& ot, const FiniteGroup& g, bool gauge_fix) {
  const Triangulation& T = ot.tri;
  const int E = T.num_edges();
  std::vector<char> tree(E, 0);
  if (gauge_fix) {
    std::vector<char> seen(T.num_vertices(), 0);
    seen[0] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (int e = 0; e < E; ++e) {
        const auto& r = T.edge_rep(e);
        const int a = T.vertex_class(r.tet, r.from), b = T.vertex_class(r.tet, r.to);
        if (seen[a] != seen[b]) {
          seen[a] = seen[b] = 1;
          tree[e] = 1;
          grew = true;
        }
      }
    }
  }
  // tree edges first so that they are fixed before any check
  std::vector<int> seq, rank(E);
  for (int e = 0; e < E; ++e)
    if (tree[e]) seq.push_back(e);
  for (int e = 0; e < E; ++e)
    if (!tree[e]) seq.push_back(e);
  for (int k = 0; k < E; ++k) rank[seq[k]] = k;
  auto closing = closing_faces(ot, rank);
  std::vector<FlatColoring> out;
  FlatColoring c(E, g.identity());
  auto rec = [&](auto&& self, int k) -> void {
    if (k == E) {
      out.push_back(c);
      return;
    }
    const int e = seq[k];
    for (int x = 0; x < g.order(); ++x) {
      if (tree[e] && x != g.identity()) continue;
      c[e] = x;
      bool ok = true;
      for (const auto& fc : closing[e])
        if (g.mul(color(ot, fc.tet, fc.pos[0], fc.pos[1], c), color(ot, fc.tet, fc.pos[1], fc.pos[2], c)) !=
            color(ot, fc.tet, fc.pos[0], fc.pos[2], c)) {
          ok = false;
          break;
        }
      if (ok) self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

Triangulation barycentric_subdivision(const Triangulation& T) {
  const auto perms = all_perms();
  auto index = [&](const std::array<int, 4>& p) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<std::array<Gluing, 4>> gl(T.size() * 24);
  for (int t = 0; t < T.size(); ++t)
    for (int k = 0; k < 24; ++k) {
      const auto& pi = perms[k];
      auto& me = gl[t * 24 + k];
      for (int f = 0; f < 3; ++f) {
        auto q = pi;
        std::swap(q[f], q[f + 1]);
        me[f] = Gluing{t * 24 + index(q), f, {0, 1, 2, 3}};
      }
      const Gluing& g = T.gluing(t, pi[3]);
      std::array<int, 4> q{};
      for (int i = 0; i < 4; ++i) q[i] = g.perm[pi[i]];
      me[3] = Gluing{g.tet * 24 + index(q), 3, {0, 1, 2, 3}};
    }
  return Triangulation::from_gluings(std::move(gl), T.orientation(0) * perm_sign(perms[0]));
}

OrderedTriangulation order_triangulation(const Triangulation& t) {
  if (auto ot = find_branching(t)) return *ot;
  // the barycentric order is a branching, so the search succeeds here
  auto sub = find_branching(barycentric_subdivision(t));
  if (!sub) throw DomainError("no branching found after subdivision");
  sub->subdivided = true;
  return *sub;
}

bool is_flat(const OrderedTriangulation& ot, const FiniteGroup& g, const FlatColoring& c) {
  if (static_cast<int>(c.size()) != ot.tri.num_edges()) return false;
  for (int x : c)
    if (x < 0 || x >= g.order()) return false;
  for (int t = 0; t < ot.tri.size(); ++t)
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        for (int d = b + 1; d < 4; ++d)
          if (g.mul(color(ot, t, a, b, c), color(ot, t, b, d, c)) != color(ot, t, a, d, c)) return false;
  return true;
}

std::vector<FlatColoring> tree_gauge_colorings(const OrderedTriangulation& ot, const FiniteGroup& g) {
  return enumerate_flat(ot, g, true);
}

std::vector<FlatColoring> all_flat_colorings(const OrderedTriangulation& ot, const FiniteGroup& g) {
  return enumerate_flat(ot, g, false);
}

FieldElement dw_class_value(const OrderedTriangulation& ot, const FlatColoring& c, const CocycleTable& theta) {
  if (!is_flat(ot, theta.group(), c)) throw DomainError("edge coloring is not flat");
  FieldElement v = FieldElement::one(theta.field());
  for (int t = 0; t < ot.tri.size(); ++t) {
    const FieldElement& x = theta(color(ot, t, 0, 1, c), color(ot, t, 1, 2, c), color(ot, t, 2, 3, c));
    v *= ot.sign[t] > 0 ? x : x.inverse();
  }
  return v;
}

FieldElement dw_partition(const OrderedTriangulation& ot, const CocycleTable& theta) {
  const FiniteGroup& g = theta.group();
  FieldElement sum = FieldElement::zero(theta.field());
  for (const auto& c : tree_gauge_colorings(ot, g)) sum += dw_class_value(ot, c, theta);
  return sum / FieldElement(theta.field(), Rational(g.order()));
}

}  // namespace tvsum
