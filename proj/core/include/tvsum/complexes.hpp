#pragma once

#include <array>
#include <string>
#include <vector>

#include "tvsum/graphcalc.hpp"

namespace tvsum {

// Face f of a tetrahedron is the face opposite local vertex f.
struct Gluing {
  int tet = -1;
  int face = -1;
  std::array<int, 4> perm{0, 1, 2, 3};  // local vertex i -> partner's local vertex perm[i]
  bool glued() const { return tet >= 0; }
};

int perm_sign(const std::array<int, 4>& p);
// Local edge index 0..5 of the unordered pair {i, j}.
int local_edge(int i, int j);
extern const int kEdgeVertices[6][2];

class Triangulation {
 public:
  // Validates the gluing involution, closedness, orientability and vertex links.
  // The orientation is fixed by giving tetrahedron 0 the sign first_orientation.
  static Triangulation from_gluings(std::vector<std::array<Gluing, 4>> gluings, int first_orientation = 1);

  int size() const { return static_cast<int>(gluings_.size()); }
  const Gluing& gluing(int t, int f) const { return gluings_[t][f]; }
  const std::vector<std::array<Gluing, 4>>& gluings() const { return gluings_; }
  // +1 when the local vertex order 0123 is positively oriented.
  int orientation(int t) const { return orientation_[t]; }

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edge_rep_.size()); }
  int num_triangles() const { return static_cast<int>(triangle_rep_.size()); }

  int vertex_class(int t, int v) const { return vertex_class_[t][v]; }
  int edge_class(int t, int i, int j) const { return edge_class_[t][local_edge(i, j)]; }
  // +1 when local i -> j runs along the canonical direction of its edge class.
  int edge_direction(int t, int i, int j) const;
  int triangle_class(int t, int f) const { return triangle_class_[t][f]; }

  struct EdgeRep {
    int tet, from, to;
  };
  const EdgeRep& edge_rep(int e) const { return edge_rep_[e]; }
  std::pair<int, int> triangle_rep(int tr) const { return triangle_rep_[tr]; }
  // Number of tetrahedron corners (t, i<j) in each edge class.
  int edge_valence(int e) const { return edge_valence_[e]; }

  // Orientation-preserving relabeling invariant; equal codes iff isomorphic.
  std::vector<int> canonical_code() const;

 private:
  std::vector<std::array<Gluing, 4>> gluings_;
  std::vector<int> orientation_;
  std::vector<std::array<int, 4>> vertex_class_;
  std::vector<std::array<int, 6>> edge_class_;
  std::vector<std::array<int, 6>> edge_dir_;
  std::vector<std::array<int, 4>> triangle_class_;
  std::vector<EdgeRep> edge_rep_;
  std::vector<int> edge_valence_;
  std::vector<std::pair<int, int>> triangle_rep_;
  int num_vertices_ = 0;
};

bool isomorphic(const Triangulation& a, const Triangulation& b);

Triangulation parse_triangulation(const std::string& text);
Triangulation load_triangulation(const std::string& path);
std::string serialize_triangulation(const Triangulation& t, const std::string& name = "");

enum class PachnerKind { OneFour, TwoThree, ThreeTwo, FourOne };

// 1-4 at tetrahedron `where`; 2-3 at triangle class `where`; 3-2 at edge class
// `where`; 4-1 at vertex class `where`.
Triangulation pachner(const Triangulation& t, PachnerKind kind, int where);
PachnerKind parse_pachner_kind(const std::string& s);

// ------------------------------------------------------------- skeletons

struct Branch {
  int region = 0;
  int sign = 1;  // epsilon_e(b)
  bool operator==(const Branch& o) const { return region == o.region && sign == o.sign; }
};

struct SkeletonEdge {
  int tail = -1;  // both -1 for a circle edge without vertices
  int head = -1;
  std::vector<Branch> branches;  // cyclic order for the stored orientation
  bool is_circle() const { return tail < 0; }
  bool operator==(const SkeletonEdge& o) const {
    return tail == o.tail && head == o.head && branches == o.branches;
  }
};

struct SkeletonRegion {
  int chi = 1;
  int ball_minus = 0;
  int ball_plus = 0;
  bool operator==(const SkeletonRegion& o) const {
    return chi == o.chi && ball_minus == o.ball_minus && ball_plus == o.ball_plus;
  }
};

// Link of a vertex: graph edges carry region indices as colors. Link vertex k
// is the end of skeleton edge at[k].edge. At a tail end rotation[k][i] is
// branch i; at a head end it is branch (n - i) mod n, so the link vertex set
// is the edge's branch set, resp. its opposite, with the same anchor.
struct LinkEnd {
  int edge = 0;
  bool tail = true;
  bool operator==(const LinkEnd& o) const { return edge == o.edge && tail == o.tail; }
};

struct VertexLink {
  ColoredGraph graph;
  std::vector<LinkEnd> at;
};

bool operator==(const ColoredGraph& a, const ColoredGraph& b);
bool operator==(const VertexLink& a, const VertexLink& b);

struct Skeleton {
  int num_balls = 1;
  std::vector<SkeletonRegion> regions;
  std::vector<SkeletonEdge> edges;
  std::vector<VertexLink> links;  // one per vertex

  int num_vertices() const { return static_cast<int>(links.size()); }
  int num_regions() const { return static_cast<int>(regions.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  // Branch set of edge e, colored by c (region -> simple).
  CyclicCSet edge_set(int e, const std::vector<int>& coloring) const;
  // Throws ValidationError naming the first broken condition.
  void validate() const;
  bool operator==(const Skeleton& o) const;
};

Skeleton dual_skeleton(const Triangulation& t);

Skeleton parse_skeleton(const std::string& text);
Skeleton load_skeleton(const std::string& path);
std::string serialize_skeleton(const Skeleton& s);

// Product condition at every edge.
bool is_labeling(const Skeleton& s, const FiniteGroup& g, const std::vector<int>& labels);

enum class MoveKind { T1, T1Inverse, T2, T4, T4Inverse };

struct MoveSpec {
  MoveKind kind = MoveKind::T4;
  // T1: region, vertex_a/link_edge_a, vertex_b/link_edge_b (corners of the region).
  // T1Inverse: edge. T2: edge. T4: region, label. T4Inverse: vertex.
  int region = -1;
  int edge = -1;
  int vertex_a = -1, link_edge_a = -1;
  int vertex_b = -1, link_edge_b = -1;
  int vertex = -1;
  int label = 0;
};

struct LabeledSkeleton {
  Skeleton skeleton;
  std::vector<int> labels;
};

LabeledSkeleton apply_move(const LabeledSkeleton& in, const FiniteGroup& g, const MoveSpec& move);

}  // namespace tvsum
