#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tvsum/complexes.hpp"
#include "tvsum/linalg.hpp"
#include "tvsum/statesum.hpp"

namespace tvsum {

// Oriented graph A on a closed oriented surface. Rotation lists are clockwise
// and edge colors hold the G-labels. A rotation system fixes a cellular
// embedding, so the faces are disks once V - E + F matches the genus.
struct SurfaceSkeleton {
  std::string name;
  ColoredGraph graph;
  std::vector<int> genus;       // per component of graph.components()
  std::vector<int> base_faces;  // per component, an index into graph.faces()

  int num_components() const { return static_cast<int>(genus.size()); }
  int num_faces() const { return static_cast<int>(graph.faces().size()); }
  // H_v(A; Sigma) for the coloring c (surface edge -> simple).
  CyclicCSet vertex_set(int v, const std::vector<int>& c) const;
  // Throws ValidationError for a broken embedding, genus, base point or labeling.
  void validate(const FiniteGroup& g) const;
  bool operator==(const SurfaceSkeleton& o) const;
};

SurfaceSkeleton parse_surface(const std::string& text);
SurfaceSkeleton load_surface(const std::string& path);
std::string serialize_surface(const SurfaceSkeleton& s);

// Subgraph on the listed edges (new edge k is old edge edges[k]). Every vertex
// must keep valence >= 2.
SurfaceSkeleton restrict_surface(const SurfaceSkeleton& s, const std::vector<int>& edges);
// Edge list turning big into small by restriction, if one exists.
std::optional<std::vector<int>> find_restriction(const SurfaceSkeleton& big, const SurfaceSkeleton& small);

// All I-colorings c of A with grade(c(a)) = l(a), lexicographic.
std::vector<std::vector<int>> surface_colorings(const SurfaceSkeleton& s, const GFusionData& cat);

struct BoundaryVertex {
  int side = 0;    // 0: incoming surface, 1: outgoing surface
  int vertex = 0;  // vertex of that surface
  int edge = 0;    // the transversal edge e_v
};

struct BoundaryEdge {
  int side = 0;
  int edge = 0;    // edge of that surface
  int p_edge = 0;  // the valence-1 edge of P lying on it
};

// Skeleton P of a cobordism M with boundary (-in) + out. Interior vertices are
// 0..links.size()-1 and boundary vertex k has id links.size() + k. On the
// incoming side P carries A_0^opp, so its boundary edges run against A_0.
struct CobordismSkeleton {
  std::string name;
  int num_balls = 0;  // open and half-open components of M \ P
  std::vector<int> chi;
  std::vector<int> labels;  // region -> G
  std::vector<SkeletonEdge> edges;
  std::vector<VertexLink> links;
  SurfaceSkeleton in, out;
  std::vector<BoundaryVertex> boundary;
  std::vector<BoundaryEdge> boundary_edges;

  int num_regions() const { return static_cast<int>(chi.size()); }
  int num_interior() const { return static_cast<int>(links.size()); }
  const SurfaceSkeleton& side(int s) const { return s == 0 ? in : out; }
  // Region D_a of surface edge a on side s.
  int disk_region(int s, int a) const;
  // Throws ValidationError unless P meets the boundary surfaces correctly.
  void validate(const FiniteGroup& g) const;
};

CobordismSkeleton parse_cobordism(const std::string& text);
CobordismSkeleton load_cobordism(const std::string& path);
std::string serialize_cobordism(const CobordismSkeleton& p);

// A closed labeled skeleton viewed as a cobordism between empty surfaces.
CobordismSkeleton closed_cobordism(const Skeleton& s, const GLabeling& l);

// Sigma x [0,1] skeleton: A_0 x [0,1/2] + Sigma x {1/2} + A_1 x [1/2,1], where
// A_i is mid restricted to the given edges. Horizontal regions carry label 1.
CobordismSkeleton cylinder(const SurfaceSkeleton& mid, const std::vector<int>& in_edges,
                           const std::vector<int>& out_edges);
CobordismSkeleton cylinder(const SurfaceSkeleton& a);
// p0 followed by p1, glued along p0.out == p1.in.
CobordismSkeleton glue(const CobordismSkeleton& p0, const CobordismSkeleton& p1);

// |M, A| in H(A^opp; -dM)^*, indexed by the boundary vertices in P.boundary order.
struct RelativeTensor {
  std::vector<MultiplicityBasis> bases;
  std::vector<FieldElement> values;  // row-major, first boundary vertex slowest
};

RelativeTensor relative_invariant(const CobordismSkeleton& p, const std::vector<int>& c_in,
                                  const std::vector<int>& c_out, const GFusionData& cat,
                                  const StateSumOptions& opt = {});

// |M, Sigma_0, (A_0,c_in), Sigma_1, (A_1,c_out)| : H(A_0) -> H(A_1). Rows and
// columns use the tensor basis of the surface vertices, vertex 0 slowest.
Matrix cobordism_map(const CobordismSkeleton& p, const std::vector<int>& c_in, const std::vector<int>& c_out,
                     const GFusionData& cat, const StateSumOptions& opt = {});

// Block layout of the sum over colorings of H((A, c); Sigma).
struct StateSpaceLayout {
  std::vector<std::vector<int>> colorings;
  std::vector<int> offsets;  // start of each block
  int dim = 0;
};

StateSpaceLayout state_space_layout(const SurfaceSkeleton& s, const GFusionData& cat);

// Full matrix over all coloring pairs.
Matrix cobordism_matrix(const CobordismSkeleton& p, const GFusionData& cat, const StateSumOptions& opt = {});

struct HqftSpace {
  SurfaceSkeleton surface;
  StateSpaceLayout layout;
  Matrix projector;
  int rank = 0;
};

// p(A, A) with an exact idempotence check (DomainError when it fails).
HqftSpace cylinder_projector(const SurfaceSkeleton& a, const GFusionData& cat, const StateSumOptions& opt = {});
// p(A_0, A_1) for restrictions of a common skeleton.
Matrix skeleton_change(const SurfaceSkeleton& mid, const std::vector<int>& in_edges,
                       const std::vector<int>& out_edges, const GFusionData& cat, const StateSumOptions& opt = {});
int hqft_space_rank(const SurfaceSkeleton& a, const GFusionData& cat, const StateSumOptions& opt = {});

}  // namespace tvsum
