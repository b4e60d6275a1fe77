#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tvsum/catdata.hpp"

namespace tvsum {

struct SignedColor {
  int color = 0;
  int sign = 1;  // +1 or -1
  bool operator==(const SignedColor& o) const { return color == o.color && sign == o.sign; }
  bool operator<(const SignedColor& o) const {
    return color != o.color ? color < o.color : sign < o.sign;
  }
};

// Cyclic C-set; element 0 is the anchor of the linear order.
using CyclicCSet = std::vector<SignedColor>;

CyclicCSet rotated(const CyclicCSet& e, int steps);
CyclicCSet opposite(const CyclicCSet& e);  // E^opp anchored at the same element, signs negated

// Label of X^sign as a simple.
inline int strand_label(const GFusionData& d, const SignedColor& s) {
  return s.sign > 0 ? s.color : d.dual[s.color];
}

int hom_dim(const GFusionData& data, const std::vector<SignedColor>& seq);

// Left-combed trees for Hom(1, Z_e). A tree is its chain a_0 = 1, a_1, ..., a_n = 1
// with a_k in a_{k-1} (x) Y_k.
struct MultiplicityBasis {
  CyclicCSet set;
  std::vector<std::vector<int>> trees;
  int size() const { return static_cast<int>(trees.size()); }
  int index_of(const std::vector<int>& chain) const;
};

MultiplicityBasis multiplicity_basis(const GFusionData& data, const CyclicCSet& set);

// Linear combination of tree basis vectors of Hom(1, Y_1 (x) ... (x) Y_n).
class TreeState {
 public:
  struct Strand {
    int color = 0;
    int sign = 1;
    int tag = -1;  // caller-defined identity (half-edge id)
  };

  TreeState(const GFusionData& data, std::vector<Strand> strands);
  static TreeState basis_vector(const GFusionData& data, std::vector<Strand> strands,
                                const std::vector<int>& chain);
  static TreeState empty_diagram(const GFusionData& data);  // 1 in Hom(1,1)

  const std::vector<Strand>& strands() const { return strands_; }
  int size() const { return static_cast<int>(strands_.size()); }
  int label(int j) const;
  const std::map<std::vector<int>, FieldElement>& terms() const { return terms_; }
  FieldElement coefficient(const std::vector<int>& chain) const;
  FieldElement scalar() const;  // for size() == 0
  bool is_zero() const { return terms_.empty(); }

  void scale(const FieldElement& s);
  void add(const std::vector<int>& chain, const FieldElement& v);

  // Primitive moves of the skeletal calculus.
  void split(int j, const Strand& left, const Strand& right);
  void fuse(int j, const Strand& merged);
  void insert_unit(int j);
  void remove_unit(int j);

  // Appends/inserts another state at position j (tensor product in the middle).
  void insert(int j, const TreeState& other);

  // Caps strands j, j+1 of one edge: lev if strand j has sign -, else rev.
  void cap(int j);
  // One cone isomorphism step: the first strand moves to the end.
  void rotate_once();
  void rotate(int steps);

 private:
  const GFusionData* data_;
  std::vector<Strand> strands_;
  std::map<std::vector<int>, FieldElement> terms_;
};

// Matrix of the cone isomorphism H_{e_1} -> H_{e_{1+steps}}; columns index the
// basis of `set`, rows the basis of rotated(set, steps).
Matrix rotation_matrix(const GFusionData& data, const CyclicCSet& set, int steps);

// Gram matrix G[j][i] = omega(b'_j, b_i), b' the basis of opposite(E), b of E.
Matrix pairing_gram(const GFusionData& data, const CyclicCSet& set);

struct HalfEdge {
  int edge = 0;
  bool tail = true;  // the tail end of the edge sits at this vertex
  bool operator==(const HalfEdge& o) const { return edge == o.edge && tail == o.tail; }
};

struct GraphEdge {
  int tail = 0;
  int head = 0;
  int color = 0;
};

// Graph on S^2 given by a rotation system; rotation[v] lists half-edges in
// clockwise order, and rotation[v][0] anchors the basis at v.
struct ColoredGraph {
  int num_vertices = 0;
  std::vector<GraphEdge> edges;
  std::vector<std::vector<HalfEdge>> rotation;

  // Sign of a half-edge in its vertex set: + when the edge points at the vertex.
  static int sign(const HalfEdge& h) { return h.tail ? -1 : 1; }
  CyclicCSet vertex_set(int v) const;

  // Each face is a list of corners (vertex, index i): between rotation[v][i] and rotation[v][i+1].
  std::vector<std::vector<std::pair<int, int>>> faces() const;
  std::vector<std::vector<int>> components() const;
  // Throws ValidationError unless the rotation system is consistent and every
  // component satisfies V - E + F = 2.
  void validate() const;
};

ColoredGraph parse_graph(const std::string& text);
std::string serialize_graph(const ColoredGraph& g);

struct GraphTensor {
  std::vector<MultiplicityBasis> bases;  // one per vertex
  std::vector<FieldElement> values;      // row-major, vertex 0 slowest
  std::size_t size() const { return values.size(); }
};

struct EvalOptions {
  int outer_face = -1;  // index into faces(); -1 uses the first corner of vertex 0
  unsigned seed = 0;    // permutes the contraction order when nonzero
};

GraphTensor evaluate_graph(const GFusionData& data, const ColoredGraph& g, const EvalOptions& opt = {});
// Value on one tuple of basis trees (one chain per vertex).
FieldElement evaluate_graph_on(const GFusionData& data, const ColoredGraph& g,
                               const std::vector<std::vector<int>>& chains, const EvalOptions& opt = {});

}  // namespace tvsum
