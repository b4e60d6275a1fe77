#include "tvsum/hqft.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "tvsum/error.hpp"

namespace tvsum {

namespace {

using Coloring = std::vector<int>;

struct Caches {
  std::map<std::pair<int, std::vector<int>>, GraphTensor> vertex;
  std::map<CyclicCSet, Matrix> gram_inverse;
};

CyclicCSet edge_set(const SkeletonEdge& e, const Coloring& c) {
  CyclicCSet s;
  for (const auto& b : e.branches) s.push_back({c[b.region], b.sign});
  return s;
}

const Matrix& gram_inverse(const CyclicCSet& set, const GFusionData& cat, Caches& cache) {
  auto it = cache.gram_inverse.find(set);
  if (it != cache.gram_inverse.end()) return it->second;
  auto inv = pairing_gram(cat, set).inverse();
  if (!inv) throw DomainError("pairing of multiplicity modules is degenerate");
  return cache.gram_inverse.emplace(set, std::move(*inv)).first->second;
}

const GraphTensor& vertex_tensor(const CobordismSkeleton& p, int v, const Coloring& c, const GFusionData& cat,
                                 Caches& cache) {
  const auto& L = p.links[v];
  std::vector<int> key;
  for (const auto& e : L.graph.edges) key.push_back(c[e.color]);
  auto it = cache.vertex.find({v, key});
  if (it != cache.vertex.end()) return it->second;
  ColoredGraph g = L.graph;
  for (auto& e : g.edges) e.color = c[e.color];
  return cache.vertex.emplace(std::make_pair(v, key), evaluate_graph(cat, g)).first->second;
}

std::size_t flat_size(const std::vector<MultiplicityBasis>& b) {
  std::size_t n = 1;
  for (const auto& x : b) n *= x.size();
  return n;
}

// Expected free-index bases: H_v(A_0) on the incoming side, H_v(A_1)^opp on the outgoing one.
std::vector<MultiplicityBasis> boundary_bases(const CobordismSkeleton& p, const Coloring& c_in, const Coloring& c_out,
                                              const GFusionData& cat) {
  std::vector<MultiplicityBasis> out;
  for (const auto& b : p.boundary) {
    const CyclicCSet set = b.side == 0 ? p.in.vertex_set(b.vertex, c_in) : opposite(p.out.vertex_set(b.vertex, c_out));
    out.push_back(multiplicity_basis(cat, set));
  }
  return out;
}

// One full coloring: region dimensions times the contraction over interior
// edges, as a vector over the free boundary indices.
void coloring_term(const CobordismSkeleton& p, const Coloring& c, const GFusionData& cat, Caches& cache,
                   const std::vector<MultiplicityBasis>& free_bases, std::vector<FieldElement>& acc_out) {
  FieldElement term = FieldElement::one(cat.field);
  for (int r = 0; r < p.num_regions(); ++r)
    if (p.chi[r] != 0) term *= cat.dim_l[c[r]].pow(p.chi[r]);
  const int I = p.num_interior();
  std::vector<const GraphTensor*> tensors;
  for (int v = 0; v < I; ++v) tensors.push_back(&vertex_tensor(p, v, c, cat, cache));
  struct Slot {
    int vertex = -1, index = -1;
  };
  std::vector<std::pair<Slot, Slot>> ends(p.edges.size());
  for (int v = 0; v < I; ++v)
    for (std::size_t k = 0; k < p.links[v].at.size(); ++k) {
      const auto& a = p.links[v].at[k];
      (a.tail ? ends[a.edge].first : ends[a.edge].second) = {v, static_cast<int>(k)};
    }
  std::vector<char> on_boundary(p.edges.size(), 0);
  for (const auto& b : p.boundary_edges) on_boundary[b.p_edge] = 1;
  std::vector<Slot> free_slots;
  for (const auto& b : p.boundary) {
    const auto& e = ends[b.edge];
    free_slots.push_back(e.first.vertex >= 0 ? e.first : e.second);
  }
  for (std::size_t k = 0; k < free_slots.size(); ++k)
    if (tensors[free_slots[k].vertex]->bases[free_slots[k].index].set != free_bases[k].set)
      throw DomainError("transversal edge module differs from the boundary vertex module");
  std::vector<int> open_edges;
  std::vector<const Matrix*> ginv(p.edges.size(), nullptr);
  for (int e = 0; e < static_cast<int>(p.edges.size()); ++e) {
    if (on_boundary[e]) continue;
    const auto& ed = p.edges[e];
    const CyclicCSet set = edge_set(ed, c);
    if (ed.is_circle()) {
      term *= FieldElement(cat.field, Rational(hom_dim(cat, set)));
      continue;
    }
    if (ed.tail >= I || ed.head >= I) continue;  // transversal, left free
    ginv[e] = &gram_inverse(set, cat, cache);
    open_edges.push_back(e);
    const auto& tb = tensors[ends[e].first.vertex]->bases[ends[e].first.index];
    const auto& hb = tensors[ends[e].second.vertex]->bases[ends[e].second.index];
    if (tb.set != set || hb.set != opposite(set))
      throw DomainError("vertex link does not match the branch set of edge " + std::to_string(e));
  }
  if (term.is_zero()) return;
  std::vector<std::vector<int>> idx(I);
  for (int v = 0; v < I; ++v) idx[v].assign(p.links[v].at.size(), 0);
  auto tensor_value = [&](int v) {
    const GraphTensor& T = *tensors[v];
    std::size_t flat = 0;
    for (std::size_t k = 0; k < T.bases.size(); ++k) flat = flat * T.bases[k].size() + idx[v][k];
    return T.values[flat];
  };
  const std::size_t nfree = flat_size(free_bases);
  for (std::size_t f = 0; f < nfree; ++f) {
    std::size_t rest = f;
    for (int k = static_cast<int>(free_slots.size()) - 1; k >= 0; --k) {
      idx[free_slots[k].vertex][free_slots[k].index] = static_cast<int>(rest % free_bases[k].size());
      rest /= free_bases[k].size();
    }
    FieldElement sum = FieldElement::zero(cat.field);
    auto rec = [&](auto&& self, std::size_t n, FieldElement acc) -> void {
      if (n == open_edges.size()) {
        for (int v = 0; v < I; ++v) {
          acc *= tensor_value(v);
          if (acc.is_zero()) return;
        }
        sum += acc;
        return;
      }
      const int e = open_edges[n];
      const Matrix& G = *ginv[e];
      for (int i = 0; i < G.rows(); ++i)
        for (int j = 0; j < G.cols(); ++j) {
          if (G(i, j).is_zero()) continue;
          idx[ends[e].first.vertex][ends[e].first.index] = i;
          idx[ends[e].second.vertex][ends[e].second.index] = j;
          self(self, n + 1, acc * G(i, j));
        }
    };
    rec(rec, 0, FieldElement::one(cat.field));
    acc_out[f] += term * sum;
  }
}

template <class F>
void parallel_for(std::size_t n, int workers, F&& body) {
  int w = workers > 0 ? workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  w = std::max(1, std::min<int>(w, static_cast<int>(n)));
  std::vector<std::exception_ptr> errors(w);
  auto run = [&](int k) {
    try {
      body(k, w);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  };
  if (w == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < w; ++k) pool.emplace_back(run, k);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

void check_coloring(const SurfaceSkeleton& s, const Coloring& c, const GFusionData& cat, const char* side) {
  if (c.size() != s.graph.edges.size()) throw DomainError(std::string(side) + " coloring has the wrong length");
  for (std::size_t a = 0; a < c.size(); ++a)
    if (c[a] < 0 || c[a] >= cat.num_simples())
      throw DomainError(std::string(side) + " coloring names an unknown simple on edge " + std::to_string(a));
}

}  // namespace

RelativeTensor relative_invariant(const CobordismSkeleton& p, const std::vector<int>& c_in,
                                  const std::vector<int>& c_out, const GFusionData& cat, const StateSumOptions& opt) {
  const FieldElement d = neutral_dimension(cat);
  if (d.is_zero()) throw DomainError("neutral dimension is zero; the relative invariant is undefined");
  p.validate(cat.group);
  check_coloring(p.in, c_in, cat, "incoming");
  check_coloring(p.out, c_out, cat, "outgoing");
  const int R = p.num_regions();
  std::vector<std::vector<int>> choices(R);
  std::vector<char> fixed(R, 0);
  for (const auto& b : p.boundary_edges) {
    const int r = p.edges[b.p_edge].branches.front().region;
    const int x = (b.side == 0 ? c_in : c_out)[b.edge];
    // a grade clash leaves no extension, so the sum is empty
    if (cat.grade[x] == p.labels[r]) choices[r] = {x};
    fixed[r] = 1;
  }
  for (int r = 0; r < R; ++r)
    if (!fixed[r])
      for (int i = 0; i < cat.num_simples(); ++i)
        if (cat.grade[i] == p.labels[r]) choices[r].push_back(i);

  std::vector<char> on_boundary(p.edges.size(), 0);
  for (const auto& b : p.boundary_edges) on_boundary[b.p_edge] = 1;
  std::vector<std::vector<int>> closing(R);
  for (int e = 0; e < static_cast<int>(p.edges.size()); ++e) {
    if (on_boundary[e]) continue;
    int last = 0;
    for (const auto& b : p.edges[e].branches) last = std::max(last, b.region);
    closing[last].push_back(e);
  }
  std::vector<Coloring> admissible;
  Coloring c(R, 0);
  auto rec = [&](auto&& self, int r) -> void {
    if (r == R) {
      admissible.push_back(c);
      return;
    }
    for (int x : choices[r]) {
      c[r] = x;
      bool ok = true;
      for (int e : closing[r])
        if (hom_dim(cat, edge_set(p.edges[e], c)) == 0) {
          ok = false;
          break;
        }
      if (ok) self(self, r + 1);
    }
  };
  rec(rec, 0);

  RelativeTensor out;
  out.bases = boundary_bases(p, c_in, c_out, cat);
  const std::size_t n = flat_size(out.bases);
  std::vector<std::vector<FieldElement>> partial;
  int workers = opt.workers > 0 ? opt.workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(1, admissible.size()))));
  partial.assign(workers, std::vector<FieldElement>(n, FieldElement::zero(cat.field)));
  parallel_for(admissible.size(), workers, [&](int k, int w) {
    Caches cache;
    for (std::size_t i = k; i < admissible.size(); i += w) coloring_term(p, admissible[i], cat, cache, out.bases, partial[k]);
  });
  out.values.assign(n, FieldElement::zero(cat.field));
  const FieldElement pre = d.pow(-p.num_balls);
  for (std::size_t f = 0; f < n; ++f) {
    for (const auto& part : partial) out.values[f] += part[f];
    out.values[f] *= pre;
  }
  return out;
}

Matrix cobordism_map(const CobordismSkeleton& p, const std::vector<int>& c_in, const std::vector<int>& c_out,
                     const GFusionData& cat, const StateSumOptions& opt) {
  const RelativeTensor T = relative_invariant(p, c_in, c_out, cat, opt);
  const int Vin = p.in.graph.num_vertices, Vout = p.out.graph.num_vertices;
  // positions of surface vertices among the tensor indices
  std::vector<int> pos_in(Vin), pos_out(Vout);
  for (std::size_t k = 0; k < p.boundary.size(); ++k)
    (p.boundary[k].side == 0 ? pos_in : pos_out)[p.boundary[k].vertex] = static_cast<int>(k);
  std::vector<MultiplicityBasis> in_b, out_b;
  std::vector<Matrix> ginv;
  for (int v = 0; v < Vin; ++v) in_b.push_back(T.bases[pos_in[v]]);
  for (int v = 0; v < Vout; ++v) {
    const CyclicCSet set = p.out.vertex_set(v, c_out);
    out_b.push_back(multiplicity_basis(cat, set));
    auto inv = pairing_gram(cat, set).inverse();
    if (!inv) throw DomainError("pairing of multiplicity modules is degenerate");
    ginv.push_back(std::move(*inv));
  }
  const int cols = static_cast<int>(flat_size(in_b)), rows = static_cast<int>(flat_size(out_b));
  const int K = static_cast<int>(T.bases.size());
  // (dim C_1)^{|A_1|} / dim(A_1)
  FieldElement norm = FieldElement::one(cat.field);
  if (Vout > 0) {
    norm = neutral_dimension(cat).pow(p.out.num_faces());
    for (int x : c_out) norm *= cat.dim_l[x].pow(-1);
  }
  Matrix M(cat.field, rows, cols);
  std::vector<int> t_idx(K), in_idx(Vin), out_idx(Vout);
  for (std::size_t f = 0; f < T.values.size(); ++f) {
    if (T.values[f].is_zero()) continue;
    std::size_t rest = f;
    for (int k = K - 1; k >= 0; --k) {
      t_idx[k] = static_cast<int>(rest % T.bases[k].size());
      rest /= T.bases[k].size();
    }
    int col = 0;
    for (int v = 0; v < Vin; ++v) col = col * in_b[v].size() + t_idx[pos_in[v]];
    // spread the outgoing indices through G^-1, one vertex at a time
    for (int row = 0; row < rows; ++row) {
      int r = row;
      FieldElement w = T.values[f] * norm;
      for (int v = Vout - 1; v >= 0 && !w.is_zero(); --v) {
        const int J = r % out_b[v].size();
        r /= out_b[v].size();
        w *= ginv[v](J, t_idx[pos_out[v]]);
      }
      if (!w.is_zero()) M(row, col) += w;
    }
  }
  return M;
}

StateSpaceLayout state_space_layout(const SurfaceSkeleton& s, const GFusionData& cat) {
  StateSpaceLayout L;
  L.colorings = surface_colorings(s, cat);
  for (const auto& c : L.colorings) {
    L.offsets.push_back(L.dim);
    int d = 1;
    for (int v = 0; v < s.graph.num_vertices; ++v) d *= multiplicity_basis(cat, s.vertex_set(v, c)).size();
    L.dim += d;
  }
  return L;
}

Matrix cobordism_matrix(const CobordismSkeleton& p, const GFusionData& cat, const StateSumOptions& opt) {
  p.validate(cat.group);
  const auto Lin = state_space_layout(p.in, cat), Lout = state_space_layout(p.out, cat);
  Matrix M(cat.field, Lout.dim, Lin.dim);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < Lin.colorings.size(); ++i)
    for (std::size_t j = 0; j < Lout.colorings.size(); ++j) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  std::vector<Matrix> blocks(pairs.size());
  StateSumOptions inner;
  inner.workers = 1;
  parallel_for(pairs.size(), opt.workers, [&](int k, int w) {
    for (std::size_t b = k; b < pairs.size(); b += w)
      blocks[b] = cobordism_map(p, Lin.colorings[pairs[b].first], Lout.colorings[pairs[b].second], cat, inner);
  });
  for (std::size_t b = 0; b < pairs.size(); ++b) {
    const int r0 = Lout.offsets[pairs[b].second], c0 = Lin.offsets[pairs[b].first];
    for (int r = 0; r < blocks[b].rows(); ++r)
      for (int c = 0; c < blocks[b].cols(); ++c) M(r0 + r, c0 + c) = blocks[b](r, c);
  }
  return M;
}

HqftSpace cylinder_projector(const SurfaceSkeleton& a, const GFusionData& cat, const StateSumOptions& opt) {
  a.validate(cat.group);
  HqftSpace h;
  h.surface = a;
  h.layout = state_space_layout(a, cat);
  h.projector = cobordism_matrix(cylinder(a), cat, opt);
  if (h.projector * h.projector != h.projector)
    throw DomainError("cylinder map of " + a.name + " is not idempotent");
  h.rank = h.projector.rank();
  return h;
}

Matrix skeleton_change(const SurfaceSkeleton& mid, const std::vector<int>& in_edges, const std::vector<int>& out_edges,
                       const GFusionData& cat, const StateSumOptions& opt) {
  mid.validate(cat.group);
  return cobordism_matrix(cylinder(mid, in_edges, out_edges), cat, opt);
}

int hqft_space_rank(const SurfaceSkeleton& a, const GFusionData& cat, const StateSumOptions& opt) {
  return cylinder_projector(a, cat, opt).rank;
}

}  // namespace tvsum
