#include "tvsum/statesum.hpp"

#include <algorithm>
#include <chrono>
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

ColoredGraph colored_link(const VertexLink& L, const Coloring& c) {
  ColoredGraph g = L.graph;
  for (auto& e : g.edges) e.color = c[e.color];
  return g;
}

const GraphTensor& vertex_tensor(const Skeleton& s, int v, const Coloring& c, const GFusionData& cat, Caches& cache) {
  const auto& L = s.links[v];
  std::vector<int> key;
  for (const auto& e : L.graph.edges) key.push_back(c[e.color]);
  auto it = cache.vertex.find({v, key});
  if (it != cache.vertex.end()) return it->second;
  return cache.vertex.emplace(std::make_pair(v, key), evaluate_graph(cat, colored_link(L, c))).first->second;
}

const Matrix& gram_inverse(const CyclicCSet& set, const GFusionData& cat, Caches& cache) {
  auto it = cache.gram_inverse.find(set);
  if (it != cache.gram_inverse.end()) return it->second;
  auto inv = pairing_gram(cat, set).inverse();
  if (!inv) throw DomainError("pairing of multiplicity modules is degenerate");
  return cache.gram_inverse.emplace(set, std::move(*inv)).first->second;
}

// Contraction of the vertex tensors along all edges, times the region dimensions.
FieldElement coloring_term(const Skeleton& s, const Coloring& c, const GFusionData& cat, Caches& cache) {
  FieldElement term = FieldElement::one(cat.field);
  for (int r = 0; r < s.num_regions(); ++r)
    if (s.regions[r].chi != 0) term *= cat.dim_l[c[r]].pow(s.regions[r].chi);
  std::vector<const GraphTensor*> tensors;
  for (int v = 0; v < s.num_vertices(); ++v) tensors.push_back(&vertex_tensor(s, v, c, cat, cache));
  struct End {
    int vertex, slot;
  };
  std::vector<std::pair<End, End>> ends;
  std::vector<const Matrix*> ginv;
  ends.resize(s.num_edges(), {{-1, -1}, {-1, -1}});
  for (int v = 0; v < s.num_vertices(); ++v)
    for (std::size_t k = 0; k < s.links[v].at.size(); ++k) {
      const auto& a = s.links[v].at[k];
      (a.tail ? ends[a.edge].first : ends[a.edge].second) = {v, static_cast<int>(k)};
    }
  std::vector<int> open_edges;
  for (int e = 0; e < s.num_edges(); ++e) {
    const CyclicCSet set = s.edge_set(e, c);
    if (s.edges[e].is_circle()) {
      term *= FieldElement(cat.field, Rational(hom_dim(cat, set)));
      ginv.push_back(nullptr);
      continue;
    }
    ginv.push_back(&gram_inverse(set, cat, cache));
    open_edges.push_back(e);
    const auto& tb = tensors[ends[e].first.vertex]->bases[ends[e].first.slot];
    const auto& hb = tensors[ends[e].second.vertex]->bases[ends[e].second.slot];
    if (tb.set != set || hb.set != opposite(set))
      throw DomainError("vertex link does not match the branch set of edge " + std::to_string(e));
  }
  if (term.is_zero()) return term;
  // index per (vertex, slot)
  std::vector<std::vector<int>> idx(s.num_vertices());
  for (int v = 0; v < s.num_vertices(); ++v) idx[v].assign(s.links[v].at.size(), 0);
  auto tensor_value = [&](int v) {
    const GraphTensor& T = *tensors[v];
    std::size_t flat = 0;
    for (std::size_t k = 0; k < T.bases.size(); ++k) flat = flat * T.bases[k].size() + idx[v][k];
    return T.values[flat];
  };
  FieldElement sum = FieldElement::zero(cat.field);
  auto rec = [&](auto&& self, std::size_t n, FieldElement acc) -> void {
    if (n == open_edges.size()) {
      for (int v = 0; v < s.num_vertices(); ++v) {
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
        idx[ends[e].first.vertex][ends[e].first.slot] = i;
        idx[ends[e].second.vertex][ends[e].second.slot] = j;
        self(self, n + 1, acc * G(i, j));
      }
  };
  rec(rec, 0, FieldElement::one(cat.field));
  return term * sum;
}

StateSumResult state_sum(const Skeleton& s, const GLabeling& l, const GFusionData& cat, const StateSumOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  if (!is_labeling(s, cat.group, l)) throw DomainError("labeling does not satisfy the product condition on this skeleton");
  const int R = s.num_regions();
  std::vector<std::vector<int>> choices(R);
  for (int r = 0; r < R; ++r)
    for (int i = 0; i < cat.num_simples(); ++i)
      if (cat.grade[i] == l[r]) choices[r].push_back(i);
  StateSumResult res;
  res.visited = 1;
  for (const auto& ch : choices) res.visited = ch.empty() ? 0 : res.visited * ch.size();

  std::vector<std::vector<int>> closing(R);
  for (int e = 0; e < s.num_edges(); ++e) {
    int last = 0;
    for (const auto& b : s.edges[e].branches) last = std::max(last, b.region);
    closing[last].push_back(e);
  }
  std::map<CyclicCSet, int> dims;
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
      for (int e : closing[r]) {
        auto set = s.edge_set(e, c);
        auto it = dims.find(set);
        if (it == dims.end()) it = dims.emplace(set, hom_dim(cat, set)).first;
        if (it->second == 0) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, r + 1);
    }
  };
  rec(rec, 0);
  res.admissible = admissible.size();

  int workers = opt.workers > 0 ? opt.workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::max(1, std::min<int>(workers, static_cast<int>(admissible.size())));
  std::vector<FieldElement> partial(workers, FieldElement::zero(cat.field));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](int w) {
    try {
      Caches cache;
      for (std::size_t i = w; i < admissible.size(); i += workers) partial[w] += coloring_term(s, admissible[i], cat, cache);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  res.value = FieldElement::zero(cat.field);
  for (const auto& p : partial) res.value += p;
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace

StateSumResult closed_invariant(const Skeleton& s, const GLabeling& l, const GFusionData& cat,
                                const StateSumOptions& opt) {
  const FieldElement d = neutral_dimension(cat);
  if (d.is_zero()) throw DomainError("neutral dimension is zero; the normalized invariant is undefined");
  auto res = state_sum(s, l, cat, opt);
  res.value *= d.pow(-s.num_balls);
  return res;
}

void check_spine(const Skeleton& s) {
  if (s.num_vertices() < 2) throw DomainError("spine needs at least two vertices");
  if (s.num_balls != 1) throw DomainError("spine must have a single complementary ball");
  for (const auto& e : s.edges)
    if (e.is_circle() || e.branches.size() != 3) throw DomainError("spine edges must be trivalent with endpoints");
  for (int v = 0; v < s.num_vertices(); ++v) {
    const auto& g = s.links[v].graph;
    bool ok = g.num_vertices == 4 && g.edges.size() == 6;
    std::vector<std::vector<int>> adj(4, std::vector<int>(4, 0));
    if (ok)
      for (const auto& e : g.edges) {
        if (e.tail == e.head) ok = false;
        else ++adj[e.tail][e.head], ++adj[e.head][e.tail];
      }
    for (int a = 0; ok && a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        if (a != b && adj[a][b] != 1) ok = false;
    if (!ok) throw DomainError("vertex " + std::to_string(v) + " is not locally the cone over a tetrahedron 1-skeleton");
  }
}

StateSumResult unnormalized_invariant(const Skeleton& s, const GLabeling& l, const GFusionData& cat,
                                      const StateSumOptions& opt) {
  check_spine(s);
  return state_sum(s, l, cat, opt);
}

PartitionTable partition_all_classes(const Skeleton& s, const GFusionData& cat, const StateSumOptions& opt) {
  PartitionTable t;
  auto labelings = enumerate_labelings(s, cat.group);
  auto orbits = gauge_orbits(s, cat.group, labelings);
  t.labelings = labelings.size();
  t.aggregate = FieldElement::zero(cat.field);
  for (const auto& o : orbits) {
    ClassRow row{o.representative, o.members.size(), closed_invariant(s, o.representative, cat, opt).value};
    t.aggregate += row.value * FieldElement(cat.field, Rational(static_cast<long>(row.orbit_size)));
    t.rows.push_back(std::move(row));
  }
  t.aggregate *= FieldElement(cat.field, Rational(cat.group.order())).pow(-s.num_balls);
  return t;
}

std::vector<LiftRow> lift_sums(const Skeleton& s, const GFusionData& cat, const FiniteGroup& target,
                               const std::vector<int>& phi, const StateSumOptions& opt) {
  const auto pushed = push_forward(cat, target, phi);
  const auto labelings = enumerate_labelings(s, target);
  const auto orbits = gauge_orbits(s, target, labelings);
  std::map<GLabeling, std::size_t> orbit_of;
  for (std::size_t k = 0; k < orbits.size(); ++k)
    for (int m : orbits[k].members) orbit_of[labelings[m]] = k;

  std::vector<LiftRow> rows;
  for (const auto& o : orbits)
    rows.push_back({o.representative, closed_invariant(s, o.representative, pushed, opt).value,
                    FieldElement::zero(cat.field), 0});
  for (const auto& row : partition_all_classes(s, cat, opt).rows) {
    GLabeling image(row.representative.size());
    for (std::size_t r = 0; r < image.size(); ++r) image[r] = phi[row.representative[r]];
    auto& dst = rows[orbit_of.at(image)];
    dst.lifted += row.value;
    ++dst.lifts;
  }
  const FieldElement gamma(cat.field, Rational(cat.group.order() / target.order()));
  for (auto& row : rows) row.lifted /= gamma;
  return rows;
}

}  // namespace tvsum
