#include <algorithm>
#include <random>

#include "../support/random_graphs.hpp"
#include "acceptance.hpp"
#include "tvsum/graphcalc.hpp"
#include "tvsum/statesum.hpp"

using namespace tvsum;

namespace acceptance {

namespace {

std::vector<std::string> all_backends() {
  std::vector<std::string> names = kPointed;
  for (const char* n : {"trivial", "fibonacci", "ising_like"}) names.push_back(n);
  return names;
}

CyclicCSet random_admissible_set(const GFusionData& d, std::mt19937& rng, int n) {
  for (;;) {
    CyclicCSet s;
    for (int i = 0; i < n; ++i) s.push_back({static_cast<int>(rng() % d.num_simples()), rng() % 2 ? 1 : -1});
    if (hom_dim(d, s) > 0) return s;
  }
}

// g with edge e removed; edge ids above e shift down.
ColoredGraph delete_edge(const ColoredGraph& g, int e) {
  ColoredGraph h = g;
  h.edges.erase(h.edges.begin() + e);
  for (auto& rot : h.rotation) {
    rot.erase(std::remove_if(rot.begin(), rot.end(), [&](const HalfEdge& x) { return x.edge == e; }), rot.end());
    for (auto& x : rot)
      if (x.edge > e) --x.edge;
  }
  return h;
}

bool unit_edge_instance(const GFusionData& d, std::mt19937& rng, bool& ok) {
  auto g = testing::random_plane_graph(rng, 2 + rng() % 4, 1 + rng() % 3);
  if (!testing::colorize(d, g, rng)) return false;
  const int e = static_cast<int>(rng() % g.edges.size());
  const auto ed = g.edges[e];
  if (ed.tail == ed.head || g.rotation[ed.tail].size() < 2 || g.rotation[ed.head].size() < 2) return false;
  g.edges[e].color = d.unit;
  for (int v = 0; v < g.num_vertices; ++v)
    if (hom_dim(d, g.vertex_set(v)) == 0) return false;
  const auto h = delete_edge(g, e);
  if (h.components().size() != g.components().size()) return false;
  // the unit strand drops out of each basis tree at both ends
  const auto tg = evaluate_graph(d, g);
  std::vector<std::vector<int>> chains(h.num_vertices);
  ok = true;
  for (std::size_t flat = 0; flat < tg.size(); ++flat) {
    std::size_t r = flat;
    for (int v = g.num_vertices - 1; v >= 0; --v) {
      const auto idx = r % tg.bases[v].size();
      r /= tg.bases[v].size();
      std::vector<int> ch = tg.bases[v].trees[idx];
      for (std::size_t p = 0; p < g.rotation[v].size(); ++p)
        if (g.rotation[v][p].edge == e) ch.erase(ch.begin() + p + 1);
      chains[v] = ch;
    }
    ok = ok && evaluate_graph_on(d, h, chains) == tg.values[flat];
  }
  return true;
}

}  // namespace

Tally sector_dimensions() {
  Tally t;
  for (const auto& n : all_backends()) {
    const auto c = category(n);
    const auto d1 = neutral_dimension(c);
    for (int g = 0; g < c.group.order(); ++g)
      if (!c.sector(g).empty()) t.expect(sector_dimension(c, g) == d1, n + " sector " + std::to_string(g));
  }
  return t;
}

Tally category_validation() {
  Tally t;
  for (const auto& n : all_backends()) t.expect(validate_category(category(n)).ok(), n + " validates");
  const auto base = category("fibonacci");
  std::vector<std::array<int, 6>> entries;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          for (int e = 0; e < 2; ++e)
            for (int f = 0; f < 2; ++f)
              if (base.has_F(a, b, c, d, e, f)) entries.push_back({a, b, c, d, e, f});
  std::mt19937 rng(2024);
  const FieldElement factors[] = {FieldElement(base.field, Rational(-1)), FieldElement(base.field, Rational(2)),
                                  FieldElement::generator(base.field)};
  for (int k = 0; k < 10; ++k) {
    auto d = base;
    const auto e = entries[rng() % entries.size()];
    const auto& x = factors[rng() % 3];
    d.set_F(e[0], e[1], e[2], e[3], e[4], e[5], d.F(e[0], e[1], e[2], e[3], e[4], e[5]) * x);
    d.finalize();
    t.expect(!validate_category(d).ok(), "corruption " + std::to_string(k) + " detected");
  }
  return t;
}

Tally push_forward_sums() {
  Tally t;
  const auto z2 = FiniteGroup::cyclic(2);
  const std::vector<int> phi = {0, 1, 0, 1};
  for (int q = 0; q < 4; ++q) {
    const auto c = category("vect_Z4_theta" + std::to_string(q));
    const FieldElement gamma(c.field, Rational(2));
    t.expect(neutral_dimension(push_forward(c, z2, phi)) == gamma * neutral_dimension(c), "neutral dimension");
    for (const char* m : {"s3_2tet", "rp3", "s1xs2"}) {
      const auto s = dual_skeleton(triangulation(m));
      FieldElement pushed = FieldElement::zero(c.field), lifted = FieldElement::zero(c.field);
      std::size_t lifts = 0;
      for (const auto& row : lift_sums(s, c, z2, phi)) {
        pushed += row.pushed;
        lifted += row.lifted;
        lifts += row.lifts;
      }
      const std::string tag = std::string(m) + " theta" + std::to_string(q);
      t.expect(pushed == lifted, tag);
      t.expect(lifts == partition_all_classes(s, c).rows.size(), tag + " every lift counted once");
    }
  }
  return t;
}

Tally graph_properties() {
  Tally t;
  for (const auto& n : all_backends()) {
    const auto d = category(n);
    std::mt19937 rng(17);
    int faces = 0, unions = 0, deletions = 0;
    for (int attempt = 0; (faces < 20 || unions < 20) && attempt < 1000; ++attempt) {
      auto g = testing::random_plane_graph(rng, 2 + rng() % 5, rng() % 4);
      if (!testing::colorize(d, g, rng)) continue;
      const auto base = evaluate_graph(d, g);
      bool same = true;
      const int nf = static_cast<int>(g.faces().size());
      for (int f = 0; f < nf; ++f) same = same && evaluate_graph(d, g, {f, 0}).values == base.values;
      t.expect(same, n + " outer face");
      ++faces;
      auto h = testing::random_plane_graph(rng, 2, 1);
      if (!testing::colorize(d, h, rng)) continue;
      const auto th = evaluate_graph(d, h);
      const auto u = evaluate_graph(d, testing::disjoint_union(g, h));
      bool mult = u.size() == base.size() * th.size();
      for (std::size_t i = 0; mult && i < base.size(); ++i)
        for (std::size_t j = 0; j < th.size(); ++j) mult = mult && u.values[i * th.size() + j] == base.values[i] * th.values[j];
      t.expect(mult, n + " disjoint union");
      ++unions;
    }
    for (int attempt = 0; deletions < 20 && attempt < 4000; ++attempt) {
      bool ok = false;
      if (!unit_edge_instance(d, rng, ok)) continue;
      t.expect(ok, n + " unit edge deletion");
      ++deletions;
    }
    for (int k = 0; k < 20; ++k) {
      const auto s = random_admissible_set(d, rng, 1 + k % 6);
      t.expect(rotation_matrix(d, s, static_cast<int>(s.size())).is_identity(), n + " full rotation");
      t.expect(pairing_gram(d, s).inverse().has_value(), n + " gram invertible");
    }
    t.expect(faces >= 20 && unions >= 20 && deletions >= 20, n + " instance counts");
  }
  return t;
}

}  // namespace acceptance
