#include "tvsum/gauge.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tvsum/error.hpp"

namespace tvsum {

std::vector<GLabeling> enumerate_labelings(const Skeleton& s, const FiniteGroup& g) {
  const int R = s.num_regions();
  // an edge is checked once its highest region is assigned
  std::vector<std::vector<int>> closing(R);
  for (int e = 0; e < s.num_edges(); ++e) {
    int last = 0;
    for (const auto& b : s.edges[e].branches) last = std::max(last, b.region);
    closing[last].push_back(e);
  }
  std::vector<GLabeling> out;
  GLabeling l(R, g.identity());
  auto edge_ok = [&](int e) {
    int p = g.identity();
    for (const auto& b : s.edges[e].branches) p = g.mul(p, b.sign > 0 ? l[b.region] : g.inv(l[b.region]));
    return p == g.identity();
  };
  auto rec = [&](auto&& self, int r) -> void {
    if (r == R) {
      out.push_back(l);
      return;
    }
    for (int x = 0; x < g.order(); ++x) {
      l[r] = x;
      bool ok = true;
      for (int e : closing[r])
        if (!edge_ok(e)) {
          ok = false;
          break;
        }
      if (ok) self(self, r + 1);
    }
  };
  rec(rec, 0);
  return out;
}

GLabeling gauge_act(const Skeleton& s, const FiniteGroup& g, const GaugeElement& lambda, const GLabeling& l) {
  if (static_cast<int>(lambda.size()) != s.num_balls || static_cast<int>(l.size()) != s.num_regions())
    throw DomainError("gauge element or labeling does not match the skeleton");
  GLabeling out(l.size());
  for (int r = 0; r < s.num_regions(); ++r) {
    const auto& reg = s.regions[r];
    out[r] = g.mul(g.mul(lambda[reg.ball_minus], l[r]), g.inv(lambda[reg.ball_plus]));
  }
  return out;
}

std::vector<GaugeOrbit> gauge_orbits(const Skeleton& s, const FiniteGroup& g, const std::vector<GLabeling>& labelings) {
  const int n = static_cast<int>(labelings.size());
  std::map<GLabeling, int> index;
  for (int i = 0; i < n; ++i) index.emplace(labelings[i], i);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // the gauge group is generated by elements supported on a single ball
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < s.num_balls; ++b)
      for (int x = 0; x < g.order(); ++x) {
        if (x == g.identity()) continue;
        GaugeElement lambda(s.num_balls, g.identity());
        lambda[b] = x;
        auto it = index.find(gauge_act(s, g, lambda, labelings[i]));
        if (it == index.end()) throw DomainError("labeling list is not closed under the gauge action");
        parent[find(i)] = find(it->second);
      }
  std::map<int, GaugeOrbit> by_root;
  for (int i = 0; i < n; ++i) {
    auto& o = by_root[find(i)];
    if (o.members.empty() || labelings[i] < o.representative) o.representative = labelings[i];
    o.members.push_back(i);
  }
  std::vector<GaugeOrbit> out;
  for (auto& [root, o] : by_root) out.push_back(std::move(o));
  std::sort(out.begin(), out.end(),
            [](const GaugeOrbit& a, const GaugeOrbit& b) { return a.representative < b.representative; });
  return out;
}

}  // namespace tvsum
