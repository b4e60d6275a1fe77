#include "doctest.h"

#include <random>

#include "tvsum/gauge.hpp"

using namespace tvsum;

namespace {

Skeleton tri_skeleton(const std::string& name) {
  return dual_skeleton(load_triangulation(std::string(TVSUM_DATA_DIR) + "/triangulations/" + name + ".tri"));
}

Skeleton direct_s1xs2() { return load_skeleton(std::string(TVSUM_DATA_DIR) + "/skeletons/s1xs2_paper.json"); }

}  // namespace

TEST_CASE("labeling enumeration") {
  auto z2 = FiniteGroup::cyclic(2);
  auto s3 = tri_skeleton("s3_2tet");
  auto ls = enumerate_labelings(s3, z2);
  CHECK(ls.size() == 8);
  // brute force over all 2^6 assignments
  std::size_t brute = 0;
  for (int mask = 0; mask < 64; ++mask) {
    GLabeling l(6);
    for (int r = 0; r < 6; ++r) l[r] = (mask >> r) & 1;
    brute += is_labeling(s3, z2, l);
  }
  CHECK(brute == ls.size());
  CHECK(std::is_sorted(ls.begin(), ls.end()));
  CHECK(enumerate_labelings(s3, FiniteGroup::trivial()).size() == 1);

  auto p = direct_s1xs2();
  auto pl = enumerate_labelings(p, z2);
  CHECK(pl.size() == 4);
  for (const auto& l : pl) CHECK(l[0] == l[2]);
}

TEST_CASE("gauge action") {
  auto s3 = tri_skeleton("s3_5tet");
  for (auto G : {FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)}) {
    auto ls = enumerate_labelings(s3, G);
    std::mt19937 rng(11);
    auto random_gauge = [&] {
      GaugeElement x(s3.num_balls);
      for (auto& v : x) v = static_cast<int>(rng() % G.order());
      return x;
    };
    for (int trial = 0; trial < 30; ++trial) {
      const auto& l = ls[rng() % ls.size()];
      auto a = random_gauge(), b = random_gauge();
      GaugeElement ab(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) ab[i] = G.mul(a[i], b[i]);
      auto once = gauge_act(s3, G, a, gauge_act(s3, G, b, l));
      CHECK(gauge_act(s3, G, ab, l) == once);
      CHECK(is_labeling(s3, G, once));
      CHECK(gauge_act(s3, G, GaugeElement(s3.num_balls, G.identity()), l) == l);
      // constant gauge conjugates every region
      const int g = static_cast<int>(rng() % G.order());
      auto conj = gauge_act(s3, G, GaugeElement(s3.num_balls, g), l);
      for (int r = 0; r < s3.num_regions(); ++r) CHECK(conj[r] == G.mul(G.mul(g, l[r]), G.inv(g)));
    }
  }
}

TEST_CASE("gauge orbits") {
  auto z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3);
  auto s3 = tri_skeleton("s3_2tet");
  auto o = gauge_orbits(s3, z2, enumerate_labelings(s3, z2));
  REQUIRE(o.size() == 1);
  CHECK(o[0].members.size() == 8);
  CHECK(o[0].representative == GLabeling(6, 0));

  auto p = direct_s1xs2();
  auto po = gauge_orbits(p, z2, enumerate_labelings(p, z2));
  REQUIRE(po.size() == 2);
  // each orbit has a member with annulus 1 and equal disks
  for (const auto& orbit : po) {
    auto all = enumerate_labelings(p, z2);
    bool found = false;
    for (int i : orbit.members) found = found || (all[i][1] == 0 && all[i][0] == all[i][2]);
    CHECK(found);
  }
  auto rp3 = tri_skeleton("rp3");
  CHECK(gauge_orbits(rp3, z3, enumerate_labelings(rp3, z3)).size() == 1);
  CHECK(gauge_orbits(rp3, z2, enumerate_labelings(rp3, z2)).size() == 2);

  // order of the input list does not matter
  auto ls = enumerate_labelings(rp3, FiniteGroup::symmetric(3));
  auto a = gauge_orbits(rp3, FiniteGroup::symmetric(3), ls);
  std::reverse(ls.begin(), ls.end());
  auto b = gauge_orbits(rp3, FiniteGroup::symmetric(3), ls);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].representative == b[i].representative);
    CHECK(a[i].members.size() == b[i].members.size());
  }
}
