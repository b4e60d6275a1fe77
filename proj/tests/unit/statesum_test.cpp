#include "doctest.h"

#include <numeric>
#include <random>

#include "tvsum/error.hpp"
#include "tvsum/statesum.hpp"

using namespace tvsum;

namespace {

Triangulation tri(const std::string& name) {
  return load_triangulation(std::string(TVSUM_DATA_DIR) + "/triangulations/" + name + ".tri");
}

Skeleton skel(const std::string& name) { return load_skeleton(std::string(TVSUM_DATA_DIR) + "/skeletons/" + name + ".json"); }

// Same skeleton with regions renumbered by perm (old -> new).
Skeleton renumber_regions(const Skeleton& s, const std::vector<int>& perm) {
  Skeleton out = s;
  for (int r = 0; r < s.num_regions(); ++r) out.regions[perm[r]] = s.regions[r];
  for (auto& e : out.edges)
    for (auto& b : e.branches) b.region = perm[b.region];
  for (auto& L : out.links)
    for (auto& ge : L.graph.edges) ge.color = perm[ge.color];
  return out;
}

}  // namespace

TEST_CASE("sphere value") {
  auto s = dual_skeleton(tri("s3_2tet"));
  for (const auto& name : builtin_category_names()) {
    CAPTURE(name);
    auto cat = builtin_category(name);
    auto r = closed_invariant(s, GLabeling(s.num_regions(), cat.group.identity()), cat);
    CHECK(r.value == neutral_dimension(cat).inverse());
    CHECK(r.admissible <= r.visited);
  }
}

TEST_CASE("S1xS2 from the direct skeleton") {
  auto s = skel("s1xs2_paper");
  for (const char* name : {"vect_Z2_theta0", "vect_Z2_theta1", "vect_Z3_theta1", "fibonacci"}) {
    auto cat = builtin_category(name);
    for (const auto& l : enumerate_labelings(s, cat.group)) CHECK(closed_invariant(s, l, cat).value.is_one());
  }
}

TEST_CASE("spine variant") {
  auto sp = skel("s3_spine");
  auto fib = builtin_category("fibonacci");
  GLabeling triv(sp.num_regions(), 0);
  CHECK(unnormalized_invariant(sp, triv, fib).value.is_one());
  CHECK(unnormalized_invariant(sp, triv, fib).value == neutral_dimension(fib) * closed_invariant(sp, triv, fib).value);
  auto z3 = builtin_category("vect_Z3_theta1");
  for (const auto& l : enumerate_labelings(sp, z3.group))
    CHECK(unnormalized_invariant(sp, l, z3).value == closed_invariant(sp, l, z3).value);
  CHECK_THROWS_AS(check_spine(dual_skeleton(tri("s3_2tet"))), DomainError);
  CHECK_THROWS_AS(check_spine(skel("s1xs2_paper")), DomainError);
}

TEST_CASE("labeling mismatch is rejected") {
  auto s = dual_skeleton(tri("s3_2tet"));
  auto cat = builtin_category("vect_Z2_theta0");
  GLabeling bad(s.num_regions(), 0);
  bad[0] = 1;
  CHECK_THROWS_AS(closed_invariant(s, bad, cat), DomainError);
}

TEST_CASE("coloring order and worker count") {
  auto s = dual_skeleton(tri("l31"));
  auto cat = builtin_category("vect_Z3_theta1");
  auto fib = builtin_category("fibonacci");
  std::vector<int> perm(s.num_regions());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(2);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto t = renumber_regions(s, perm);
  for (const auto& l : enumerate_labelings(s, cat.group)) {
    GLabeling lt(l.size());
    for (std::size_t r = 0; r < l.size(); ++r) lt[perm[r]] = l[r];
    CHECK(closed_invariant(s, l, cat).value == closed_invariant(t, lt, cat).value);
  }
  GLabeling triv(s.num_regions(), 0);
  CHECK(closed_invariant(s, triv, fib, {1}).value == closed_invariant(s, triv, fib, {3}).value);
  CHECK(closed_invariant(s, triv, fib).value == closed_invariant(t, triv, fib).value);
}

TEST_CASE("pointed values are roots of unity and gauge invariant") {
  for (const char* m : {"rp3", "l31", "l41", "s1xs2"}) {
    auto s = dual_skeleton(tri(m));
    for (const char* name : {"vect_Z2_theta1", "vect_Z3_theta1", "vect_Z4_theta1"}) {
      CAPTURE(m);
      CAPTURE(name);
      auto cat = builtin_category(name);
      auto ls = enumerate_labelings(s, cat.group);
      for (const auto& o : gauge_orbits(s, cat.group, ls)) {
        auto v = closed_invariant(s, o.representative, cat).value;
        CHECK(v.pow(12).is_one());
        for (int i : o.members) CHECK(closed_invariant(s, ls[i], cat).value == v);
      }
    }
  }
}

TEST_CASE("T4 for every label keeps the value") {
  auto s = dual_skeleton(tri("rp3"));
  auto cat = builtin_category("vect_Z2_theta1");
  auto fib = builtin_category("fibonacci");
  for (const auto& l : enumerate_labelings(s, cat.group)) {
    auto before = closed_invariant(s, l, cat).value;
    for (int g = 0; g < 2; ++g) {
      MoveSpec m;
      m.kind = MoveKind::T4;
      m.region = 0;
      m.label = g;
      auto after = apply_move({s, l}, cat.group, m);
      CHECK(closed_invariant(after.skeleton, after.labels, cat).value == before);
    }
  }
  MoveSpec m;
  m.kind = MoveKind::T4;
  m.region = 1;
  GLabeling triv(s.num_regions(), 0);
  auto after = apply_move({s, triv}, fib.group, m);
  CHECK(closed_invariant(after.skeleton, after.labels, fib).value == closed_invariant(s, triv, fib).value);
}

TEST_CASE("push-forward along Z/4 -> Z/2 matches the lift sums") {
  const auto z2 = FiniteGroup::cyclic(2);
  for (const char* m : {"s3_2tet", "rp3", "s1xs2"})
    for (int q = 0; q < 4; ++q) {
      CAPTURE(m);
      CAPTURE(q);
      auto cat = load_category(std::string(TVSUM_DATA_DIR) + "/categories/vect_Z4_theta" + std::to_string(q) + ".json");
      auto s = dual_skeleton(tri(m));
      std::size_t lifts = 0;
      for (const auto& row : lift_sums(s, cat, z2, {0, 1, 0, 1})) {
        CHECK(row.pushed == row.lifted);
        lifts += row.lifts;
      }
      CHECK(lifts == partition_all_classes(s, cat).rows.size());
    }
}
