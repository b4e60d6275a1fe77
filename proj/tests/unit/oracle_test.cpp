#include "doctest.h"

#include <cmath>
#include <random>

#include "tvsum/error.hpp"
#include "tvsum/oracle.hpp"
#include "tvsum/statesum.hpp"

using namespace tvsum;

namespace {

Triangulation tri(const std::string& name) {
  return load_triangulation(std::string(TVSUM_DATA_DIR) + "/triangulations/" + name + ".tri");
}

FieldElement rational(const FieldSpec& f, long n, long d = 1) { return FieldElement(f, Rational(n, d)); }

}  // namespace

TEST_CASE("branching and subdivision") {
  for (const char* m : {"s3_2tet", "rp3", "s1xs2", "t3_6tet"}) {
    auto ot = order_triangulation(tri(m));
    CHECK_FALSE(ot.subdivided);
  }
  auto l31 = order_triangulation(tri("l31"));
  CHECK(l31.subdivided);
  CHECK(l31.tri.size() == 48);
  auto sub = barycentric_subdivision(tri("s3_2tet"));
  CHECK(sub.size() == 48);
  CHECK(sub.num_vertices() - sub.num_edges() + sub.num_triangles() - sub.size() == 0);
}

TEST_CASE("class values") {
  auto ot = order_triangulation(tri("s3_5tet"));
  for (int n : {2, 3}) {
    auto G = FiniteGroup::cyclic(n);
    auto flat = all_flat_colorings(ot, G);
    CHECK(flat.size() == static_cast<std::size_t>(std::pow(n, ot.tri.num_vertices() - 1)));
    for (int q = 0; q < n; ++q) {
      auto th = CocycleTable::standard_cyclic(n, q);
      for (const auto& c : flat) CHECK(dw_class_value(ot, c, th).is_one());
    }
  }
  auto rp3 = order_triangulation(tri("rp3"));
  auto z2 = FiniteGroup::cyclic(2);
  auto triv = CocycleTable::trivial(z2, FieldSpec::rational());
  for (const auto& c : all_flat_colorings(rp3, z2)) CHECK(dw_class_value(rp3, c, triv).is_one());
  FlatColoring bad(rp3.tri.num_edges(), 0);
  bad[0] = 1;
  if (!is_flat(rp3, z2, bad)) CHECK_THROWS_AS(dw_class_value(rp3, bad, triv), DomainError);
}

TEST_CASE("coboundary shift leaves class values unchanged") {
  std::mt19937 rng(4);
  for (const char* m : {"rp3", "s1xs2", "s3_5tet"}) {
    auto ot = order_triangulation(tri(m));
    for (int n : {2, 3, 4}) {
      auto th = CocycleTable::standard_cyclic(n, 1);
      auto zeta = FieldElement::generator(th.field());
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<FieldElement> beta;
        for (int i = 0; i < n * n; ++i) beta.push_back(i / n == 0 || i % n == 0 ? FieldElement::one(th.field()) : zeta.pow(rng() % (2 * n)));
        auto shifted = th.coboundary_shift(beta);
        for (const auto& c : all_flat_colorings(ot, th.group()))
          CHECK(dw_class_value(ot, c, th) == dw_class_value(ot, c, shifted));
      }
    }
  }
}

TEST_CASE("partition function") {
  for (int n : {2, 3}) {
    auto th = CocycleTable::standard_cyclic(n, 1);
    CHECK(dw_partition(order_triangulation(tri("s3_2tet")), th) == rational(th.field(), 1, n));
    CHECK(dw_partition(order_triangulation(tri("s1xs2")), th).is_one());
  }
  auto trivial = CocycleTable::trivial(FiniteGroup::trivial(), FieldSpec::rational());
  CHECK(dw_partition(order_triangulation(tri("t3_6tet")), trivial).is_one());
  // gauge-fixed sum against the full sum
  for (const char* m : {"rp3", "s3_5tet", "t3_6tet"}) {
    auto ot = order_triangulation(tri(m));
    auto th = CocycleTable::standard_cyclic(3, 1);
    FieldElement full = FieldElement::zero(th.field());
    for (const auto& c : all_flat_colorings(ot, th.group())) full += dw_class_value(ot, c, th);
    CHECK(full * rational(th.field(), 1, 3).pow(ot.tri.num_vertices()) == dw_partition(ot, th));
  }
}

TEST_CASE("pachner invariance of the oracle") {
  for (const char* m : {"rp3", "s1xs2"}) {
    auto t = tri(m);
    for (int n : {2, 3}) {
      auto th = CocycleTable::standard_cyclic(n, 1);
      auto v = dw_partition(order_triangulation(t), th);
      CHECK(dw_partition(order_triangulation(pachner(t, PachnerKind::OneFour, 0)), th) == v);
      CHECK(dw_partition(order_triangulation(pachner(t, PachnerKind::TwoThree, 1)), th) == v);
      CHECK(dw_partition(order_triangulation(barycentric_subdivision(t)), th) == v);
    }
  }
}
