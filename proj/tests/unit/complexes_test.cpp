#include "doctest.h"

#include <fstream>
#include <random>

#include "tvsum/complexes.hpp"
#include "tvsum/error.hpp"

using namespace tvsum;

namespace {

const char* kS3 =
    "tetrahedra 2\n"
    "(0,0) -> (1,0) 0123\n"
    "(0,1) -> (1,1) 0123\n"
    "(0,2) -> (1,2) 0123\n"
    "(0,3) -> (1,3) 0123\n";

Triangulation s3() { return parse_triangulation(kS3); }

int euler(const Triangulation& t) { return t.num_vertices() - t.num_edges() + t.num_triangles() - t.size(); }

}  // namespace

TEST_CASE("triangulation parsing and cells") {
  auto t = s3();
  CHECK(t.size() == 2);
  CHECK(t.num_triangles() == 4);
  CHECK(t.num_edges() == 6);
  CHECK(t.num_vertices() == 4);
  CHECK(t.orientation(0) == -t.orientation(1));
  auto back = parse_triangulation(serialize_triangulation(t, "s3"));
  CHECK(isomorphic(t, back));
  CHECK_THROWS_AS(parse_triangulation("tetrahedra 1\n(0,0) -> (0,1) 0123\n"), ValidationError);
  CHECK_THROWS_AS(parse_triangulation("tetrahedra 2\n(0,0) -> (1,0) 0123\n"), ValidationError);
}

TEST_CASE("pachner moves") {
  auto t = s3();
  auto a = pachner(t, PachnerKind::OneFour, 0);
  CHECK(a.size() == 5);
  CHECK(a.num_vertices() == 5);
  CHECK(euler(a) == 0);
  // the cone vertex sits in exactly four tetrahedra
  bool undone = false;
  for (int v = 0; v < a.num_vertices(); ++v) {
    try {
      if (isomorphic(pachner(a, PachnerKind::FourOne, v), t)) undone = true;
    } catch (const DomainError&) {
    }
  }
  CHECK(undone);
  for (int tr = 0; tr < t.num_triangles(); ++tr) CHECK(pachner(t, PachnerKind::TwoThree, tr).size() == 3);
  int tried = 0;
  for (int tr = 0; tr < a.num_triangles(); ++tr) {
    Triangulation b;
    try {
      b = pachner(a, PachnerKind::TwoThree, tr);
    } catch (const DomainError&) {
      continue;
    }
    ++tried;
    CHECK(b.size() == 6);
    CHECK(b.num_edges() == a.num_edges() + 1);
    CHECK(euler(b) == 0);
    bool inverse = false;
    for (int e = 0; e < b.num_edges(); ++e) {
      if (b.edge_valence(e) != 3) continue;
      try {
        if (isomorphic(pachner(b, PachnerKind::ThreeTwo, e), a)) inverse = true;
      } catch (const DomainError&) {
      }
    }
    CHECK(inverse);
  }
  CHECK(tried > 0);
  // one tetrahedron on both sides of the triangle
  auto l41 = load_triangulation(std::string(TVSUM_DATA_DIR) + "/triangulations/l41.tri");
  CHECK_THROWS_AS(pachner(l41, PachnerKind::TwoThree, 0), DomainError);
}

TEST_CASE("shipped triangulations match their headers") {
  for (const char* name : {"s3_2tet", "s3_5tet", "rp3", "l31", "l41", "t3_6tet", "s1xs2"}) {
    CAPTURE(name);
    const std::string path = std::string(TVSUM_DATA_DIR) + "/triangulations/" + name + ".tri";
    std::ifstream in(path);
    std::string line, header;
    while (std::getline(in, line))
      if (line.rfind("# cells:", 0) == 0) header = line;
    auto t = load_triangulation(path);
    CHECK(serialize_triangulation(t, name).find(header) != std::string::npos);
    CHECK(dual_skeleton(t).num_regions() == t.num_edges());
  }
}

TEST_CASE("dual skeleton of a triangulation") {
  auto t = s3();
  auto s = dual_skeleton(t);
  CHECK(s.num_vertices() == 2);
  CHECK(s.num_edges() == 4);
  CHECK(s.num_regions() == 6);
  CHECK(s.num_balls == 4);
  for (const auto& e : s.edges) CHECK(e.branches.size() == 3);
  auto back = parse_skeleton(serialize_skeleton(s));
  CHECK(back == s);
  auto big = dual_skeleton(pachner(pachner(t, PachnerKind::OneFour, 1), PachnerKind::OneFour, 0));
  CHECK(big.num_vertices() == 8);
  for (const auto& L : big.links) CHECK(L.graph.faces().size() == 4);
}

TEST_CASE("skeleton moves round trip") {
  auto G = FiniteGroup::cyclic(2);
  auto t = s3();
  LabeledSkeleton ls{dual_skeleton(t), std::vector<int>(6, 0)};
  REQUIRE(is_labeling(ls.skeleton, G, ls.labels));

  for (int r = 0; r < ls.skeleton.num_regions(); ++r) {
    MoveSpec m;
    m.kind = MoveKind::T4;
    m.region = r;
    m.label = 1;
    auto up = apply_move(ls, G, m);
    CHECK(up.skeleton.num_balls == 5);
    MoveSpec back;
    back.kind = MoveKind::T4Inverse;
    back.vertex = up.skeleton.num_vertices() - 1;
    auto down = apply_move(up, G, back);
    CHECK(down.skeleton == ls.skeleton);
    CHECK(down.labels == ls.labels);
  }

  // T1 between the two vertices through each region, then undo
  for (int r = 0; r < ls.skeleton.num_regions(); ++r) {
    MoveSpec m;
    m.kind = MoveKind::T1;
    m.region = r;
    m.vertex_a = 0;
    m.vertex_b = 1;
    for (int v = 0; v < 2; ++v) {
      const auto& g = ls.skeleton.links[v].graph;
      for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (g.edges[e].color == r) (v == 0 ? m.link_edge_a : m.link_edge_b) = static_cast<int>(e);
    }
    auto up = apply_move(ls, G, m);
    CHECK(up.skeleton.num_regions() == 7);
    CHECK(up.skeleton.num_edges() == 5);
    MoveSpec back;
    back.kind = MoveKind::T1Inverse;
    back.edge = 4;
    auto down = apply_move(up, G, back);
    CHECK(down.skeleton == ls.skeleton);
  }

  // T2 merges the two vertices; one edge fewer
  MoveSpec c;
  c.kind = MoveKind::T2;
  c.edge = 0;
  auto merged = apply_move(ls, G, c);
  CHECK(merged.skeleton.num_vertices() == 1);
  CHECK(merged.skeleton.num_edges() == 3);
  const auto& link = merged.skeleton.links[0].graph;
  CHECK(link.num_vertices - static_cast<int>(link.edges.size()) + static_cast<int>(link.faces().size()) == 2);
  // every remaining edge is now a loop
  CHECK_THROWS_AS(apply_move(merged, G, c), DomainError);
}
