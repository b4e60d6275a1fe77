#include "acceptance.hpp"
#include "tvsum/hqft.hpp"

using namespace tvsum;

namespace acceptance {

namespace {

SurfaceSkeleton surface(const std::string& name) { return load_surface(data("surfaces/" + name + ".json")); }
CobordismSkeleton cobordism(const std::string& name) { return load_cobordism(data("cobordisms/" + name + ".json")); }

}  // namespace

Tally hqft_suite() {
  Tally t;
  t.expect(hqft_space_rank(SurfaceSkeleton{}, category("fibonacci")) == 1, "empty surface");
  const auto one = surface("sphere_one_circle"), two = surface("sphere_two_circle");
  const auto t2 = surface("torus_two_loop"), t3 = surface("torus_three_edge");
  std::vector<std::string> names = kPointed;
  names.push_back("trivial");
  for (const auto& n : names) {
    const auto c = category(n);
    // cylinder_projector throws unless p * p == p
    const auto s1 = cylinder_projector(one, c), s2 = cylinder_projector(two, c);
    const auto a = cylinder_projector(t2, c), b = cylinder_projector(t3, c);
    for (const auto* h : {&s1, &s2, &a, &b}) t.expect(h->projector * h->projector == h->projector, n + " idempotent");
    t.expect(s1.rank == 1 && s2.rank == 1, n + " sphere rank 1");
    t.expect(a.rank == b.rank, n + " torus ranks agree");

    const std::vector<int> small = {0, 1}, big = {0, 1, 2};
    const auto p12 = skeleton_change(t3, small, big, c), p21 = skeleton_change(t3, big, small, c);
    t.expect(p21 * p12 == a.projector, n + " p(A0,A0) = p(A1,A0) p(A0,A1)");
    t.expect(p12 * p21 == b.projector, n + " p(A1,A1) = p(A0,A1) p(A1,A0)");
    t.expect(p12 * a.projector == p12, n + " p(A0,A1) = p(A0,A1) p(A0,A0)");
    t.expect(b.projector * p12 == p12, n + " p(A0,A1) = p(A1,A1) p(A0,A1)");
    t.expect(cobordism_matrix(cobordism("torus_refine"), c) == p12, n + " shipped refinement");
    t.expect(cobordism_matrix(cobordism("torus_long_cylinder"), c) == a.projector * a.projector, n + " gluing law");
  }
  const auto fib = category("fibonacci");
  t.expect(cylinder_projector(one, fib).rank == cylinder_projector(two, fib).rank, "fibonacci sphere ranks agree");
  return t;
}

}  // namespace acceptance
