// Regenerates the shipped triangulations, the S^3 spine, surface skeletons and cylinders.
// Small closed triangulations are found by exhaustive search and told apart by H_1.
#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>

#include "tvsum/complexes.hpp"
#include "tvsum/error.hpp"
#include "tvsum/hqft.hpp"

using namespace tvsum;

namespace {

using IntMatrix = std::vector<std::vector<long long>>;

// Nonzero invariant factors of an integer matrix.
std::vector<long long> invariant_factors(IntMatrix a) {
  const int rows = static_cast<int>(a.size()), cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<long long> out;
  int t = 0;
  while (t < rows && t < cols) {
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a[i][j] && (pr < 0 || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) pr = i, pc = j;
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool clean = true;
    for (int i = t + 1; i < rows; ++i) {
      long long q = a[i][t] / a[t][t];
      for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t]) clean = false;
    }
    for (int j = t + 1; j < cols; ++j) {
      long long q = a[t][j] / a[t][t];
      for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j]) clean = false;
    }
    if (!clean) continue;
    // divisibility of the rest
    bool divides = true;
    for (int i = t + 1; i < rows && divides; ++i)
      for (int j = t + 1; j < cols; ++j)
        if (a[i][j] % a[t][t]) {
          for (int k = t; k < cols; ++k) a[t][k] += a[i][k];
          divides = false;
          break;
        }
    if (!divides) continue;
    out.push_back(std::llabs(a[t][t]));
    ++t;
  }
  return out;
}

// H_1 as "Z^b + Z_n + ..." from the cellular chain complex.
std::string first_homology(const Triangulation& T) {
  IntMatrix d2(T.num_edges(), std::vector<long long>(T.num_triangles(), 0));
  for (int tr = 0; tr < T.num_triangles(); ++tr) {
    auto [t, f] = T.triangle_rep(tr);
    std::array<int, 3> v{};
    int k = 0;
    for (int i = 0; i < 4; ++i)
      if (i != f) v[k++] = i;
    d2[T.edge_class(t, v[1], v[2])][tr] += T.edge_direction(t, v[1], v[2]);
    d2[T.edge_class(t, v[0], v[2])][tr] -= T.edge_direction(t, v[0], v[2]);
    d2[T.edge_class(t, v[0], v[1])][tr] += T.edge_direction(t, v[0], v[1]);
  }
  auto f = invariant_factors(d2);
  const int betti = T.num_edges() - (T.num_vertices() - 1) - static_cast<int>(f.size());
  std::string s;
  if (betti) s = betti == 1 ? "Z" : "Z^" + std::to_string(betti);
  for (long long x : f)
    if (x > 1) s += (s.empty() ? "" : "+") + ("Z" + std::to_string(x));
  return s.empty() ? "0" : s;
}

// Every closed orientable gluing of n tetrahedra, in a fixed order.
std::vector<Triangulation> census(int n) {
  std::vector<Triangulation> out;
  std::array<int, 4> p{0, 1, 2, 3};
  std::vector<std::array<int, 4>> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int faces = 4 * n;
  std::vector<std::array<Gluing, 4>> gl(n);
  std::vector<char> used(faces, 0);
  auto rec = [&](auto&& self) -> void {
    int a = 0;
    while (a < faces && used[a]) ++a;
    if (a == faces) {
      try {
        out.push_back(Triangulation::from_gluings(gl));
      } catch (const ValidationError&) {
      }
      return;
    }
    used[a] = 1;
    for (int b = a + 1; b < faces; ++b) {
      if (used[b]) continue;
      used[b] = 1;
      const int ta = a / 4, fa = a % 4, tb = b / 4, fb = b % 4;
      for (const auto& pm : perms) {
        if (pm[fa] != fb) continue;
        Gluing g{tb, fb, pm}, back{ta, fa, {}};
        for (int i = 0; i < 4; ++i) back.perm[pm[i]] = i;
        gl[ta][fa] = g;
        gl[tb][fb] = back;
        self(self);
      }
      used[b] = 0;
    }
    used[a] = 0;
    gl[a / 4][a % 4] = Gluing{};
  };
  rec(rec);
  return out;
}

// Freudenthal triangulation of the cube, opposite faces identified.
Triangulation torus_6tet() {
  using Pt = std::array<int, 3>;
  std::vector<std::array<Pt, 4>> tets;
  std::array<int, 3> s{0, 1, 2};
  do {
    std::array<Pt, 4> t{};
    for (int k = 1; k < 4; ++k) {
      t[k] = t[k - 1];
      t[k][s[k - 1]] = 1;
    }
    tets.push_back(t);
  } while (std::next_permutation(s.begin(), s.end()));
  const int n = static_cast<int>(tets.size());
  std::vector<std::array<Gluing, 4>> gl(n);
  for (int a = 0; a < n; ++a)
    for (int f = 0; f < 4; ++f)
      for (int b = 0; b < n && !gl[a][f].glued(); ++b)
        for (int g = 0; g < 4 && !gl[a][f].glued(); ++g) {
          if (a == b && f == g) continue;
          for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy)
              for (int dz = -1; dz <= 1; ++dz) {
                Gluing cand{b, g, {}};
                bool ok = true;
                cand.perm[f] = g;
                for (int i = 0; i < 4 && ok; ++i) {
                  if (i == f) continue;
                  Pt q{tets[a][i][0] + dx, tets[a][i][1] + dy, tets[a][i][2] + dz};
                  int hit = -1;
                  for (int j = 0; j < 4; ++j)
                    if (j != g && tets[b][j] == q) hit = j;
                  if (hit < 0) ok = false;
                  else cand.perm[i] = hit;
                }
                if (ok && !gl[a][f].glued()) gl[a][f] = cand;
              }
        }
  return Triangulation::from_gluings(gl);
}

void write(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  std::cerr << "wrote " << path << "\n";
}

// One-vertex surface skeleton with identity labels; rot lists (edge, is_tail).
SurfaceSkeleton one_vertex(const std::string& name, int genus, int num_edges, std::vector<std::pair<int, bool>> rot) {
  SurfaceSkeleton s;
  s.name = name;
  s.genus = {genus};
  s.base_faces = {0};
  s.graph.num_vertices = 1;
  for (int e = 0; e < num_edges; ++e) s.graph.edges.push_back({0, 0, 0});
  s.graph.rotation.resize(1);
  for (auto [e, t] : rot) s.graph.rotation[0].push_back({e, t});
  return s;
}

void write_hqft(const std::string& dir) {
  const auto one = one_vertex("sphere_one_circle", 0, 1, {{0, true}, {0, false}});
  const auto two = one_vertex("sphere_two_circle", 0, 2, {{0, true}, {0, false}, {1, true}, {1, false}});
  const auto t2 = one_vertex("torus_two_loop", 1, 2, {{0, true}, {1, true}, {0, false}, {1, false}});
  // two-loop skeleton plus a diagonal loop
  const auto t3 = one_vertex("torus_three_edge", 1, 3, {{0, true}, {2, true}, {1, true}, {0, false}, {2, false}, {1, false}});
  if (!find_restriction(t3, t2)) throw DomainError("three-edge torus does not restrict to the two-loop one");
  const auto trivial = FiniteGroup::cyclic(1);
  for (const auto* s : {&one, &two, &t2, &t3}) {
    s->validate(trivial);
    write(dir + "/surfaces/" + s->name + ".json", serialize_surface(*s));
  }
  auto named = [](CobordismSkeleton p, const std::string& name) {
    p.name = name;
    return p;
  };
  const std::vector<CobordismSkeleton> cobs = {
      named(cylinder(one), "sphere_cylinder"),
      named(cylinder(two), "sphere_two_circle_cylinder"),
      named(cylinder(two, {0}, {0, 1}), "sphere_refine"),
      named(cylinder(t2), "torus_cylinder"),
      named(cylinder(t3), "torus_three_edge_cylinder"),
      named(cylinder(t3, {0, 1}, {0, 1, 2}), "torus_refine"),
      named(cylinder(t3, {0, 1, 2}, {0, 1}), "torus_coarsen"),
      named(glue(cylinder(t2), cylinder(t2)), "torus_long_cylinder"),
  };
  for (const auto& p : cobs) {
    p.validate(trivial);
    write(dir + "/cobordisms/" + p.name + ".json", serialize_cobordism(p));
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: tvsum_gen_data DATA_DIR\n";
    return 2;
  }
  const std::string dir = argv[1];
  try {
    const auto s3 = parse_triangulation(
        "tetrahedra 2\n(0,0) -> (1,0) 0123\n(0,1) -> (1,1) 0123\n(0,2) -> (1,2) 0123\n(0,3) -> (1,3) 0123\n");
    std::map<std::string, std::string> wanted = {{"Z2", "rp3"}, {"Z3", "l31"}, {"Z4", "l41"}, {"Z", "s1xs2"}};
    std::map<std::string, Triangulation> found;
    std::optional<Triangulation> one_vertex_s3;
    auto all = census(2);
    for (auto& t : census(1)) all.push_back(std::move(t));
    for (const auto& t : all) {
      const std::string h = first_homology(t);
      if (wanted.count(h) && !found.count(wanted[h])) found.emplace(wanted[h], t);
      if (h == "0" && t.num_vertices() == 1 && !one_vertex_s3) one_vertex_s3 = t;
    }
    for (const auto& [h, name] : wanted)
      if (!found.count(name)) throw DomainError("no triangulation of at most two tetrahedra with H_1 = " + h);
    if (!one_vertex_s3) throw DomainError("no one-vertex two-tetrahedron sphere");
    const auto t3 = torus_6tet();
    if (first_homology(t3) != "Z^3") throw DomainError("cube quotient is not the 3-torus");

    const std::string tri = dir + "/triangulations/";
    write(tri + "s3_2tet.tri", serialize_triangulation(s3, "s3_2tet"));
    write(tri + "s3_5tet.tri", serialize_triangulation(pachner(s3, PachnerKind::OneFour, 0), "s3_5tet"));
    for (const auto& [name, t] : found) write(tri + name + ".tri", serialize_triangulation(t, name));
    write(tri + "t3_6tet.tri", serialize_triangulation(t3, "t3_6tet"));
    write(tri + "s3_1vertex.tri", serialize_triangulation(*one_vertex_s3, "s3_1vertex"));
    write(dir + "/skeletons/s3_spine.json", serialize_skeleton(dual_skeleton(*one_vertex_s3)));
    write_hqft(dir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
