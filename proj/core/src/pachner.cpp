#include <algorithm>
#include <map>
#include <set>

#include "tvsum/complexes.hpp"
#include "tvsum/error.hpp"

namespace tvsum {

namespace {

using Coord = std::array<long, 3>;
using Tuple = std::array<int, 4>;  // local vertex -> symbol

long det3(const Coord& a, const Coord& b, const Coord& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

int geometric_sign(const Tuple& t, const std::vector<Coord>& xyz) {
  Coord u, v, w;
  for (int k = 0; k < 3; ++k) {
    u[k] = xyz[t[1]][k] - xyz[t[0]][k];
    v[k] = xyz[t[2]][k] - xyz[t[0]][k];
    w[k] = xyz[t[3]][k] - xyz[t[0]][k];
  }
  long d = det3(u, v, w);
  if (d == 0) throw DomainError("degenerate tetrahedron in move template");
  return d > 0 ? 1 : -1;
}

std::set<int> face_symbols(const Tuple& t, int f) {
  std::set<int> s;
  for (int i = 0; i < 4; ++i)
    if (i != f) s.insert(t[i]);
  return s;
}

int local_of(const Tuple& t, int symbol) {
  for (int i = 0; i < 4; ++i)
    if (t[i] == symbol) return i;
  return -1;
}

// Replaces the tetrahedra `old` (with symbol frames) by tetrahedra `fresh`
// (symbol tuples). Coordinates fix the orientation of the new pieces.
Triangulation rebuild(const Triangulation& T, const std::vector<int>& old, const std::vector<Tuple>& frames,
                      const std::vector<Tuple>& fresh, const std::vector<Coord>& xyz) {
  const int n = T.size();
  std::vector<int> slot(n, -1);  // old tet -> position in `old`
  for (std::size_t k = 0; k < old.size(); ++k) {
    if (slot[old[k]] >= 0) throw DomainError("move needs distinct tetrahedra");
    slot[old[k]] = static_cast<int>(k);
  }
  int eps = 0;
  for (std::size_t k = 0; k < old.size(); ++k) {
    int e = T.orientation(old[k]) * geometric_sign(frames[k], xyz);
    if (eps == 0) eps = e;
    if (e != eps) throw DomainError("move is not applicable: local configuration is not embedded");
  }

  std::map<std::set<int>, int> old_count, new_count;
  for (const auto& fr : frames)
    for (int f = 0; f < 4; ++f) ++old_count[face_symbols(fr, f)];
  for (const auto& fr : fresh)
    for (int f = 0; f < 4; ++f) ++new_count[face_symbols(fr, f)];

  // interior faces of the old piece must be glued as the template says
  std::map<std::set<int>, std::pair<int, int>> new_face_of;  // boundary symbols -> (fresh index, face)
  for (std::size_t k = 0; k < fresh.size(); ++k)
    for (int f = 0; f < 4; ++f) {
      auto s = face_symbols(fresh[k], f);
      if (new_count[s] == 1) new_face_of[s] = {static_cast<int>(k), f};
    }
  for (std::size_t k = 0; k < old.size(); ++k)
    for (int f = 0; f < 4; ++f) {
      auto s = face_symbols(frames[k], f);
      const Gluing& g = T.gluing(old[k], f);
      if (old_count[s] == 2) {
        if (slot[g.tet] < 0) throw DomainError("move is not applicable: interior face leaves the piece");
        const Tuple& other = frames[slot[g.tet]];
        for (int i = 0; i < 4; ++i)
          if (i != f && other[g.perm[i]] != frames[k][i])
            throw DomainError("move is not applicable: interior gluing does not match");
      } else if (old_count[s] != 1 || !new_face_of.count(s)) {
        throw DomainError("move is not applicable: boundary mismatch");
      }
    }

  // new numbering: survivors keep their order, fresh tetrahedra follow
  std::vector<int> renum(n, -1);
  int m = 0;
  for (int t = 0; t < n; ++t)
    if (slot[t] < 0) renum[t] = m++;
  const int first_fresh = m;
  std::vector<std::array<Gluing, 4>> gl(m + fresh.size());
  for (int t = 0; t < n; ++t) {
    if (slot[t] >= 0) continue;
    for (int f = 0; f < 4; ++f) {
      Gluing g = T.gluing(t, f);
      if (slot[g.tet] >= 0) continue;  // filled from the fresh side
      g.tet = renum[g.tet];
      gl[renum[t]][f] = g;
    }
  }
  for (std::size_t k = 0; k < fresh.size(); ++k) {
    const int me = first_fresh + static_cast<int>(k);
    for (int f = 0; f < 4; ++f) {
      auto s = face_symbols(fresh[k], f);
      if (new_count[s] == 2) {
        for (std::size_t k2 = 0; k2 < fresh.size(); ++k2)
          for (int f2 = 0; f2 < 4; ++f2) {
            if ((k2 == k && f2 == f) || face_symbols(fresh[k2], f2) != s) continue;
            Gluing g{first_fresh + static_cast<int>(k2), f2, {}};
            for (int i = 0; i < 4; ++i) g.perm[i] = i == f ? f2 : local_of(fresh[k2], fresh[k][i]);
            gl[me][f] = g;
          }
        continue;
      }
      // boundary face: find the old face with these symbols
      int ko = -1, fo = -1;
      for (std::size_t a = 0; a < old.size() && ko < 0; ++a)
        for (int b = 0; b < 4; ++b)
          if (face_symbols(frames[a], b) == s) {
            ko = static_cast<int>(a);
            fo = b;
            break;
          }
      const Gluing& og = T.gluing(old[ko], fo);
      std::array<int, 4> to_old{};  // fresh local -> old local
      for (int i = 0; i < 4; ++i) {
        const int sym = fresh[k][i];
        to_old[i] = i == f ? fo : local_of(frames[ko], sym);
      }
      Gluing g;
      if (slot[og.tet] >= 0) {
        const Tuple& fr2 = frames[slot[og.tet]];
        auto s2 = face_symbols(fr2, og.face);
        auto [k2, f2] = new_face_of.at(s2);
        g.tet = first_fresh + k2;
        g.face = f2;
        for (int i = 0; i < 4; ++i) {
          const int o2 = og.perm[to_old[i]];
          g.perm[i] = o2 == og.face ? f2 : local_of(fresh[k2], fr2[o2]);
        }
      } else {
        g.tet = renum[og.tet];
        g.face = og.face;
        for (int i = 0; i < 4; ++i) g.perm[i] = og.perm[to_old[i]];
        Gluing back{me, f, {}};
        for (int i = 0; i < 4; ++i) back.perm[g.perm[i]] = i;
        gl[g.tet][g.face] = back;
      }
      gl[me][f] = g;
    }
  }
  int first_sign = first_fresh > 0 ? T.orientation(std::find(renum.begin(), renum.end(), 0) - renum.begin())
                                   : eps * geometric_sign(fresh[0], xyz);
  Triangulation out = Triangulation::from_gluings(std::move(gl), first_sign);
  for (std::size_t k = 0; k < fresh.size(); ++k)
    if (out.orientation(first_fresh + static_cast<int>(k)) != eps * geometric_sign(fresh[k], xyz))
      throw DomainError("orientation bookkeeping failed in Pachner move");
  return out;
}

// Symbols for 2-3 / 3-2: D, E on either side of the triangle X0 X1 X2.
enum { D = 0, E = 1, X0 = 2, X1 = 3, X2 = 4 };
const std::vector<Coord> kBipyramid = {{0, 0, 1}, {0, 0, -1}, {1, 0, 0}, {0, 1, 0}, {-1, -1, 0}};
// Symbols for 1-4 / 4-1: outer vertices 0..3 and the cone point 4.
const std::vector<Coord> kCone = {{0, 0, 0}, {4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {1, 1, 1}};

}  // namespace

PachnerKind parse_pachner_kind(const std::string& s) {
  if (s == "1-4") return PachnerKind::OneFour;
  if (s == "2-3") return PachnerKind::TwoThree;
  if (s == "3-2") return PachnerKind::ThreeTwo;
  if (s == "4-1") return PachnerKind::FourOne;
  throw ValidationError("unknown Pachner move " + s + " (use 1-4, 2-3, 3-2, 4-1)");
}

Triangulation pachner(const Triangulation& T, PachnerKind kind, int where) {
  switch (kind) {
    case PachnerKind::OneFour: {
      if (where < 0 || where >= T.size()) throw DomainError("no tetrahedron " + std::to_string(where));
      std::vector<Tuple> fresh;
      for (int k = 0; k < 4; ++k) {
        Tuple t{0, 1, 2, 3};
        t[k] = 4;
        fresh.push_back(t);
      }
      return rebuild(T, {where}, {Tuple{0, 1, 2, 3}}, fresh, kCone);
    }
    case PachnerKind::TwoThree: {
      if (where < 0 || where >= T.num_triangles()) throw DomainError("no triangle " + std::to_string(where));
      auto [t, f] = T.triangle_rep(where);
      const Gluing& g = T.gluing(t, f);
      if (g.tet == t) throw DomainError("2-3 needs two distinct tetrahedra on the triangle");
      Tuple a{}, b{};
      a[f] = D;
      b[g.face] = E;
      int x = X0;
      for (int i = 0; i < 4; ++i) {
        if (i == f) continue;
        a[i] = x;
        b[g.perm[i]] = x;
        ++x;
      }
      std::vector<Tuple> fresh = {{D, E, X1, X2}, {D, E, X2, X0}, {D, E, X0, X1}};
      return rebuild(T, {t, g.tet}, {a, b}, fresh, kBipyramid);
    }
    case PachnerKind::ThreeTwo: {
      if (where < 0 || where >= T.num_edges()) throw DomainError("no edge " + std::to_string(where));
      if (T.edge_valence(where) != 3) throw DomainError("3-2 needs an edge of valence 3");
      const auto& r = T.edge_rep(where);
      Tuple f0{};
      int k = -1, l = -1;
      for (int i = 0; i < 4; ++i)
        if (i != r.from && i != r.to) (k < 0 ? k : l) = i;
      f0[r.from] = D;
      f0[r.to] = E;
      f0[k] = X0;
      f0[l] = X1;
      const Gluing& g1 = T.gluing(r.tet, k);
      Tuple f1{};
      for (int i = 0; i < 4; ++i) f1[g1.perm[i]] = i == k ? X2 : f0[i];
      const int opp = local_of(f1, X1);
      const Gluing& g2 = T.gluing(g1.tet, opp);
      Tuple f2{};
      for (int i = 0; i < 4; ++i) f2[g2.perm[i]] = i == opp ? X0 : f1[i];
      std::vector<Tuple> fresh = {{D, X0, X1, X2}, {E, X0, X1, X2}};
      return rebuild(T, {r.tet, g1.tet, g2.tet}, {f0, f1, f2}, fresh, kBipyramid);
    }
    case PachnerKind::FourOne: {
      if (where < 0 || where >= T.num_vertices()) throw DomainError("no vertex " + std::to_string(where));
      std::vector<std::pair<int, int>> corners;
      for (int t = 0; t < T.size(); ++t)
        for (int v = 0; v < 4; ++v)
          if (T.vertex_class(t, v) == where) corners.emplace_back(t, v);
      if (corners.size() != 4) throw DomainError("4-1 needs a vertex in exactly four tetrahedra");
      auto [ta, x] = corners[0];
      std::vector<int> old{ta};
      Tuple fa{0, 1, 2, 3};
      fa[x] = 4;
      std::vector<Tuple> frames{fa};
      for (int m = 0; m < 4; ++m) {
        if (m == x) continue;
        const Gluing& g = T.gluing(ta, m);
        Tuple fr{};
        for (int i = 0; i < 4; ++i) fr[g.perm[i]] = i == x ? 4 : (i == m ? x : i);
        old.push_back(g.tet);
        frames.push_back(fr);
      }
      return rebuild(T, old, frames, {Tuple{0, 1, 2, 3}}, kCone);
    }
  }
  throw DomainError("unknown Pachner move");
}

}  // namespace tvsum
