#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "tvsum/complexes.hpp"
#include "tvsum/error.hpp"

namespace tvsum {

const int kEdgeVertices[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

int local_edge(int i, int j) {
  if (i > j) std::swap(i, j);
  static const int idx[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return idx[i][j];
}

int perm_sign(const std::array<int, 4>& p) {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

namespace {

std::string face_str(int t, int f) { return "(" + std::to_string(t) + "," + std::to_string(f) + ")"; }

bool is_perm(const std::array<int, 4>& p) {
  std::array<int, 4> seen{};
  for (int x : p) {
    if (x < 0 || x > 3 || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

}  // namespace

Triangulation Triangulation::from_gluings(std::vector<std::array<Gluing, 4>> gluings, int first_orientation) {
  Triangulation T;
  const int n = static_cast<int>(gluings.size());
  if (n == 0) throw ValidationError("triangulation has no tetrahedra");
  for (int t = 0; t < n; ++t)
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = gluings[t][f];
      if (!g.glued()) throw ValidationError("not closed: face " + face_str(t, f) + " is unglued");
      if (g.tet >= n || g.face < 0 || g.face > 3 || !is_perm(g.perm) || g.perm[f] != g.face)
        throw ValidationError("bad gluing at face " + face_str(t, f));
      if (g.tet == t && g.face == f) throw ValidationError("face " + face_str(t, f) + " is glued to itself");
      const Gluing& back = gluings[g.tet][g.face];
      bool inverse = back.tet == t && back.face == f;
      for (int i = 0; i < 4 && inverse; ++i) inverse = back.perm[g.perm[i]] == i;
      if (!inverse) throw ValidationError("gluing is not an involution at face " + face_str(t, f));
    }
  T.gluings_ = std::move(gluings);

  // orientation by propagation; also checks connectivity
  T.orientation_.assign(n, 0);
  T.orientation_[0] = first_orientation < 0 ? -1 : 1;
  std::vector<int> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    int t = queue[k];
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = T.gluings_[t][f];
      int want = -perm_sign(g.perm) * T.orientation_[t];
      if (T.orientation_[g.tet] == 0) {
        T.orientation_[g.tet] = want;
        queue.push_back(g.tet);
      } else if (T.orientation_[g.tet] != want) {
        throw ValidationError("unorientable: no consistent orientation across face " + face_str(t, f));
      }
    }
  }
  if (static_cast<int>(queue.size()) != n) throw ValidationError("triangulation is disconnected");

  // vertex classes
  T.vertex_class_.assign(n, {-1, -1, -1, -1});
  int nv = 0;
  for (int t = 0; t < n; ++t)
    for (int v = 0; v < 4; ++v) {
      if (T.vertex_class_[t][v] >= 0) continue;
      std::vector<std::pair<int, int>> q{{t, v}};
      T.vertex_class_[t][v] = nv;
      for (std::size_t k = 0; k < q.size(); ++k) {
        auto [a, x] = q[k];
        for (int f = 0; f < 4; ++f) {
          if (f == x) continue;
          const Gluing& g = T.gluings_[a][f];
          int y = g.perm[x];
          if (T.vertex_class_[g.tet][y] < 0) {
            T.vertex_class_[g.tet][y] = nv;
            q.emplace_back(g.tet, y);
          }
        }
      }
      ++nv;
    }
  T.num_vertices_ = nv;

  // edge classes with a consistent direction
  T.edge_class_.assign(n, {-1, -1, -1, -1, -1, -1});
  T.edge_dir_.assign(n, {0, 0, 0, 0, 0, 0});
  for (int t = 0; t < n; ++t)
    for (int le = 0; le < 6; ++le) {
      if (T.edge_class_[t][le] >= 0) continue;
      const int cls = static_cast<int>(T.edge_rep_.size());
      T.edge_rep_.push_back({t, kEdgeVertices[le][0], kEdgeVertices[le][1]});
      T.edge_class_[t][le] = cls;
      T.edge_dir_[t][le] = 1;
      std::vector<std::pair<int, int>> q{{t, le}};
      for (std::size_t k = 0; k < q.size(); ++k) {
        auto [a, e] = q[k];
        const int i = kEdgeVertices[e][0], j = kEdgeVertices[e][1];
        for (int f = 0; f < 4; ++f) {
          if (f == i || f == j) continue;
          const Gluing& g = T.gluings_[a][f];
          const int pi = g.perm[i], pj = g.perm[j];
          const int e2 = local_edge(pi, pj);
          const int dir = T.edge_dir_[a][e] * (pi < pj ? 1 : -1);
          if (T.edge_class_[g.tet][e2] < 0) {
            T.edge_class_[g.tet][e2] = cls;
            T.edge_dir_[g.tet][e2] = dir;
            q.emplace_back(g.tet, e2);
          } else if (T.edge_dir_[g.tet][e2] != dir) {
            throw ValidationError("an edge is identified with its own reverse");
          }
        }
      }
      T.edge_valence_.push_back(static_cast<int>(q.size()));
    }

  // triangle classes
  T.triangle_class_.assign(n, {-1, -1, -1, -1});
  for (int t = 0; t < n; ++t)
    for (int f = 0; f < 4; ++f) {
      if (T.triangle_class_[t][f] >= 0) continue;
      const int cls = static_cast<int>(T.triangle_rep_.size());
      T.triangle_rep_.emplace_back(t, f);
      T.triangle_class_[t][f] = cls;
      const Gluing& g = T.gluings_[t][f];
      T.triangle_class_[g.tet][g.face] = cls;
    }

  // every vertex link must be a 2-sphere
  std::vector<int> corners(nv, 0), ends(nv, 0);
  for (int t = 0; t < n; ++t)
    for (int v = 0; v < 4; ++v) ++corners[T.vertex_class_[t][v]];
  for (const auto& r : T.edge_rep_) {
    ++ends[T.vertex_class_[r.tet][r.from]];
    ++ends[T.vertex_class_[r.tet][r.to]];
  }
  for (int v = 0; v < nv; ++v)
    if (2 * ends[v] - corners[v] != 4)
      throw ValidationError("link of vertex class " + std::to_string(v) + " is not a 2-sphere");
  return T;
}

int Triangulation::edge_direction(int t, int i, int j) const {
  const int d = edge_dir_[t][local_edge(i, j)];
  return i < j ? d : -d;
}

std::vector<int> Triangulation::canonical_code() const {
  const int n = size();
  std::vector<int> best;
  for (int t0 = 0; t0 < n; ++t0) {
    std::array<int, 4> s0{0, 1, 2, 3};
    do {
      if (orientation_[t0] * perm_sign(s0) != 1) continue;
      std::vector<int> index(n, -1);
      std::vector<std::array<int, 4>> frame(n);  // new local i -> old local frame[i]
      std::vector<int> order{t0};
      index[t0] = 0;
      frame[t0] = s0;
      std::vector<int> code;
      code.reserve(static_cast<std::size_t>(n) * 24);
      bool abandon = false;
      for (std::size_t k = 0; k < order.size() && !abandon; ++k) {
        const int t = order[k];
        for (int f = 0; f < 4; ++f) {
          const Gluing& g = gluings_[t][frame[t][f]];
          if (index[g.tet] < 0) {
            index[g.tet] = static_cast<int>(order.size());
            order.push_back(g.tet);
            for (int i = 0; i < 4; ++i) frame[g.tet][i] = g.perm[frame[t][i]];
          }
          code.push_back(index[g.tet]);
          // perm in new frames: new i of t -> new j of partner
          std::array<int, 4> inv{};
          for (int i = 0; i < 4; ++i) inv[frame[g.tet][i]] = i;
          for (int i = 0; i < 4; ++i) code.push_back(inv[g.perm[frame[t][i]]]);
          if (!best.empty()) {
            // prune once the prefix is already larger
            const std::size_t m = code.size();
            if (std::lexicographical_compare(best.begin(), best.begin() + m, code.begin(), code.end())) {
              abandon = true;
              break;
            }
          }
        }
      }
      if (abandon) continue;
      if (best.empty() || code < best) best = std::move(code);
    } while (std::next_permutation(s0.begin(), s0.end()));
  }
  best.insert(best.begin(), n);
  return best;
}

bool isomorphic(const Triangulation& a, const Triangulation& b) {
  return a.size() == b.size() && a.num_edges() == b.num_edges() && a.num_vertices() == b.num_vertices() &&
         a.canonical_code() == b.canonical_code();
}

// ------------------------------------------------------------- IO

Triangulation parse_triangulation(const std::string& text) {
  static const std::regex kLine(R"(^\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*->\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*([0-3]{4})\s*$)");
  static const std::regex kCount(R"(^\s*tetrahedra\s+(\d+)\s*$)");
  std::istringstream in(text);
  std::string line;
  int n = -1, lineno = 0;
  std::vector<std::array<Gluing, 4>> gl;
  auto set = [&](int t, int f, const Gluing& g) {
    Gluing& slot = gl[t][f];
    if (slot.glued() && (slot.tet != g.tet || slot.face != g.face || slot.perm != g.perm))
      throw ValidationError("face " + face_str(t, f) + " is glued twice inconsistently");
    slot = g;
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::smatch m;
    if (std::regex_match(line, m, kCount)) {
      if (n >= 0) throw ValidationError("duplicate tetrahedra line");
      n = std::stoi(m[1]);
      gl.assign(n, {});
      continue;
    }
    if (!std::regex_match(line, m, kLine))
      throw ValidationError("line " + std::to_string(lineno) + ": expected \"(t,f) -> (t',f') perm\"");
    if (n < 0) throw ValidationError("the \"tetrahedra N\" line must come first");
    int t = std::stoi(m[1]), f = std::stoi(m[2]), t2 = std::stoi(m[3]), f2 = std::stoi(m[4]);
    if (t >= n || t2 >= n || f > 3 || f2 > 3)
      throw ValidationError("line " + std::to_string(lineno) + ": index out of range");
    Gluing g{t2, f2, {}};
    std::array<int, 4> inv{};
    const std::string p = m[5];
    for (int i = 0; i < 4; ++i) g.perm[i] = p[i] - '0';
    if (!is_perm(g.perm)) throw ValidationError("line " + std::to_string(lineno) + ": not a permutation");
    for (int i = 0; i < 4; ++i) inv[g.perm[i]] = i;
    set(t, f, g);
    set(t2, f2, Gluing{t, f, inv});
  }
  if (n < 0) throw ValidationError("missing \"tetrahedra N\" line");
  return Triangulation::from_gluings(std::move(gl));
}

Triangulation load_triangulation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read triangulation file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_triangulation(ss.str());
}

std::string serialize_triangulation(const Triangulation& t, const std::string& name) {
  std::ostringstream os;
  os << "# tvsum triangulation\n";
  if (!name.empty()) os << "# name: " << name << "\n";
  os << "# cells: tetrahedra " << t.size() << " triangles " << t.num_triangles() << " edges " << t.num_edges()
     << " vertices " << t.num_vertices() << "\n";
  os << "tetrahedra " << t.size() << "\n";
  for (int a = 0; a < t.size(); ++a)
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = t.gluing(a, f);
      if (g.tet < a || (g.tet == a && g.face < f)) continue;
      os << "(" << a << "," << f << ") -> (" << g.tet << "," << g.face << ") " << g.perm[0] << g.perm[1] << g.perm[2]
         << g.perm[3] << "\n";
    }
  return os.str();
}

}  // namespace tvsum
