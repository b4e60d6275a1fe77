#include "tvsum/catdata.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "tvsum/error.hpp"

namespace tvsum {

int FBlock::row_of(int e) const {
  auto it = std::find(es.begin(), es.end(), e);
  return it == es.end() ? -1 : static_cast<int>(it - es.begin());
}

int FBlock::col_of(int f) const {
  auto it = std::find(fs.begin(), fs.end(), f);
  return it == fs.end() ? -1 : static_cast<int>(it - fs.begin());
}

void GFusionData::resize(int n) {
  n_ = n;
  labels.resize(n);
  grade.assign(n, group.identity());
  dual.assign(n, 0);
  pivotal.assign(n, FieldElement::one(field));
  dim_l.assign(n, FieldElement::one(field));
  dim_r.assign(n, FieldElement::one(field));
  fusion_.assign(static_cast<std::size_t>(n) * n * n, 0);
  fvals_.clear();
  products_.clear();
  blocks_.clear();
  mu_.clear();
}

const FieldElement& GFusionData::F(int a, int b, int c, int d, int e, int f) const {
  static thread_local std::vector<FieldElement> zeros;
  auto it = fvals_.find(key(a, b, c, d, e, f));
  if (it != fvals_.end()) return it->second;
  for (const auto& z : zeros)
    if (z.field() == field) return z;
  zeros.push_back(FieldElement::zero(field));
  return zeros.back();
}

void GFusionData::set_F(int a, int b, int c, int d, int e, int f, const FieldElement& v) {
  if (v.field() != field) throw ValidationError("F-symbol in the wrong field");
  fvals_[key(a, b, c, d, e, f)] = v;
}

bool GFusionData::has_F(int a, int b, int c, int d, int e, int f) const {
  return fvals_.count(key(a, b, c, d, e, f)) > 0;
}

const FBlock& GFusionData::block(int a, int b, int c, int d) const {
  static const FBlock kEmpty;
  auto it = blocks_.find(key(a, b, c, d));
  return it == blocks_.end() ? kEmpty : it->second;
}

std::vector<int> GFusionData::sector(int g) const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (grade[i] == g) out.push_back(i);
  return out;
}

void GFusionData::finalize() {
  const int n = n_;
  auto fail = [](const std::string& m) { throw ValidationError(m); };
  if (n == 0) fail("category has no simples");
  if (static_cast<int>(labels.size()) != n || static_cast<int>(grade.size()) != n ||
      static_cast<int>(dual.size()) != n || static_cast<int>(pivotal.size()) != n ||
      static_cast<int>(dim_l.size()) != n || static_cast<int>(dim_r.size()) != n) {
    fail("per-simple tables have inconsistent lengths");
  }
  if (unit < 0 || unit >= n) fail("unit index out of range");
  if (grade[unit] != group.identity()) fail("unit must have trivial grade");
  for (int i = 0; i < n; ++i) {
    if (grade[i] < 0 || grade[i] >= group.order()) fail("grade of simple " + labels[i] + " out of range");
    if (dual[i] < 0 || dual[i] >= n) fail("dual of simple " + labels[i] + " out of range");
    if (dim_l[i].is_zero() || dim_r[i].is_zero()) fail("dimension of simple " + labels[i] + " is not invertible");
    if (pivotal[i].is_zero()) fail("pivotal coefficient of " + labels[i] + " is zero");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int v = N(a, b, c);
        if (v > 1) fail("fusion multiplicities above 1 are not supported");
        if (v && group.mul(grade[a], grade[b]) != grade[c]) {
          fail("fusion " + labels[a] + "*" + labels[b] + "->" + labels[c] + " breaks the grading");
        }
      }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (N(unit, i, j) != (i == j) || N(i, unit, j) != (i == j)) fail("unit does not act as identity on " + labels[i]);
      if (N(i, j, unit) != (j == dual[i])) fail("duality is inconsistent for " + labels[i]);
    }
  }
  for (int g = 0; g < group.order(); ++g)
    if (sector(g).empty()) fail("grade sector " + std::to_string(g) + " is empty");

  products_.assign(static_cast<std::size_t>(n) * n, {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (N(a, b, c)) products_[idx2(a, b)].push_back(c);

  blocks_.clear();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          FBlock blk;
          for (int e : products(a, b))
            if (N(e, c, d)) blk.es.push_back(e);
          for (int f : products(b, c))
            if (N(a, f, d)) blk.fs.push_back(f);
          if (blk.es.empty() && blk.fs.empty()) continue;
          const int r = static_cast<int>(blk.es.size()), s = static_cast<int>(blk.fs.size());
          blk.F = Matrix(field, r, s);
          for (int i = 0; i < r; ++i)
            for (int j = 0; j < s; ++j) blk.F(i, j) = F(a, b, c, d, blk.es[i], blk.fs[j]);
          if (r == s) {
            if (auto inv = blk.F.inverse()) {
              blk.Finv = *inv;
              blk.invertible = true;
            }
          }
          blocks_.emplace(key(a, b, c, d), std::move(blk));
        }

  mu_.assign(n, FieldElement::zero(field));
  for (int x = 0; x < n; ++x) {
    const FieldElement& v = F(x, dual[x], x, x, unit, unit);
    if (!v.is_zero()) mu_[x] = v.inverse();
  }
}

FieldElement sector_dimension(const GFusionData& data, int g) {
  FieldElement s = FieldElement::zero(data.field);
  for (int i : data.sector(g)) s += data.dim_l[i] * data.dim_r[i];
  return s;
}

FieldElement neutral_dimension(const GFusionData& data) {
  return sector_dimension(data, data.group.identity());
}

// ------------------------------------------------------------ builders

GFusionData build_vec_g_theta(const FiniteGroup& group, const CocycleTable& theta) {
  if (!(theta.group() == group)) throw ValidationError("cocycle is defined on a different group");
  if (!theta.is_normalized()) throw ValidationError("cocycle is not normalized");
  if (auto q = theta.cocycle_violation()) {
    auto& v = *q;
    throw ValidationError("cocycle condition fails at (" + std::to_string(v[0]) + "," + std::to_string(v[1]) +
                          "," + std::to_string(v[2]) + "," + std::to_string(v[3]) + ")");
  }
  const int n = group.order();
  GFusionData d;
  d.field = theta.field();
  d.group = group;
  d.resize(n);
  d.unit = group.identity();
  for (int g = 0; g < n; ++g) {
    d.labels[g] = "g" + std::to_string(g);
    d.grade[g] = g;
    d.dual[g] = group.inv(g);
    for (int h = 0; h < n; ++h) d.set_N(g, h, group.mul(g, h), 1);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int ab = group.mul(a, b), bc = group.mul(b, c);
        d.set_F(a, b, c, group.mul(ab, c), ab, bc, theta(a, b, c));
      }
  // t_g = mu_g makes dim_l = 1; dim_r = mu_g mu_{g^-1} = 1 by the cocycle condition.
  for (int g = 0; g < n; ++g) {
    FieldElement mu = theta(g, group.inv(g), g).inverse();
    FieldElement mu_inv = theta(group.inv(g), g, group.inv(g)).inverse();
    d.pivotal[g] = mu;
    d.dim_l[g] = FieldElement::one(d.field);
    d.dim_r[g] = mu * mu_inv;
  }
  d.name = "vect_" + group.name();
  d.finalize();
  return d;
}

namespace {

// Sets every admissible F-symbol to 1; callers then override the nontrivial ones.
void fill_admissible_fsymbols(GFusionData& d) {
  const int n = d.num_simples();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        for (int e = 0; e < n; ++e) {
          if (!d.N(a, b, e)) continue;
          for (int dd = 0; dd < n; ++dd) {
            if (!d.N(e, c, dd)) continue;
            for (int f = 0; f < n; ++f)
              if (d.N(b, c, f) && d.N(a, f, dd)) d.set_F(a, b, c, dd, e, f, FieldElement::one(d.field));
          }
        }
      }
}

}  // namespace

GFusionData build_fibonacci() {
  GFusionData d;
  d.field = FieldSpec::algebraic({Rational(-1), Rational(-1), Rational(1)});
  d.group = FiniteGroup::trivial();
  d.resize(2);
  d.name = "fibonacci";
  d.labels = {"1", "tau"};
  d.unit = 0;
  d.dual = {0, 1};
  const int u = 0, t = 1;
  d.set_N(u, u, u, 1);
  d.set_N(u, t, t, 1);
  d.set_N(t, u, t, 1);
  d.set_N(t, t, u, 1);
  d.set_N(t, t, t, 1);
  fill_admissible_fsymbols(d);
  FieldElement one = FieldElement::one(d.field);
  FieldElement phi = FieldElement::generator(d.field);
  FieldElement phi_inv = phi.inverse();
  d.set_F(t, t, t, u, t, t, one);
  d.set_F(t, t, t, t, u, u, phi_inv);
  d.set_F(t, t, t, t, u, t, one);
  d.set_F(t, t, t, t, t, u, phi_inv);
  d.set_F(t, t, t, t, t, t, -phi_inv);
  d.pivotal = {one, one};
  d.dim_l = {one, phi};
  d.dim_r = {one, phi};
  d.finalize();
  return d;
}

GFusionData build_ising_like() {
  GFusionData d;
  d.field = FieldSpec::algebraic({Rational(-2), Rational(0), Rational(1)});
  d.group = FiniteGroup::trivial();
  d.resize(3);
  d.name = "ising_like";
  d.labels = {"1", "psi", "sigma"};
  d.unit = 0;
  d.dual = {0, 1, 2};
  const int u = 0, p = 1, s = 2;
  for (int x : {u, p, s}) {
    d.set_N(u, x, x, 1);
    d.set_N(x, u, x, 1);
  }
  d.set_N(p, p, u, 1);
  d.set_N(p, s, s, 1);
  d.set_N(s, p, s, 1);
  d.set_N(s, s, u, 1);
  d.set_N(s, s, p, 1);
  fill_admissible_fsymbols(d);
  FieldElement one = FieldElement::one(d.field);
  FieldElement r2 = FieldElement::generator(d.field);
  FieldElement h = r2.inverse();
  d.set_F(p, s, p, s, s, s, -one);
  d.set_F(s, p, s, p, s, s, -one);
  d.set_F(s, s, s, s, u, u, h);
  d.set_F(s, s, s, s, u, p, h);
  d.set_F(s, s, s, s, p, u, h);
  d.set_F(s, s, s, s, p, p, -h);
  d.pivotal = {one, one, one};
  d.dim_l = {one, one, r2};
  d.dim_r = {one, one, r2};
  d.finalize();
  return d;
}

GFusionData build_trivial() {
  GFusionData d;
  d.field = FieldSpec::rational();
  d.group = FiniteGroup::trivial();
  d.resize(1);
  d.name = "trivial";
  d.labels = {"1"};
  d.set_N(0, 0, 0, 1);
  fill_admissible_fsymbols(d);
  d.finalize();
  return d;
}

// ------------------------------------------------------------ graduator

Graduator graduator(const GFusionData& data) {
  const int n = data.num_simples();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  };
  // Summands of one product share a class; then close under congruence.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& p = data.products(a, b);
      for (std::size_t i = 1; i < p.size(); ++i) unite(p[0], p[i]);
    }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int a2 = 0; a2 < n; ++a2) {
        if (find(a) != find(a2)) continue;
        for (int b = 0; b < n; ++b) {
          const auto& p = data.products(a, b);
          const auto& q = data.products(a2, b);
          if (!p.empty() && !q.empty() && unite(p[0], q[0])) changed = true;
          const auto& r = data.products(b, a);
          const auto& s = data.products(b, a2);
          if (!r.empty() && !s.empty() && unite(r[0], s[0])) changed = true;
        }
      }
  }
  std::vector<int> cls(n, -1), reps;
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    auto it = std::find(reps.begin(), reps.end(), r);
    if (it == reps.end()) {
      reps.push_back(r);
      cls[i] = static_cast<int>(reps.size()) - 1;
    } else {
      cls[i] = static_cast<int>(it - reps.begin());
    }
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c : data.products(a, b)) {
        int& slot = table[cls[a]][cls[b]];
        if (slot >= 0 && slot != cls[c]) throw ValidationError("fusion table admits no universal grading");
        slot = cls[c];
      }
  for (const auto& row : table)
    for (int v : row)
      if (v < 0) throw ValidationError("fusion table admits no universal grading");
  return Graduator{FiniteGroup::from_table(std::move(table), "graduator"), std::move(cls)};
}

GFusionData push_forward(const GFusionData& data, const FiniteGroup& target, const std::vector<int>& phi) {
  if (!is_homomorphism(data.group, target, phi)) throw ValidationError("map is not a group homomorphism");
  std::vector<char> hit(target.order(), 0);
  for (int v : phi) hit[v] = 1;
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) throw ValidationError("homomorphism is not surjective");
  GFusionData out = data;
  out.group = target;
  for (auto& g : out.grade) g = phi[g];
  out.name = data.name + "_pushed";
  out.finalize();
  return out;
}

}  // namespace tvsum
