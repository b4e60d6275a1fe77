#include <algorithm>
#include <functional>
#include <numeric>

#include "tvsum/catdata.hpp"
#include "tvsum/error.hpp"

namespace tvsum {

FiniteGroup::FiniteGroup() : table_{{0}}, inverse_{0}, identity_(0), name_("1") {}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw ValidationError("group table is empty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw ValidationError("group table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw ValidationError("group table entry out of range");
  }
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = table[i][j] == j && table[j][i] == j;
    if (ok) e = i;
  }
  if (e < 0) throw ValidationError("group table has no identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw ValidationError("group table is not associative at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
        }
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == e && table[b][a] == e) inv[a] = b;
    if (inv[a] < 0) throw ValidationError("element " + std::to_string(a) + " has no inverse");
  }
  FiniteGroup g;
  g.table_ = std::move(table);
  g.inverse_ = std::move(inv);
  g.identity_ = e;
  g.name_ = std::move(name);
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw ValidationError("cyclic group order must be >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return from_table(std::move(t), "Z" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw ValidationError("dihedral parameter must be >= 1");
  // r^k s^j has index k + n*j.
  const int m = 2 * n;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      int a = x % n, i = x / n, b = y % n, j = y / n;
      int k = ((a + (i ? -b : b)) % n + n) % n;
      t[x][y] = k + n * ((i + j) % 2);
    }
  return from_table(std::move(t), "D" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 4) throw ValidationError("symmetric groups are supported up to S4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[x][perms[y][i]];  // x after y
      t[x][y] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return from_table(std::move(t), "S" + std::to_string(n));
}

bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to, const std::vector<int>& phi) {
  if (static_cast<int>(phi.size()) != from.order()) return false;
  for (int v : phi)
    if (v < 0 || v >= to.order()) return false;
  for (int a = 0; a < from.order(); ++a)
    for (int b = 0; b < from.order(); ++b)
      if (phi[from.mul(a, b)] != to.mul(phi[a], phi[b])) return false;
  return true;
}

namespace {

int element_order(const FiniteGroup& g, int x) {
  int k = 1, y = x;
  while (y != g.identity()) {
    y = g.mul(y, x);
    ++k;
  }
  return k;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order();
  if (n != b.order()) return std::nullopt;
  // Greedy generating set of a.
  std::vector<int> gens;
  std::vector<char> in(n, 0);
  in[a.identity()] = 1;
  auto close = [&](std::vector<char>& s) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int x = 0; x < n; ++x)
        if (s[x])
          for (int y = 0; y < n; ++y)
            if (s[y] && !s[a.mul(x, y)]) s[a.mul(x, y)] = 1, grew = true;
    }
  };
  for (int x = 0; x < n; ++x)
    if (!in[x]) {
      gens.push_back(x);
      in[x] = 1;
      close(in);
    }
  std::vector<int> order_a(n), order_b(n);
  for (int x = 0; x < n; ++x) order_a[x] = element_order(a, x), order_b[x] = element_order(b, x);

  std::vector<int> img(gens.size());
  std::function<std::optional<std::vector<int>>(std::size_t)> rec =
      [&](std::size_t k) -> std::optional<std::vector<int>> {
    if (k == gens.size()) {
      std::vector<int> phi(n, -1);
      phi[a.identity()] = b.identity();
      std::vector<int> queue{a.identity()};
      for (std::size_t q = 0; q < queue.size(); ++q) {
        int x = queue[q];
        for (std::size_t g = 0; g < gens.size(); ++g) {
          int y = a.mul(x, gens[g]);
          int v = b.mul(phi[x], img[g]);
          if (phi[y] < 0) {
            phi[y] = v;
            queue.push_back(y);
          } else if (phi[y] != v) {
            return std::nullopt;
          }
        }
      }
      std::vector<int> sorted = phi;
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < n; ++i)
        if (sorted[i] != i) return std::nullopt;
      if (!is_homomorphism(a, b, phi)) return std::nullopt;
      return phi;
    }
    for (int y = 0; y < n; ++y) {
      if (order_b[y] != order_a[gens[k]]) continue;
      img[k] = y;
      if (auto r = rec(k + 1)) return r;
    }
    return std::nullopt;
  };
  return rec(0);
}

// ------------------------------------------------------------ CocycleTable

CocycleTable::CocycleTable(FiniteGroup group, FieldSpec field, std::vector<FieldElement> values)
    : group_(std::move(group)), field_(std::move(field)), values_(std::move(values)) {
  const std::size_t n = group_.order();
  if (values_.size() != n * n * n) throw ValidationError("cocycle table must have |G|^3 entries");
  for (const auto& v : values_) {
    if (v.field() != field_) throw ValidationError("cocycle value in the wrong field");
    if (v.is_zero()) throw ValidationError("cocycle values must be invertible");
  }
}

CocycleTable CocycleTable::trivial(const FiniteGroup& g, const FieldSpec& f) {
  const std::size_t n = g.order();
  return CocycleTable(g, f, std::vector<FieldElement>(n * n * n, FieldElement::one(f)));
}

CocycleTable CocycleTable::standard_cyclic(int n, int q) {
  FiniteGroup g = FiniteGroup::cyclic(n);
  FieldSpec f = FieldSpec::cyclotomic(n);
  std::vector<FieldElement> v;
  v.reserve(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) v.push_back(root_of_unity(f, static_cast<long long>(q) * a * ((b + c) / n)));
  return CocycleTable(std::move(g), std::move(f), std::move(v));
}

bool CocycleTable::is_normalized() const {
  const int n = group_.order(), e = group_.identity();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!(*this)(e, x, y).is_one() || !(*this)(x, e, y).is_one() || !(*this)(x, y, e).is_one()) return false;
  return true;
}

std::optional<std::array<int, 4>> CocycleTable::cocycle_violation() const {
  const int n = group_.order();
  const auto& G = group_;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          FieldElement lhs = (*this)(b, c, d) * (*this)(a, G.mul(b, c), d) * (*this)(a, b, c);
          FieldElement rhs = (*this)(G.mul(a, b), c, d) * (*this)(a, b, G.mul(c, d));
          if (lhs != rhs) return std::array<int, 4>{a, b, c, d};
        }
  return std::nullopt;
}

CocycleTable CocycleTable::coboundary_shift(const std::vector<FieldElement>& beta) const {
  const int n = group_.order();
  if (static_cast<int>(beta.size()) != n * n) throw ValidationError("2-cochain must have |G|^2 entries");
  auto B = [&](int x, int y) -> const FieldElement& { return beta[static_cast<std::size_t>(x) * n + y]; };
  std::vector<FieldElement> v = values_;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        FieldElement d = B(b, c) * B(a, group_.mul(b, c)) / (B(group_.mul(a, b), c) * B(a, b));
        v[(static_cast<std::size_t>(a) * n + b) * n + c] *= d;
      }
  return CocycleTable(group_, field_, std::move(v));
}

}  // namespace tvsum
