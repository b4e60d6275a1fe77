#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tvsum/exactnum.hpp"
#include "tvsum/linalg.hpp"

namespace tvsum {

class FiniteGroup {
 public:
  FiniteGroup();  // trivial group

  // Verifies closure, associativity, identity and inverses.
  static FiniteGroup from_table(std::vector<std::vector<int>> table, std::string name = "table");
  static FiniteGroup trivial() { return FiniteGroup(); }
  static FiniteGroup cyclic(int n);
  static FiniteGroup dihedral(int n);   // order 2n
  static FiniteGroup symmetric(int n);  // n <= 4

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::string& name() const { return name_; }

  bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
  std::string name_;
};

bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to, const std::vector<int>& phi);
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

// theta: G^3 -> k^*, stored densely.
class CocycleTable {
 public:
  CocycleTable(FiniteGroup group, FieldSpec field, std::vector<FieldElement> values);
  static CocycleTable trivial(const FiniteGroup& g, const FieldSpec& f);
  // theta_q(a,b,c) = zeta_n^(q a floor((b+c)/n)) over Q(zeta_n).
  static CocycleTable standard_cyclic(int n, int q);

  const FiniteGroup& group() const { return group_; }
  const FieldSpec& field() const { return field_; }
  const FieldElement& operator()(int a, int b, int c) const {
    const int n = group_.order();
    return values_[(static_cast<std::size_t>(a) * n + b) * n + c];
  }

  bool is_normalized() const;
  std::optional<std::array<int, 4>> cocycle_violation() const;
  // theta * d(beta), beta: G^2 -> k^* indexed a*n+b.
  CocycleTable coboundary_shift(const std::vector<FieldElement>& beta) const;

 private:
  FiniteGroup group_;
  FieldSpec field_;
  std::vector<FieldElement> values_;
};

// One associativity block F^{abc}_d: rows e in a(x)b with d in e(x)c, columns f in
// b(x)c with d in a(x)f. Left-combed trees expand as left_e = sum_f F[e,f] right_f.
struct FBlock {
  std::vector<int> es, fs;
  Matrix F;
  Matrix Finv;
  bool invertible = false;
  int row_of(int e) const;
  int col_of(int f) const;
};

// Skeletal, multiplicity-free spherical G-fusion category.
class GFusionData {
 public:
  std::string name;
  FieldSpec field;
  FiniteGroup group;
  std::vector<std::string> labels;
  std::vector<int> grade;
  std::vector<int> dual;
  int unit = 0;
  std::vector<FieldElement> pivotal;
  std::vector<FieldElement> dim_l;
  std::vector<FieldElement> dim_r;

  int num_simples() const { return static_cast<int>(labels.size()); }
  void resize(int n);

  int N(int a, int b, int c) const { return fusion_[idx3(a, b, c)]; }
  void set_N(int a, int b, int c, int v) { fusion_[idx3(a, b, c)] = static_cast<unsigned char>(v); }
  // Simples c with N(a,b,c) > 0.
  const std::vector<int>& products(int a, int b) const { return products_[idx2(a, b)]; }

  const FieldElement& F(int a, int b, int c, int d, int e, int f) const;
  void set_F(int a, int b, int c, int d, int e, int f, const FieldElement& v);
  bool has_F(int a, int b, int c, int d, int e, int f) const;
  const FBlock& block(int a, int b, int c, int d) const;

  // 1 / F^{x x* x}_x[1,1]; the lev normalization.
  const FieldElement& mu(int x) const { return mu_[x]; }

  // Rebuilds product lists, F blocks and mu. Throws ValidationError on violated
  // structural invariants (grading, unit, duals, multiplicities, dims).
  void finalize();
  bool finalized() const { return !products_.empty(); }

  std::vector<int> sector(int g) const;

 private:
  std::size_t idx2(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }
  std::size_t idx3(int a, int b, int c) const { return idx2(a, b) * n_ + c; }
  static std::uint64_t key(int a, int b, int c, int d, int e = 0, int f = 0) {
    auto k = [](int v) { return static_cast<std::uint64_t>(v); };
    return k(a) | k(b) << 10 | k(c) << 20 | k(d) << 30 | k(e) << 40 | k(f) << 50;
  }

  int n_ = 0;
  std::vector<unsigned char> fusion_;
  std::unordered_map<std::uint64_t, FieldElement> fvals_;
  std::vector<std::vector<int>> products_;
  std::unordered_map<std::uint64_t, FBlock> blocks_;
  std::vector<FieldElement> mu_;
};

GFusionData build_vec_g_theta(const FiniteGroup& group, const CocycleTable& theta);
GFusionData build_fibonacci();
GFusionData build_ising_like();
GFusionData build_trivial();  // one simple, trivial group

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  const CheckResult* find(const std::string& name) const;
};

ValidationReport validate_category(const GFusionData& data);

// sum over the neutral sector of dim_l * dim_r.
FieldElement neutral_dimension(const GFusionData& data);
// sum over sector g of dim_l * dim_r.
FieldElement sector_dimension(const GFusionData& data, int g);

struct Graduator {
  FiniteGroup group;
  std::vector<int> grading;  // simple -> class
};
Graduator graduator(const GFusionData& data);

// phi: data.group -> target, given on elements.
GFusionData push_forward(const GFusionData& data, const FiniteGroup& target, const std::vector<int>& phi);

// Category files (JSON).
GFusionData parse_category(const std::string& text);
GFusionData load_category(const std::string& path);
std::string serialize_category(const GFusionData& data);

// Looks up a shipped category by name ("fibonacci", "vect_Z3_theta1", ...).
GFusionData builtin_category(const std::string& name);
std::vector<std::string> builtin_category_names();

}  // namespace tvsum
