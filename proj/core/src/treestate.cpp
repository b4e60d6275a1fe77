#include <algorithm>

#include "tvsum/error.hpp"
#include "tvsum/graphcalc.hpp"

namespace tvsum {

CyclicCSet rotated(const CyclicCSet& e, int steps) {
  const int n = static_cast<int>(e.size());
  CyclicCSet out(n);
  if (n == 0) return out;
  const int s = ((steps % n) + n) % n;
  for (int i = 0; i < n; ++i) out[i] = e[(i + s) % n];
  return out;
}

CyclicCSet opposite(const CyclicCSet& e) {
  const int n = static_cast<int>(e.size());
  CyclicCSet out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = e[(n - i) % n];
    out[i].sign = -out[i].sign;
  }
  return out;
}

namespace {

void check_colors(const GFusionData& d, const std::vector<SignedColor>& seq) {
  for (const auto& s : seq) {
    if (s.color < 0 || s.color >= d.num_simples()) throw ValidationError("unknown simple index " + std::to_string(s.color));
    if (s.sign != 1 && s.sign != -1) throw ValidationError("sign must be +1 or -1");
  }
}

void enumerate_chains(const GFusionData& d, const std::vector<int>& labels, std::vector<int>& chain,
                      std::vector<std::vector<int>>& out) {
  const std::size_t k = chain.size();  // next label index is k - 1
  if (k == labels.size() + 1) {
    if (chain.back() == d.unit) out.push_back(chain);
    return;
  }
  for (int a : d.products(chain.back(), labels[k - 1])) {
    chain.push_back(a);
    enumerate_chains(d, labels, chain, out);
    chain.pop_back();
  }
}

}  // namespace

int hom_dim(const GFusionData& data, const std::vector<SignedColor>& seq) {
  check_colors(data, seq);
  // Fold left through the fusion table, tracking multiplicity per simple.
  std::vector<long long> v(data.num_simples(), 0), w;
  v[data.unit] = 1;
  for (const auto& s : seq) {
    const int y = strand_label(data, s);
    w.assign(v.size(), 0);
    for (int a = 0; a < data.num_simples(); ++a)
      if (v[a])
        for (int b : data.products(a, y)) w[b] += v[a];
    v.swap(w);
  }
  return static_cast<int>(v[data.unit]);
}

int MultiplicityBasis::index_of(const std::vector<int>& chain) const {
  auto it = std::find(trees.begin(), trees.end(), chain);
  return it == trees.end() ? -1 : static_cast<int>(it - trees.begin());
}

MultiplicityBasis multiplicity_basis(const GFusionData& data, const CyclicCSet& set) {
  check_colors(data, set);
  MultiplicityBasis b;
  b.set = set;
  std::vector<int> labels;
  for (const auto& s : set) labels.push_back(strand_label(data, s));
  std::vector<int> chain{data.unit};
  enumerate_chains(data, labels, chain, b.trees);
  return b;
}

// ------------------------------------------------------------- TreeState

TreeState::TreeState(const GFusionData& data, std::vector<Strand> strands)
    : data_(&data), strands_(std::move(strands)) {}

TreeState TreeState::basis_vector(const GFusionData& data, std::vector<Strand> strands,
                                  const std::vector<int>& chain) {
  TreeState s(data, std::move(strands));
  if (chain.size() != s.strands_.size() + 1) throw DomainError("tree chain length does not match strands");
  s.terms_.emplace(chain, FieldElement::one(data.field));
  return s;
}

TreeState TreeState::empty_diagram(const GFusionData& data) {
  return basis_vector(data, {}, {data.unit});
}

int TreeState::label(int j) const {
  const auto& s = strands_[j];
  return s.sign > 0 ? s.color : data_->dual[s.color];
}

FieldElement TreeState::coefficient(const std::vector<int>& chain) const {
  auto it = terms_.find(chain);
  return it == terms_.end() ? FieldElement::zero(data_->field) : it->second;
}

FieldElement TreeState::scalar() const {
  if (!strands_.empty()) throw DomainError("state still has open strands");
  return coefficient({data_->unit});
}

void TreeState::scale(const FieldElement& s) {
  if (s.is_zero()) {
    terms_.clear();
    return;
  }
  for (auto& [k, v] : terms_) v *= s;
}

void TreeState::add(const std::vector<int>& chain, const FieldElement& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = terms_.emplace(chain, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TreeState::split(int j, const Strand& left, const Strand& right) {
  const int a = label(j);
  const int b = left.sign > 0 ? left.color : data_->dual[left.color];
  const int c = right.sign > 0 ? right.color : data_->dual[right.color];
  TreeState next(*data_, {});
  for (const auto& [ch, x] : terms_) {
    const FBlock& B = data_->block(ch[j], b, c, ch[j + 1]);
    const int col = B.col_of(a);
    if (col < 0) continue;
    if (!B.invertible) throw DomainError("singular F-matrix met while splitting a strand");
    for (std::size_t r = 0; r < B.es.size(); ++r) {
      const FieldElement& m = B.Finv(col, static_cast<int>(r));
      if (m.is_zero()) continue;
      std::vector<int> nc(ch.begin(), ch.begin() + j + 1);
      nc.push_back(B.es[r]);
      nc.insert(nc.end(), ch.begin() + j + 1, ch.end());
      next.add(nc, x * m);
    }
  }
  terms_ = std::move(next.terms_);
  strands_[j] = left;
  strands_.insert(strands_.begin() + j + 1, right);
}

void TreeState::fuse(int j, const Strand& merged) {
  const int b = label(j), c = label(j + 1);
  const int a = merged.sign > 0 ? merged.color : data_->dual[merged.color];
  TreeState next(*data_, {});
  for (const auto& [ch, x] : terms_) {
    const FBlock& B = data_->block(ch[j], b, c, ch[j + 2]);
    const int col = B.col_of(a), row = B.row_of(ch[j + 1]);
    if (col < 0 || row < 0) continue;
    const FieldElement& m = B.F(row, col);
    if (m.is_zero()) continue;
    std::vector<int> nc = ch;
    nc.erase(nc.begin() + j + 1);
    next.add(nc, x * m);
  }
  terms_ = std::move(next.terms_);
  strands_[j] = merged;
  strands_.erase(strands_.begin() + j + 1);
}

void TreeState::insert_unit(int j) {
  std::map<std::vector<int>, FieldElement> out;
  for (auto& [ch, x] : terms_) {
    std::vector<int> nc = ch;
    nc.insert(nc.begin() + j + 1, ch[j]);
    out.emplace(std::move(nc), x);
  }
  terms_ = std::move(out);
  strands_.insert(strands_.begin() + j, Strand{data_->unit, 1, -1});
}

void TreeState::remove_unit(int j) {
  if (label(j) != data_->unit) throw DomainError("removing a strand that is not the unit");
  std::map<std::vector<int>, FieldElement> out;
  for (auto& [ch, x] : terms_) {
    std::vector<int> nc = ch;
    nc.erase(nc.begin() + j + 1);
    out.emplace(std::move(nc), x);
  }
  terms_ = std::move(out);
  strands_.erase(strands_.begin() + j);
}

void TreeState::insert(int j, const TreeState& other) {
  const int m = other.size();
  if (m == 0) {
    scale(other.scalar());
    return;
  }
  TreeState acc(*data_, {});
  bool first = true;
  for (const auto& [bc, beta] : other.terms_) {
    TreeState t = *this;
    t.insert_unit(j);
    if (m == 1) {
      t.strands_[j] = other.strands_[0];
    }
    for (int k = m; k >= 2; --k) {
      Strand left = k - 1 == 1 ? other.strands_[0] : Strand{bc[k - 1], 1, -1};
      t.split(j, left, other.strands_[k - 1]);
    }
    t.scale(beta);
    if (first) {
      acc.strands_ = t.strands_;
      first = false;
    }
    for (const auto& [ch, x] : t.terms_) acc.add(ch, x);
  }
  if (first) {
    // other is zero: keep the shape, drop all terms
    acc.strands_ = strands_;
    acc.strands_.insert(acc.strands_.begin() + j, other.strands_.begin(), other.strands_.end());
  }
  *this = std::move(acc);
}

void TreeState::cap(int j) {
  const Strand s = strands_[j];
  const int x = s.color;
  if (label(j + 1) != data_->dual[label(j)]) throw DomainError("cap on strands that are not dual");
  fuse(j, Strand{data_->unit, 1, -1});
  remove_unit(j);
  if (s.sign < 0) {
    scale(data_->mu(x));  // lev_X on X* (x) X
  } else {
    scale(data_->pivotal[x] * data_->mu(data_->dual[x]));  // rev_X on X (x) X*
  }
}

void TreeState::rotate_once() {
  if (strands_.empty()) return;
  const Strand s0 = strands_[0];
  TreeState y = empty_diagram(*data_);
  y.insert_unit(0);
  if (s0.sign < 0) {
    y.split(0, Strand{s0.color, 1, -1}, s0);  // lcoev
  } else {
    y.split(0, Strand{s0.color, -1, -1}, s0);  // rcoev
    y.scale(data_->pivotal[s0.color].inverse());
  }
  y.insert(1, *this);
  y.cap(0);
  *this = std::move(y);
}

void TreeState::rotate(int steps) {
  for (int i = 0; i < steps; ++i) rotate_once();
}

// ------------------------------------------------------------ matrices

Matrix rotation_matrix(const GFusionData& data, const CyclicCSet& set, int steps) {
  if (steps < 0) throw DomainError("rotation steps must be non-negative");
  MultiplicityBasis in = multiplicity_basis(data, set);
  MultiplicityBasis out = multiplicity_basis(data, rotated(set, steps));
  Matrix m(data.field, out.size(), in.size());
  std::vector<TreeState::Strand> strands;
  for (std::size_t i = 0; i < set.size(); ++i) strands.push_back({set[i].color, set[i].sign, static_cast<int>(i)});
  for (int c = 0; c < in.size(); ++c) {
    TreeState s = TreeState::basis_vector(data, strands, in.trees[c]);
    s.rotate(steps);
    for (const auto& [ch, v] : s.terms()) {
      int r = out.index_of(ch);
      if (r < 0) throw DomainError("rotation left the admissible tree basis");
      m(r, c) = v;
    }
  }
  return m;
}

}  // namespace tvsum
