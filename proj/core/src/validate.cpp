#include <sstream>

#include "tvsum/catdata.hpp"
#include "tvsum/error.hpp"
#include "tvsum/graphcalc.hpp"

namespace tvsum {

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const CheckResult* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::string tuple_str(std::initializer_list<int> v) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int x : v) {
    if (!first) os << ",";
    os << x;
    first = false;
  }
  os << ")";
  return os.str();
}

CheckResult check_pentagon(const GFusionData& d) {
  CheckResult r{"pentagon", true, ""};
  const int n = d.num_simples();
  long count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int dd = 0; dd < n; ++dd)
          for (int x : d.products(a, b))
            for (int y : d.products(x, c))
              for (int e : d.products(y, dd))
                for (int z : d.products(c, dd))
                  for (int w : d.products(b, z)) {
                    if (!d.N(a, w, e)) continue;
                    ++count;
                    FieldElement lhs = d.F(x, c, dd, e, y, z) * d.F(a, b, z, e, x, w);
                    FieldElement rhs = FieldElement::zero(d.field);
                    for (int u : d.products(b, c)) {
                      if (!d.N(a, u, y) || !d.N(u, dd, w)) continue;
                      rhs += d.F(a, b, c, y, x, u) * d.F(a, u, dd, e, y, w) * d.F(b, c, dd, w, u, z);
                    }
                    if (lhs != rhs) {
                      r.passed = false;
                      r.detail = "violated at (a,b,c,d,e;x,y,z,w) = " + tuple_str({a, b, c, dd, e, x, y, z, w}) +
                                 ": lhs " + lhs.to_string() + " rhs " + rhs.to_string();
                      return r;
                    }
                  }
  r.detail = std::to_string(count) + " admissible tuples";
  return r;
}

CheckResult check_unit(const GFusionData& d) {
  CheckResult r{"unit", true, ""};
  const int n = d.num_simples();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (a != d.unit && b != d.unit && c != d.unit) continue;
        for (int dd = 0; dd < n; ++dd) {
          const FBlock& B = d.block(a, b, c, dd);
          for (int e : B.es)
            for (int f : B.fs)
              if (!d.F(a, b, c, dd, e, f).is_one()) {
                r.passed = false;
                r.detail = "F" + tuple_str({a, b, c, dd, e, f}) + " = " + d.F(a, b, c, dd, e, f).to_string();
                return r;
              }
        }
      }
  return r;
}

CheckResult check_grading(const GFusionData& d) {
  CheckResult r{"grading", true, ""};
  const int n = d.num_simples();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c : d.products(a, b))
        if (d.group.mul(d.grade[a], d.grade[b]) != d.grade[c]) {
          r.passed = false;
          r.detail = "N" + tuple_str({a, b, c}) + " breaks the grading";
          return r;
        }
  return r;
}

CheckResult check_duals(const GFusionData& d) {
  CheckResult r{"duals", true, ""};
  for (int i = 0; i < d.num_simples(); ++i) {
    if (d.dual[d.dual[i]] != i || d.grade[d.dual[i]] != d.group.inv(d.grade[i])) {
      r.passed = false;
      r.detail = "simple " + d.labels[i];
      return r;
    }
  }
  return r;
}

CheckResult check_invertible(const GFusionData& d) {
  CheckResult r{"f_invertible", true, ""};
  const int n = d.num_simples();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int dd = 0; dd < n; ++dd) {
          const FBlock& B = d.block(a, b, c, dd);
          if ((!B.es.empty() || !B.fs.empty()) && !B.invertible) {
            r.passed = false;
            r.detail = "F block " + tuple_str({a, b, c, dd}) + " is singular";
            return r;
          }
        }
  return r;
}

CheckResult check_zigzag(const GFusionData& d) {
  CheckResult r{"zigzag", true, ""};
  for (int x = 0; x < d.num_simples(); ++x) {
    const int xs = d.dual[x];
    if (d.mu(x).is_zero()) {
      r.passed = false;
      r.detail = "F^{x x* x}_x[1,1] vanishes for " + d.labels[x];
      return r;
    }
    const FBlock& B = d.block(xs, x, xs, xs);
    int row = B.col_of(d.unit), col = B.row_of(d.unit);
    if (!B.invertible || row < 0 || col < 0 || !(d.mu(x) * B.Finv(row, col)).is_one()) {
      r.passed = false;
      r.detail = "second zigzag fails for " + d.labels[x];
      return r;
    }
  }
  return r;
}

// Full rotation of every admissible cyclic set of size <= 3 must be the identity.
CheckResult check_pivotal(const GFusionData& d) {
  CheckResult r{"pivotal", true, ""};
  const int n = d.num_simples();
  int tested = 0;
  for (int len = 1; len <= 3; ++len) {
    std::vector<int> idx(len, 0);
    const int combos = [&] {
      int c = 1;
      for (int i = 0; i < len; ++i) c *= 2 * n;
      return c;
    }();
    for (int k = 0; k < combos; ++k) {
      CyclicCSet set;
      int v = k;
      for (int i = 0; i < len; ++i) {
        int s = v % (2 * n);
        v /= 2 * n;
        set.push_back({s / 2, s % 2 ? -1 : 1});
      }
      if (hom_dim(d, set) == 0) continue;
      ++tested;
      Matrix m;
      try {
        m = rotation_matrix(d, set, len);
      } catch (const DomainError& e) {
        r.passed = false;
        r.detail = e.what();
        return r;
      }
      if (!m.is_identity()) {
        r.passed = false;
        std::ostringstream os;
        os << "full rotation is not the identity on [";
        for (std::size_t i = 0; i < set.size(); ++i) os << (i ? " " : "") << d.labels[set[i].color] << (set[i].sign > 0 ? "+" : "-");
        os << "]";
        r.detail = os.str();
        return r;
      }
    }
  }
  r.detail = std::to_string(tested) + " cyclic sets";
  return r;
}

}  // namespace

ValidationReport validate_category(const GFusionData& d) {
  ValidationReport rep;
  rep.checks.push_back(check_grading(d));
  rep.checks.push_back(check_duals(d));
  rep.checks.push_back(check_unit(d));
  rep.checks.push_back(check_invertible(d));
  rep.checks.push_back(check_pentagon(d));
  rep.checks.push_back(check_zigzag(d));
  const bool engine_ok = rep.ok();
  CheckResult piv{"pivotal", false, "skipped: earlier checks failed"};
  if (engine_ok) piv = check_pivotal(d);
  rep.checks.push_back(piv);

  CheckResult dims{"dims", true, ""}, sph{"spherical", true, ""};
  for (int x = 0; x < d.num_simples(); ++x) {
    if (d.mu(x).is_zero() || d.mu(d.dual[x]).is_zero()) {
      dims.passed = false;
      dims.detail = "cannot recompute dims for " + d.labels[x];
      break;
    }
    FieldElement dl = d.mu(x) / d.pivotal[x];
    FieldElement dr = d.pivotal[x] * d.mu(d.dual[x]);
    if (dl != d.dim_l[x] || dr != d.dim_r[x]) {
      dims.passed = false;
      dims.detail = d.labels[x] + ": recomputed " + dl.to_string() + ", " + dr.to_string();
      break;
    }
  }
  for (int x = 0; x < d.num_simples(); ++x)
    if (d.dim_l[x] != d.dim_r[x]) {
      sph.passed = false;
      sph.detail = d.labels[x] + ": dim_l " + d.dim_l[x].to_string() + " dim_r " + d.dim_r[x].to_string();
      break;
    }
  rep.checks.push_back(dims);
  rep.checks.push_back(sph);

  CheckResult sect{"sector_dimensions", true, ""};
  const FieldElement d1 = neutral_dimension(d);
  if (d1.is_zero()) {
    sect.passed = false;
    sect.detail = "neutral dimension vanishes";
  }
  for (int g = 0; g < d.group.order() && sect.passed; ++g) {
    FieldElement s = sector_dimension(d, g);
    if (s != d1) {
      sect.passed = false;
      sect.detail = "sector " + std::to_string(g) + " has " + s.to_string() + ", neutral " + d1.to_string();
    }
  }
  rep.checks.push_back(sect);
  return rep;
}

}  // namespace tvsum
