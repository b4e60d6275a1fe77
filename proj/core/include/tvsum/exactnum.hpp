#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace tvsum {

using Rational = mpq_class;

enum class FieldKind { kRational, kCyclotomic, kAlgebraic };

// A number field Q[x]/(m(x)) with m monic. Cheap to copy; the defining data is
// shared and immutable.
class FieldSpec {
 public:
  FieldSpec();  // the rationals

  static FieldSpec rational();
  static FieldSpec cyclotomic(int n);
  // `minpoly` lists coefficients c0..cd with cd == 1. Built-in small
  // polynomials are checked for irreducibility; larger ones rely on the flag.
  static FieldSpec algebraic(std::vector<Rational> minpoly,
                             bool declared_irreducible = false);

  FieldKind kind() const { return data_->kind; }
  int degree() const { return static_cast<int>(data_->minpoly.size()) - 1; }
  int cyclotomic_index() const { return data_->n; }
  const std::vector<Rational>& minpoly() const { return data_->minpoly; }

  bool operator==(const FieldSpec& other) const;
  bool operator!=(const FieldSpec& other) const { return !(*this == other); }

  // {"cyclotomic": N} or {"minpoly": [c0, ..., 1]}
  std::string to_string() const;
  static FieldSpec parse(std::string_view text);

 private:
  struct Data {
    FieldKind kind = FieldKind::kRational;
    int n = 1;
    std::vector<Rational> minpoly;
  };
  explicit FieldSpec(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

// Exact element of a FieldSpec in the power basis, always kept reduced.
class FieldElement {
 public:
  FieldElement() = default;  // rational zero
  explicit FieldElement(const FieldSpec& field);
  FieldElement(const FieldSpec& field, const Rational& value);
  FieldElement(const FieldSpec& field, std::vector<Rational> coeffs);

  static FieldElement zero(const FieldSpec& f) { return FieldElement(f); }
  static FieldElement one(const FieldSpec& f) { return FieldElement(f, Rational(1)); }
  static FieldElement generator(const FieldSpec& f);

  const FieldSpec& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& b);
  FieldElement& operator-=(const FieldElement& b);
  FieldElement& operator*=(const FieldElement& b);
  FieldElement& operator/=(const FieldElement& b);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement inverse() const;
  FieldElement pow(long long k) const;

  bool operator==(const FieldElement& b) const;
  bool operator!=(const FieldElement& b) const { return !(*this == b); }

  // "[c0, c1, ...]" with reduced rationals.
  std::string to_string() const;
  static FieldElement parse(const FieldSpec& field, std::string_view text);
  double approx_real() const;  // debug only; evaluates at the real root when one is obvious

  std::size_t hash() const;

 private:
  void reduce();
  void require_same_field(const FieldElement& b) const;

  FieldSpec field_;
  std::vector<Rational> coeffs_{Rational(0)};
};

enum class ArithOp { kAdd, kSub, kMul, kDiv };
FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);

// zeta_N^k in a cyclotomic field of index N.
FieldElement root_of_unity(const FieldSpec& field, long long k);

// Phi_n as monic integer coefficient list c0..c_phi(n).
std::vector<Rational> cyclotomic_polynomial(int n);
int euler_phi(int n);

Rational parse_rational(std::string_view text);

}  // namespace tvsum
