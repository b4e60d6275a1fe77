#include "tvsum/exactnum.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "tvsum/error.hpp"

namespace tvsum {
namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.empty()) p.push_back(Rational(0));
}

bool poly_is_zero(const Poly& p) { return p.size() == 1 && p[0] == 0; }

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// a = q*b + r
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  trim(r);
  int db = static_cast<int>(b.size()) - 1;
  int dr = static_cast<int>(r.size()) - 1;
  q.assign(std::max(dr - db + 1, 1), Rational(0));
  const Rational lead = b.back();
  while (!poly_is_zero(r) && dr >= db) {
    Rational coef = r.back() / lead;
    int shift = dr - db;
    q[shift] = coef;
    for (int i = 0; i <= db; ++i) r[shift + i] -= coef * b[i];
    r.pop_back();
    trim(r);
    dr = static_cast<int>(r.size()) - 1;
  }
  trim(q);
}

Poly poly_mod(const Poly& a, const Poly& m) {
  Poly q, r;
  poly_divmod(a, m, q, r);
  return r;
}

bool is_rational_square(const Rational& x) {
  if (x < 0) return false;
  mpz_class n = x.get_num(), d = x.get_den();
  return mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t());
}

bool has_rational_root(const Poly& p) {
  // Rational root theorem on the integer-scaled polynomial.
  mpz_class lcm = 1;
  for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : p) z.push_back(mpz_class(c * lcm));
  if (z[0] == 0) return true;
  auto divisors = [](mpz_class v) {
    std::vector<mpz_class> out;
    v = abs(v);
    for (mpz_class d = 1; d * d <= v; ++d) {
      if (v % d == 0) {
        out.push_back(d);
        out.push_back(v / d);
      }
    }
    return out;
  };
  for (const auto& num : divisors(z[0])) {
    for (const auto& den : divisors(z.back())) {
      for (int s : {1, -1}) {
        Rational x(num * s, den);
        x.canonicalize();
        Rational acc = 0;
        for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
        if (acc == 0) return true;
      }
    }
  }
  return false;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto b = s.find_first_not_of(" \t\r\n");
  auto e = s.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) throw ValidationError("empty rational literal");
  s = s.substr(b, e - b + 1);
  if (!s.empty() && s[0] == '+') s = s.substr(1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw ValidationError("malformed rational literal '" + s + "'");
  if (r.get_den() == 0) throw ValidationError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Rational> cyclotomic_polynomial(int n) {
  if (n < 1) throw ValidationError("cyclotomic index must be >= 1");
  Poly xn(n + 1, Rational(0));
  xn[0] = -1;
  xn[n] = 1;
  Poly acc = xn;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    Poly q, r;
    poly_divmod(acc, cyclotomic_polynomial(d), q, r);
    acc = q;
  }
  return acc;
}

// ---------------------------------------------------------------- FieldSpec

FieldSpec::FieldSpec() : FieldSpec(rational()) {}

FieldSpec FieldSpec::rational() {
  static const auto kQ = [] {
    auto d = std::make_shared<Data>();
    d->kind = FieldKind::kRational;
    d->n = 1;
    d->minpoly = {Rational(-1), Rational(1)};
    return std::shared_ptr<const Data>(d);
  }();
  return FieldSpec(kQ);
}

FieldSpec FieldSpec::cyclotomic(int n) {
  if (n < 1) throw ValidationError("cyclotomic index must be >= 1");
  // Phi_1 and Phi_2 are linear: the field is Q but the index is kept for zeta.
  auto d = std::make_shared<Data>();
  d->kind = FieldKind::kCyclotomic;
  d->n = n;
  d->minpoly = cyclotomic_polynomial(n);
  return FieldSpec(std::shared_ptr<const Data>(d));
}

FieldSpec FieldSpec::algebraic(std::vector<Rational> minpoly, bool declared_irreducible) {
  trim(minpoly);
  if (minpoly.size() < 2) throw ValidationError("minimal polynomial must have degree >= 1");
  if (minpoly.back() != 1) throw ValidationError("minimal polynomial must be monic");
  const int deg = static_cast<int>(minpoly.size()) - 1;
  if (deg == 2) {
    // x^2 + b x + c irreducible iff b^2 - 4c is not a rational square.
    Rational disc = minpoly[1] * minpoly[1] - 4 * minpoly[0];
    if (is_rational_square(disc)) throw ValidationError("minimal polynomial is reducible over Q");
  } else if (deg == 3) {
    if (has_rational_root(minpoly)) throw ValidationError("minimal polynomial is reducible over Q");
  } else if (deg > 3 && !declared_irreducible) {
    throw ValidationError("minimal polynomials of degree > 3 need the declared-irreducible flag");
  }
  auto d = std::make_shared<Data>();
  d->kind = deg == 1 ? FieldKind::kRational : FieldKind::kAlgebraic;
  d->n = 1;
  d->minpoly = std::move(minpoly);
  return FieldSpec(std::shared_ptr<const Data>(d));
}

bool FieldSpec::operator==(const FieldSpec& other) const {
  if (data_ == other.data_) return true;
  return data_->kind == other.data_->kind && data_->n == other.data_->n &&
         data_->minpoly == other.data_->minpoly;
}

std::string FieldSpec::to_string() const {
  if (kind() == FieldKind::kCyclotomic) return "{\"cyclotomic\": " + std::to_string(data_->n) + "}";
  if (kind() == FieldKind::kRational) return "{\"cyclotomic\": 1}";
  std::ostringstream os;
  os << "{\"minpoly\": [";
  for (std::size_t i = 0; i < data_->minpoly.size(); ++i) {
    if (i) os << ", ";
    os << data_->minpoly[i].get_str();
  }
  os << "]}";
  return os.str();
}

FieldSpec FieldSpec::parse(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("malformed field description: ") + e.what());
  }
  if (j.contains("cyclotomic")) {
    int n = j["cyclotomic"].get<int>();
    return n == 1 ? rational() : cyclotomic(n);
  }
  if (j.contains("rational")) return rational();
  if (j.contains("minpoly")) {
    std::vector<Rational> c;
    for (const auto& v : j["minpoly"]) {
      c.push_back(v.is_string() ? parse_rational(v.get<std::string>())
                                : parse_rational(v.dump()));
    }
    bool flag = j.value("irreducible", false);
    return algebraic(std::move(c), flag);
  }
  throw ValidationError("field description needs 'cyclotomic' or 'minpoly'");
}

// ------------------------------------------------------------- FieldElement

FieldElement::FieldElement(const FieldSpec& field)
    : field_(field), coeffs_(field.degree(), Rational(0)) {}

FieldElement::FieldElement(const FieldSpec& field, const Rational& value)
    : FieldElement(field) {
  coeffs_[0] = value;
}

FieldElement::FieldElement(const FieldSpec& field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  reduce();
}

FieldElement FieldElement::generator(const FieldSpec& f) {
  std::vector<Rational> c(2, Rational(0));
  c[1] = 1;
  return FieldElement(f, std::move(c));
}

void FieldElement::reduce() {
  const int d = field_.degree();
  Poly p = coeffs_;
  if (p.empty()) p.push_back(Rational(0));
  for (auto& c : p) c.canonicalize();
  if (static_cast<int>(p.size()) > d) p = poly_mod(p, field_.minpoly());
  p.resize(d, Rational(0));
  coeffs_ = std::move(p);
}

void FieldElement::require_same_field(const FieldElement& b) const {
  if (field_ != b.field_) {
    throw DomainError("field mismatch: " + field_.to_string() + " vs " + b.field_.to_string());
  }
}

bool FieldElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& b) {
  require_same_field(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& b) {
  require_same_field(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& b) {
  require_same_field(b);
  if (coeffs_.size() == 1) {
    coeffs_[0] *= b.coeffs_[0];
    return *this;
  }
  coeffs_ = poly_mul(coeffs_, b.coeffs_);
  reduce();
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("division by zero in number field");
  if (coeffs_.size() == 1) return FieldElement(field_, Rational(1) / coeffs_[0]);
  // Extended Euclid: s*a + t*m = 1.
  Poly r0 = field_.minpoly(), r1 = coeffs_;
  trim(r1);
  Poly s0{Rational(0)}, s1{Rational(1)};
  while (!poly_is_zero(r1)) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant because the minimal polynomial is irreducible.
  if (r0.size() != 1) throw DomainError("element not invertible: minimal polynomial is reducible");
  Rational c = r0[0];
  for (auto& x : s0) x /= c;
  return FieldElement(field_, s0);
}

FieldElement& FieldElement::operator/=(const FieldElement& b) {
  require_same_field(b);
  return *this *= b.inverse();
}

FieldElement FieldElement::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  FieldElement result = one(field_), base = *this;
  while (k) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

bool FieldElement::operator==(const FieldElement& b) const {
  return field_ == b.field_ && coeffs_ == b.coeffs_;
}

std::string FieldElement::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ", ";
    s += coeffs_[i].get_str();
  }
  return s + "]";
}

FieldElement FieldElement::parse(const FieldSpec& field, std::string_view text) {
  std::string s(text);
  auto b = s.find('[');
  auto e = s.rfind(']');
  std::vector<Rational> c;
  if (b == std::string::npos || e == std::string::npos || e < b) {
    c.push_back(parse_rational(s));  // bare rational shorthand
  } else {
    std::string body = s.substr(b + 1, e - b - 1);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.find_first_not_of(" \t") == std::string::npos) continue;
      c.push_back(parse_rational(tok));
    }
  }
  if (static_cast<int>(c.size()) > field.degree()) {
    throw ValidationError("element '" + s + "' has more coefficients than the field degree");
  }
  return FieldElement(field, std::move(c));
}

double FieldElement::approx_real() const {
  double x = 0;
  if (field_.kind() == FieldKind::kCyclotomic) {
    const double t = 2 * std::numbers::pi / field_.cyclotomic_index();
    std::complex<double> z(std::cos(t), std::sin(t)), acc(0), p(1);
    for (const auto& c : coeffs_) {
      acc += c.get_d() * p;
      p *= z;
    }
    return acc.real();
  }
  if (field_.degree() > 1) {
    // Largest real root of the minimal polynomial by bisection.
    const auto& m = field_.minpoly();
    double bound = 1;
    for (const auto& c : m) bound = std::max(bound, 1 + std::abs(c.get_d()));
    auto eval = [&](double v) {
      double a = 0;
      for (auto it = m.rbegin(); it != m.rend(); ++it) a = a * v + it->get_d();
      return a;
    };
    double hi = bound, lo = hi;
    const double step = bound / 4096;
    while (lo > -bound && (eval(lo) > 0) == (eval(hi) > 0)) lo -= step;
    for (int i = 0; i < 200; ++i) {
      double mid = (lo + hi) / 2;
      if ((eval(mid) > 0) == (eval(hi) > 0)) hi = mid; else lo = mid;
    }
    x = hi;
  }
  double acc = 0, p = 1;
  for (const auto& c : coeffs_) {
    acc += c.get_d() * p;
    p *= x;
  }
  return acc;
}

std::size_t FieldElement::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& c : coeffs_) {
    h ^= std::hash<std::string>{}(c.get_str()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return a + b;
    case ArithOp::kSub: return a - b;
    case ArithOp::kMul: return a * b;
    case ArithOp::kDiv: return a / b;
  }
  throw DomainError("unknown arithmetic op");
}

FieldElement root_of_unity(const FieldSpec& field, long long k) {
  if (field.kind() != FieldKind::kCyclotomic && !(field.kind() == FieldKind::kRational)) {
    throw DomainError("root_of_unity needs a cyclotomic field");
  }
  const int n = field.cyclotomic_index();
  long long e = ((k % n) + n) % n;
  if (field.degree() == 1) {
    // Q(zeta_1) = Q(zeta_2) = Q with zeta = 1 or -1.
    Rational z = (n == 2) ? Rational(-1) : Rational(1);
    Rational v = 1;
    for (long long i = 0; i < e; ++i) v *= z;
    return FieldElement(field, v);
  }
  std::vector<Rational> c(e + 1, Rational(0));
  c[e] = 1;
  return FieldElement(field, std::move(c));
}

}  // namespace tvsum
