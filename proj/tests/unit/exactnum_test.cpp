#include "doctest.h"

#include <random>

#include "tvsum/error.hpp"
#include "tvsum/exactnum.hpp"

using namespace tvsum;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(4) == std::vector<Rational>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Rational>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12).size() == 5);
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("zeta4: (1+z)(1-z) = 2") {
  auto f = FieldSpec::cyclotomic(4);
  auto z = root_of_unity(f, 1);
  auto one = FieldElement::one(f);
  CHECK(((one + z) * (one - z)).to_string() == "[2, 0]");
}

TEST_CASE("zeta6 squared") {
  auto f = FieldSpec::cyclotomic(6);
  auto z = FieldElement::generator(f);
  CHECK(z * z == z - FieldElement::one(f));
}

TEST_CASE("1/zeta = zeta^(N-1)") {
  for (int n : {3, 4, 5, 8, 12}) {
    auto f = FieldSpec::cyclotomic(n);
    CHECK(root_of_unity(f, 1).inverse() == root_of_unity(f, n - 1));
    CHECK(root_of_unity(f, n).is_one());
  }
}

TEST_CASE("golden ratio field") {
  auto f = FieldSpec::algebraic({-1, -1, 1});
  auto phi = FieldElement::generator(f);
  CHECK(phi * phi == phi + FieldElement::one(f));
  CHECK(phi.inverse() == phi - FieldElement::one(f));
  CHECK(phi.approx_real() == doctest::Approx(1.6180339887));
  CHECK_THROWS_AS(FieldSpec::algebraic({-1, 0, 1}), ValidationError);
  CHECK_THROWS_AS(FieldSpec::algebraic({-1, 0, 0, 1}), ValidationError);
}

TEST_CASE("random inverses") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (auto f : {FieldSpec::cyclotomic(5), FieldSpec::cyclotomic(12),
                 FieldSpec::algebraic({-2, 0, 1})}) {
    for (int t = 0; t < 200; ++t) {
      std::vector<Rational> c;
      for (int i = 0; i < f.degree(); ++i) c.emplace_back(d(rng), 1 + (d(rng) + 9) % 5);
      FieldElement x(f, c);
      if (x.is_zero()) continue;
      CHECK((x * x.inverse()).is_one());
    }
  }
}

TEST_CASE("parse and print round trip") {
  auto f = FieldSpec::cyclotomic(3);
  auto x = FieldElement::parse(f, "[1/2, -3]");
  CHECK(x.to_string() == "[1/2, -3]");
  CHECK(FieldSpec::parse(f.to_string()) == f);
  auto g = FieldSpec::parse("{\"minpoly\": [-2, 0, 1]}");
  CHECK(g.degree() == 2);
  CHECK(FieldSpec::parse(g.to_string()) == g);
  CHECK_THROWS_AS(FieldElement::parse(f, "[1, 2, 3]"), ValidationError);
  CHECK_THROWS_AS(FieldElement::parse(f, "[1/0]"), ValidationError);
  CHECK_THROWS_AS(FieldElement::zero(f).inverse(), DomainError);
  CHECK_THROWS_AS(FieldElement::one(f) + FieldElement::one(g), DomainError);
}
