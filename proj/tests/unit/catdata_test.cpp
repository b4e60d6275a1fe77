#include "doctest.h"

#include <random>

#include "tvsum/catdata.hpp"
#include "tvsum/error.hpp"

using namespace tvsum;

TEST_CASE("built-in categories validate") {
  for (const auto& name : builtin_category_names()) {
    CAPTURE(name);
    auto d = builtin_category(name);
    auto rep = validate_category(d);
    CHECK(rep.ok());
    for (int g = 0; g < d.group.order(); ++g) CHECK(sector_dimension(d, g) == neutral_dimension(d));
    for (int i = 0; i < d.num_simples(); ++i) {
      CHECK(d.dual[d.dual[i]] == i);
      CHECK(d.grade[d.dual[i]] == d.group.inv(d.grade[i]));
    }
  }
}

TEST_CASE("neutral dimensions") {
  CHECK(neutral_dimension(builtin_category("vect_Z3_theta1")).is_one());
  auto fib = build_fibonacci();
  auto phi = FieldElement::generator(fib.field);
  CHECK(neutral_dimension(fib) == FieldElement(fib.field, Rational(2)) + phi);
  auto is = build_ising_like();
  CHECK(neutral_dimension(is) == FieldElement(is.field, Rational(4)));
}

TEST_CASE("cocycle checks") {
  auto z2 = FiniteGroup::cyclic(2);
  auto th1 = CocycleTable::standard_cyclic(2, 1);
  CHECK(th1(1, 1, 1) == FieldElement(th1.field(), Rational(-1)));
  CHECK_FALSE(th1.cocycle_violation());
  CHECK(validate_category(build_vec_g_theta(z2, th1)).ok());

  auto f4 = FieldSpec::cyclotomic(4);
  std::vector<FieldElement> v(8, FieldElement::one(f4));
  v[7] = root_of_unity(f4, 1);
  CocycleTable bad(z2, f4, v);
  CHECK(bad.cocycle_violation().has_value());
  CHECK_THROWS_AS(build_vec_g_theta(z2, bad), ValidationError);
  for (int q = 0; q < 3; ++q) CHECK_FALSE(CocycleTable::standard_cyclic(3, q).cocycle_violation());
}

TEST_CASE("coboundary shift keeps validity") {
  auto th = CocycleTable::standard_cyclic(3, 1);
  std::vector<FieldElement> beta(9, FieldElement::one(th.field()));
  beta[1 * 3 + 2] = root_of_unity(th.field(), 1);
  beta[2 * 3 + 2] = root_of_unity(th.field(), 2);
  auto shifted = th.coboundary_shift(beta);
  CHECK_FALSE(shifted.cocycle_violation());
  CHECK(validate_category(build_vec_g_theta(FiniteGroup::cyclic(3), shifted)).ok());
}

TEST_CASE("corrupted Fibonacci data is detected") {
  std::mt19937 rng(11);
  auto base = build_fibonacci();
  std::vector<std::array<int, 6>> entries;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          for (int e = 0; e < 2; ++e)
            for (int f = 0; f < 2; ++f)
              if (base.has_F(a, b, c, d, e, f)) entries.push_back({a, b, c, d, e, f});
  for (int t = 0; t < 10; ++t) {
    auto d = base;
    auto k = entries[rng() % entries.size()];
    d.set_F(k[0], k[1], k[2], k[3], k[4], k[5], -d.F(k[0], k[1], k[2], k[3], k[4], k[5]));
    d.finalize();
    CHECK_FALSE(validate_category(d).ok());
  }
  auto d = base;
  d.set_F(1, 1, 1, 1, 1, 1, -d.F(1, 1, 1, 1, 1, 1));
  d.finalize();
  auto rep = validate_category(d);
  CHECK_FALSE(rep.find("pentagon")->passed);
  CHECK(rep.find("pentagon")->detail.find("violated at") != std::string::npos);
}

TEST_CASE("wrong pivotal coefficient is detected") {
  auto d = builtin_category("vect_Z3_theta1");
  d.pivotal[1] = d.pivotal[1] * root_of_unity(d.field, 1);
  d.finalize();
  CHECK_FALSE(validate_category(d).ok());
}

TEST_CASE("graduator") {
  auto fib = graduator(build_fibonacci());
  CHECK(fib.group.order() == 1);
  auto is = graduator(build_ising_like());
  CHECK(is.group.order() == 2);
  CHECK(is.grading[0] == is.grading[1]);
  CHECK(is.grading[0] != is.grading[2]);
  for (auto g : {FiniteGroup::cyclic(4), FiniteGroup::dihedral(3), FiniteGroup::dihedral(4),
                 FiniteGroup::cyclic(2)}) {
    auto d = build_vec_g_theta(g, CocycleTable::trivial(g, FieldSpec::rational()));
    auto gr = graduator(d);
    CHECK(find_isomorphism(gr.group, g).has_value());
  }
  CHECK_FALSE(find_isomorphism(FiniteGroup::cyclic(4), FiniteGroup::dihedral(2)).has_value());
  CHECK(find_isomorphism(FiniteGroup::dihedral(3), FiniteGroup::symmetric(3)).has_value());
}

TEST_CASE("push forward") {
  auto d = builtin_category("vect_Z4_theta1");
  auto z2 = FiniteGroup::cyclic(2);
  auto p = push_forward(d, z2, {0, 1, 0, 1});
  CHECK(p.sector(0).size() == 2);
  CHECK(neutral_dimension(p) == FieldElement(p.field, Rational(2)));
  CHECK(validate_category(p).ok());
  CHECK(p.dim_l == d.dim_l);
  auto id = push_forward(d, d.group, {0, 1, 2, 3});
  CHECK(serialize_category(id).substr(serialize_category(id).find("\"simples\"")) ==
        serialize_category(d).substr(serialize_category(d).find("\"simples\"")));
  CHECK_THROWS_AS(push_forward(d, z2, {0, 1, 1, 0}), ValidationError);
  CHECK_THROWS_AS(push_forward(d, FiniteGroup::cyclic(4), {0, 2, 0, 2}), ValidationError);
  auto fib = build_fibonacci();
  auto triv = push_forward(fib, FiniteGroup::trivial(), {0});
  CHECK(triv.sector(0).size() == 2);
}

TEST_CASE("category files round trip") {
  for (const auto& name : builtin_category_names()) {
    CAPTURE(name);
    auto d = builtin_category(name);
    auto text = serialize_category(d);
    auto back = parse_category(text);
    CHECK(serialize_category(back) == text);
    auto shipped = load_category(std::string(TVSUM_DATA_DIR) + "/categories/" + name + ".json");
    CHECK(serialize_category(shipped) == text);
  }
  CHECK_THROWS_AS(parse_category("{"), ValidationError);
  CHECK_THROWS_AS(load_category("/nonexistent.json"), IoError);
}

TEST_CASE("groups") {
  CHECK(FiniteGroup::symmetric(4).order() == 24);
  CHECK(FiniteGroup::dihedral(4).order() == 8);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {0, 1}}), ValidationError);
}
