#include <random>

#include "ctow/coeff.hpp"
#include "doctest.h"

using namespace ctow;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int terms, int span) {
  std::uniform_int_distribution<int> ex(-span, span), co(-5, 5);
  std::vector<LaurentPoly::Term> t;
  for (int i = 0; i < terms; ++i) t.push_back({Exp{ex(rng), ex(rng), std::abs(ex(rng))}, co(rng)});
  return LaurentPoly::from_terms(t);
}

}  // namespace

TEST_CASE("laurent arithmetic basics") {
  LaurentPoly q = q_pow(1), qi = q_pow(-1);
  CHECK((q + qi) * (q - qi) == q_pow(2) - q_pow(-2));
  LaurentPoly x = q + z_pow(3);
  CHECK((x * LaurentPoly(0)).is_zero());
  CHECK((x * LaurentPoly(0)).terms().empty());
  CHECK((x - x).is_zero());
}

TEST_CASE("ring axioms on random triples and q=1 specialization") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly a = random_poly(rng, 4, 3), b = random_poly(rng, 4, 3), c = random_poly(rng, 3, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
  for (int i = 0; i < 100; ++i) {
    LaurentPoly a = random_poly(rng, 4, 3), b = random_poly(rng, 4, 3);
    std::array<long, kNumSyms> one{1, 1, 1};
    CHECK((a * b).eval_int(one) == a.eval_int(one) * b.eval_int(one));
    CHECK((a + b).eval_int(one) == a.eval_int(one) + b.eval_int(one));
  }
}

TEST_CASE("gcd and canonical rational functions") {
  LaurentPoly q = q_pow(1), z = z_pow(1);
  LaurentPoly a = (q + 1) * (z - q) * (q * z + 3);
  LaurentPoly b = (q + 1) * (z + 2) * (q * z + 3);
  CHECK(poly_gcd(a, b) == (q + 1) * (q * z + 3));
  RationalFunction f(a, b);
  CHECK(f.num() == z - q);
  CHECK(f.den() == z + 2);
  RationalFunction g(-(z - q) * q_pow(2), -(z + 2) * q_pow(5));
  CHECK(g == RationalFunction(z - q, z + 2) * RationalFunction(q_pow(-3)));
  CHECK(RationalFunction(LaurentPoly(2), LaurentPoly(4)) == RationalFunction(LaurentPoly(1), LaurentPoly(2)));
  CHECK(RationalFunction(LaurentPoly(3), LaurentPoly(-6)).den() == LaurentPoly(2));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    LaurentPoly a = random_poly(rng, 3, 2), b = random_poly(rng, 3, 2), c = random_poly(rng, 2, 2);
    if (b.is_zero() || c.is_zero()) continue;
    RationalFunction x(a, b), y(b, c), w(c + 1, a + 2);
    CHECK((x * y) * w == x * (y * w));
    CHECK(x * (y + w) == x * y + x * w);
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("specialization") {
  LaurentPoly q = q_pow(1), z = z_pow(1), d = delta_pow(1);
  std::map<int, RationalFunction> at_one{{SymQ, RationalFunction(1)}};
  CHECK(specialize(q - q_pow(-1), at_one).is_zero());
  std::map<int, RationalFunction> z_one{{SymZ, RationalFunction(1)}};
  CHECK(specialize(z_pow(-1) - z, z_one).is_zero());
  // The ground-ring relation vanishes after eliminating delta.
  LaurentPoly rel = z_pow(-1) - z - (q_pow(-1) - q) * (d - 1);
  CHECK(delta_eliminate(rel).is_zero());
  CHECK(delta_eliminate(d) == RationalFunction(z_pow(-1) - z, q_pow(-1) - q) + RationalFunction(1));
  CHECK(delta_eliminate(q + z) == RationalFunction(q + z));
  // Homomorphism on random pairs.
  std::mt19937 rng(3);
  std::map<int, RationalFunction> asg{{SymQ, RationalFunction(z + 1, z - 2)}};
  for (int i = 0; i < 20; ++i) {
    LaurentPoly a = random_poly(rng, 3, 2), b = random_poly(rng, 3, 2);
    CHECK(specialize(a * b, asg) == specialize(a, asg) * specialize(b, asg));
    CHECK(delta_eliminate(a * b) == delta_eliminate(a) * delta_eliminate(b));
  }
  CHECK_THROWS_AS(specialize(q_pow(-1), at_one = {{SymQ, RationalFunction(0)}}), DivisionError);
}

TEST_CASE("json round trip") {
  LaurentPoly p = q_pow(2) * 3 - z_pow(-1) * delta_pow(2) + 7;
  CHECK(LaurentPoly::from_json(p.to_json()) == p);
  RationalFunction f(p, q_pow(1) + 1);
  CHECK(RationalFunction::from_json(f.to_json()) == f);
  nlohmann::json bad = {{"vars", {"w"}}, {"terms", nlohmann::json::array()}};
  CHECK_THROWS_AS(LaurentPoly::from_json(bad), StructuralError);
}

TEST_CASE("gcd recovers planted common factors") {
  std::mt19937 rng(5);
  auto poly = [&](int terms) {
    std::uniform_int_distribution<int> ex(0, 3), co(-4, 4);
    std::vector<LaurentPoly::Term> t;
    for (int i = 0; i < terms; ++i) t.push_back({Exp{ex(rng), ex(rng), ex(rng)}, co(rng)});
    return LaurentPoly::from_terms(t);
  };
  for (int i = 0; i < 60; ++i) {
    LaurentPoly a = poly(3), b = poly(3), g = poly(2);
    if (a.is_zero() || b.is_zero() || g.is_zero()) continue;
    LaurentPoly h = poly_gcd(a * g, b * g);
    CHECK(divides(g, h));
    LaurentPoly x = exact_div(a * g, h), y = exact_div(b * g, h);
    CHECK(x.is_polynomial());
    CHECK(y.is_polynomial());
    CHECK(poly_gcd(x, y) == LaurentPoly(1));
  }
}
