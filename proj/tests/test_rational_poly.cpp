#include <stdexcept>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "rbs/polynomial.hpp"
#include "rbs/rational.hpp"
#include "rbs/sturm.hpp"

using rbs::Integer;
using rbs::Rational;
using rbs::RationalPolynomial;
using rbs::SturmChain;

namespace {

RationalPolynomial poly(std::vector<Rational> ascending) {
  return RationalPolynomial(std::move(ascending));
}

}  // namespace

TEST_CASE("Rational canonicalizes on every construction path") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(3, -6).denominator() == 2);
  CHECK(Rational(3, -6).numerator() == -1);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(Integer(10), Integer(4)) == Rational(5, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("Rational string round trips") {
  CHECK(Rational::from_string("115/23") == Rational(5));
  CHECK(Rational::from_string("-3") == Rational(-3));
  CHECK(Rational::from_string("7/-2") == Rational(-7, 2));
  CHECK(Rational(-1, 2).to_string() == "-1/2");
  CHECK(Rational(0).to_string() == "0/1");
  CHECK(Rational(5).to_string() == "5/1");
  CHECK_THROWS_AS(Rational::from_string("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
}

TEST_CASE("Rational arithmetic is exact") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(Rational(-2, 3).abs() == Rational(2, 3));
  CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
  CHECK(Rational(0).pow(0) == Rational(1));
  CHECK(Rational(3, 7).reciprocal() == Rational(7, 3));
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::invalid_argument);
  CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(1, 3).sign() == 1);
  CHECK(Rational(-1, 3).sign() == -1);
  CHECK(Rational(0).is_zero());
  CHECK(Rational(4, 2).is_integer());
  CHECK_FALSE(Rational(1, 2).is_integer());
}

TEST_CASE("Integer combinatorics helpers") {
  CHECK(rbs::factorial(0) == 1);
  CHECK(rbs::factorial(5) == 120);
  CHECK(rbs::factorial(20) == Integer("2432902008176640000"));
  CHECK(rbs::binomial(6, 3) == 20);
  CHECK(rbs::binomial(58, 29) == Integer("30067266499541040"));
  CHECK(rbs::int_pow(Integer(2), 70) == Integer("1180591620717411303424"));
  CHECK(rbs::int_pow(Integer(0), 0) == 1);  // GMP convention, relied upon
}

TEST_CASE("Polynomial normalization, degree, and access") {
  const auto p = poly({Rational(1), Rational(2), Rational(0), Rational(0)});
  CHECK(p.degree() == 1);
  CHECK(p.coeff(0) == Rational(1));
  CHECK(p.coeff(1) == Rational(2));
  CHECK(p.coeff(5) == Rational(0));
  CHECK_THROWS_AS(p.coeff(-1), std::invalid_argument);

  const RationalPolynomial zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == 0);
  CHECK(poly({Rational(0), Rational(0)}).is_zero());
  CHECK(RationalPolynomial::constant(Rational(5)).degree() == 0);
  CHECK(RationalPolynomial::monomial(3, Rational(2)).coeff(3) == Rational(2));
  CHECK_THROWS_AS(RationalPolynomial::monomial(-1, Rational(1)),
                  std::invalid_argument);
}

TEST_CASE("Polynomial evaluation and formatting") {
  // (s+1)(s+2)(s+4) = s^3 + 7 s^2 + 14 s + 8
  const auto p = poly({Rational(8), Rational(14), Rational(7), Rational(1)});
  CHECK(p.eval(Rational(-1)) == Rational(0));
  CHECK(p.eval(Rational(1, 2)) == Rational(135, 8));
  CHECK(p.eval_double(0.5) == Catch::Approx(135.0 / 8.0).epsilon(1e-14));

  const auto q = poly({Rational(24, 23), Rational(0), Rational(-3, 23)});
  CHECK(q.to_string() == "(-3/23)*s^2 + (24/23)");
  CHECK(poly({Rational(0)}).to_string() == "(0/1)");
  CHECK(poly({Rational(2), Rational(1)}).to_string("x") == "(1/1)*x + (2/1)");
}

TEST_CASE("Polynomial calculus") {
  const auto p = poly({Rational(8), Rational(14), Rational(7), Rational(1)});
  CHECK(p.derivative() == poly({Rational(14), Rational(14), Rational(3)}));
  CHECK(RationalPolynomial::constant(Rational(3)).derivative().is_zero());
  CHECK(poly({Rational(0), Rational(2)}).antiderivative() ==
        poly({Rational(0), Rational(0), Rational(1)}));
  // Fundamental theorem round trip.
  CHECK(p.antiderivative().derivative() == p);
  CHECK(p.integral(Rational(0), Rational(1)) == Rational(211, 12));
  CHECK(p.integral(Rational(1), Rational(0)) == Rational(-211, 12));
}

TEST_CASE("Polynomial ring operations") {
  const auto a = poly({Rational(2), Rational(1)});   // s + 2
  const auto b = poly({Rational(-1), Rational(1)});  // s - 1
  CHECK(a + b == poly({Rational(1), Rational(2)}));
  CHECK(a - b == poly({Rational(3)}));
  CHECK(a * b == poly({Rational(-2), Rational(1), Rational(1)}));
  CHECK(Rational(1, 2) * a == poly({Rational(1), Rational(1, 2)}));
  // Cancellation down to a lower degree must renormalize.
  const auto s2 = poly({Rational(0), Rational(0), Rational(1)});
  CHECK((s2 + a - s2) == a);
  CHECK((a * RationalPolynomial()).is_zero());
}

TEST_CASE("divide_exact recovers factors and rejects remainders") {
  const auto a = poly({Rational(2), Rational(1)});
  const auto b = poly({Rational(-1), Rational(1)});
  const auto prod = a * b;
  CHECK(prod.divide_exact(a) == b);
  CHECK(prod.divide_exact(b) == a);
  CHECK_THROWS_AS(prod.divide_exact(poly({Rational(5), Rational(1)})),
                  std::invalid_argument);
  CHECK_THROWS_AS(a.divide_exact(RationalPolynomial()), std::invalid_argument);
  CHECK(RationalPolynomial().divide_exact(a).is_zero());
  // Rational leading coefficients divide exactly too.
  const auto half = Rational(1, 2) * a;
  CHECK(prod.divide_exact(half) == Rational(2) * b);
}

TEST_CASE("content_and_primitive splits scalar from integer part") {
  // (1/23)(23 s^2 + 130 s + 192)
  const auto p =
      poly({Rational(192, 23), Rational(130, 23), Rational(1)});
  const auto [content, prim] = p.content_and_primitive();
  CHECK(content == Rational(1, 23));
  REQUIRE(prim.size() == 3);
  CHECK(prim[0] == 192);
  CHECK(prim[1] == 130);
  CHECK(prim[2] == 23);

  const auto n = poly({Rational(-4), Rational(-6)});
  const auto [cn, pn] = n.content_and_primitive();
  CHECK(cn == Rational(2));
  CHECK(pn[0] == -2);
  CHECK(pn[1] == -3);

  CHECK(RationalPolynomial().content_and_primitive().second.empty());
}

TEST_CASE("poly_gcd and squarefree_part") {
  const auto s1 = poly({Rational(-1), Rational(1)});  // s - 1
  const auto s2 = poly({Rational(2), Rational(1)});   // s + 2
  const auto s3 = poly({Rational(3), Rational(1)});   // s + 3
  CHECK(poly_gcd(s1 * s1 * s2, s1 * s3) == s1);
  CHECK(poly_gcd(s1 * s2, s3) == poly({Rational(1)}));
  CHECK(poly_gcd(RationalPolynomial(), s2) == s2);
  CHECK(poly_gcd(RationalPolynomial(), RationalPolynomial()).is_zero());
  // Content is stripped: gcd of scalar multiples is primitive.
  CHECK(poly_gcd(Rational(3, 7) * s1, Rational(2) * s1) == s1);

  CHECK(rbs::squarefree_part(s1 * s1 * s2) == s1 * s2);
  CHECK(rbs::squarefree_part(s1 * s1 * s1) == s1);
  CHECK(rbs::squarefree_part(s1 * s2) == s1 * s2);
  // Leading sign is preserved.
  CHECK(rbs::squarefree_part(-(s1 * s1)) == -s1);
}

TEST_CASE("Sturm chain counts roots of linear and quadratic certificates") {
  // s + 2: one real root at -2.
  SturmChain lin(poly({Rational(2), Rational(1)}));
  CHECK(lin.input_degree() == 1);
  CHECK(lin.input_squarefree());
  CHECK(lin.count_real_roots() == 1);
  CHECK(lin.sign_at(Rational(-2)) == 0);
  CHECK(lin.sign_at(Rational(0)) == 1);
  CHECK(lin.sign_at(Rational(-3)) == -1);
  // Half-open convention (a, b]: the root counts at the right endpoint only.
  CHECK(lin.count_roots_in(Rational(-3), Rational(-2)) == 1);
  CHECK(lin.count_roots_in(Rational(-2), Rational(0)) == 0);

  // 23 s^2 + 130 s + 192: discriminant 130^2 - 4*23*192 = -764 < 0.
  SturmChain quad(poly({Rational(192), Rational(130), Rational(23)}));
  CHECK(quad.input_squarefree());
  CHECK(quad.count_real_roots() == 0);
  CHECK(quad.isolate_all().empty());
}

TEST_CASE("Sturm isolation separates the roots of a cubic") {
  // (s+1)(s+2)(s+4)
  const auto p = poly({Rational(8), Rational(14), Rational(7), Rational(1)});
  SturmChain chain(p);
  CHECK(chain.count_real_roots() == 3);
  const auto iso = chain.isolate_all();
  REQUIRE(iso.size() == 3);
  const Rational roots[3] = {Rational(-4), Rational(-2), Rational(-1)};
  for (size_t i = 0; i < 3; ++i) {
    const auto& iv = iso[i];
    CHECK(iv.lo <= roots[i]);
    CHECK(roots[i] <= iv.hi);
    if (!iv.is_point()) {
      // Exactly one root strictly inside, witnessed by a sign change.
      CHECK(chain.sign_at(iv.lo) * chain.sign_at(iv.hi) == -1);
      CHECK(chain.count_roots_in(iv.lo, iv.hi) == 1);
    } else {
      CHECK(chain.sign_at(iv.lo) == 0);
    }
    if (i > 0) CHECK(iso[i - 1].hi <= iv.lo);  // ascending, disjoint
  }
  // Roots strictly inside the strict root bound.
  const Rational bound = chain.root_bound();
  CHECK(bound > Rational(4));
  CHECK(chain.count_roots_in(-bound, bound) == 3);
}

TEST_CASE("Sturm handles repeated factors through the squarefree part") {
  const auto s1 = poly({Rational(-1), Rational(1)});
  const auto s2 = poly({Rational(2), Rational(1)});
  SturmChain chain(s1 * s1 * s2);
  CHECK(chain.input_degree() == 3);
  CHECK_FALSE(chain.input_squarefree());
  CHECK(chain.squarefree_degree() == 2);
  CHECK(chain.count_real_roots() == 2);  // distinct roots 1 and -2
  const auto iso = chain.isolate_all();
  REQUIRE(iso.size() == 2);
}

TEST_CASE("Sturm refine shrinks a bracket to the requested width") {
  const auto p = poly({Rational(8), Rational(14), Rational(7), Rational(1)});
  SturmChain chain(p);
  const Rational width(1, 1L << 20);
  const auto iv = chain.refine(Rational(-3, 2), Rational(-1, 2), width);
  CHECK(iv.hi - iv.lo <= width);
  CHECK(iv.lo <= Rational(-1));
  CHECK(Rational(-1) <= iv.hi);
  // Bisection may land on the root exactly; otherwise signs must straddle.
  if (!iv.is_point())
    CHECK(chain.sign_at(iv.lo) * chain.sign_at(iv.hi) == -1);
}

TEST_CASE("Sturm variations are monotone and bounded") {
  // Wilkinson-style stress: (s-1)(s-2)...(s-8) has 8 distinct roots.
  RationalPolynomial p = RationalPolynomial::constant(Rational(1));
  for (long k = 1; k <= 8; ++k)
    p = p * poly({Rational(-k), Rational(1)});
  SturmChain chain(p);
  CHECK(chain.count_real_roots() == 8);
  CHECK(chain.variations_neg_inf() - chain.variations_pos_inf() == 8);
  CHECK(chain.count_roots_in(Rational(0), Rational(4)) == 4);
  CHECK(chain.count_roots_in(Rational(4), Rational(8)) == 4);
  CHECK(chain.count_roots_in(Rational(1), Rational(2)) == 1);  // 2 in, 1 out
  const auto iso = chain.isolate_all();
  REQUIRE(iso.size() == 8);
  for (size_t i = 0; i < iso.size(); ++i) {
    const Rational root(static_cast<long>(i) + 1);
    CHECK(iso[i].lo <= root);
    CHECK(root <= iso[i].hi);
  }
}

TEST_CASE("Sturm rejects the zero polynomial") {
  CHECK_THROWS_AS(SturmChain(RationalPolynomial()), std::invalid_argument);
  CHECK_THROWS_AS(rbs::sturm_distinct_real_roots(RationalPolynomial()),
                  std::invalid_argument);
  // Nonzero constants have no roots.
  SturmChain c(RationalPolynomial::constant(Rational(7)));
  CHECK(c.count_real_roots() == 0);
}

TEST_CASE("sturm_distinct_real_roots convenience wrapper") {
  const auto p = poly({Rational(192), Rational(130), Rational(23)});
  const auto iso = rbs::sturm_distinct_real_roots(p);
  CHECK(iso.count == 0);
  CHECK(iso.squarefree);
  CHECK(iso.intervals.empty());

  const auto s1 = poly({Rational(-1), Rational(1)});
  const auto rep = rbs::sturm_distinct_real_roots(s1 * s1);
  CHECK(rep.count == 1);
  CHECK_FALSE(rep.squarefree);
  REQUIRE(rep.intervals.size() == 1);
  CHECK(rep.intervals[0].lo <= Rational(1));
  CHECK(Rational(1) <= rep.intervals[0].hi);
}
