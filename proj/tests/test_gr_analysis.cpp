#include <cmath>
#include <stdexcept>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "oracles.hpp"
#include "rbs/gr_analysis.hpp"

using rbs::GrVerdict;
using rbs::Rational;
using rbs::RationalPolynomial;

TEST_CASE("phi matches frozen exact values") {
  CHECK(rbs::phi(3, Rational(0)) == Rational(1, 2));
  CHECK(rbs::phi(3, Rational(1, 2)) == Rational(1, 2));
  CHECK(rbs::phi(3, Rational(-99, 100)) == Rational(1, 2));
  CHECK(rbs::phi(4, Rational(0)) == Rational(1, 2));
  CHECK(rbs::phi(4, Rational(1)) == Rational(1, 4));
  CHECK(rbs::phi(5, Rational(0)) == Rational(3, 8));
  CHECK(rbs::phi(5, Rational(1)) == Rational(1, 4));
  CHECK(rbs::phi(6, Rational(0)) == Rational(1, 3));
  CHECK(rbs::phi(6, Rational(1)) == Rational(23, 96));
  CHECK(rbs::phi(7, Rational(0)) == Rational(115, 384));
  CHECK(rbs::phi(7, Rational(1)) == Rational(11, 48));
  CHECK_THROWS_AS(rbs::phi(2, Rational(0)), std::invalid_argument);
}

TEST_CASE("phi is even with bounded support") {
  const Rational pts[] = {Rational(1, 8), Rational(1, 2), Rational(4, 5),
                          Rational(5, 4), Rational(7, 3), Rational(7, 2)};
  for (int n = 3; n <= 12; ++n) {
    const Rational span(n - 2);
    for (const auto& t : pts) {
      if (t >= span) continue;
      CHECK(rbs::phi(n, t) == rbs::phi(n, -t));
      if (t < span) CHECK(rbs::phi(n, t) >= Rational(0));
    }
    CHECK(rbs::phi(n, span + Rational(1, 2)) == Rational(0));
    CHECK(rbs::phi(n, -span - Rational(3)) == Rational(0));
  }
}

TEST_CASE("phi agrees with the uniform-sum oracle") {
  const Rational pts[] = {Rational(0),      Rational(1, 8),  Rational(1, 2),
                          Rational(7, 8),   Rational(1),     Rational(5, 4),
                          Rational(2),      Rational(7, 3),  Rational(3),
                          Rational(-1, 2),  Rational(-5, 4), Rational(-7, 2)};
  for (int n = 3; n <= 10; ++n) {
    const int m = n - 2;
    for (const auto& t : pts) {
      if (t.abs() >= Rational(m)) continue;
      if (m == 1 && t.abs() >= Rational(1)) continue;
      CHECK(rbs::phi(n, t) == oracle::uniform_sum_density(m, t));
    }
  }
}

TEST_CASE("phi_integral: closed values, normalization, convolution") {
  CHECK(rbs::phi_integral(3, Rational(0), Rational(1)) == Rational(1, 2));
  CHECK(rbs::phi_integral(5, Rational(0), Rational(2)) == Rational(23, 48));
  // Signed orientation.
  CHECK(rbs::phi_integral(5, Rational(2), Rational(0)) == Rational(-23, 48));

  for (int n = 3; n <= 24; ++n) {
    const Rational span(n - 2);
    CHECK(rbs::phi_integral(n, -span, span) == Rational(1));
    // Integrating past the support changes nothing.
    CHECK(rbs::phi_integral(n, -span - Rational(5), span + Rational(5)) ==
          Rational(1));
  }

  // One-step convolution: adding one more uniform averages over a width-2
  // window, phi(n+1, t) = (1/2) int_{t-1}^{t+1} phi(n, u) du.
  const Rational pts[] = {Rational(0), Rational(1, 3), Rational(1),
                          Rational(7, 5), Rational(2), Rational(-3, 4)};
  for (int n = 3; n <= 12; ++n)
    for (const auto& t : pts)
      CHECK(rbs::phi(n + 1, t) ==
            Rational(1, 2) *
                rbs::phi_integral(n, t - Rational(1), t + Rational(1)));
}

TEST_CASE("big_c normalizing constants") {
  CHECK(rbs::big_c(4) == Rational(1, 2));
  CHECK(rbs::big_c(5) == Rational(3, 23));
  CHECK(rbs::big_c(6) > Rational(0));
  CHECK_THROWS_AS(rbs::big_c(3), std::invalid_argument);
}

TEST_CASE("slice coordinate density: exact forms") {
  CHECK(rbs::pn_prime_poly(3) == RationalPolynomial::constant(Rational(1)));
  CHECK(rbs::pn_prime_poly(4) == RationalPolynomial::constant(Rational(1)));
  CHECK(rbs::pn_prime_poly(5) ==
        RationalPolynomial(
            {Rational(24, 23), Rational(0), Rational(-3, 23)}));
  CHECK(rbs::pn_prime_poly(6) ==
        RationalPolynomial(
            {Rational(23, 22), Rational(0), Rational(-3, 22)}));
  CHECK_THROWS_AS(rbs::pn_prime_poly(2), std::invalid_argument);
}

TEST_CASE("slice coordinate density: structural invariants") {
  for (int n = 3; n <= 40; ++n) {
    const auto p = rbs::pn_prime_poly(n);
    CHECK(p.degree() == 2 * ((n - 3) / 2));
    for (int i = 1; i <= p.degree(); i += 2) CHECK(p.coeff(i) == Rational(0));
    CHECK(p.integral(Rational(0), Rational(1)) == Rational(1));
  }
  // Nonnegative on a fine grid of the support (exact rational evaluation).
  for (int n = 3; n <= 24; ++n) {
    const auto p = rbs::pn_prime_poly(n);
    for (int k = 0; k <= 64; ++k)
      CHECK(p.eval(Rational(k, 64)) >= Rational(0));
  }
}

TEST_CASE("slice coordinate density matches Monte Carlo slice probabilities") {
  for (int n : {5, 6, 7, 8}) {
    const auto cdf = rbs::pn_prime_poly(n).antiderivative();
    for (int num = 1; num <= 3; ++num) {
      const Rational s(num, 4);
      const double exact = cdf.eval(s).to_double();
      const auto mc = oracle::slice_prob_abs_z2_leq(
          n, s.to_double(), 200000, 7000u + 10u * static_cast<unsigned>(n) +
                                        static_cast<unsigned>(num));
      CHECK(std::abs(exact - mc.p) <= 4.0 * mc.se + 1e-6);
    }
  }
}

TEST_CASE("build_B exact forms and monic invariant") {
  CHECK(rbs::build_B(3) == RationalPolynomial({Rational(2), Rational(1)}));
  CHECK(rbs::build_B(4) == RationalPolynomial({Rational(3), Rational(1)}));
  CHECK(rbs::build_B(5) ==
        RationalPolynomial(
            {Rational(192, 23), Rational(130, 23), Rational(1)}));
  CHECK(rbs::build_B(6) ==
        RationalPolynomial(
            {Rational(115, 11), Rational(72, 11), Rational(1)}));
  for (int n = 3; n <= 40; ++n) {
    const auto b = rbs::build_B(n);
    CHECK(b.degree() == (n - 3) / 2 + 1);
    CHECK(b.leading() == Rational(1));
  }
}

TEST_CASE("laplace_transfer reduced forms") {
  const auto t3 = rbs::laplace_transfer(3);
  CHECK(t3.num == RationalPolynomial::constant(Rational(3)));
  CHECK(t3.den == RationalPolynomial({Rational(2), Rational(1)}));

  const auto t4 = rbs::laplace_transfer(4);
  CHECK(t4.num == RationalPolynomial::constant(Rational(4)));
  CHECK(t4.den == RationalPolynomial({Rational(3), Rational(1)}));

  // 115 (s + 2) / (23 s^2 + 130 s + 192)
  const auto t5 = rbs::laplace_transfer(5);
  CHECK(t5.num == RationalPolynomial({Rational(230), Rational(115)}));
  CHECK(t5.den ==
        RationalPolynomial({Rational(192), Rational(130), Rational(23)}));

  const auto t6 = rbs::laplace_transfer(6);
  CHECK(t6.num == RationalPolynomial({Rational(132), Rational(66)}));
  CHECK(t6.den ==
        RationalPolynomial({Rational(115), Rational(72), Rational(11)}));
}

TEST_CASE("laplace_transfer invariants across n") {
  for (int n = 3; n <= 40; ++n) {
    const auto tf = rbs::laplace_transfer(n);
    CHECK(tf.den.degree() - tf.num.degree() == 1);
    // s * transfer(s) -> n as s -> infinity, i.e. q_n(0) = n.
    CHECK(tf.num.leading() == Rational(n) * tf.den.leading());
    // Denominator cleared to primitive integer form, positive leading.
    const auto [content, prim] = tf.den.content_and_primitive();
    CHECK(content == Rational(1));
    CHECK(tf.den.leading() > Rational(0));
    (void)prim;
  }
}

TEST_CASE("verify_no_gr_density: small-n classification") {
  const auto r3 = rbs::verify_no_gr_density(3);
  CHECK(r3.verdict == GrVerdict::density_exists_robson);
  CHECK(r3.reason.find("3 s^2") != std::string::npos);
  CHECK(r3.degree == 1);
  CHECK(r3.sign_at_minus2 == 0);  // B_3(-2) = 0

  const auto r4 = rbs::verify_no_gr_density(4);
  CHECK(r4.verdict == GrVerdict::density_exists_gerow);
  CHECK(r4.reason.find("4 s^3") != std::string::npos);
  CHECK(r4.sign_at_minus3 == 0);  // B_4(-3) = 0

  const auto r5 = rbs::verify_no_gr_density(5);
  CHECK(r5.verdict == GrVerdict::no_density_proven);
  CHECK(r5.degree == 2);
  CHECK(r5.distinct_real_root_count == 0);
  CHECK(r5.squarefree);
  CHECK(r5.sign_at_minus3 == 1);
  CHECK(r5.sign_at_minus2 == 1);
  CHECK_FALSE(r5.a0_interval.has_value());

  CHECK_THROWS_AS(rbs::verify_no_gr_density(2), std::invalid_argument);
}

TEST_CASE("verify_no_gr_density: n = 6 certificate") {
  const auto r = rbs::verify_no_gr_density(6);
  CHECK(r.verdict == GrVerdict::no_density_proven);
  CHECK(r.degree == 2);
  CHECK(r.distinct_real_root_count == 2);
  CHECK(r.squarefree);
  CHECK(r.sign_at_minus3 == -1);
  CHECK(r.sign_at_minus2 == 1);
  REQUIRE(r.a0_interval.has_value());
  const auto& iv = *r.a0_interval;
  CHECK(iv.hi - iv.lo <= Rational(1, 1L << 20));
  CHECK(Rational(-3) < iv.lo);
  CHECK(iv.hi < Rational(-2));
  // Largest root of 11 s^2 + 72 s + 115: (-36 + sqrt(31)) / 11.
  const double a0 = (-36.0 + std::sqrt(31.0)) / 11.0;
  CHECK(iv.lo.to_double() <= a0);
  CHECK(a0 <= iv.hi.to_double());
}

TEST_CASE("verify_no_gr_density: sweep stays proven") {
  for (int n = 6; n <= 20; ++n) {
    const auto r = rbs::verify_no_gr_density(n);
    CHECK(r.verdict == GrVerdict::no_density_proven);
    CHECK(r.squarefree);
    CHECK(r.distinct_real_root_count == r.degree);
    REQUIRE(r.a0_interval.has_value());
    CHECK(Rational(-3) < r.a0_interval->lo);
    CHECK(r.a0_interval->hi < Rational(-2));
  }
}

TEST_CASE("verdict names") {
  CHECK(std::string(rbs::verdict_name(GrVerdict::density_exists_robson)) ==
        "density_exists_robson");
  CHECK(std::string(rbs::verdict_name(GrVerdict::no_density_proven)) ==
        "no_density_proven");
  CHECK(std::string(rbs::verdict_name(GrVerdict::inconclusive)) ==
        "inconclusive");
}

TEST_CASE("closed_form_check covers the hand-solvable cases") {
  CHECK(rbs::closed_form_check(3));
  CHECK(rbs::closed_form_check(4));
  CHECK(rbs::closed_form_check(5));
  CHECK_THROWS_AS(rbs::closed_form_check(6), std::invalid_argument);
}

TEST_CASE("uniform-marginal residual: known laws balance, n = 5 cannot") {
  const auto g3 = rbs::DensitySpec::power(2.0);
  const auto g4 = rbs::DensitySpec::power(3.0);
  const auto g5 = rbs::DensitySpec::power(4.0);
  double max5 = 0.0;
  for (int k = 1; k <= 9; ++k) {
    const double t = k / 10.0;
    CHECK(std::abs(rbs::rbs_condition_residual(g3, 3, t)) < 1e-10);
    CHECK(std::abs(rbs::rbs_condition_residual(g4, 4, t)) < 1e-10);
    max5 = std::max(max5, std::abs(rbs::rbs_condition_residual(g5, 5, t)));
  }
  CHECK(max5 > 0.005);
  CHECK(rbs::rbs_condition_residual(g5, 5, 0.1) > 0.03);

  CHECK_THROWS_AS(rbs::rbs_condition_residual(g3, 3, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(rbs::rbs_condition_residual(g3, 3, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(rbs::rbs_condition_residual(g3, 2, 0.5),
                  std::invalid_argument);
}

TEST_CASE("gr_density_f point density") {
  const auto g3 = rbs::DensitySpec::power(2.0);
  const auto g4 = rbs::DensitySpec::power(3.0);
  // f(s) = s / (2 sqrt 3) for n = 3, s / 8 for n = 4.
  CHECK(rbs::gr_density_f(3, g3, 0.5) ==
        Catch::Approx(0.5 / (2.0 * std::sqrt(3.0))).epsilon(1e-12));
  CHECK(rbs::gr_density_f(4, g4, 0.5) == Catch::Approx(0.0625).epsilon(1e-12));
  CHECK(rbs::gr_density_f(4, g4, 1.0) == Catch::Approx(0.125).epsilon(1e-12));
  CHECK(rbs::gr_density_f(3, g3, 0.0) == 0.0);  // g vanishes at 0

  const auto flat = rbs::DensitySpec::polynomial({1.0});
  CHECK_THROWS_AS(rbs::gr_density_f(3, flat, 0.0), std::domain_error);
  CHECK(rbs::gr_density_f(3, flat, 0.5) > 0.0);
  CHECK_THROWS_AS(rbs::gr_density_f(3, g3, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(rbs::gr_density_f(3, g3, 1.1), std::invalid_argument);
  CHECK_THROWS_AS(rbs::gr_density_f(2, g3, 0.5), std::invalid_argument);
}

TEST_CASE("polytope volume factors") {
  CHECK(rbs::polytope_volume_factor(2) == Rational(2));
  CHECK(rbs::polytope_volume_factor(3) == Rational(3));
  CHECK(rbs::polytope_volume_factor(4) == Rational(16, 3));
  CHECK(rbs::polytope_volume(3) ==
        Catch::Approx(3.0 * std::sqrt(3.0)).epsilon(1e-14));
  CHECK(rbs::polytope_volume(4) ==
        Catch::Approx(32.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(rbs::polytope_volume_factor(1), std::invalid_argument);
}
