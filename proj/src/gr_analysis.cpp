#include "rbs/gr_analysis.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace rbs {

namespace {

// (u)_+^e with the boundary convention (0)_+^0 = 1, which keeps the n = 3
// piecewise-constant density even at its breakpoints.
Rational pos_pow(const Rational& u, unsigned long e) {
  if (e == 0) return u.sign() >= 0 ? Rational(1) : Rational(0);
  if (u.sign() <= 0) return Rational(0);
  return u.pow(e);
}

void require_n(int n, int min, const char* fn) {
  if (n < min)
    throw std::invalid_argument(std::string(fn) + ": n must be >= " +
                                std::to_string(min));
}

// 1 / ((n-3)! 2^(n-1) phi(n+1, 1)); defined for n >= 3.
Rational slice_constant(int n) {
  const Rational denom = Rational(factorial(static_cast<unsigned long>(n - 3))) *
                         Rational(int_pow(2, static_cast<unsigned long>(n - 1))) *
                         phi(n + 1, Rational(1));
  return denom.reciprocal();
}

}  // namespace

Rational phi(int n, const Rational& t) {
  require_n(n, 3, "phi");
  const auto terms = static_cast<unsigned long>(n - 2);
  Rational acc(0);
  for (unsigned long k = 0; k <= terms; ++k) {
    const Rational arg = t + Rational(static_cast<long>(terms) -
                                      2 * static_cast<long>(k));
    Rational term = Rational(binomial(terms, k)) *
                    pos_pow(arg, static_cast<unsigned long>(n - 3));
    if (k % 2 == 1) term = -term;
    acc += term;
  }
  const Rational scale =
      Rational(factorial(static_cast<unsigned long>(n - 3))) *
      Rational(int_pow(2, static_cast<unsigned long>(n - 2)));
  return acc / scale;
}

Rational phi_integral(int n, const Rational& a, const Rational& b) {
  require_n(n, 3, "phi_integral");
  const auto terms = static_cast<unsigned long>(n - 2);
  // Antiderivative of each kernel piece: (u)_+^(n-3) integrates to
  // (u)_+^(n-2) / (n-2), continuous, so the convention at u = 0 drops out.
  const auto piece = [&](const Rational& t) {
    Rational acc(0);
    for (unsigned long k = 0; k <= terms; ++k) {
      const Rational arg = t + Rational(static_cast<long>(terms) -
                                        2 * static_cast<long>(k));
      Rational term = Rational(binomial(terms, k)) *
                      pos_pow(arg, static_cast<unsigned long>(n - 2));
      if (k % 2 == 1) term = -term;
      acc += term;
    }
    return acc;
  };
  const Rational scale =
      Rational(factorial(static_cast<unsigned long>(n - 3))) *
      Rational(int_pow(2, static_cast<unsigned long>(n - 2))) *
      Rational(static_cast<long>(n - 2));
  return (piece(b) - piece(a)) / scale;
}

Rational big_c(int n) {
  require_n(n, 4, "big_c");
  return slice_constant(n);
}

RationalPolynomial pn_prime_poly(int n) {
  require_n(n, 3, "pn_prime_poly");
  const auto e = static_cast<unsigned long>(n - 3);  // kernel exponent
  std::vector<Rational> coeffs(e + 1, Rational(0));
  for (long k = 0; k <= n - 2; ++k) {
    const long c = n - 1 - 2 * k;
    Rational sign(k % 2 == 0 ? 1 : -1);
    const Rational weight =
        sign * Rational(binomial(static_cast<unsigned long>(n - 2),
                                 static_cast<unsigned long>(k)));
    // On s in [0, 1]: (c + s)_+^e is the full binomial expansion iff c >= 0,
    // and (c - s)_+^e iff c >= 1; both vanish identically otherwise.
    if (c >= 0) {
      for (unsigned long i = 0; i <= e; ++i)
        coeffs[i] += weight * Rational(binomial(e, i)) *
                     Rational(int_pow(Integer(c), e - i));
    }
    if (c >= 1) {
      for (unsigned long i = 0; i <= e; ++i) {
        Rational term = weight * Rational(binomial(e, i)) *
                        Rational(int_pow(Integer(c), e - i));
        if (i % 2 == 1) term = -term;
        coeffs[i] += term;
      }
    }
  }
  const Rational c_factor = slice_constant(n);
  for (auto& v : coeffs) v *= c_factor;
  // The two expansions cancel in odd degrees; anything left is a bug.
  for (unsigned long i = 1; i <= e; i += 2)
    if (!coeffs[i].is_zero())
      throw std::logic_error("pn_prime_poly: odd-degree coefficient survived");
  return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial build_B(int n) {
  require_n(n, 3, "build_B");
  const int alpha = (n - 3) / 2;
  const RationalPolynomial p = pn_prime_poly(n);
  RationalPolynomial full = RationalPolynomial::constant(Rational(1));
  for (int j = 0; j <= alpha; ++j)
    full = full * RationalPolynomial({Rational(2 * j), Rational(1)});
  RationalPolynomial acc = full;
  for (int j = 0; j <= alpha; ++j) {
    const Rational gamma = p.coeff(2 * j);
    if (gamma.is_zero()) continue;
    RationalPolynomial partial = RationalPolynomial::constant(
        gamma * Rational(static_cast<long>(n - 1)));
    for (int i = 0; i <= alpha; ++i) {
      if (i == j) continue;
      partial = partial * RationalPolynomial({Rational(2 * i), Rational(1)});
    }
    acc = acc + partial;
  }
  return acc;
}

RationalFunction laplace_transfer(int n) {
  require_n(n, 3, "laplace_transfer");
  const int alpha = (n - 3) / 2;
  RationalPolynomial num =
      RationalPolynomial::constant(Rational(static_cast<long>(n)));
  for (int j = 1; j <= alpha; ++j)
    num = num * RationalPolynomial({Rational(2 * j), Rational(1)});
  RationalPolynomial den = build_B(n);
  // Cancel any shared linear factor (s + 2j); the numerator factors are known.
  for (int j = 1; j <= alpha; ++j) {
    const Rational root(-2 * j);
    if (den.eval(root).is_zero() && num.eval(root).is_zero()) {
      const RationalPolynomial lin({Rational(2 * j), Rational(1)});
      num = num.divide_exact(lin);
      den = den.divide_exact(lin);
    }
  }
  // Clear the denominator to primitive integer form, scaling both parts by
  // the same positive rational so the function is unchanged.
  const auto [content, prim] = den.content_and_primitive();
  std::vector<Rational> den_coeffs(prim.size());
  for (size_t i = 0; i < prim.size(); ++i) den_coeffs[i] = Rational(prim[i]);
  return {content.reciprocal() * num, RationalPolynomial(std::move(den_coeffs))};
}

const char* verdict_name(GrVerdict v) {
  switch (v) {
    case GrVerdict::density_exists_robson: return "density_exists_robson";
    case GrVerdict::density_exists_gerow: return "density_exists_gerow";
    case GrVerdict::no_density_proven: return "no_density_proven";
    case GrVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

GrReport verify_no_gr_density(int n) {
  require_n(n, 3, "verify_no_gr_density");
  GrReport report;
  report.n = n;
  const RationalPolynomial b = build_B(n);
  report.degree = b.degree();
  report.sign_at_minus3 = b.eval(Rational(-3)).sign();
  report.sign_at_minus2 = b.eval(Rational(-2)).sign();
  const SturmChain chain(b);
  report.squarefree = chain.input_squarefree();
  report.distinct_real_root_count = chain.count_real_roots();

  if (n == 3) {
    report.verdict = GrVerdict::density_exists_robson;
    report.reason = "closed-form radial density g(s) = 3 s^2";
    return report;
  }
  if (n == 4) {
    report.verdict = GrVerdict::density_exists_gerow;
    report.reason = "closed-form radial density g(s) = 4 s^3";
    return report;
  }
  if (n == 5) {
    if (report.distinct_real_root_count == 0 && closed_form_check(5)) {
      report.verdict = GrVerdict::no_density_proven;
      report.reason = "complex roots + q_5(1.5)<0 closed form";
    } else {
      report.verdict = GrVerdict::inconclusive;
      report.reason = "n = 5 closed-form check failed";
    }
    return report;
  }

  const bool all_real_simple =
      report.squarefree && report.distinct_real_root_count == report.degree;
  const int roots_above_minus2 =
      chain.variations(Rational(-2)) - chain.variations_pos_inf();
  const int roots_in_window = chain.count_roots_in(Rational(-3), Rational(-2));
  const bool signs_ok =
      report.sign_at_minus3 < 0 && report.sign_at_minus2 > 0;
  if (all_real_simple && roots_above_minus2 == 0 && roots_in_window == 1 &&
      signs_ok) {
    report.verdict = GrVerdict::no_density_proven;
    report.reason =
        "all roots real and simple; largest root in (-3, -2) forces a sign "
        "change in the inverse transform";
    report.a0_interval =
        chain.refine(Rational(-3), Rational(-2), Rational(1, 1 << 20));
  } else {
    report.verdict = GrVerdict::inconclusive;
    std::string why;
    if (!all_real_simple) why += "roots not all real/simple; ";
    if (roots_above_minus2 != 0) why += "roots above -2; ";
    if (roots_in_window != 1) why += "largest-root window not isolated; ";
    if (!signs_ok) why += "endpoint signs unexpected; ";
    report.reason = "root analysis incomplete: " + why;
  }
  return report;
}

bool closed_form_check(int n) {
  if (n < 3 || n > 5)
    throw std::invalid_argument("closed_form_check: n must be 3, 4, or 5");
  const RationalFunction tf = laplace_transfer(n);
  const auto matches = [&](const RationalPolynomial& num,
                           const RationalPolynomial& den) {
    // Equality as rational functions: cross-multiplied, scale-free.
    return tf.num * den == num * tf.den;
  };
  if (n == 3 || n == 4) {
    const long pole = n - 1;  // 3/(s+2) resp. 4/(s+3)
    if (!matches(RationalPolynomial::constant(Rational(n)),
                 RationalPolynomial({Rational(pole), Rational(1)})))
      return false;
    // q_n(t) = n e^{-(n-1) t} must match g_n(s) = n s^(n-1) at s = e^{-t}.
    const DensitySpec g = DensitySpec::power(static_cast<double>(n - 1));
    for (double t : {0.0, 0.25, 0.7, 1.5}) {
      const double lhs = n * std::exp(-static_cast<double>(n - 1) * t);
      if (std::abs(g.pdf(std::exp(-t)) - lhs) > 1e-12 * n) return false;
    }
    // The defining marginal condition holds to quadrature accuracy.
    for (double t : {0.1, 0.3, 0.5, 0.7, 0.9})
      if (std::abs(rbs_condition_residual(g, n, t)) > 1e-10) return false;
    return true;
  }
  // n = 5: 115 (s + 2) / (23 s^2 + 130 s + 192).
  if (!matches(RationalPolynomial({Rational(230), Rational(115)}),
               RationalPolynomial({Rational(192), Rational(130), Rational(23)})))
    return false;
  const auto q5 = [](double t) {
    const double w = std::sqrt(191.0) / 23.0;
    return 5.0 * std::exp(-65.0 * t / 23.0) *
           (std::cos(w * t) - 19.0 / std::sqrt(191.0) * std::sin(w * t));
  };
  if (std::abs(q5(0.0) - 5.0) > 1e-12) return false;
  return q5(1.5) < 0.0;
}

double rbs_condition_residual(const DensitySpec& g, int n, double t) {
  require_n(n, 3, "rbs_condition_residual");
  if (!(t > 0.0 && t < 1.0))
    throw std::invalid_argument("rbs_condition_residual: t must be in (0, 1)");
  g.validate();
  const RationalPolynomial p = pn_prime_poly(n);
  std::vector<double> pc(p.coeffs().size());
  for (size_t i = 0; i < pc.size(); ++i) pc[i] = p.coeffs()[i].to_double();
  const auto pn_prime = [&](double r) {
    double acc = 0.0;
    for (auto it = pc.rbegin(); it != pc.rend(); ++it) acc = acc * r + *it;
    return acc;
  };
  const auto integrand = [&](double s) {
    return g.pdf(s) * pn_prime(t / s) / s;
  };
  const double integral =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
          integrand, t, 1.0, 12, 1e-12);
  const double inv_n = 1.0 / n;
  return inv_n * g.pdf(t) + (1.0 - inv_n) * integral - 1.0;
}

Rational polytope_volume_factor(int n) {
  require_n(n, 2, "polytope_volume_factor");
  return Rational(int_pow(2, static_cast<unsigned long>(n))) *
         phi(n + 2, Rational(0));
}

double polytope_volume(int n) {
  return polytope_volume_factor(n).to_double() *
         std::sqrt(static_cast<double>(n));
}

double gr_density_f(int n, const DensitySpec& g, double s) {
  require_n(n, 3, "gr_density_f");
  if (s < 0.0 || s > 1.0)
    throw std::invalid_argument("gr_density_f: s must be in [0, 1]");
  if (s == 0.0) {
    if (g.pdf(0.0) != 0.0)
      throw std::domain_error("gr_density_f: singular at s = 0 for this g");
    return 0.0;
  }
  return g.pdf(s) /
         ((n - 1) * polytope_volume(n) * std::pow(s, static_cast<double>(n - 2)));
}

}  // namespace rbs
