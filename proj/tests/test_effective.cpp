#include <doctest.h>

#include <cmath>

#include "dpc/effective.hpp"
#include "dpc/error.hpp"

using namespace dpc;

namespace {

const Precision kP{256};

BigReal ulp(const BigReal& x) { return pow2(x.exponent2() - x.precision().bits, x.precision()); }

BigComplex point(const char* re, const char* im, Precision p = kP) {
  return BigComplex(BigReal::parse(re, p), BigReal::parse(im, p));
}

}  // namespace

TEST_SUITE("effective") {
  TEST_CASE("gap bound constants and a direct evaluation") {
    CHECK(bessel_gap_beta(1) == 1);
    CHECK(bessel_gap_beta(2) == 11);
    CHECK(bessel_gap_beta(4) == 1349);
    CHECK_THROWS_AS((void)bessel_gap_beta(3), InvalidArgument);
    const long double pi = 3.141592653589793238462643383279502884L;
    const long double direct = 24 * std::sqrt(2.0L) / 25 * std::exp(3 * pi / 4 / std::sqrt(3.0L));
    const BigReal b = bessel_gap_bound(1, 1, kP);
    CHECK(std::fabs(b.to_double() / static_cast<double>(direct) - 1) < 1e-14);
    CHECK(b > BigReal::parse("5.28", kP));
    CHECK(b < BigReal::parse("5.30", kP));
    // beta scales the bound linearly.
    const BigReal ratio = bessel_gap_bound(4, 500, kP) / bessel_gap_bound(1, 500, kP);
    CHECK(abs(ratio - 1349) < BigReal::parse("1e-60", kP));
  }

  TEST_CASE("upward rounding is stable under precision doubling") {
    for (long n : {1L, 700L, 12345L}) {
      for (int s : {1, 2, 4}) {
        const BigReal lo = bessel_gap_bound(s, n, kP);
        const BigReal hi = bessel_gap_bound(s, n, kP.doubled());
        CHECK(hi <= lo + ulp(lo));
        CHECK(lo >= hi);
      }
      const BigReal lo = err_bound(3, n, kP);
      const BigReal hi = err_bound(3, n, kP.doubled());
      CHECK(hi <= lo + ulp(lo));
      CHECK(lo >= hi);
    }
  }

  TEST_CASE("error envelope terms") {
    const long n = 10000;
    const ErrTerms two = err_terms(2, n, kP);
    const ErrTerms four = err_terms(4, n, kP);
    CHECK(abs(four.lambert_term / two.lambert_term - 32) < BigReal::parse("1e-60", kP));
    // Second term against an independent long double evaluation of the printed constant.
    const long double pi = 3.141592653589793238462643383279502884L;
    const long double logged = std::log(945285959087.0L) - std::log(2.0L) - 4 * std::log(10000.0L) +
                               pi * std::sqrt(10000.0L / 3);
    CHECK(std::fabs(log(two.xi_term).to_double() - static_cast<double>(logged)) < 1e-12);
    // At n = 10^4 the minor-arc term is the largest; by n = 10^6 the first two lead.
    CHECK(two.minor_term > two.lambert_term + two.xi_term);
    const ErrTerms far = err_terms(2, 1'000'000, kP);
    CHECK(far.minor_term < far.lambert_term + far.xi_term);
    const BigReal total = err_bound(2, n, kP);
    CHECK(total >= two.lambert_term + two.xi_term + two.minor_term);
    CHECK(total.is_finite());
    CHECK_THROWS_AS((void)err_bound(1, 100, kP), InvalidArgument);
  }

  TEST_CASE("alpha coefficients are exact") {
    for (long t : {2L, 3L, 8L}) {
      const AlphaCoefficients top = alpha_coefficients(CongruenceClass(t, t));
      CHECK(top.a1 == Rational(-1, 4));
    }
    for (long t : {2L, 4L, 10L}) {
      const AlphaCoefficients half = alpha_coefficients(CongruenceClass(t / 2, t));
      CHECK(half.a1 == 0);
      // B_4(1/2) = 7/240 and B_2(1/2) = -1/12
      Rational expected4 = -Rational(t * t * t, 192) * Rational(7, 240);
      expected4.canonicalize();
      Rational expected2 = Rational(t, 8) * Rational(-1, 12);
      expected2.canonicalize();
      CHECK(half.a4 == expected4);
      CHECK(half.a2 == expected2);
    }
    CHECK(abs(alpha0(CongruenceClass(1, 4), kP) * 4 - const_log2(kP)) < pow2(-250, kP));
  }

  TEST_CASE("quadrature and Bessel routes for V_s agree") {
    for (int s : {1, 2, 4}) {
      for (long n : {100L, 1000L}) {
        const VValue q = v_quadrature(s, n, kP);
        const VValue b = v_bessel(s, n, kP);
        CHECK(q.route == VRoute::Quadrature);
        CHECK(b.route == VRoute::Bessel);
        CHECK(abs(q.value - b.value) <= q.abs_uncertainty + b.abs_uncertainty);
        CHECK(q.imag_residue <= q.abs_uncertainty);
        CHECK(q.abs_uncertainty.sign() >= 0);
        CHECK(b.abs_uncertainty >= bessel_gap_bound(s, n, kP));
      }
    }
  }

  TEST_CASE("V_0 is a positive real number") {
    const VValue v0 = v_quadrature(0, 1000, kP);
    CHECK(v0.value.sign() > 0);
    CHECK(v0.imag_residue <= v0.abs_uncertainty);
    CHECK_THROWS_AS((void)v_bessel(0, 1000, kP), InvalidArgument);
  }

  TEST_CASE("effective bound holds at sample points") {
    const EffectiveReport a = check_effective(CongruenceClass(1, 2), 600, kP);
    CHECK(a.pass);
    CHECK(a.d_exact == mpz_class("290681696616885300"));
    const EffectiveReport b = check_effective(CongruenceClass(3, 3), 1201, kP);
    CHECK(b.pass);
    const EffectiveReport c = check_effective(CongruenceClass(1, 2), 1000, kP);
    CHECK(c.pass);
    const BigReal gap = abs(BigReal::from_mpz(c.d_exact, kP) - c.m_value);
    CHECK(gap + c.m_uncertainty <= c.err_bound);
  }

  TEST_CASE("per-class and single-class checks agree") {
    const QSeries distinct = distinct_series(1500);
    const auto reports = check_effective_classes(3, 1500, distinct, kP);
    REQUIRE(reports.size() == 3);
    for (const auto& rep : reports) {
      const EffectiveReport single = check_effective(rep.cls, 1500, distinct, kP);
      CHECK(single.pass == rep.pass);
      CHECK(single.m_value == rep.m_value);
    }
  }

  TEST_CASE("effective range guard") {
    CHECK_THROWS_AS((void)check_effective(CongruenceClass(1, 5), 1000, kP), InvalidArgument);
    CHECK_THROWS_AS((void)check_effective(CongruenceClass(1, 1), 1000, kP), InvalidArgument);
    CHECK_THROWS_AS((void)m_value(CongruenceClass(1, 3), 1200, kP), InvalidArgument);
  }

  TEST_CASE("arc predicates at fixed points") {
    const CongruenceClass cls(1, 2);
    const ArcCheck minor = l_minor(cls, point("0.1", "2"), kP);
    CHECK(minor.holds);
    CHECK(minor.lhs < 100);
    CHECK(xi_log_major(2, point("0.01", "0"), kP).holds);
    CHECK(l_major_abs(cls, point("0.02", "0.1"), kP).holds);
    CHECK(l_major_gap(cls, point("0.02", "0.05"), kP).holds);
    CHECK(xi_major_exp(2, point("0.02", "0.1"), kP).holds);
    CHECK(xi_minor(2, point("0.02", "1.5"), kP).holds);
  }

  TEST_CASE("arc predicates enforce their regions") {
    const CongruenceClass cls(1, 2);
    CHECK_THROWS_AS((void)l_major_gap(cls, point("0.05", "0"), kP), HypothesisViolation);
    CHECK_THROWS_AS((void)l_major_abs(cls, point("0.01", "0.2"), kP), HypothesisViolation);
    CHECK_THROWS_AS((void)xi_minor(2, point("0.01", "0.05"), kP), HypothesisViolation);
    CHECK_THROWS_AS((void)xi_minor(2, point("0.01", "3.2"), kP), HypothesisViolation);
    CHECK_THROWS_AS((void)l_minor(cls, point("0", "1"), kP), HypothesisViolation);
  }

  TEST_CASE("sample grids stay inside their regions") {
    for (ArcLemma lemma : {ArcLemma::LMajorGap, ArcLemma::XiMinor, ArcLemma::LMinor}) {
      for (long t : {2L, 3L}) {
        const auto grid = arc_sample_grid(lemma, t, 50, Precision{128});
        CHECK(grid.size() >= 50);
        const BigReal pi = const_pi(Precision{128});
        for (const auto& z : grid) {
          CHECK(z.re.sign() > 0);
          if (lemma == ArcLemma::LMajorGap) {
            CHECK(abs(z.im) < z.re * 10);
            CHECK(z.re < pi / (40 * t));
          } else if (lemma == ArcLemma::XiMinor) {
            CHECK(abs(z.im) >= z.re * 10);
            CHECK(abs(z.im) < pi);
          }
        }
      }
    }
    CHECK(parse_arc_lemma("xi_minor") == ArcLemma::XiMinor);
    CHECK_FALSE(parse_arc_lemma("nonsense").has_value());
  }
}
