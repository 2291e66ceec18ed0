#pragma once

// Exact Bernoulli/Euler numbers and the arbitrary-precision special
// functions used by the analytic modules.

#include <gmpxx.h>

#include "dpc/bigreal.hpp"
#include "dpc/series.hpp"

namespace dpc {

/// Exact rational in lowest terms with positive denominator.
using Rational = mpq_class;

/// B_n via sum_{k=0}^{n} C(n+1,k) B_k = 0. Results are memoized; the memo is
/// guarded and safe to call from several threads.
[[nodiscard]] Rational bernoulli_number(unsigned n);

/// B_n(x) = sum_k C(n,k) B_k x^{n-k}.
[[nodiscard]] Rational bernoulli_poly(unsigned n, const Rational& x);

/// e_n = E_n(0)/2 = (1 - 2^{n+1}) B_{n+1} / (n+1), the Taylor coefficients
/// (times n!) of e^{-z}/(1+e^{-z}).
[[nodiscard]] Rational euler_e(unsigned n);

/// zeta(n) for n >= 2. Even n use the closed form in B_n; odd n use MPFR.
[[nodiscard]] BigReal zeta_value(long n, Precision prec, Round rnd = Round::Nearest);

/// 2 zeta(n) n! / (2 pi)^n, an upper bound for |B_n(x)| on [0,1]; rounded up.
[[nodiscard]] BigReal lehmer_bound(long n, Precision prec);

/// I_s(x) for integer s >= 0 and x >= 0 from the ascending series
///
///     I_s(x) = sum_k (x/2)^{2k+s} / (k! (k+s)!).
///
/// All terms are positive; the relative error is below 2^{-(prec-8)}.
[[nodiscard]] BigReal bessel_i(long s, const BigReal& x, Precision prec);

/// A quadrature result together with its convergence estimate.
struct QuadratureValue {
  BigReal value;
  BigReal tolerance;
  long nodes = 0;
};

/// I_s(x) = (1/pi) int_0^pi e^{x cos th} cos(s th) dth by the trapezoidal
/// rule with node doubling. The integrand is smooth and periodic, so the rule
/// converges geometrically. Independent of bessel_i.
[[nodiscard]] QuadratureValue bessel_i_oracle(long s, const BigReal& x, Precision prec,
                                              long max_nodes = 1L << 20);

/// Log xi(e^{-z}) = sum_{m>=1} Log(1 + e^{-mz}), principal branch termwise.
/// Requires Re z > 0.
[[nodiscard]] BigComplex xi_eval(const BigComplex& z, Precision prec);

/// L_{r,t}(e^{-z}) = sum_{k>=0} e^{-(kt+r)z} / (1 + e^{-(kt+r)z}). Requires Re z > 0.
[[nodiscard]] BigComplex l_eval(const CongruenceClass& cls, const BigComplex& z, Precision prec);

/// B_n(x) as a BigReal, convenience for the analytic formulas.
[[nodiscard]] BigReal bernoulli_poly_real(unsigned n, const Rational& x, Precision prec);

}  // namespace dpc
