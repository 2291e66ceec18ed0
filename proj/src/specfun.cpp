#include "dpc/specfun.hpp"

#include <cmath>
#include <mutex>
#include <string>
#include <vector>

#include "dpc/error.hpp"

namespace dpc {

namespace {

constexpr long kGuardBits = 32;
constexpr long kMaxSeriesTerms = 200'000'000;

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Relative tolerance 2^{-(prec-8)} as a BigReal at `work` precision.
BigReal target_tolerance(Precision prec, Precision work) { return pow2(-(prec.bits - 8), work); }

void require_positive_real_part(const BigComplex& z, const char* what) {
  if (z.re.sign() <= 0) {
    throw NonConvergence(std::string(what) + ": series diverges for Re(z) <= 0");
  }
}

}  // namespace

Rational bernoulli_number(unsigned n) {
  static std::mutex mutex;
  static std::vector<Rational> memo{Rational(1)};
  std::lock_guard<std::mutex> lock(mutex);
  while (memo.size() <= n) {
    const auto m = static_cast<unsigned long>(memo.size());
    Rational acc = 0;
    for (unsigned long k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * memo[k];
    Rational bm = -acc / Rational(m + 1);
    bm.canonicalize();
    memo.push_back(bm);
  }
  return memo[n];
}

Rational bernoulli_poly(unsigned n, const Rational& x) {
  // Horner-free direct sum; n stays small in every caller.
  Rational sum = 0;
  Rational xpow = 1;  // x^{n-k}, built from k = n downwards
  for (unsigned k = n + 1; k-- > 0;) {
    sum += Rational(binomial(n, k)) * bernoulli_number(k) * xpow;
    xpow *= x;
  }
  sum.canonicalize();
  return sum;
}

Rational euler_e(unsigned n) {
  mpz_class two_pow = 1;
  two_pow <<= (n + 1);
  Rational e = Rational(1 - two_pow) * bernoulli_number(n + 1) / Rational(n + 1);
  e.canonicalize();
  return e;
}

BigReal bernoulli_poly_real(unsigned n, const Rational& x, Precision prec) {
  return BigReal::from_mpq(bernoulli_poly(n, x), prec);
}

BigReal zeta_value(long n, Precision prec, Round rnd) {
  if (n < 2) throw InvalidArgument("zeta_value requires n >= 2, got " + std::to_string(n));
  if (n % 2 == 0) {
    // zeta(2k) = |B_2k| (2 pi)^{2k} / (2 (2k)!); every factor is positive so
    // the rounding direction carries through each step.
    const auto un = static_cast<unsigned long>(n);
    Rational coeff = abs(bernoulli_number(static_cast<unsigned>(n))) / Rational(2 * factorial(un));
    BigReal two_pi = const_pi(prec, rnd) * 2;
    BigReal scale = pow(two_pi, n, rnd);
    return mul(BigReal::from_mpq(coeff, prec, rnd), scale, rnd);
  }
  BigReal r(prec);
  mpfr_zeta_ui(r.raw(), static_cast<unsigned long>(n), to_mpfr(rnd));
  return r;
}

BigReal lehmer_bound(long n, Precision prec) {
  if (n < 2) throw InvalidArgument("lehmer_bound requires n >= 2, got " + std::to_string(n));
  BigReal numer = mul(zeta_value(n, prec, Round::Up) * 2,
                      BigReal::from_mpz(factorial(static_cast<unsigned long>(n)), prec, Round::Up),
                      Round::Up);
  BigReal two_pi_low = const_pi(prec, Round::Down) * 2;
  BigReal denom = pow(two_pi_low, n, Round::Down);
  return div(numer, denom, Round::Up);
}

BigReal bessel_i(long s, const BigReal& x, Precision prec) {
  if (s < 0) throw InvalidArgument("bessel_i takes a non-negative integer order; use I_{-s} = I_s");
  if (x.sign() < 0) throw InvalidArgument("bessel_i requires x >= 0");
  if (x.is_zero()) return BigReal::from_int(s == 0 ? 1 : 0, prec);

  // Terms grow until k ~ x/2 and decay afterwards; roughly x/2 + O(prec) terms.
  const double half_x = x.to_double() / 2.0;
  const Precision work = prec.plus(kGuardBits + static_cast<long>(std::log2(half_x + 2.0)));
  BigReal half = x.at_precision(work) / 2;
  BigReal quarter_sq = half * half;

  BigReal term = pow(half, s);
  term /= BigReal::from_mpz(factorial(static_cast<unsigned long>(s)), work);
  BigReal sum = term;
  const BigReal stop = pow2(-(prec.bits + 4), work);
  for (long k = 0;; ++k) {
    if (k > kMaxSeriesTerms) throw NonConvergence("bessel_i: series did not terminate");
    term *= quarter_sq;
    term /= (k + 1);
    term /= (k + 1 + s);
    sum += term;
    if (static_cast<double>(k) > half_x && term < sum * stop) break;
  }
  return sum.at_precision(prec);
}

QuadratureValue bessel_i_oracle(long s, const BigReal& x, Precision prec, long max_nodes) {
  if (s < 0) throw InvalidArgument("bessel_i_oracle takes a non-negative integer order");
  if (x.sign() < 0) throw InvalidArgument("bessel_i_oracle requires x >= 0");
  const Precision work = prec.plus(kGuardBits);
  const BigReal xw = x.at_precision(work);
  const BigReal pi = const_pi(work);

  auto f = [&](const BigReal& theta) { return exp(xw * cos(theta)) * cos(theta * s); };
  auto f_abs = [&](const BigReal& theta) { return abs(f(theta)); };

  // Trapezoid on [0, pi]: T = h * (f(0)/2 + f(pi)/2 + sum of interior values).
  long intervals = 8;
  BigReal inner = (f(BigReal(work)) + f(pi)) / 2;
  BigReal inner_abs = (f_abs(BigReal(work)) + f_abs(pi)) / 2;
  for (long k = 1; k < intervals; ++k) {
    BigReal theta = pi * k / intervals;
    inner += f(theta);
    inner_abs += f_abs(theta);
  }
  BigReal previous = pi / intervals * inner / pi;
  const BigReal tol = target_tolerance(prec, work);

  while (2 * intervals <= max_nodes) {
    intervals *= 2;
    for (long k = 1; k < intervals; k += 2) {
      BigReal theta = pi * k / intervals;
      inner += f(theta);
      inner_abs += f_abs(theta);
    }
    BigReal current = inner / intervals;        // h/pi = 1/intervals
    BigReal scale = inner_abs / intervals;      // approximates (1/pi) int |f|
    BigReal diff = abs(current - previous);
    if (diff <= tol * scale) {
      BigReal floor = scale * pow2(-(prec.bits - 4), work);
      return QuadratureValue{current.at_precision(prec), max(diff, floor).at_precision(prec),
                             intervals + 1};
    }
    previous = std::move(current);
  }
  throw NonConvergence("bessel_i_oracle: no convergence within " + std::to_string(max_nodes) +
                       " nodes");
}

BigComplex xi_eval(const BigComplex& z, Precision prec) {
  require_positive_real_part(z, "xi_eval");
  const Precision work = prec.plus(kGuardBits);
  const BigComplex zw(z.re.at_precision(work), z.im.at_precision(work));
  const BigComplex w1 = exp(-zw);
  const BigReal rho = exp(-zw.re);  // |e^{-z}|
  const BigReal one = BigReal::from_int(1, work);
  const BigReal one_minus_rho = one - rho;
  const BigReal tol = target_tolerance(prec, work);

  BigComplex sum(work);
  BigComplex w = w1;
  BigReal wabs = rho;
  for (long m = 1;; ++m) {
    if (m > kMaxSeriesTerms) throw NonConvergence("xi_eval: too many terms");
    sum += log(w + one);
    w *= w1;
    wabs *= rho;
    // sum_{j>m} |Log(1 + w_j)| <= sum_{j>m} rho^j / (1 - rho^j)
    //                         <= rho^{m+1} / ((1 - rho)(1 - rho^{m+1})).
    BigReal tail = wabs / (one_minus_rho * (one - wabs));
    BigReal mag = abs(sum);
    if (tail <= tol * mag || (mag.is_zero() && tail <= pow2(-2 * prec.bits, work))) break;
  }
  return BigComplex(sum.re.at_precision(prec), sum.im.at_precision(prec));
}

BigComplex l_eval(const CongruenceClass& cls, const BigComplex& z, Precision prec) {
  require_positive_real_part(z, "l_eval");
  const Precision work = prec.plus(kGuardBits);
  const BigComplex zw(z.re.at_precision(work), z.im.at_precision(work));
  const BigReal one = BigReal::from_int(1, work);
  const BigComplex step = exp(zw * BigReal::from_int(-cls.t(), work));
  const BigReal step_abs = exp(zw.re * (-cls.t()));
  const BigReal one_minus_step = one - step_abs;
  const BigReal tol = target_tolerance(prec, work);

  BigComplex u = exp(zw * BigReal::from_int(-cls.r(), work));
  BigReal uabs = exp(zw.re * (-cls.r()));
  BigComplex sum(work);
  for (long k = 0;; ++k) {
    if (k > kMaxSeriesTerms) throw NonConvergence("l_eval: too many terms");
    sum += u / (u + one);
    u *= step;
    uabs *= step_abs;
    // Remaining terms: |u_j / (1 + u_j)| <= |u_j| / (1 - |u_j|), geometric in step.
    BigReal tail = uabs / (one_minus_step * (one - uabs));
    BigReal mag = abs(sum);
    if (tail <= tol * mag || (mag.is_zero() && tail <= pow2(-2 * prec.bits, work))) break;
  }
  return BigComplex(sum.re.at_precision(prec), sum.im.at_precision(prec));
}

}  // namespace dpc
