#include "dpc/effective.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "dpc/error.hpp"
#include "dpc/quadrature.hpp"

namespace dpc {

namespace {

constexpr long kGuardBits = 64;

// x (computed with a few ulps of error at x.precision()) inflated by
// 2^{-(prec+16)} relative and rounded up to prec bits.
BigReal round_up(const BigReal& x, Precision prec) {
  BigReal inflated = x + abs(x) * pow2(-(prec.bits + 16), x.precision());
  BigReal r(prec);
  mpfr_set(r.raw(), inflated.raw(), MPFR_RNDU);
  return r;
}

BigReal n_prime(long n, Precision work) { return BigReal::from_int(24 * n + 1, work) / 24; }

BigReal eta_of(long n, Precision work) { return const_pi(work) / sqrt(BigReal::from_int(12 * n, work)); }

void require_effective_range(const CongruenceClass& cls, long n, const char* what) {
  if (cls.t() < 2) throw InvalidArgument(std::string(what) + " requires t >= 2");
  if (3 * n <= 400 * cls.t() * cls.t()) {
    throw InvalidArgument(std::string(what) + " requires n > 400 t^2 / 3; got n=" + std::to_string(n) +
                          ", t=" + std::to_string(cls.t()));
  }
}

// ---- arc regions ---------------------------------------------------------

BigReal eta_ceiling(long t, Precision work) { return const_pi(work) / (40 * t); }

void require_major(long t, const BigComplex& z, const char* what) {
  const Precision work = z.precision();
  const BigReal& eta = z.re;
  if (eta.sign() <= 0 || !(eta < eta_ceiling(t, work)) || !(abs(z.im) < eta * 10)) {
    throw HypothesisViolation(std::string(what) +
                              ": z must satisfy eta > 0, eta < pi/(40t) and |y| < 10 eta");
  }
}

void require_minor(long t, const BigComplex& z, const char* what) {
  const Precision work = z.precision();
  const BigReal& eta = z.re;
  const BigReal ay = abs(z.im);
  if (eta.sign() <= 0 || !(eta < eta_ceiling(t, work)) || ay < eta * 10 || !(ay < const_pi(work))) {
    throw HypothesisViolation(std::string(what) +
                              ": z must satisfy 0 < eta < pi/(40t) and 10 eta <= |y| < pi");
  }
}

void require_right_half_plane(const BigComplex& z, const char* what) {
  if (z.re.sign() <= 0) throw HypothesisViolation(std::string(what) + ": z must satisfy eta > 0");
}

BigComplex at(const BigComplex& z, Precision work) {
  return BigComplex(z.re.at_precision(work), z.im.at_precision(work));
}

// pi^2/(12 z) - log2/2 + z/24
BigComplex xi_major_exponent(const BigComplex& z) {
  const Precision work = z.precision();
  const BigReal pi = const_pi(work);
  BigComplex e = inverse(z) * (pi * pi / 12);
  e = e - const_log2(work) / 2;
  e += z * (BigReal::from_int(1, work) / 24);
  return e;
}

}  // namespace

const char* to_string(VRoute route) { return route == VRoute::Quadrature ? "quadrature" : "bessel"; }

VValue v_quadrature(int s, long n, Precision prec, long max_nodes) {
  if (s < 0) throw InvalidArgument("v_quadrature requires s >= 0");
  if (n < 1) throw InvalidArgument("v_quadrature requires n >= 1");
  const Precision work = prec.plus(kGuardBits);
  const BigReal eta = eta_of(n, work);
  const BigReal np = n_prime(n, work);
  const BigReal pi = const_pi(work);
  const BigReal pi2_12 = pi * pi / 12;

  auto integrand = [&](const BigReal& v) {
    const BigComplex z(eta, v);
    BigComplex e = inverse(z) * pi2_12 + z * np;
    return pow(z, s - 1) * exp(e);
  };
  const BigReal half_width = eta * 10;
  // Higher orders pay off quickly as the target tolerance 2^{-prec/2} tightens.
  const int order = static_cast<int>(std::clamp(prec.bits / 4, 32L, 128L));
  SegmentIntegral seg = integrate_segment(integrand, -half_width, half_width, work, max_nodes, order);

  const BigReal scale = BigReal::from_int(1, work) / (2 * pi * sqrt(BigReal::from_int(2, work)));
  VValue out;
  out.s = s;
  out.n = n;
  out.value = (seg.value.re * scale).at_precision(prec);
  out.imag_residue = (abs(seg.value.im) * scale).at_precision(prec);
  out.abs_uncertainty = round_up(seg.abs_uncertainty * scale, prec);
  out.route = VRoute::Quadrature;
  out.nodes = seg.nodes;
  if (out.imag_residue > out.abs_uncertainty) {
    throw NonConvergence("v_quadrature: imaginary residue exceeds the reported uncertainty");
  }
  return out;
}

long bessel_gap_beta(int s) {
  switch (s) {
    case 1: return 1;
    case 2: return 11;
    case 4: return 1349;
    default: throw InvalidArgument("Bessel gap bound is available for s in {1, 2, 4}, got " + std::to_string(s));
  }
}

BigReal bessel_gap_bound(int s, long n, Precision prec) {
  const long beta = bessel_gap_beta(s);
  if (n < 1) throw InvalidArgument("bessel_gap_bound requires n >= 1");
  const Precision work = prec.plus(kGuardBits);
  const BigReal pi = const_pi(work);
  const BigReal prefactor = 24 * beta * sqrt(BigReal::from_int(2, work)) / BigReal::from_int(24 * n + 1, work);
  const BigReal growth = exp(3 * pi / 4 * sqrt(BigReal::from_int(n, work) / 3));
  return round_up(prefactor * growth, prec);
}

VValue v_bessel(int s, long n, Precision prec) {
  (void)bessel_gap_beta(s);
  if (n < 1) throw InvalidArgument("v_bessel requires n >= 1");
  const Precision work = prec.plus(kGuardBits);
  const BigReal pi = const_pi(work);
  const BigReal np = n_prime(n, work);
  const BigReal x = pi * sqrt(np / 3);
  const BigReal ratio = pi * pi / (12 * np);
  const BigReal factor = pow(sqrt(ratio), s) / sqrt(BigReal::from_int(2, work));
  const BigReal value = factor * bessel_i(s, x, work);

  VValue out;
  out.s = s;
  out.n = n;
  out.value = value.at_precision(prec);
  // Series error is below 2^{-(work-8)} relative; count it at prec.
  out.abs_uncertainty = round_up(bessel_gap_bound(s, n, work) + value * pow2(-(prec.bits - 8), work), prec);
  out.route = VRoute::Bessel;
  out.imag_residue = BigReal(prec);
  return out;
}

ErrTerms err_terms(long t, long n, Precision prec) {
  if (t < 2) throw InvalidArgument("err_bound requires t >= 2");
  if (n < 1) throw InvalidArgument("err_bound requires n >= 1");
  const Precision work = prec.plus(kGuardBits);
  const BigReal pi = const_pi(work);
  const BigReal nn = BigReal::from_int(n, work);
  const BigReal main_growth = exp(pi * sqrt(nn / 3));
  const BigReal t5 = pow(BigReal::from_int(t, work), 5);

  ErrTerms terms{BigReal(work), BigReal(work), BigReal(work)};
  terms.lambert_term = 14381 * t5 / pow(nn, 3) * main_growth;
  const BigReal big = BigReal::parse("945285959087", work);
  terms.xi_term = big / (t * pow(nn, 4)) * main_growth;
  const BigReal sqrt3 = sqrt(BigReal::from_int(3, work));
  const BigReal rate = 3 * sqrt3 / (2 * pi) + pi / sqrt(BigReal::from_int(12, work));
  terms.minor_term = 9 * nn * exp(rate * sqrt(nn));
  return terms;
}

BigReal err_bound(long t, long n, Precision prec) {
  const ErrTerms terms = err_terms(t, n, prec);
  return round_up(terms.lambert_term + terms.xi_term + terms.minor_term, prec);
}

AlphaCoefficients alpha_coefficients(const CongruenceClass& cls) {
  Rational x(cls.r(), cls.t());
  x.canonicalize();
  const Rational t(cls.t());
  AlphaCoefficients a{-bernoulli_poly(1, Rational(x)) / 2, t / 8 * bernoulli_poly(2, Rational(x)),
                      -(t * t * t) / 192 * bernoulli_poly(4, Rational(x))};
  a.a1.canonicalize();
  a.a2.canonicalize();
  a.a4.canonicalize();
  return a;
}

BigReal alpha0(const CongruenceClass& cls, Precision prec) { return const_log2(prec) / cls.t(); }

VComponents v_components(long n, Precision prec) {
  return VComponents{v_quadrature(0, n, prec), v_bessel(1, n, prec), v_bessel(2, n, prec), v_bessel(4, n, prec)};
}

MValue m_value(const CongruenceClass& cls, const VComponents& v) {
  require_effective_range(cls, v.v0.n, "m_value");
  const Precision prec = v.v0.value.precision();
  const Precision work = prec.plus(kGuardBits);
  const AlphaCoefficients a = alpha_coefficients(cls);
  const BigReal a0 = alpha0(cls, work);
  const std::array<BigReal, 3> coeff{BigReal::from_mpq(a.a1, work), BigReal::from_mpq(a.a2, work),
                                     BigReal::from_mpq(a.a4, work)};
  const std::array<const VValue*, 3> bessel{&v.v1, &v.v2, &v.v4};

  BigReal value = a0 * v.v0.value;
  BigReal unc = abs(a0) * v.v0.abs_uncertainty;
  for (std::size_t i = 0; i < bessel.size(); ++i) {
    value += coeff[i] * bessel[i]->value;
    unc += abs(coeff[i]) * bessel[i]->abs_uncertainty;
  }
  return MValue{value.at_precision(prec), round_up(unc, prec)};
}

MValue m_value(const CongruenceClass& cls, long n, Precision prec) {
  require_effective_range(cls, n, "m_value");
  return m_value(cls, v_components(n, prec));
}

namespace {

EffectiveReport effective_at(const CongruenceClass& cls, const mpz_class& d, const VComponents& v) {
  const Precision prec = v.v0.value.precision();
  const long n = v.v0.n;
  const MValue m = m_value(cls, v);
  const BigReal err = err_bound(cls.t(), n, prec);
  const Precision work = prec.plus(kGuardBits);
  const BigReal gap = abs(BigReal::from_mpz(d, work) - m.value);
  const bool pass = add(gap, m.uncertainty, Round::Up) <= err;
  return EffectiveReport{cls, n, d, m.value, m.uncertainty, err, pass, prec};
}

}  // namespace

std::vector<EffectiveReport> check_effective_classes(long t, long n, const QSeries& distinct, Precision prec) {
  require_effective_range(CongruenceClass(t, t), n, "check_effective");
  const VComponents low = v_components(n, prec);
  const VComponents high = v_components(n, prec.doubled());
  std::vector<EffectiveReport> reports;
  reports.reserve(static_cast<std::size_t>(t));
  for (long r = 1; r <= t; ++r) {
    const CongruenceClass cls(r, t);
    const mpz_class d = d_single(cls, static_cast<std::size_t>(n), distinct);
    EffectiveReport report = effective_at(cls, d, low);
    const EffectiveReport confirm = effective_at(cls, d, high);
    if (report.pass != confirm.pass) {
      throw PrecisionExhausted("check_effective: decision differs between " + std::to_string(prec.bits) +
                               " and " + std::to_string(2 * prec.bits) + " bits at r=" + std::to_string(r) +
                               ", t=" + std::to_string(t) + ", n=" + std::to_string(n));
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

EffectiveReport check_effective(const CongruenceClass& cls, long n, const QSeries& distinct, Precision prec) {
  require_effective_range(cls, n, "check_effective");
  const mpz_class d = d_single(cls, static_cast<std::size_t>(n), distinct);
  EffectiveReport report = effective_at(cls, d, v_components(n, prec));
  const EffectiveReport confirm = effective_at(cls, d, v_components(n, prec.doubled()));
  if (report.pass != confirm.pass) {
    throw PrecisionExhausted("check_effective: decision differs between " + std::to_string(prec.bits) +
                             " and " + std::to_string(2 * prec.bits) + " bits at n=" + std::to_string(n));
  }
  return report;
}

EffectiveReport check_effective(const CongruenceClass& cls, long n, Precision prec, const SeriesLimits& limits) {
  require_effective_range(cls, n, "check_effective");
  return check_effective(cls, n, distinct_series(static_cast<std::size_t>(n), limits), prec);
}

// ---- arc predicates ------------------------------------------------------

const char* to_string(ArcLemma lemma) {
  switch (lemma) {
    case ArcLemma::LMajorGap: return "l_major_gap";
    case ArcLemma::LMajorAbs: return "l_major_abs";
    case ArcLemma::XiLogMajor: return "xi_log_major";
    case ArcLemma::XiMajorExp: return "xi_major_exp";
    case ArcLemma::XiMinor: return "xi_minor";
    case ArcLemma::LMinor: return "l_minor";
  }
  return "unknown";
}

std::optional<ArcLemma> parse_arc_lemma(const std::string& name) {
  for (ArcLemma l : {ArcLemma::LMajorGap, ArcLemma::LMajorAbs, ArcLemma::XiLogMajor, ArcLemma::XiMajorExp,
                     ArcLemma::XiMinor, ArcLemma::LMinor}) {
    if (name == to_string(l)) return l;
  }
  return std::nullopt;
}

ArcCheck l_major_gap(const CongruenceClass& cls, const BigComplex& z, Precision prec) {
  require_major(cls.t(), z, "l_major_gap");
  const Precision work = prec.plus(kGuardBits);
  const BigComplex zw = at(z, work);
  const AlphaCoefficients a = alpha_coefficients(cls);
  const long t = cls.t();

  BigComplex approx = inverse(zw) * alpha0(cls, work);
  approx = approx + BigReal::from_mpq(a.a1, work);
  approx += zw * BigReal::from_mpq(a.a2, work);
  approx += pow(zw, 3) * BigReal::from_mpq(a.a4, work);
  const BigReal lhs = abs(l_eval(cls, zw, work) - approx);

  const BigReal scale = pow(BigReal::from_int(t, work), 5) * pow(abs(zw), 5);
  const BigReal rhs = scale * 7 / 25;
  ArcCheck out{lhs < rhs, lhs.at_precision(prec), rhs.at_precision(prec), std::nullopt};
  if (out.holds && !(lhs < scale / 20)) {
    out.warning = "l_major_gap: |L - expansion| = " + lhs.to_sci(6) + " exceeds (1/20) t^5 |z|^5 = " +
                  (scale / 20).to_sci(6) + " at z = " + zw.re.to_sci(6) + " + " + zw.im.to_sci(6) + "i";
  }
  return out;
}

ArcCheck l_major_abs(const CongruenceClass& cls, const BigComplex& z, Precision prec) {
  require_major(cls.t(), z, "l_major_abs");
  const Precision work = prec.plus(kGuardBits);
  const BigComplex zw = at(z, work);
  const BigReal lhs = abs(l_eval(cls, zw, work));
  const BigReal rhs = BigReal::from_int(14, work) / (abs(zw) * cls.t());
  return ArcCheck{lhs < rhs, lhs.at_precision(prec), rhs.at_precision(prec), std::nullopt};
}

ArcCheck xi_log_major(long t, const BigComplex& z, Precision prec) {
  require_major(t, z, "xi_log_major");
  const Precision work = prec.plus(kGuardBits);
  const BigComplex zw = at(z, work);
  const BigReal lhs = abs(xi_eval(zw, work) - xi_major_exponent(zw));
  const BigReal rhs = 471 * pow(abs(zw), 8);
  return ArcCheck{lhs < rhs, lhs.at_precision(prec), rhs.at_precision(prec), std::nullopt};
}

ArcCheck xi_major_exp(long t, const BigComplex& z, Precision prec) {
  require_major(t, z, "xi_major_exp");
  const Precision work = prec.plus(kGuardBits);
  const BigComplex zw = at(z, work);
  const BigReal pi = const_pi(work);
  const BigReal az = abs(zw);
  const BigReal lhs = abs(exp(xi_eval(zw, work)) - exp(xi_major_exponent(zw)));
  const BigReal rhs = 630 * pow(az, 8) / sqrt(BigReal::from_int(2, work)) * exp(pi * pi / (12 * az));
  return ArcCheck{lhs < rhs, lhs.at_precision(prec), rhs.at_precision(prec), std::nullopt};
}

ArcCheck xi_minor(long t, const BigComplex& z, Precision prec) {
  require_minor(t, z, "xi_minor");
  const Precision work = prec.plus(kGuardBits);
  const BigComplex zw = at(z, work);
  const BigReal lhs = exp(xi_eval(zw, work).re);
  const BigReal rhs = exp(BigReal::from_int(41, work) / (50 * zw.re));
  return ArcCheck{lhs < rhs, lhs.at_precision(prec), rhs.at_precision(prec), std::nullopt};
}

ArcCheck l_minor(const CongruenceClass& cls, const BigComplex& z, Precision prec) {
  require_right_half_plane(z, "l_minor");
  const Precision work = prec.plus(kGuardBits);
  const BigComplex zw = at(z, work);
  const BigReal lhs = abs(l_eval(cls, zw, work));
  const BigReal rhs = BigReal::from_int(1, work) / (zw.re * zw.re);
  return ArcCheck{lhs < rhs, lhs.at_precision(prec), rhs.at_precision(prec), std::nullopt};
}

ArcCheck arc_check(ArcLemma lemma, const CongruenceClass& cls, const BigComplex& z, Precision prec) {
  switch (lemma) {
    case ArcLemma::LMajorGap: return l_major_gap(cls, z, prec);
    case ArcLemma::LMajorAbs: return l_major_abs(cls, z, prec);
    case ArcLemma::XiLogMajor: return xi_log_major(cls.t(), z, prec);
    case ArcLemma::XiMajorExp: return xi_major_exp(cls.t(), z, prec);
    case ArcLemma::XiMinor: return xi_minor(cls.t(), z, prec);
    case ArcLemma::LMinor: return l_minor(cls, z, prec);
  }
  throw InvalidArgument("unknown arc lemma");
}

std::vector<BigComplex> arc_sample_grid(ArcLemma lemma, long t, int count, Precision prec) {
  if (t < 1) throw InvalidArgument("arc_sample_grid requires t >= 1");
  if (count < 1) throw InvalidArgument("arc_sample_grid requires count >= 1");
  const long rows = std::max(2L, static_cast<long>(std::ceil(std::sqrt(static_cast<double>(count)))));
  const long cols = std::max(2L, (count + rows - 1) / rows);
  const BigReal pi = const_pi(prec);
  const BigReal one = BigReal::from_int(1, prec);

  // frac(i, m) = i / (m - 1), in [0, 1].
  auto frac = [&](long i, long m) { return BigReal::from_int(i, prec) / (m - 1); };
  auto lerp = [&](const BigReal& lo, const BigReal& hi, const BigReal& f) { return lo + (hi - lo) * f; };

  std::vector<BigComplex> grid;
  grid.reserve(static_cast<std::size_t>(rows * cols));
  for (long i = 0; i < rows; ++i) {
    BigReal eta(prec);
    if (lemma == ArcLemma::LMinor) {
      // Geometric from 1/50 to 2.
      eta = exp(lerp(log(one / 50), log(BigReal::from_int(2, prec)), frac(i, rows)));
    } else {
      const BigReal ceiling = pi / (40 * t);
      eta = ceiling * lerp(one / 2, one * 49 / 50, frac(i, rows));
    }
    for (long j = 0; j < cols; ++j) {
      BigReal y(prec);
      switch (lemma) {
        case ArcLemma::XiMinor: {
          const BigReal mag = lerp(eta * 10, pi * 49 / 50, frac(j, cols));
          y = (j % 2 == 0) ? mag : -mag;
          break;
        }
        case ArcLemma::LMinor:
          y = pi * lerp(-one * 49 / 50, one * 49 / 50, frac(j, cols));
          break;
        default:
          y = eta * 10 * lerp(-one * 49 / 50, one * 49 / 50, frac(j, cols));
          break;
      }
      grid.emplace_back(eta, y);
    }
  }
  return grid;
}

}  // namespace dpc
