#pragma once

// Explicit approximation of D_{r,t}(n) with a certified error envelope.
//
// For n > 400 t^2 / 3,
//
//     | D_{r,t}(n) - M_{r,t}(n) | <= Err_t(n),
//     M = a0 V_0 + a1 V_1 + a2 V_2 + a4 V_4,
//
// where V_s(n) are contour integrals over the segment z = eta + iv,
// |v| <= 10 eta, eta = pi / sqrt(12 n). The module also carries numeric
// predicates for the generating-function bounds on the major and minor arcs.

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dpc/bigreal.hpp"
#include "dpc/series.hpp"
#include "dpc/specfun.hpp"

namespace dpc {

enum class VRoute { Quadrature, Bessel };

[[nodiscard]] const char* to_string(VRoute route);

struct VValue {
  int s = 0;
  long n = 0;
  BigReal value;
  BigReal abs_uncertainty;
  VRoute route = VRoute::Quadrature;
  /// |Im| of the raw quadrature result; zero on the Bessel route.
  BigReal imag_residue;
  long nodes = 0;
};

/// V_s(n) = 1/(2 pi sqrt2) int_{-10eta}^{10eta} z^{s-1} exp(pi^2/(12z) + (n+1/24) z) dv
/// with z = eta + iv. Throws NonConvergence if the quadrature stalls or if the
/// imaginary residue exceeds the reported uncertainty.
[[nodiscard]] VValue v_quadrature(int s, long n, Precision prec = kDefaultPrecision,
                                  long max_nodes = 1L << 20);

/// V_s(n) ~ (1/sqrt2) (pi^2 / (12 n'))^{s/2} I_s(pi sqrt(n'/3)), n' = n + 1/24,
/// for s in {1, 2, 4}. The uncertainty is bessel_gap_bound plus the series
/// evaluation error.
[[nodiscard]] VValue v_bessel(int s, long n, Precision prec = kDefaultPrecision);

/// beta_s in the gap bound: 1, 11, 1349 for s = 1, 2, 4.
[[nodiscard]] long bessel_gap_beta(int s);

/// 24 beta_s sqrt2 / (24n+1) * exp((3 pi / 4) sqrt(n/3)), rounded upward.
[[nodiscard]] BigReal bessel_gap_bound(int s, long n, Precision prec = kDefaultPrecision);

/// The three summands of Err_t(n) before upward rounding of the total.
struct ErrTerms {
  BigReal lambert_term;  // 14381 t^5 n^-3 e^{pi sqrt(n/3)}
  BigReal xi_term;       // 945285959087 t^-1 n^-4 e^{pi sqrt(n/3)}
  BigReal minor_term;    // 9 n exp((3 sqrt3/(2 pi) + pi/sqrt12) sqrt n)
};

[[nodiscard]] ErrTerms err_terms(long t, long n, Precision prec = kDefaultPrecision);

/// Err_t(n), rounded upward.
[[nodiscard]] BigReal err_bound(long t, long n, Precision prec = kDefaultPrecision);

/// Exact rational parts of the coefficients; a0 = log 2 / t is irrational.
///   a1 = -B_1(r/t) / 2,  a2 = (t/8) B_2(r/t),  a4 = -(t^3/192) B_4(r/t).
struct AlphaCoefficients {
  Rational a1;
  Rational a2;
  Rational a4;
};

[[nodiscard]] AlphaCoefficients alpha_coefficients(const CongruenceClass& cls);
[[nodiscard]] BigReal alpha0(const CongruenceClass& cls, Precision prec);

struct MValue {
  BigReal value;
  BigReal uncertainty;
};

/// V_0 by quadrature and V_1, V_2, V_4 by the Bessel route. These depend on
/// n only, so one set serves every residue class.
struct VComponents {
  VValue v0;
  VValue v1;
  VValue v2;
  VValue v4;
};

[[nodiscard]] VComponents v_components(long n, Precision prec = kDefaultPrecision);

/// M_{r,t}(n) from precomputed components; the precondition is checked against v.v0.n.
[[nodiscard]] MValue m_value(const CongruenceClass& cls, const VComponents& v);

/// M_{r,t}(n) with V_0 by quadrature and V_1, V_2, V_4 by the Bessel route.
/// Requires t >= 2 and n > 400 t^2 / 3.
[[nodiscard]] MValue m_value(const CongruenceClass& cls, long n, Precision prec = kDefaultPrecision);

struct EffectiveReport {
  CongruenceClass cls;
  long n = 0;
  mpz_class d_exact;
  BigReal m_value;
  BigReal m_uncertainty;
  BigReal err_bound;
  /// |d_exact - m_value| + m_uncertainty <= err_bound.
  bool pass = false;
  Precision precision;
};

/// Evaluates the bound at precision p and 2p and returns the p report once
/// both agree on pass; otherwise throws PrecisionExhausted.
[[nodiscard]] EffectiveReport check_effective(const CongruenceClass& cls, long n,
                                              Precision prec = kDefaultPrecision,
                                              const SeriesLimits& limits = kDefaultLimits);

/// Same, reusing a distinct-partition table that covers n.
[[nodiscard]] EffectiveReport check_effective(const CongruenceClass& cls, long n, const QSeries& distinct,
                                              Precision prec = kDefaultPrecision);

/// check_effective for every r in 1..t at one n, sharing the V components.
[[nodiscard]] std::vector<EffectiveReport> check_effective_classes(long t, long n, const QSeries& distinct,
                                                                   Precision prec = kDefaultPrecision);

// ---------------------------------------------------------------------------
// Arc predicates. Each evaluates a left side directly from the series and
// compares it with the closed-form right side. Points outside the region in
// which a bound is claimed raise HypothesisViolation.

enum class ArcLemma { LMajorGap, LMajorAbs, XiLogMajor, XiMajorExp, XiMinor, LMinor };

[[nodiscard]] const char* to_string(ArcLemma lemma);
[[nodiscard]] std::optional<ArcLemma> parse_arc_lemma(const std::string& name);

struct ArcCheck {
  bool holds = false;
  BigReal lhs;
  BigReal rhs;
  /// Set when a sharper constant quoted alongside the bound fails.
  std::optional<std::string> warning;
};

/// |L - (log2/(tz) + a1 + a2 z + a4 z^3)| < (7/25) t^5 |z|^5 on the major arc.
/// Warns when the sharper (1/20) t^5 |z|^5 is exceeded.
[[nodiscard]] ArcCheck l_major_gap(const CongruenceClass& cls, const BigComplex& z, Precision prec);
/// |L| < 14 / |tz| on the major arc.
[[nodiscard]] ArcCheck l_major_abs(const CongruenceClass& cls, const BigComplex& z, Precision prec);
/// |Log xi - pi^2/(12z) + log2/2 - z/24| < 471 |z|^8 on the major arc.
[[nodiscard]] ArcCheck xi_log_major(long t, const BigComplex& z, Precision prec);
/// |xi - exp(pi^2/(12z) - log2/2 + z/24)| < 630 |z|^8 / sqrt2 * exp(pi^2/(12|z|)) on the major arc.
[[nodiscard]] ArcCheck xi_major_exp(long t, const BigComplex& z, Precision prec);
/// |xi| < exp(41/(50 eta)) on the minor arc.
[[nodiscard]] ArcCheck xi_minor(long t, const BigComplex& z, Precision prec);
/// |L| < 1/eta^2 for every eta > 0.
[[nodiscard]] ArcCheck l_minor(const CongruenceClass& cls, const BigComplex& z, Precision prec);

/// Dispatches to the predicate for `lemma`.
[[nodiscard]] ArcCheck arc_check(ArcLemma lemma, const CongruenceClass& cls, const BigComplex& z,
                                 Precision prec);

/// Deterministic grid of at least `count` points strictly inside the region
/// of `lemma` for modulus t.
[[nodiscard]] std::vector<BigComplex> arc_sample_grid(ArcLemma lemma, long t, int count, Precision prec);

}  // namespace dpc
