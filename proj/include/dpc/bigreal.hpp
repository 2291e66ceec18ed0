#pragma once

// Arbitrary-precision real and complex values backed by MPFR.
//
// Every BigReal carries its own working precision. Binary operations round
// to nearest at the larger of the two operand precisions. Directed rounding
// is available through the free functions taking a Round argument; the
// bound evaluators use those to round their results upward.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace dpc {

/// Working precision in bits.
struct Precision {
  long bits = 256;

  [[nodiscard]] constexpr Precision doubled() const { return Precision{2 * bits}; }
  [[nodiscard]] constexpr Precision plus(long extra) const { return Precision{bits + extra}; }
  friend constexpr auto operator<=>(Precision, Precision) = default;
};

inline constexpr Precision kDefaultPrecision{256};
inline constexpr long kMinPrecisionBits = 64;

enum class Round { Nearest, Up, Down };

[[nodiscard]] mpfr_rnd_t to_mpfr(Round r);

class BigReal {
 public:
  explicit BigReal(Precision prec = kDefaultPrecision);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  [[nodiscard]] static BigReal from_int(long v, Precision prec);
  [[nodiscard]] static BigReal from_double(double v, Precision prec);
  [[nodiscard]] static BigReal from_mpz(const mpz_class& v, Precision prec,
                                        Round rnd = Round::Nearest);
  [[nodiscard]] static BigReal from_mpq(const mpq_class& v, Precision prec,
                                        Round rnd = Round::Nearest);
  /// Parses a decimal literal such as "1.2020569" or "-3e-40".
  [[nodiscard]] static BigReal parse(std::string_view text, Precision prec);

  [[nodiscard]] Precision precision() const { return Precision{mpfr_get_prec(v_)}; }
  /// Same value re-rounded (to nearest) at another precision.
  [[nodiscard]] BigReal at_precision(Precision prec) const;

  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  [[nodiscard]] bool is_finite() const { return mpfr_number_p(v_) != 0; }
  [[nodiscard]] int sign() const { return mpfr_sgn(v_); }
  [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; meaningless for zero.
  [[nodiscard]] long exponent2() const { return mpfr_get_exp(v_); }

  /// Scientific notation with `digits` significant digits, e.g. "1.5906e+00".
  [[nodiscard]] std::string to_sci(int digits) const;
  /// Fixed notation with `decimals` digits after the point, round-half-even.
  [[nodiscard]] std::string to_fixed(int decimals) const;

  [[nodiscard]] mpfr_ptr raw() { return v_; }
  [[nodiscard]] mpfr_srcptr raw() const { return v_; }

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);
  BigReal operator-() const;

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend std::partial_ordering operator<=>(const BigReal& a, long b);
  friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

 private:
  mpfr_t v_;
};

BigReal operator+(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, const BigReal& b);
BigReal operator/(const BigReal& a, const BigReal& b);
BigReal operator+(const BigReal& a, long b);
BigReal operator-(const BigReal& a, long b);
BigReal operator*(const BigReal& a, long b);
BigReal operator*(long a, const BigReal& b);
BigReal operator/(const BigReal& a, long b);
BigReal operator/(long a, const BigReal& b);

// Directed-rounding arithmetic. The result precision is the larger operand
// precision.
[[nodiscard]] BigReal add(const BigReal& a, const BigReal& b, Round rnd);
[[nodiscard]] BigReal sub(const BigReal& a, const BigReal& b, Round rnd);
[[nodiscard]] BigReal mul(const BigReal& a, const BigReal& b, Round rnd);
[[nodiscard]] BigReal div(const BigReal& a, const BigReal& b, Round rnd);

[[nodiscard]] BigReal abs(const BigReal& x);
[[nodiscard]] BigReal sqrt(const BigReal& x, Round rnd = Round::Nearest);
[[nodiscard]] BigReal exp(const BigReal& x, Round rnd = Round::Nearest);
[[nodiscard]] BigReal log(const BigReal& x, Round rnd = Round::Nearest);
[[nodiscard]] BigReal cos(const BigReal& x);
[[nodiscard]] BigReal sin(const BigReal& x);
[[nodiscard]] BigReal atan2(const BigReal& y, const BigReal& x);
[[nodiscard]] BigReal pow(const BigReal& base, const BigReal& expo, Round rnd = Round::Nearest);
[[nodiscard]] BigReal pow(const BigReal& base, long expo, Round rnd = Round::Nearest);
[[nodiscard]] BigReal max(const BigReal& a, const BigReal& b);
/// x * 2^k, exact.
[[nodiscard]] BigReal ldexp(const BigReal& x, long k);

[[nodiscard]] BigReal const_pi(Precision prec, Round rnd = Round::Nearest);
/// Natural logarithm of 2.
[[nodiscard]] BigReal const_log2(Precision prec, Round rnd = Round::Nearest);
/// 2^k at the given precision.
[[nodiscard]] BigReal pow2(long k, Precision prec);

/// Complex value with real and imaginary parts at equal precision.
struct BigComplex {
  BigReal re;
  BigReal im;

  explicit BigComplex(Precision prec = kDefaultPrecision);
  BigComplex(BigReal real, BigReal imag);

  [[nodiscard]] Precision precision() const { return re.precision(); }
  [[nodiscard]] BigComplex conj() const { return BigComplex(re, -im); }

  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);
  BigComplex operator-() const { return BigComplex(-re, -im); }
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigReal& b);
BigComplex operator+(const BigComplex& a, const BigReal& b);
BigComplex operator-(const BigComplex& a, const BigReal& b);

[[nodiscard]] BigReal abs(const BigComplex& z);
[[nodiscard]] BigComplex exp(const BigComplex& z);
/// Principal branch.
[[nodiscard]] BigComplex log(const BigComplex& z);
[[nodiscard]] BigComplex pow(const BigComplex& z, long k);
[[nodiscard]] BigComplex inverse(const BigComplex& z);

}  // namespace dpc
