#include "dpc/bigreal.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "dpc/error.hpp"

namespace dpc {

namespace {

mpfr_prec_t checked_bits(Precision prec) {
  if (prec.bits < kMinPrecisionBits) {
    throw InvalidArgument("working precision must be at least 64 bits, got " +
                          std::to_string(prec.bits));
  }
  return static_cast<mpfr_prec_t>(prec.bits);
}

Precision wider(const BigReal& a, const BigReal& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

mpfr_rnd_t to_mpfr(Round r) {
  switch (r) {
    case Round::Up:
      return MPFR_RNDU;
    case Round::Down:
      return MPFR_RNDD;
    case Round::Nearest:
      break;
  }
  return MPFR_RNDN;
}

BigReal::BigReal(Precision prec) {
  mpfr_init2(v_, checked_bits(prec));
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::from_int(long v, Precision prec) {
  BigReal r(prec);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

BigReal BigReal::from_double(double v, Precision prec) {
  BigReal r(prec);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

BigReal BigReal::from_mpz(const mpz_class& v, Precision prec, Round rnd) {
  BigReal r(prec);
  mpfr_set_z(r.v_, v.get_mpz_t(), to_mpfr(rnd));
  return r;
}

BigReal BigReal::from_mpq(const mpq_class& v, Precision prec, Round rnd) {
  BigReal r(prec);
  mpfr_set_q(r.v_, v.get_mpq_t(), to_mpfr(rnd));
  return r;
}

BigReal BigReal::parse(std::string_view text, Precision prec) {
  BigReal r(prec);
  std::string s(text);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw InvalidArgument("not a decimal number: '" + s + "'");
  }
  return r;
}

BigReal BigReal::at_precision(Precision prec) const {
  BigReal r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigReal::to_sci(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string BigReal::to_fixed(int decimals) const {
  if (!is_finite()) return to_sci(6);
  BigReal scaled(precision().plus(64));
  mpfr_ui_pow_ui(scaled.v_, 10, static_cast<unsigned long>(decimals), MPFR_RNDN);
  mpfr_mul(scaled.v_, scaled.v_, v_, MPFR_RNDN);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), scaled.v_, MPFR_RNDN);  // ties to even
  const bool negative = z < 0;
  std::string digits = mpz_class(abs(z)).get_str();
  if (decimals > 0) {
    if (digits.size() <= static_cast<std::size_t>(decimals)) {
      digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
  }
  return negative ? "-" + digits : digits;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(v_, mpfr_get_prec(rhs.v_), MPFR_RNDN);
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(v_, mpfr_get_prec(rhs.v_), MPFR_RNDN);
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(v_, mpfr_get_prec(rhs.v_), MPFR_RNDN);
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(v_, mpfr_get_prec(rhs.v_), MPFR_RNDN);
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const BigReal& a, long b) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigReal operator+(const BigReal& a, const BigReal& b) { return add(a, b, Round::Nearest); }
BigReal operator-(const BigReal& a, const BigReal& b) { return sub(a, b, Round::Nearest); }
BigReal operator*(const BigReal& a, const BigReal& b) { return mul(a, b, Round::Nearest); }
BigReal operator/(const BigReal& a, const BigReal& b) { return div(a, b, Round::Nearest); }

BigReal operator+(const BigReal& a, long b) {
  BigReal r(a.precision());
  mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, long b) {
  BigReal r(a.precision());
  mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, long b) {
  BigReal r(a.precision());
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

BigReal operator*(long a, const BigReal& b) { return b * a; }

BigReal operator/(const BigReal& a, long b) {
  BigReal r(a.precision());
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

BigReal operator/(long a, const BigReal& b) {
  BigReal r(b.precision());
  mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}

BigReal add(const BigReal& a, const BigReal& b, Round rnd) {
  BigReal r(wider(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), to_mpfr(rnd));
  return r;
}

BigReal sub(const BigReal& a, const BigReal& b, Round rnd) {
  BigReal r(wider(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), to_mpfr(rnd));
  return r;
}

BigReal mul(const BigReal& a, const BigReal& b, Round rnd) {
  BigReal r(wider(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), to_mpfr(rnd));
  return r;
}

BigReal div(const BigReal& a, const BigReal& b, Round rnd) {
  BigReal r(wider(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), to_mpfr(rnd));
  return r;
}

BigReal abs(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal sqrt(const BigReal& x, Round rnd) {
  BigReal r(x.precision());
  mpfr_sqrt(r.raw(), x.raw(), to_mpfr(rnd));
  return r;
}

BigReal exp(const BigReal& x, Round rnd) {
  BigReal r(x.precision());
  mpfr_exp(r.raw(), x.raw(), to_mpfr(rnd));
  return r;
}

BigReal log(const BigReal& x, Round rnd) {
  BigReal r(x.precision());
  mpfr_log(r.raw(), x.raw(), to_mpfr(rnd));
  return r;
}

BigReal cos(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_cos(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal sin(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(wider(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& base, const BigReal& expo, Round rnd) {
  BigReal r(wider(base, expo));
  mpfr_pow(r.raw(), base.raw(), expo.raw(), to_mpfr(rnd));
  return r;
}

BigReal pow(const BigReal& base, long expo, Round rnd) {
  BigReal r(base.precision());
  mpfr_pow_si(r.raw(), base.raw(), expo, to_mpfr(rnd));
  return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

BigReal ldexp(const BigReal& x, long k) {
  BigReal r(x.precision());
  mpfr_mul_2si(r.raw(), x.raw(), k, MPFR_RNDN);
  return r;
}

BigReal const_pi(Precision prec, Round rnd) {
  BigReal r(prec);
  mpfr_const_pi(r.raw(), to_mpfr(rnd));
  return r;
}

BigReal const_log2(Precision prec, Round rnd) {
  BigReal r(prec);
  mpfr_const_log2(r.raw(), to_mpfr(rnd));
  return r;
}

BigReal pow2(long k, Precision prec) {
  BigReal r(prec);
  mpfr_set_ui_2exp(r.raw(), 1, k, MPFR_RNDN);
  return r;
}

// --- BigComplex -------------------------------------------------------------

BigComplex::BigComplex(Precision prec) : re(prec), im(prec) {}

BigComplex::BigComplex(BigReal real, BigReal imag) : re(std::move(real)), im(std::move(imag)) {
  if (re.precision() != im.precision()) {
    const Precision p = std::max(re.precision(), im.precision());
    re = re.at_precision(p);
    im = im.at_precision(p);
  }
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  *this = *this * rhs;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
  *this = *this / rhs;
  return *this;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re + b.re, a.im + b.im);
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re - b.re, a.im - b.im);
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) { return a * inverse(b); }

BigComplex operator*(const BigComplex& a, const BigReal& b) { return BigComplex(a.re * b, a.im * b); }

BigComplex operator+(const BigComplex& a, const BigReal& b) { return BigComplex(a.re + b, a.im); }

BigComplex operator-(const BigComplex& a, const BigReal& b) { return BigComplex(a.re - b, a.im); }

BigReal abs(const BigComplex& z) {
  BigReal r(z.precision());
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
  return r;
}

BigComplex inverse(const BigComplex& z) {
  BigReal norm2 = z.re * z.re + z.im * z.im;
  return BigComplex(z.re / norm2, -z.im / norm2);
}

BigComplex exp(const BigComplex& z) {
  BigReal modulus = exp(z.re);
  BigReal s(z.precision());
  BigReal c(z.precision());
  mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), MPFR_RNDN);
  return BigComplex(modulus * c, modulus * s);
}

BigComplex log(const BigComplex& z) { return BigComplex(log(abs(z)), atan2(z.im, z.re)); }

BigComplex pow(const BigComplex& z, long k) {
  if (k < 0) return pow(inverse(z), -k);
  BigComplex result(BigReal::from_int(1, z.precision()), BigReal(z.precision()));
  BigComplex base = z;
  auto e = static_cast<unsigned long>(k);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

}  // namespace dpc
