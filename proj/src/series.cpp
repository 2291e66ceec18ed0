#include "dpc/series.hpp"

#include <algorithm>
#include <string>

#include "dpc/error.hpp"

namespace dpc {

namespace {

void check_order(std::size_t N, const SeriesLimits& limits) {
  if (N > limits.max_order) {
    throw CapacityError("series order " + std::to_string(N) + " exceeds the configured maximum " +
                        std::to_string(limits.max_order));
  }
}

// Signed divisor-sum coefficients of the Lambert-type factor. They are
// bounded by the divisor count, so a machine integer is plenty.
std::vector<long> lambert_small(const CongruenceClass& cls, std::size_t N) {
  std::vector<long> c(N + 1, 0);
  const auto t = static_cast<std::size_t>(cls.t());
  for (auto d = static_cast<std::size_t>(cls.r()); d <= N; d += t) {
    long sign = 1;
    for (std::size_t m = d; m <= N; m += d) {
      c[m] += sign;
      sign = -sign;
    }
  }
  return c;
}

void enumerate_distinct(long remaining, long max_part, long count, const CongruenceClass& cls,
                        mpz_class& total) {
  if (remaining == 0) {
    total += count;
    return;
  }
  for (long part = std::min(remaining, max_part); part >= 1; --part) {
    // part + (part-1) + ... + 1 must still reach the remainder.
    if (part * (part + 1) / 2 < remaining) break;
    const long hit = (part % cls.t() == cls.r() % cls.t()) ? 1 : 0;
    enumerate_distinct(remaining - part, part - 1, count + hit, cls, total);
  }
}

}  // namespace

CongruenceClass::CongruenceClass(long r, long t) : r_(r), t_(t) {
  if (t < 1 || r < 1 || r > t) {
    throw InvalidArgument("congruence class requires 0 < r <= t, got r=" + std::to_string(r) +
                          ", t=" + std::to_string(t));
  }
}

QSeries::QSeries(std::size_t trunc) : coeffs_(trunc + 1) {}

QSeries::QSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("a truncated series needs at least one coefficient");
}

QSeries QSeries::one(std::size_t trunc) {
  QSeries s(trunc);
  s.coeffs_[0] = 1;
  return s;
}

QSeries distinct_series(std::size_t N, const SeriesLimits& limits) {
  check_order(N, limits);
  std::vector<mpz_class> c(N + 1);
  c[0] = 1;
  for (std::size_t m = 1; m <= N; ++m) {
    for (std::size_t k = N; k >= m; --k) c[k] += c[k - m];
  }
  return QSeries(std::move(c));
}

QSeries lambert_coeffs(const CongruenceClass& cls, std::size_t N, const SeriesLimits& limits) {
  check_order(N, limits);
  const std::vector<long> small = lambert_small(cls, N);
  std::vector<mpz_class> c(N + 1);
  for (std::size_t n = 0; n <= N; ++n) c[n] = small[n];
  return QSeries(std::move(c));
}

QSeries series_mul(const QSeries& a, const QSeries& b) {
  if (a.trunc() != b.trunc()) {
    throw TruncationMismatch("cannot multiply series truncated at " + std::to_string(a.trunc()) +
                             " and " + std::to_string(b.trunc()));
  }
  const std::size_t N = a.trunc();
  std::vector<mpz_class> c(N + 1);
  for (std::size_t i = 0; i <= N; ++i) {
    const mpz_class& ai = a[i];
    if (ai == 0) continue;
    if (ai.fits_slong_p()) {
      const long s = ai.get_si();
      for (std::size_t j = 0; i + j <= N; ++j) {
        if (s > 0) {
          mpz_addmul_ui(c[i + j].get_mpz_t(), b[j].get_mpz_t(), static_cast<unsigned long>(s));
        } else {
          mpz_submul_ui(c[i + j].get_mpz_t(), b[j].get_mpz_t(), static_cast<unsigned long>(-s));
        }
      }
    } else {
      for (std::size_t j = 0; i + j <= N; ++j) {
        mpz_addmul(c[i + j].get_mpz_t(), ai.get_mpz_t(), b[j].get_mpz_t());
      }
    }
  }
  return QSeries(std::move(c));
}

std::vector<mpz_class> d_table(const CongruenceClass& cls, std::size_t N, const SeriesLimits& limits) {
  return d_table(cls, N, distinct_series(N, limits));
}

std::vector<mpz_class> d_table(const CongruenceClass& cls, std::size_t N, const QSeries& distinct) {
  if (distinct.trunc() < N) {
    throw TruncationMismatch("distinct-partition table of order " + std::to_string(distinct.trunc()) +
                             " cannot produce D up to " + std::to_string(N));
  }
  const std::vector<long> lambert = lambert_small(cls, N);
  std::vector<mpz_class> d(N + 1);
  for (std::size_t m = 1; m <= N; ++m) {
    const long s = lambert[m];
    if (s == 0) continue;
    const auto mag = static_cast<unsigned long>(s > 0 ? s : -s);
    for (std::size_t n = m; n <= N; ++n) {
      if (s > 0) {
        mpz_addmul_ui(d[n].get_mpz_t(), distinct[n - m].get_mpz_t(), mag);
      } else {
        mpz_submul_ui(d[n].get_mpz_t(), distinct[n - m].get_mpz_t(), mag);
      }
    }
  }
  return d;
}

mpz_class d_single(const CongruenceClass& cls, std::size_t n, const QSeries& distinct) {
  if (distinct.trunc() < n) {
    throw TruncationMismatch("distinct-partition table of order " + std::to_string(distinct.trunc()) +
                             " does not cover n=" + std::to_string(n));
  }
  mpz_class total = 0;
  const auto t = static_cast<std::size_t>(cls.t());
  for (auto d = static_cast<std::size_t>(cls.r()); d <= n; d += t) {
    bool plus = true;
    for (std::size_t shift = d; shift <= n; shift += d) {
      if (plus) {
        total += distinct[n - shift];
      } else {
        total -= distinct[n - shift];
      }
      plus = !plus;
    }
  }
  return total;
}

mpz_class d_single(const CongruenceClass& cls, std::size_t n, const SeriesLimits& limits) {
  return d_single(cls, n, distinct_series(n, limits));
}

mpz_class brute_force_d(const CongruenceClass& cls, long n, const SeriesLimits& limits) {
  if (n < 0) throw InvalidArgument("n must be non-negative");
  if (n > limits.oracle_cap) {
    throw OracleCapExceeded("brute-force enumeration is capped at n=" +
                            std::to_string(limits.oracle_cap) + ", got " + std::to_string(n));
  }
  mpz_class total = 0;
  enumerate_distinct(n, n, 0, cls, total);
  return total;
}

}  // namespace dpc
