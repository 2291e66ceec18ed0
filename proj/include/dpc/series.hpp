#pragma once

// Exact computation of D_{r,t}(n), the number of parts congruent to r mod t
// summed over all partitions of n into distinct parts.
//
// The generating function factors as
//
//     sum_n D_{r,t}(n) q^n = (-q;q)_inf * sum_{k>=0} q^{kt+r} / (1 + q^{kt+r})
//
// and both factors are expanded here as truncated power series with exact
// integer coefficients.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace dpc {

/// Residue class r mod t with 0 < r <= t.
class CongruenceClass {
 public:
  CongruenceClass(long r, long t);

  [[nodiscard]] long r() const { return r_; }
  [[nodiscard]] long t() const { return t_; }

  friend bool operator==(const CongruenceClass&, const CongruenceClass&) = default;

 private:
  long r_;
  long t_;
};

/// Size limits shared by the series routines.
struct SeriesLimits {
  /// Largest truncation order N accepted by the table builders.
  std::size_t max_order = 1U << 18;
  /// Largest n accepted by the brute-force enumeration oracle.
  long oracle_cap = 60;
};

inline constexpr SeriesLimits kDefaultLimits{};

/// Power series truncated after q^trunc, with exact integer coefficients.
class QSeries {
 public:
  /// The zero series of the given truncation order.
  explicit QSeries(std::size_t trunc);
  /// Takes ownership of trunc+1 coefficients.
  explicit QSeries(std::vector<mpz_class> coeffs);

  /// 1 + 0q + ... at the given truncation.
  [[nodiscard]] static QSeries one(std::size_t trunc);

  [[nodiscard]] std::size_t trunc() const { return coeffs_.size() - 1; }
  [[nodiscard]] const mpz_class& operator[](std::size_t n) const { return coeffs_.at(n); }
  [[nodiscard]] std::span<const mpz_class> coeffs() const { return coeffs_; }

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<mpz_class> coeffs_;
};

/// prod_{m>=1} (1 + q^m) truncated at q^N: coefficient n counts partitions
/// of n into distinct parts.
[[nodiscard]] QSeries distinct_series(std::size_t N, const SeriesLimits& limits = kDefaultLimits);

/// sum_{k>=0} q^{kt+r} / (1 + q^{kt+r}) truncated at q^N. The coefficient of
/// q^n is sum over divisors d of n with d = r mod t of (-1)^{n/d - 1}.
[[nodiscard]] QSeries lambert_coeffs(const CongruenceClass& cls, std::size_t N,
                                     const SeriesLimits& limits = kDefaultLimits);

/// Truncated Cauchy product. Both operands must share a truncation order.
[[nodiscard]] QSeries series_mul(const QSeries& a, const QSeries& b);

/// D_{r,t}(n) for 0 <= n <= N.
[[nodiscard]] std::vector<mpz_class> d_table(const CongruenceClass& cls, std::size_t N,
                                             const SeriesLimits& limits = kDefaultLimits);

/// Same as above but reusing an existing distinct_series expansion whose
/// truncation is at least N.
[[nodiscard]] std::vector<mpz_class> d_table(const CongruenceClass& cls, std::size_t N,
                                             const QSeries& distinct);

/// D_{r,t}(n) from a precomputed distinct-partition table covering 0..n via
///
///     D_{r,t}(n) = sum_{d = r (t)} sum_{j>=1} (-1)^{j-1} q_D(n - j d).
[[nodiscard]] mpz_class d_single(const CongruenceClass& cls, std::size_t n, const QSeries& distinct);

/// Convenience overload that builds the distinct-partition table itself.
[[nodiscard]] mpz_class d_single(const CongruenceClass& cls, std::size_t n,
                                 const SeriesLimits& limits = kDefaultLimits);

/// D_{r,t}(n) by enumerating every partition of n into distinct parts.
/// Independent of the generating-function route; limited to n <= oracle_cap.
[[nodiscard]] mpz_class brute_force_d(const CongruenceClass& cls, long n,
                                      const SeriesLimits& limits = kDefaultLimits);

}  // namespace dpc
