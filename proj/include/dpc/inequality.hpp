#pragma once

// Thresholds beyond which D_{r,t}(n) >= D_{r+1,t}(n) is certified by the
// effective bound, and exhaustive scans for counterexamples below them.

#include <compare>
#include <vector>

#include "dpc/bigreal.hpp"
#include "dpc/series.hpp"

namespace dpc {

/// Power of n' = n + 1/24 dividing the I_4 term of the reduced inequality.
/// TableCompatible (1) reproduces the published thresholds; Exact (2) is the
/// value that follows from the V_4 normalisation.
enum class QuarticScaling { TableCompatible, Exact };

[[nodiscard]] const char* to_string(QuarticScaling scaling);

/// LHS - RHS of the reduced inequality at n, where with x = pi sqrt(n'/3)
///
///   LHS = pi / (4 t sqrt(6 n')) I_1(x)
///   RHS = pi^2 / (64 n' sqrt2) I_2(x) + 233 pi^4 / (6912 sqrt2 n'^k) I_4(x)
///         + (1/(t sqrt2) + 33 sqrt2/16 + 314317 sqrt2/48) / n' * exp((3pi/4) sqrt(n/3))
///         + 2 Err_t(n).
///
/// Positive means the inequality holds at n. Computed at p and 2p; a sign
/// disagreement throws PrecisionExhausted.
[[nodiscard]] BigReal reduced_margin(long t, long n, Precision prec = kDefaultPrecision,
                                     QuarticScaling scaling = QuarticScaling::TableCompatible);

/// Single-precision evaluation without the sign confirmation.
[[nodiscard]] BigReal reduced_margin_unchecked(long t, long n, Precision prec,
                                               QuarticScaling scaling = QuarticScaling::TableCompatible);

struct FindNtOptions {
  Precision precision = kDefaultPrecision;
  long scan_limit = 1'000'000;
  long stability_window = 1000;
  QuarticScaling scaling = QuarticScaling::TableCompatible;
};

struct NtSearch {
  long t = 0;
  long n_t = 0;
  long scan_limit = 0;
  long stability_window = 0;
  /// Number of reduced_margin evaluations performed.
  long evaluations = 0;
};

/// Last n with margin <= 0 (at least the first integer above 400 t^2 / 3),
/// followed by stability_window consecutive positive margins. Brackets the
/// crossing by doubling, bisects, then confirms the window; a failure inside
/// the window restarts the search from there. Throws ScanLimitError if the
/// confirmation would pass scan_limit.
[[nodiscard]] NtSearch find_nt(long t, const FindNtOptions& options = {});

/// Smallest integer strictly greater than 400 t^2 / 3.
[[nodiscard]] long effective_floor(long t);

struct Counterexample {
  long r = 0;
  long s = 0;
  long n = 0;

  friend auto operator<=>(const Counterexample&, const Counterexample&) = default;
};

enum class ScanMode {
  /// Every pair r < s.
  AllPairs,
  /// Only s = r + 1.
  Adjacent,
};

struct ScanOptions {
  unsigned jobs = 1;
  ScanMode mode = ScanMode::AllPairs;
};

/// All (r, s, n) with 0 < r < s <= t, 1 <= n <= n_max and D_{r,t}(n) < D_{s,t}(n),
/// sorted lexicographically. Independent of the job count.
[[nodiscard]] std::vector<Counterexample> scan_counterexamples(long t, long n_max, const ScanOptions& options = {},
                                                               const SeriesLimits& limits = kDefaultLimits);

struct InequalityReport {
  long t = 0;
  long n_t = 0;
  long scan_limit_used = 0;
  long stability_window = 0;
  std::vector<Counterexample> counterexamples;
  long exhaustive_to = 0;
  /// exhaustive_to >= n_t: the scan and the threshold together cover every n.
  bool full_reproduction = false;
  /// 2 <= t <= 10, the range for which the reduced inequality is derived.
  bool validated_range = false;
};

/// find_nt combined with scan_counterexamples(t, exhaustive_to).
[[nodiscard]] InequalityReport verify_corollary(long t, long exhaustive_to, const FindNtOptions& nt_options = {},
                                                const ScanOptions& scan_options = {},
                                                const SeriesLimits& limits = kDefaultLimits);

}  // namespace dpc
