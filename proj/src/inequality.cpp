#include "dpc/inequality.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "dpc/effective.hpp"
#include "dpc/error.hpp"
#include "dpc/specfun.hpp"

namespace dpc {

namespace {

constexpr long kGuardBits = 64;

// Runs body(k) for k in [0, count) on up to `jobs` threads.
template <typename Body>
void parallel_for(std::size_t count, unsigned jobs, Body body) {
  const std::size_t workers = std::min<std::size_t>(std::max(1U, jobs), count);
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < count; k += workers) body(k);
    });
  }
}

}  // namespace

const char* to_string(QuarticScaling scaling) {
  return scaling == QuarticScaling::TableCompatible ? "table-compatible" : "exact";
}

long effective_floor(long t) { return 400 * t * t / 3 + 1; }

BigReal reduced_margin_unchecked(long t, long n, Precision prec, QuarticScaling scaling) {
  if (t < 2) throw InvalidArgument("reduced_margin requires t >= 2");
  if (n < 1) throw InvalidArgument("reduced_margin requires n >= 1");
  const Precision work = prec.plus(kGuardBits);
  const BigReal pi = const_pi(work);
  const BigReal sqrt2 = sqrt(BigReal::from_int(2, work));
  const BigReal np = BigReal::from_int(24 * n + 1, work) / 24;
  const BigReal x = pi * sqrt(np / 3);

  const BigReal lhs = pi / (4 * t * sqrt(6 * np)) * bessel_i(1, x, work);

  const BigReal pi2 = pi * pi;
  const BigReal quartic_power = scaling == QuarticScaling::TableCompatible ? np : np * np;
  BigReal rhs = pi2 / (64 * np * sqrt2) * bessel_i(2, x, work);
  rhs += 233 * pi2 * pi2 / (6912 * sqrt2 * quartic_power) * bessel_i(4, x, work);
  const BigReal gap_coeff = 1 / (t * sqrt2) + 33 * sqrt2 / 16 + 314317 * sqrt2 / 48;
  rhs += gap_coeff / np * exp(3 * pi / 4 * sqrt(BigReal::from_int(n, work) / 3));
  const ErrTerms err = err_terms(t, n, work);
  rhs += 2 * (err.lambert_term + err.xi_term + err.minor_term);
  return (lhs - rhs).at_precision(prec);
}

BigReal reduced_margin(long t, long n, Precision prec, QuarticScaling scaling) {
  BigReal margin = reduced_margin_unchecked(t, n, prec, scaling);
  const BigReal confirm = reduced_margin_unchecked(t, n, prec.doubled(), scaling);
  if ((margin.sign() > 0) != (confirm.sign() > 0)) {
    throw PrecisionExhausted("reduced_margin: sign differs between " + std::to_string(prec.bits) + " and " +
                             std::to_string(2 * prec.bits) + " bits at t=" + std::to_string(t) +
                             ", n=" + std::to_string(n));
  }
  return margin;
}

NtSearch find_nt(long t, const FindNtOptions& options) {
  if (t < 2) throw InvalidArgument("find_nt requires t >= 2");
  if (options.stability_window < 1) throw InvalidArgument("stability window must be positive");
  const long lower = effective_floor(t);
  if (options.scan_limit < lower) {
    throw InvalidArgument("scan limit " + std::to_string(options.scan_limit) + " is not above 400 t^2 / 3");
  }

  NtSearch out{t, 0, options.scan_limit, options.stability_window, 0};
  auto positive = [&](long n) {
    if (n > options.scan_limit) {
      throw ScanLimitError("no stable crossover for t=" + std::to_string(t) + " below " +
                           std::to_string(options.scan_limit));
    }
    ++out.evaluations;
    return reduced_margin(t, n, options.precision, options.scaling).sign() > 0;
  };

  // `fail` is the latest n known to have margin <= 0; lower - 1 stands for none.
  long fail = positive(lower) ? lower - 1 : lower;
  for (;;) {
    long step = 1;
    long next = fail + 1;
    while (!positive(next)) {
      fail = next;
      step *= 2;
      next = fail + step;
    }
    while (next - fail > 1) {
      const long mid = fail + (next - fail) / 2;
      if (positive(mid)) {
        next = mid;
      } else {
        fail = mid;
      }
    }
    bool stable = true;
    for (long k = next + 1; k <= fail + options.stability_window; ++k) {
      if (!positive(k)) {
        fail = k;
        stable = false;
        break;
      }
    }
    if (stable) {
      out.n_t = std::max(lower, fail);
      return out;
    }
  }
}

std::vector<Counterexample> scan_counterexamples(long t, long n_max, const ScanOptions& options,
                                                 const SeriesLimits& limits) {
  if (t < 2) throw InvalidArgument("scan_counterexamples requires t >= 2");
  if (n_max < 1) throw InvalidArgument("scan_counterexamples requires n_max >= 1");
  const auto N = static_cast<std::size_t>(n_max);
  const QSeries distinct = distinct_series(N, limits);

  std::vector<std::vector<mpz_class>> tables(static_cast<std::size_t>(t));
  parallel_for(tables.size(), options.jobs, [&](std::size_t k) {
    tables[k] = d_table(CongruenceClass(static_cast<long>(k) + 1, t), N, distinct);
  });

  const unsigned chunks = std::max(1U, options.jobs);
  std::vector<std::vector<Counterexample>> found(chunks);
  parallel_for(chunks, options.jobs, [&](std::size_t c) {
    for (long n = 1 + static_cast<long>(c); n <= n_max; n += chunks) {
      const auto idx = static_cast<std::size_t>(n);
      for (long r = 1; r < t; ++r) {
        const long s_end = options.mode == ScanMode::Adjacent ? r + 1 : t;
        for (long s = r + 1; s <= s_end; ++s) {
          if (tables[static_cast<std::size_t>(r - 1)][idx] < tables[static_cast<std::size_t>(s - 1)][idx]) {
            found[c].push_back(Counterexample{r, s, n});
          }
        }
      }
    }
  });

  std::vector<Counterexample> all;
  for (auto& part : found) all.insert(all.end(), part.begin(), part.end());
  std::sort(all.begin(), all.end());
  return all;
}

InequalityReport verify_corollary(long t, long exhaustive_to, const FindNtOptions& nt_options,
                                  const ScanOptions& scan_options, const SeriesLimits& limits) {
  if (t < 2) throw InvalidArgument("verify_corollary requires t >= 2, got " + std::to_string(t));
  if (exhaustive_to < 1) throw InvalidArgument("exhaustive_to must be positive");
  if (static_cast<std::size_t>(exhaustive_to) > limits.max_order) {
    throw CapacityError("exhaustive_to " + std::to_string(exhaustive_to) + " exceeds the configured maximum " +
                        std::to_string(limits.max_order));
  }
  const NtSearch nt = find_nt(t, nt_options);
  InequalityReport report;
  report.t = t;
  report.n_t = nt.n_t;
  report.scan_limit_used = nt.scan_limit;
  report.stability_window = nt.stability_window;
  report.counterexamples = scan_counterexamples(t, exhaustive_to, scan_options, limits);
  report.exhaustive_to = exhaustive_to;
  report.full_reproduction = exhaustive_to >= nt.n_t;
  report.validated_range = t <= 10;
  return report;
}

}  // namespace dpc
