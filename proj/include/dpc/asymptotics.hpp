#pragma once

// Two-term asymptotic main term for D_{r,t}(n):
//
//     3^{1/4} e^{pi sqrt(n/3)} / (2 pi t n^{1/4})
//       * ( log 2 + ( sqrt3 log2 / (8 pi) - pi/(4 sqrt3) (r - t/2) ) n^{-1/2} )

#include <gmpxx.h>

#include "dpc/bigreal.hpp"
#include "dpc/series.hpp"

namespace dpc {

struct MainTermValue {
  long n = 0;
  CongruenceClass cls;
  BigReal value;
  /// 1 keeps only log 2 inside the bracket; 2 adds the n^{-1/2} correction.
  int terms_used = 2;
};

[[nodiscard]] MainTermValue main_term(const CongruenceClass& cls, long n, Precision prec = kDefaultPrecision,
                                      int terms = 2);

/// D_{r,t}(n) divided by the two-term main term; computes D exactly.
[[nodiscard]] BigReal q_ratio(const CongruenceClass& cls, long n, Precision prec = kDefaultPrecision,
                              const SeriesLimits& limits = kDefaultLimits);

/// Same ratio for a caller-supplied exact D_{r,t}(n).
[[nodiscard]] BigReal q_ratio(const CongruenceClass& cls, long n, const mpz_class& d_exact,
                              Precision prec = kDefaultPrecision);

}  // namespace dpc
