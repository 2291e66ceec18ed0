#include "dpc/asymptotics.hpp"

#include <string>

#include "dpc/error.hpp"

namespace dpc {

MainTermValue main_term(const CongruenceClass& cls, long n, Precision prec, int terms) {
  if (n < 1) throw InvalidArgument("main_term requires n >= 1, got " + std::to_string(n));
  if (terms != 1 && terms != 2) throw InvalidArgument("main_term supports terms = 1 or 2");
  const Precision work = prec.plus(32);
  const BigReal pi = const_pi(work);
  const BigReal log2 = const_log2(work);
  const BigReal sqrt3 = sqrt(BigReal::from_int(3, work));
  const BigReal nn = BigReal::from_int(n, work);

  const BigReal fourth_root_3 = sqrt(sqrt3);
  const BigReal growth = exp(pi * sqrt(nn / 3));
  const BigReal prefactor = fourth_root_3 * growth / (2 * pi * cls.t() * sqrt(sqrt(nn)));

  BigReal bracket = log2;
  if (terms == 2) {
    // (r - t/2) kept as (2r - t)/2 so it stays exact.
    const BigReal shift = BigReal::from_int(2 * cls.r() - cls.t(), work) / 2;
    const BigReal correction = sqrt3 * log2 / (8 * pi) - pi / (4 * sqrt3) * shift;
    bracket += correction / sqrt(nn);
  }
  return MainTermValue{n, cls, (prefactor * bracket).at_precision(prec), terms};
}

BigReal q_ratio(const CongruenceClass& cls, long n, const mpz_class& d_exact, Precision prec) {
  const MainTermValue main = main_term(cls, n, prec.plus(32), 2);
  return (BigReal::from_mpz(d_exact, prec.plus(32)) / main.value).at_precision(prec);
}

BigReal q_ratio(const CongruenceClass& cls, long n, Precision prec, const SeriesLimits& limits) {
  if (n < 1) throw InvalidArgument("q_ratio requires n >= 1, got " + std::to_string(n));
  return q_ratio(cls, n, d_single(cls, static_cast<std::size_t>(n), limits), prec);
}

}  // namespace dpc
