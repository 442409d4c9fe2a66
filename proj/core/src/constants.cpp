#include "mumhodge/constants.hpp"

#include <map>
#include <mutex>

namespace mumhodge {

namespace {

template <typename Compute>
BigFloat cached(std::map<Precision, BigFloat>& cache, std::mutex& mutex, Precision prec, Compute compute) {
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(prec);
  if (it == cache.end()) it = cache.emplace(prec, compute(prec)).first;
  return it->second;
}

}  // namespace

BigFloat const_pi(Precision prec) {
  static std::map<Precision, BigFloat> cache;
  static std::mutex mutex;
  return cached(cache, mutex, prec, [](Precision p) {
    BigFloat r(p);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
  });
}

BigFloat const_zeta3(Precision prec) {
  static std::map<Precision, BigFloat> cache;
  static std::mutex mutex;
  return cached(cache, mutex, prec, [](Precision p) {
    BigFloat r(p);
    mpfr_zeta_ui(r.get(), 3, MPFR_RNDN);
    return r;
  });
}

BigComplex two_pi_i(Precision prec) {
  BigFloat im = const_pi(prec);
  im *= 2L;
  return {BigFloat(prec), im};
}

BigComplex kappa(Precision prec) {
  // Work with a few guard bits, then round.
  const Precision p = prec + 16;
  BigFloat pi = const_pi(p);
  BigFloat im = const_zeta3(p) / (pi * pi * pi);
  im /= 8L;
  return {BigFloat(prec), im.with_precision(prec)};
}

}  // namespace mumhodge
