#include "kp5/resonance.hpp"

#include <sstream>

#include "kp5/errors.hpp"

namespace kp5 {

namespace {

constexpr long kLambdaSq = 35;

void require_nonzero_m(LatticeFrequency f, const char* where) {
  if (f.m == 0) {
    std::ostringstream os;
    os << where << ": frequency (" << f.m << ", " << f.k
       << ") has m = 0, outside the dispersion domain";
    throw parameter_error(os.str());
  }
}

Rational omega_generic(LatticeFrequency f, long cubic_or_quintic, long transverse_sign) {
  require_nonzero_m(f, "omega");
  mpz_class m(static_cast<long>(f.m)), k(static_cast<long>(f.k));
  mpz_class mpow = m;
  for (long p = 1; p < cubic_or_quintic; ++p) mpow *= m;
  Rational result(mpow);
  result += make_rational(transverse_sign * kLambdaSq * k * k, m);
  return result;
}

// Closed form shared by both models: (m1 m2/(m1+m2)) * [poly - eps*(n1/m1 - n2/m2)^2]
// with poly = 5(m1+m2)^2(m1^2+m1m2+m2^2), eps = +1 for the fifth-order model and
// poly = 3(m1+m2)^2, eps = -1 for the third-order one.
Rational closed_form(LatticeFrequency f1, LatticeFrequency f2, bool fifth_order) {
  mpz_class m1(static_cast<long>(f1.m)), m2(static_cast<long>(f2.m));
  mpz_class k1(static_cast<long>(f1.k)), k2(static_cast<long>(f2.k));
  mpz_class msum = m1 + m2;
  Rational front = make_rational(m1 * m2, msum);
  Rational cross = make_rational(kLambdaSq * (k1 * m2 - k2 * m1) * (k1 * m2 - k2 * m1),
                                 m1 * m1 * m2 * m2);
  Rational brace;
  if (fifth_order) {
    brace = Rational(5 * msum * msum * (m1 * m1 + m1 * m2 + m2 * m2)) - cross;
  } else {
    brace = Rational(3 * msum * msum) + cross;
  }
  return front * brace;
}

Rational dual_route(LatticeFrequency f1, LatticeFrequency f2, bool fifth_order) {
  require_nonzero_m(f1, "resonance");
  require_nonzero_m(f2, "resonance");
  if (f1.m + f2.m == 0) throw parameter_error("resonance: m1 + m2 = 0 leaves the dispersion domain");

  LatticeFrequency sum{f1.m + f2.m, f1.k + f2.k};
  Rational via_omega = fifth_order
                           ? omega(sum) - omega(f1) - omega(f2)
                           : omega_kpii(sum) - omega_kpii(f1) - omega_kpii(f2);
  Rational via_closed = closed_form(f1, f2, fifth_order);
  if (via_omega != via_closed) {
    std::ostringstream os;
    os << "resonance identity mismatch at (" << f1.m << "," << f1.k << ")+(" << f2.m << ","
       << f2.k << "): " << via_omega << " vs " << via_closed;
    throw numerical_error(os.str());
  }
  return via_omega;
}

}  // namespace

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

Rational omega(LatticeFrequency f) { return omega_generic(f, 5, +1); }

Rational omega_kpii(LatticeFrequency f) { return omega_generic(f, 3, -1); }

Rational resonance_kpi5(LatticeFrequency f1, LatticeFrequency f2) {
  return dual_route(f1, f2, true);
}

Rational resonance_kpii(LatticeFrequency f1, LatticeFrequency f2) {
  return dual_route(f1, f2, false);
}

std::pair<Rational, Rational> omega_npm1(const AdmissibleIndex& idx) {
  long long n = idx.n_ll();
  long long alpha = idx.alpha_ll();
  if (n < 2) throw parameter_error("omega_npm1: need n >= 2 so that n-1 >= 1");
  Rational lower = -resonance_kpi5({1, 0}, {n - 1, alpha});
  Rational upper = resonance_kpi5({1, 0}, {n + 1, alpha});
  return {lower, upper};
}

std::vector<ResonantPair> resonance_search(long long max_m, long long max_k) {
  if (max_m < 1 || max_k < 0) throw parameter_error("resonance_search: need max_m >= 1, max_k >= 0");
  std::vector<ResonantPair> hits;
  for (long long m1 = -max_m; m1 <= max_m; ++m1) {
    if (m1 == 0) continue;
    for (long long k1 = -max_k; k1 <= max_k; ++k1) {
      for (long long m2 = -max_m; m2 <= max_m; ++m2) {
        if (m2 == 0 || m1 + m2 == 0) continue;
        for (long long k2 = -max_k; k2 <= max_k; ++k2) {
          LatticeFrequency f1{m1, k1}, f2{m2, k2};
          if (resonance_kpi5(f1, f2) == 0) hits.push_back(ResonantPair{f1, f2});
        }
      }
    }
  }
  return hits;
}

}  // namespace kp5
