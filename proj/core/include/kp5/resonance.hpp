#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "kp5/numtheory.hpp"

namespace kp5 {

// Exact rational scalar. Canonical form (reduced, positive denominator) is
// maintained by GMP; helpers below keep construction sites tidy.
using Rational = mpq_class;

Rational make_rational(const mpz_class& num, const mpz_class& den);
double to_double(const Rational& q);

// Frequency (m, lambda*k) on the lattice Z x lambda*Z, lambda = sqrt(35).
// Only the integer pair is stored; every formula uses lambda^2 = 35 exactly.
struct LatticeFrequency {
  long long m = 0;
  long long k = 0;
};

// Dispersion of the fifth-order model: omega(m, lambda k) = m^5 + 35 k^2 / m.
Rational omega(LatticeFrequency f);

// Third-order contrast model: omega~(m, lambda k) = m^3 - 35 k^2 / m.
Rational omega_kpii(LatticeFrequency f);

// Resonance function Omega(f1, f2) = omega(f1+f2) - omega(f1) - omega(f2),
// evaluated both through the omega differences and through the closed form
//   (m1 m2 / (m1+m2)) * [5 (m1+m2)^2 (m1^2 + m1 m2 + m2^2) - (n1/m1 - n2/m2)^2]
// with n = lambda k. The two routes are compared exactly on every call.
Rational resonance_kpi5(LatticeFrequency f1, LatticeFrequency f2);

// Same dual-route evaluation for the third-order model, closed form
//   (m1 m2 / (m1+m2)) * [3 (m1+m2)^2 + (n1/m1 - n2/m2)^2].
Rational resonance_kpii(LatticeFrequency f1, LatticeFrequency f2);

// Signed near-resonance gaps of the ansatz neighbours:
//   Omega_{n-1} = -Omega((1,0), (n-1, alpha_index)),
//   Omega_{n+1} = +Omega((1,0), (n+1, alpha_index)).
// Both are positive and grow like 30 n^3.
std::pair<Rational, Rational> omega_npm1(const AdmissibleIndex& idx);

struct ResonantPair {
  LatticeFrequency f1;
  LatticeFrequency f2;
};

// Exhaustive scan of 0 < |m_i| <= max_m, |k_i| <= max_k, m1 + m2 != 0 for
// pairs with Omega = 0 exactly. Deterministic lexicographic order.
std::vector<ResonantPair> resonance_search(long long max_m, long long max_k);

}  // namespace kp5
