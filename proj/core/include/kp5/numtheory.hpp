#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace kp5 {

// Solution of X^2 - ell*Y^2 = -3, stored with X, Y >= 0 after normalization.
struct PellSolution {
  mpz_class X;
  mpz_class Y;
  unsigned long ell = 7;
};

// Fundamental solution of u^2 - ell*v^2 = 1 with u, v > 0 minimal.
struct FundamentalUnit {
  mpz_class u;
  mpz_class v;
  unsigned long ell = 7;
};

// Transverse frequency data for an admissible index n:
//   n^2 + n + 1 = 7*n1^2,  alpha_index = n*(n+1)*n1,
// so that n*(n+1)*sqrt(5n^2+5n+5) = sqrt(35)*alpha_index.
struct AdmissibleIndex {
  mpz_class n;
  mpz_class n1;
  mpz_class alpha_index;

  long long n_ll() const;            // throws parameter_error if out of range
  long long alpha_ll() const;
};

// Smallest positive solution of u^2 - ell*v^2 = 1 via the continued fraction
// expansion of sqrt(ell). Throws parameter_error if ell is a perfect square.
FundamentalUnit pell_fundamental(unsigned long ell);

// Brings one solution of X^2 - 7Y^2 = -3 to the next by multiplying with the
// fundamental unit of ell = 7: (X, Y) -> (u*X + 7*v*Y, v*X + u*Y).
PellSolution compose(const PellSolution& s, const FundamentalUnit& unit);

bool is_admissible(const mpz_class& n);

// Validates n and fills in the witness n1 and alpha_index.
// Throws parameter_error with the defining identity if n is not admissible.
AdmissibleIndex admissible_from_n(const mpz_class& n);

// First `count` admissible indices in increasing order, generated from the
// seed solutions of X^2 - 7Y^2 = -3 composed with powers of the fundamental
// unit, keeping X odd and Y even, and mapping n = (X-1)/2, n1 = Y/2.
std::vector<AdmissibleIndex> generate_admissible(std::size_t count);

// Exhaustive reference scan: every n <= limit with n^2 + n + 1 = 7 * square.
std::vector<AdmissibleIndex> brute_force_admissible(const mpz_class& limit);

}  // namespace kp5
