#include "kp5/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "kp5/errors.hpp"

namespace kp5 {

namespace {

long long narrow(const mpz_class& v, const char* what) {
  if (!v.fits_slong_p()) {
    throw parameter_error(std::string(what) + " does not fit in a machine word");
  }
  long sl = v.get_si();
  return static_cast<long long>(sl);
}

bool seven_square_witness(const mpz_class& n, mpz_class& n1) {
  mpz_class q = n * n + n + 1;
  if (q % 7 != 0) return false;
  mpz_class s = q / 7;
  mpz_class r = sqrt(s);  // floor square root
  if (r * r != s) return false;
  n1 = r;
  return true;
}

}  // namespace

long long AdmissibleIndex::n_ll() const { return narrow(n, "admissible n"); }
long long AdmissibleIndex::alpha_ll() const { return narrow(alpha_index, "alpha_index"); }

FundamentalUnit pell_fundamental(unsigned long ell) {
  mpz_class d(static_cast<unsigned long>(ell));
  mpz_class a0 = sqrt(d);
  if (a0 * a0 == d) {
    std::ostringstream os;
    os << "ell = " << ell << " is a perfect square; u^2 - ell*v^2 = 1 has no fundamental unit";
    throw parameter_error(os.str());
  }

  // Continued fraction of sqrt(ell); convergents p/q until p^2 - ell*q^2 = 1.
  mpz_class m = 0, den = 1, a = a0;
  mpz_class p_prev = 1, p = a0;
  mpz_class q_prev = 0, q = 1;
  while (p * p - d * q * q != 1) {
    m = den * a - m;
    den = (d - m * m) / den;
    a = (a0 + m) / den;
    mpz_class p_next = a * p + p_prev;
    mpz_class q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
  return FundamentalUnit{p, q, ell};
}

PellSolution compose(const PellSolution& s, const FundamentalUnit& unit) {
  if (s.ell != unit.ell) throw parameter_error("compose: mismatched ell");
  mpz_class ell(static_cast<unsigned long>(s.ell));
  PellSolution out;
  out.ell = s.ell;
  out.X = unit.u * s.X + ell * unit.v * s.Y;
  out.Y = unit.v * s.X + unit.u * s.Y;
  return out;
}

bool is_admissible(const mpz_class& n) {
  if (n <= 0) return false;
  mpz_class n1;
  return seven_square_witness(n, n1);
}

AdmissibleIndex admissible_from_n(const mpz_class& n) {
  mpz_class n1;
  if (n <= 0 || !seven_square_witness(n, n1)) {
    std::ostringstream os;
    os << "n = " << n << " is not admissible: n^2+n+1 = 7*n1^2 has no integer witness";
    throw parameter_error(os.str());
  }
  return AdmissibleIndex{n, n1, n * (n + 1) * n1};
}

std::vector<AdmissibleIndex> generate_admissible(std::size_t count) {
  std::vector<AdmissibleIndex> out;
  if (count == 0) return out;

  const FundamentalUnit unit = pell_fundamental(7);

  // Candidate seeds cover both orderings of the small solution (2,1) and its
  // conjugate class; invalid orderings fail the hyperbola identity and drop out.
  const long seed_pairs[][2] = {{2, 1}, {2, -1}, {1, 2}, {1, -2}};
  std::vector<PellSolution> chains;
  for (auto& sp : seed_pairs) {
    mpz_class X(sp[0]), Y(sp[1]);
    if (X * X - 7 * Y * Y == -3) chains.push_back(PellSolution{X, Y, 7});
  }

  std::vector<AdmissibleIndex> found;
  // Each chain yields one admissible representative every other composition,
  // so 2*count + 4 steps per chain is comfortably enough.
  const std::size_t steps = 2 * count + 4;
  for (auto& seed : chains) {
    PellSolution cur = seed;
    for (std::size_t i = 0; i < steps; ++i) {
      mpz_class X = abs(cur.X), Y = abs(cur.Y);
      if (X % 2 == 1 && Y % 2 == 0 && X >= 3 && Y >= 2) {
        mpz_class n = (X - 1) / 2;
        mpz_class n1 = Y / 2;
        found.push_back(AdmissibleIndex{n, n1, n * (n + 1) * n1});
      }
      cur = compose(cur, unit);
    }
  }

  std::sort(found.begin(), found.end(),
            [](const AdmissibleIndex& a, const AdmissibleIndex& b) { return a.n < b.n; });
  for (auto& idx : found) {
    if (out.empty() || out.back().n != idx.n) out.push_back(idx);
    if (out.size() == count) break;
  }
  return out;
}

std::vector<AdmissibleIndex> brute_force_admissible(const mpz_class& limit) {
  std::vector<AdmissibleIndex> out;
  mpz_class n1;
  for (mpz_class n = 1; n <= limit; ++n) {
    if (seven_square_witness(n, n1)) {
      out.push_back(AdmissibleIndex{n, n1, n * (n + 1) * n1});
    }
  }
  return out;
}

}  // namespace kp5
