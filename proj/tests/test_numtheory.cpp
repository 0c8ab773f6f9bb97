#include <doctest.h>

#include <string>

#include "kp5/errors.hpp"
#include "kp5/numtheory.hpp"

using namespace kp5;

TEST_CASE("fundamental Pell units from continued fractions") {
  const FundamentalUnit u7 = pell_fundamental(7);
  CHECK(u7.u == 8);
  CHECK(u7.v == 3);
  const FundamentalUnit u2 = pell_fundamental(2);
  CHECK(u2.u == 3);
  CHECK(u2.v == 2);
  const FundamentalUnit u13 = pell_fundamental(13);
  CHECK(u13.u == 649);
  CHECK(u13.v == 180);
  CHECK_THROWS_AS(pell_fundamental(49), parameter_error);
  CHECK_THROWS_AS(pell_fundamental(0), parameter_error);
}

TEST_CASE("composition walks the X^2 - 7Y^2 = -3 chains") {
  const FundamentalUnit unit = pell_fundamental(7);
  PellSolution s{mpz_class(2), mpz_class(1), 7};
  s = compose(s, unit);
  CHECK(s.X == 37);
  CHECK(s.Y == 14);
  s = compose(s, unit);
  CHECK(s.X == 590);
  CHECK(s.Y == 223);
  s = compose(s, unit);
  CHECK(s.X == 9403);
  CHECK(s.Y == 3554);

  PellSolution r{mpz_class(5), mpz_class(2), 7};
  r = compose(r, unit);
  CHECK(r.X == 82);
  CHECK(r.Y == 31);
  r = compose(r, unit);
  CHECK(r.X == 1307);
  CHECK(r.Y == 494);

  // Composition preserves the quadratic form value exactly.
  CHECK(s.X * s.X - 7 * s.Y * s.Y == -3);
  CHECK(r.X * r.X - 7 * r.Y * r.Y == -3);
}

TEST_CASE("admissible indices: frozen leading values") {
  const auto idxs = generate_admissible(5);
  REQUIRE(idxs.size() == 5);
  CHECK(idxs[0].n == 2);
  CHECK(idxs[1].n == 18);
  CHECK(idxs[2].n == 653);
  CHECK(idxs[3].n == 4701);
  CHECK(idxs[4].n == 165986);
  CHECK(idxs[0].n1 == 1);
  CHECK(idxs[1].n1 == 7);
  CHECK(idxs[2].n1 == 247);
  CHECK(idxs[3].n1 == 1777);
  CHECK(idxs[4].n1 == 62737);
  CHECK(idxs[0].alpha_index == 6);
  CHECK(idxs[1].alpha_index == 2394);
  CHECK(idxs[2].alpha_index == 105484314);
}

TEST_CASE("admissible indices satisfy their defining identities") {
  for (const auto& idx : generate_admissible(12)) {
    CHECK(idx.n * idx.n + idx.n + 1 == 7 * idx.n1 * idx.n1);
    CHECK(idx.alpha_index == idx.n * (idx.n + 1) * idx.n1);
    // 35 * alpha^2 must be divisible by n and by n+1: omega(n, alpha) and the
    // shifted frequency are integers on this family.
    CHECK(mpz_class(35 * idx.alpha_index * idx.alpha_index) % idx.n == 0);
  }
}

TEST_CASE("is_admissible and witness lookup") {
  CHECK(is_admissible(2));
  CHECK(is_admissible(18));
  CHECK(is_admissible(653));
  CHECK_FALSE(is_admissible(1));
  CHECK_FALSE(is_admissible(3));
  CHECK_FALSE(is_admissible(5));
  CHECK_FALSE(is_admissible(17));
  CHECK_FALSE(is_admissible(19));
  CHECK_FALSE(is_admissible(0));
  CHECK_FALSE(is_admissible(-2));

  const AdmissibleIndex idx = admissible_from_n(18);
  CHECK(idx.n1 == 7);
  CHECK(idx.alpha_index == 2394);

  try {
    admissible_from_n(3);
    FAIL("expected parameter_error");
  } catch (const parameter_error& e) {
    CHECK(std::string(e.what()).find("7*n1^2") != std::string::npos);
  }
}

TEST_CASE("generator agrees with the exhaustive scan") {
  const auto slow = brute_force_admissible(10000);
  REQUIRE(slow.size() == 4);
  CHECK(slow[0].n == 2);
  CHECK(slow[1].n == 18);
  CHECK(slow[2].n == 653);
  CHECK(slow[3].n == 4701);
  const auto fast = generate_admissible(4);
  for (std::size_t i = 0; i < slow.size(); ++i) {
    CHECK(fast[i].n == slow[i].n);
    CHECK(fast[i].n1 == slow[i].n1);
    CHECK(fast[i].alpha_index == slow[i].alpha_index);
  }
}

TEST_CASE("narrowing accessors guard against overflow") {
  const auto idxs = generate_admissible(2);
  CHECK(idxs[0].n_ll() == 2);
  CHECK(idxs[0].alpha_ll() == 6);
  CHECK(idxs[1].n_ll() == 18);
  CHECK(idxs[1].alpha_ll() == 2394);

  const auto big = generate_admissible(40).back();
  CHECK(big.n > mpz_class("1000000000000000000000"));
  CHECK_THROWS_AS(big.n_ll(), parameter_error);
}
