#include <doctest.h>

#include <random>

#include "gauge_torsion/errors.hpp"
#include "gauge_torsion/steenrod.hpp"
#include "oracles.hpp"

using namespace gauge;

TEST_CASE("reduced_power on generators")
{
  CHECK(reduced_power(1, MultiPoly::generator(1, Prime(3), 1)).to_string() == "t1^3");
  const Prime two(2);
  MultiPoly t1t2 = oracle::poly(2, two, {{1, {1, 1}}});
  CHECK(reduced_power(1, t1t2).to_string() == "t1^2*t2 + t1*t2^2");
  CHECK(reduced_power(2, oracle::poly(1, two, {{1, {2}}})).to_string() == "t1^4");
  MultiPoly f = oracle::poly(2, Prime(5), {{3, {2, 1}}, {1, {0, 0}}});
  CHECK(reduced_power(0, f) == f);
  // above the degree of t^e the operation is zero
  CHECK(reduced_power(2, MultiPoly::generator(2, Prime(5), 1)).is_zero());
}

TEST_CASE("milnor_q_closed")
{
  const Prime two(2);
  CHECK(milnor_q_closed(1, MultiPoly::generator(1, two, 1)).to_string() == "t1^2");
  CHECK(milnor_q_closed(3, MultiPoly::one(2, Prime(3))).is_zero());
  CHECK(milnor_q_closed(1, oracle::poly(2, two, {{1, {1, 1}}})).to_string() == "t1^2*t2 + t1*t2^2");
  CHECK_THROWS_AS(milnor_q_closed(0, MultiPoly::one(1, two)), DomainError);
}

TEST_CASE("milnor_q_recursive")
{
  CHECK(milnor_q_recursive(1, MultiPoly::generator(1, Prime(3), 1)).to_string() == "t1^3");
  // Q_2 t = Sq^4 Q_1 t - Q_1 Sq^4 t = Sq^4(t^2) - 0
  CHECK(milnor_q_recursive(2, MultiPoly::generator(1, Prime(2), 1)).to_string() == "t1^4");
  MultiPoly t = MultiPoly::generator(1, Prime(3), 1);
  CHECK(milnor_q_recursive(2, t) == milnor_q_closed(2, t));
  CHECK(milnor_q_recursive(2, t).to_string() == "t1^9");
}

TEST_CASE("verify_milnor_c2 examples")
{
  auto r = verify_milnor_c2(2, Prime(2), 1);
  CHECK(r.holds);
  CHECK(r.q_of_c2.to_string() == "t1^2*t2 + t1*t2^2");
  CHECK(r.power_sum_side.to_string() == "t1^2*t2 + t1*t2^2");
  CHECK(verify_milnor_c2(3, Prime(3), 1).holds);
  CHECK(verify_milnor_c2(2, Prime(2), 2).holds);
}

TEST_CASE("closed and recursive Milnor primitives agree on random polynomials")
{
  std::mt19937_64 rng(42);
  for (Prime p : {Prime(2), Prime(3), Prime(5)})
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + trial % 3;
      auto f = oracle::random_poly<MultiPoly>(rng, n, p, 4, 6);
      for (unsigned l = 1; l <= 2; ++l)
        REQUIRE(milnor_q_closed(l, f) == milnor_q_recursive(l, f));
    }
}

TEST_CASE("the recursive Milnor primitive satisfies the Leibniz rule")
{
  std::mt19937_64 rng(7);
  for (Prime p : {Prime(2), Prime(3), Prime(5)})
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + trial % 3;
      auto f = oracle::random_poly<MultiPoly>(rng, n, p, 3, 3);
      auto g = oracle::random_poly<MultiPoly>(rng, n, p, 3, 3);
      for (unsigned l = 1; l <= 2; ++l)
        REQUIRE(milnor_q_recursive(l, f * g) == milnor_q_recursive(l, f) * g + f * milnor_q_recursive(l, g));
    }
}

TEST_CASE("Cartan formula: the total reduced power is multiplicative")
{
  std::mt19937_64 rng(11);
  for (Prime p : {Prime(2), Prime(3), Prime(5)})
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + trial % 3;
      auto f = oracle::random_poly<MultiPoly>(rng, n, p, 3, 3);
      auto g = oracle::random_poly<MultiPoly>(rng, n, p, 3, 3);
      const std::uint64_t top = f.degree() + g.degree();
      for (std::uint64_t i = 0; i <= top; ++i) {
        MultiPoly sum(n, p);
        for (std::uint64_t a = 0; a <= i; ++a)
          sum += reduced_power(a, f) * reduced_power(i - a, g);
        REQUIRE(reduced_power(i, f * g) == sum);
      }
    }
}

TEST_CASE("Milnor c_2 formula over the full sweep")
{
  for (Prime p : {Prime(2), Prime(3), Prime(5)})
    for (std::size_t n = 2; n <= 5; ++n)
      for (unsigned l = 1; l <= 2; ++l) {
        std::uint64_t q = l == 1 ? p.value() : p.value() * p.value();
        if (q + 1 > 26)
          continue;
        CAPTURE(n);
        CAPTURE(p.value());
        CAPTURE(l);
        REQUIRE(verify_milnor_c2(n, p, l).holds);
      }
}

// In characteristic 2 the square of a derivation is again a derivation, and
// it kills every t_k. At odd p this even-degree Q_l does not square to zero
// (Q_1 Q_1 t^2 = 2(p+1) t^(2p) at p = 3).
TEST_CASE("Q_l squares to zero at p = 2")
{
  std::mt19937_64 rng(3);
  const Prime two(2);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = oracle::random_poly<MultiPoly>(rng, 3, two, 4, 5);
    for (unsigned l = 1; l <= 2; ++l)
      CHECK(milnor_q_closed(l, milnor_q_closed(l, f)).is_zero());
  }
  MultiPoly t_sq = oracle::poly(1, Prime(3), {{1, {2}}});
  CHECK_FALSE(milnor_q_closed(1, milnor_q_closed(1, t_sq)).is_zero());
}
