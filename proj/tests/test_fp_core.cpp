#include <doctest.h>

#include "gauge_torsion/errors.hpp"
#include "gauge_torsion/fp_core.hpp"
#include "oracles.hpp"

using namespace gauge;

TEST_CASE("prime construction rejects composites")
{
  CHECK(Prime(2).value() == 2);
  CHECK(Prime(97).value() == 97);
  CHECK_THROWS_AS(Prime(1), DomainError);
  CHECK_THROWS_AS(Prime(9), DomainError);
  CHECK_THROWS_AS(Prime(0), DomainError);
}

TEST_CASE("fp_arith canonical residues")
{
  CHECK(fp_arith(FpScalar(1, Prime(2)), FpScalar(1, Prime(2)), FpOp::add).residue() == 0);
  CHECK(fp_arith(FpScalar(2, Prime(3)), FpScalar(2, Prime(3)), FpOp::mul).residue() == 1);
  CHECK(fp_arith(FpScalar(0, Prime(5)), FpScalar(1, Prime(5)), FpOp::sub).residue() == 4);
  CHECK(FpScalar(-7, Prime(5)).residue() == 3);
  CHECK(FpScalar(mpz_class(-7), Prime(5)).residue() == 3);
}

TEST_CASE("fp_arith rejects mixed moduli")
{
  CHECK_THROWS_AS(FpScalar(1, Prime(3)) + FpScalar(1, Prime(5)), StructuralError);
  CHECK_THROWS_AS(fp_arith(FpScalar(1, Prime(3)), FpScalar(1, Prime(5)), FpOp::mul), StructuralError);
}

TEST_CASE("fp_inv")
{
  CHECK(fp_inv(FpScalar(1, Prime(13))).residue() == 1);
  CHECK(fp_inv(FpScalar(2, Prime(5))).residue() == 3);
  CHECK(oracle::inverse_by_search(4, 7) == 2);
  CHECK(fp_inv(FpScalar(4, Prime(7))).residue() == 2);
  CHECK_THROWS_AS(fp_inv(FpScalar(0, Prime(7))), DivisionByZero);
}

TEST_CASE("fp_inv is a two-sided inverse for every nonzero residue, p <= 97")
{
  for (Prime p : primes_up_to(97))
    for (std::int64_t a = 1; a < static_cast<std::int64_t>(p.value()); ++a) {
      FpScalar x(a, p);
      REQUIRE((x * x.inverse()).residue() == 1);
    }
}

TEST_CASE("binom_int")
{
  CHECK(binom_int(4, 2) == 6);
  CHECK(binom_int(2, 3) == 0);
  CHECK(binom_int(5, -1) == 0);
  const auto row = oracle::pascal_row(60);
  CHECK(row[30] == mpz_class("118264581564861424"));
  CHECK(binom_int(60, 30) == mpz_class("118264581564861424"));
  CHECK_THROWS_AS(binom_int(-1, 0), DomainError);
}

TEST_CASE("binom_int matches Pascal's rule")
{
  for (std::int64_t n = 1; n <= 120; ++n)
    for (std::int64_t j = -1; j <= n + 1; ++j)
      REQUIRE(binom_int(n, j) == binom_int(n - 1, j) + binom_int(n - 1, j - 1));
}

TEST_CASE("binom_mod")
{
  CHECK(binom_mod(4, 2, Prime(2)).residue() == 0);
  CHECK(binom_mod(5, 2, Prime(3)).residue() == 1);
  for (std::int64_t n = 0; n < 30; ++n)
    CHECK(binom_mod(n, 0, Prime(7)).residue() == 1);
  CHECK(binom_mod(3, 5, Prime(7)).residue() == 0);
  CHECK_THROWS_AS(binom_mod(-2, 1, Prime(3)), DomainError);
}

TEST_CASE("Lucas reduction agrees with exact binomials for n <= 200")
{
  for (Prime p : {Prime(2), Prime(3), Prime(5), Prime(7)})
    for (std::int64_t n = 0; n <= 200; ++n)
      for (std::int64_t j = 0; j <= n; ++j)
        REQUIRE(binom_mod(n, j, p) == FpScalar(binom_int(n, j), p));
}

TEST_CASE("padic_val")
{
  CHECK(padic_val(std::uint64_t{12}, Prime(2)) == 2);
  CHECK(padic_val(std::uint64_t{9}, Prime(3)) == 2);
  CHECK(padic_val(std::uint64_t{5}, Prime(2)) == 0);
  CHECK(padic_val(mpz_class("1024"), Prime(2)) == 10);
  CHECK_THROWS_AS(padic_val(std::uint64_t{0}, Prime(2)), DomainError);
  CHECK_THROWS_AS(padic_val(mpz_class(0), Prime(2)), DomainError);
}

TEST_CASE("p_power_ceil")
{
  CHECK(p_power_ceil(2, Prime(2)) == 2);
  CHECK(p_power_ceil(5, Prime(2)) == 8);
  CHECK(p_power_ceil(3, Prime(3)) == 3);
  CHECK(p_power_ceil(2, Prime(11)) == 11);
  CHECK(p_power_ceil(10, Prime(3)) == 27);
  CHECK_THROWS_AS(p_power_ceil(1, Prime(2)), DomainError);
}

TEST_CASE("prime helpers")
{
  auto divs = prime_divisors(60);
  REQUIRE(divs.size() == 3);
  CHECK(divs[0].value() == 2);
  CHECK(divs[2].value() == 5);
  CHECK(primes_up_to(60).size() == 17);
  CHECK(parse_prime_list("2,3,5").size() == 3);
  CHECK_THROWS_AS(parse_prime_list("2,4"), DomainError);
  CHECK_THROWS_AS(parse_prime_list("x"), DomainError);
}
