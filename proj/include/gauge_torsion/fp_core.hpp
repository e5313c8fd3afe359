#ifndef GAUGE_TORSION_FP_CORE_HPP
#define GAUGE_TORSION_FP_CORE_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gauge {

  // Deterministic trial division; intended for the small moduli used here.
  bool is_prime(std::uint64_t value);

  // A prime modulus. Construction checks primality; values are limited to
  // 32 bits so that residue products fit in 64-bit words.
  class Prime {
  public:
    explicit Prime(std::uint64_t value);

    std::uint64_t value() const { return value_; }
    operator std::uint64_t() const { return value_; }

    friend bool operator==(Prime a, Prime b) = default;

  private:
    std::uint64_t value_;
  };

  // An element of F_p held as its canonical residue in [0, p).
  class FpScalar {
  public:
    FpScalar(std::int64_t value, Prime modulus);
    FpScalar(const mpz_class& value, Prime modulus);

    static FpScalar zero(Prime p) { return FpScalar(0, p); }
    static FpScalar one(Prime p) { return FpScalar(1, p); }

    std::uint64_t residue() const { return residue_; }
    Prime modulus() const { return modulus_; }
    bool is_zero() const { return residue_ == 0; }

    // Representative in (-p/2, p/2]; used for display only.
    std::int64_t symmetric() const;

    FpScalar inverse() const;
    FpScalar pow(std::uint64_t e) const;

    FpScalar operator-() const;
    FpScalar& operator+=(const FpScalar& other);
    FpScalar& operator-=(const FpScalar& other);
    FpScalar& operator*=(const FpScalar& other);

    friend FpScalar operator+(FpScalar a, const FpScalar& b) { return a += b; }
    friend FpScalar operator-(FpScalar a, const FpScalar& b) { return a -= b; }
    friend FpScalar operator*(FpScalar a, const FpScalar& b) { return a *= b; }

    friend bool operator==(const FpScalar& a, const FpScalar& b);

  private:
    FpScalar(std::uint64_t residue, Prime modulus, int) : residue_(residue), modulus_(modulus) {}
    void check_same_field(const FpScalar& other) const;

    std::uint64_t residue_;
    Prime modulus_;
  };

  std::ostream& operator<<(std::ostream& os, const FpScalar& a);

  enum class FpOp { add, sub, mul };
  FpScalar fp_arith(const FpScalar& a, const FpScalar& b, FpOp op);
  FpScalar fp_inv(const FpScalar& a);

  // Exact binomial coefficient; zero when j < 0 or j > n. Rejects n < 0.
  mpz_class binom_int(std::int64_t n, std::int64_t j);

  // binom(n, j) mod p by Lucas' theorem on the base-p digits.
  FpScalar binom_mod(std::int64_t n, std::int64_t j, Prime p);

  // Largest e with p^e | m. Rejects m = 0.
  unsigned padic_val(const mpz_class& m, Prime p);
  unsigned padic_val(std::uint64_t m, Prime p);

  // Smallest power p^m with p^m >= n, for n >= 2.
  std::uint64_t p_power_ceil(std::uint64_t n, Prime p);

  bool is_power_of(std::uint64_t value, Prime p);

  std::vector<Prime> primes_up_to(std::uint64_t bound);
  std::vector<Prime> prime_divisors(std::uint64_t n);

  // Parses "2,3,5" into primes; throws DomainError on a non-prime entry.
  std::vector<Prime> parse_prime_list(const std::string& text);

} // namespace gauge

#endif // GAUGE_TORSION_FP_CORE_HPP
