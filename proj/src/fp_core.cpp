#include "gauge_torsion/fp_core.hpp"

#include <limits>
#include <ostream>
#include <sstream>

#include "gauge_torsion/errors.hpp"

namespace gauge {

  bool is_prime(std::uint64_t value)
  {
    if (value < 2)
      return false;
    if (value < 4)
      return true;
    if (value % 2 == 0)
      return false;
    for (std::uint64_t d = 3; d * d <= value; d += 2)
      if (value % d == 0)
        return false;
    return true;
  }

  Prime::Prime(std::uint64_t value) : value_(value)
  {
    if (value > std::numeric_limits<std::uint32_t>::max())
      throw DomainError("prime modulus " + std::to_string(value) + " exceeds 32 bits");
    if (!is_prime(value))
      throw DomainError(std::to_string(value) + " is not prime");
  }

  namespace {

    std::uint64_t reduce_signed(std::int64_t value, std::uint64_t p)
    {
      auto sp = static_cast<std::int64_t>(p);
      std::int64_t r = value % sp;
      if (r < 0)
        r += sp;
      return static_cast<std::uint64_t>(r);
    }

  } // namespace

  FpScalar::FpScalar(std::int64_t value, Prime modulus)
    : residue_(reduce_signed(value, modulus.value())), modulus_(modulus)
  {
  }

  FpScalar::FpScalar(const mpz_class& value, Prime modulus) : residue_(0), modulus_(modulus)
  {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), modulus.value());
    residue_ = r.get_ui();
  }

  std::int64_t FpScalar::symmetric() const
  {
    auto r = static_cast<std::int64_t>(residue_);
    auto p = static_cast<std::int64_t>(modulus_.value());
    return 2 * r > p ? r - p : r;
  }

  void FpScalar::check_same_field(const FpScalar& other) const
  {
    if (modulus_ != other.modulus_)
      throw StructuralError("F_p modulus mismatch: " + std::to_string(modulus_.value()) + " vs "
                            + std::to_string(other.modulus_.value()));
  }

  FpScalar FpScalar::operator-() const
  {
    return FpScalar(residue_ == 0 ? 0 : modulus_.value() - residue_, modulus_, 0);
  }

  FpScalar& FpScalar::operator+=(const FpScalar& other)
  {
    check_same_field(other);
    residue_ += other.residue_;
    if (residue_ >= modulus_.value())
      residue_ -= modulus_.value();
    return *this;
  }

  FpScalar& FpScalar::operator-=(const FpScalar& other)
  {
    check_same_field(other);
    residue_ = residue_ >= other.residue_ ? residue_ - other.residue_
                                          : residue_ + modulus_.value() - other.residue_;
    return *this;
  }

  FpScalar& FpScalar::operator*=(const FpScalar& other)
  {
    check_same_field(other);
    residue_ = (residue_ * other.residue_) % modulus_.value();
    return *this;
  }

  bool operator==(const FpScalar& a, const FpScalar& b)
  {
    a.check_same_field(b);
    return a.residue_ == b.residue_;
  }

  FpScalar FpScalar::pow(std::uint64_t e) const
  {
    FpScalar result = one(modulus_);
    FpScalar base = *this;
    while (e) {
      if (e & 1)
        result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  FpScalar FpScalar::inverse() const
  {
    if (residue_ == 0)
      throw DivisionByZero("inverse of 0 in F_" + std::to_string(modulus_.value()));
    // extended Euclid on (residue, p)
    std::int64_t r0 = static_cast<std::int64_t>(modulus_.value());
    std::int64_t r1 = static_cast<std::int64_t>(residue_);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
      tmp = s0 - q * s1;
      s0 = s1;
      s1 = tmp;
    }
    return FpScalar(s0, modulus_);
  }

  std::ostream& operator<<(std::ostream& os, const FpScalar& a)
  {
    return os << a.residue();
  }

  FpScalar fp_arith(const FpScalar& a, const FpScalar& b, FpOp op)
  {
    switch (op) {
    case FpOp::add:
      return a + b;
    case FpOp::sub:
      return a - b;
    case FpOp::mul:
      return a * b;
    }
    throw DomainError("unknown F_p operation");
  }

  FpScalar fp_inv(const FpScalar& a)
  {
    return a.inverse();
  }

  mpz_class binom_int(std::int64_t n, std::int64_t j)
  {
    if (n < 0)
      throw DomainError("binomial with negative upper argument " + std::to_string(n));
    if (j < 0 || j > n)
      return 0;
    mpz_class result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
    return result;
  }

  namespace {

    // binom(a, b) mod p for 0 <= b <= a < p.
    FpScalar small_binom_mod(std::uint64_t a, std::uint64_t b, Prime p)
    {
      if (b > a - b)
        b = a - b;
      FpScalar num = FpScalar::one(p), den = FpScalar::one(p);
      for (std::uint64_t i = 1; i <= b; ++i) {
        num *= FpScalar(static_cast<std::int64_t>(a + 1 - i), p);
        den *= FpScalar(static_cast<std::int64_t>(i), p);
      }
      return num * den.inverse();
    }

  } // namespace

  FpScalar binom_mod(std::int64_t n, std::int64_t j, Prime p)
  {
    if (n < 0)
      throw DomainError("binomial with negative upper argument " + std::to_string(n));
    if (j < 0 || j > n)
      return FpScalar::zero(p);
    auto a = static_cast<std::uint64_t>(n);
    auto b = static_cast<std::uint64_t>(j);
    FpScalar result = FpScalar::one(p);
    while (a > 0 || b > 0) {
      std::uint64_t ad = a % p, bd = b % p;
      if (bd > ad)
        return FpScalar::zero(p);
      result *= small_binom_mod(ad, bd, p);
      a /= p;
      b /= p;
    }
    return result;
  }

  unsigned padic_val(const mpz_class& m, Prime p)
  {
    if (m == 0)
      throw DomainError("p-adic valuation of 0");
    mpz_class rest = abs(m);
    return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), mpz_class(p.value()).get_mpz_t()));
  }

  unsigned padic_val(std::uint64_t m, Prime p)
  {
    if (m == 0)
      throw DomainError("p-adic valuation of 0");
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    return e;
  }

  std::uint64_t p_power_ceil(std::uint64_t n, Prime p)
  {
    if (n < 2)
      throw DomainError("p_power_ceil needs n >= 2");
    std::uint64_t q = 1;
    while (q < n)
      q *= p;
    return q;
  }

  bool is_power_of(std::uint64_t value, Prime p)
  {
    if (value == 0)
      return false;
    while (value % p == 0)
      value /= p;
    return value == 1;
  }

  std::vector<Prime> primes_up_to(std::uint64_t bound)
  {
    std::vector<Prime> out;
    for (std::uint64_t v = 2; v <= bound; ++v)
      if (is_prime(v))
        out.emplace_back(v);
    return out;
  }

  std::vector<Prime> prime_divisors(std::uint64_t n)
  {
    std::vector<Prime> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        out.emplace_back(d);
        while (n % d == 0)
          n /= d;
      }
    }
    if (n > 1)
      out.emplace_back(n);
    return out;
  }

  std::vector<Prime> parse_prime_list(const std::string& text)
  {
    std::vector<Prime> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty())
        continue;
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(item, &used);
      } catch (const std::exception&) {
        throw DomainError("not an integer: '" + item + "'");
      }
      if (used != item.size())
        throw DomainError("not an integer: '" + item + "'");
      out.emplace_back(v);
    }
    if (out.empty())
      throw DomainError("empty prime list");
    return out;
  }

} // namespace gauge
