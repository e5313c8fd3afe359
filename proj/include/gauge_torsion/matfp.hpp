#ifndef GAUGE_TORSION_MATFP_HPP
#define GAUGE_TORSION_MATFP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gauge_torsion/fp_core.hpp"

namespace gauge {

  // Square matrix of unbounded integers, row-major, dimension >= 2.
  class IntMatrix {
  public:
    explicit IntMatrix(std::size_t n);

    static IntMatrix identity(std::size_t n);

    std::size_t dim() const { return n_; }
    // 0-based access
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    mpz_class& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    bool is_upper_triangular() const;
    bool is_lower_triangular() const;

    // Aligned rows: "[ 2 -1]\n[ 1  0]"
    std::string to_text() const;
    // Compact "[[2,-1],[1,0]]"
    std::string to_inline() const;
    // Entries as decimal strings, one nested vector per row.
    std::vector<std::vector<std::string>> to_strings() const;

  private:
    std::size_t n_;
    std::vector<mpz_class> entries_;
  };

  // Square matrix over F_p.
  class FpMatrix {
  public:
    FpMatrix(std::size_t n, Prime p);

    static FpMatrix identity(std::size_t n, Prime p);

    std::size_t dim() const { return n_; }
    Prime prime() const { return p_; }
    const FpScalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    FpScalar& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

    bool is_identity() const;
    FpMatrix pow(std::uint64_t e) const;
    FpScalar determinant() const;

    friend bool operator==(const FpMatrix& a, const FpMatrix& b);

    std::string to_text() const;
    std::string to_inline() const;
    std::vector<std::vector<std::string>> to_strings() const;

  private:
    std::size_t n_;
    Prime p_;
    std::vector<FpScalar> entries_;
  };

  // b_(1,j) = (-1)^(j+1) binom(n, j); b_(i,j) = 1 if i = j + 1 (rows 2..n).
  IntMatrix build_B(std::size_t n);
  // a_(i,j) = binom(n - i, n - j): upper unitriangular.
  IntMatrix build_A(std::size_t n);
  // Identity plus ones on the subdiagonal.
  IntMatrix build_D(std::size_t n);

  IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);
  FpMatrix mat_mul(const FpMatrix& x, const FpMatrix& y);
  FpMatrix mat_reduce(const IntMatrix& x, Prime p);

  // Exact inverse of a triangular matrix with unit diagonal.
  IntMatrix mat_inv_unitriangular(const IntMatrix& x);

  // Fraction-free (Bareiss) determinant.
  mpz_class determinant(const IntMatrix& x);

  struct ConjugationCheck {
    bool holds;
    bool ba_equals_ad;
    bool ba_matches_binomials;
    bool conjugate_equals_d;
    IntMatrix ba;
    IntMatrix ad;
    IntMatrix a_inv_b_a;
  };

  // BA = AD, (BA)_(i,j) = binom(n-i+1, n-j) (1-based), and A^-1 B A = D.
  ConjugationCheck verify_conjugation(std::size_t n);

  // Least e >= 1 with M^e = I, searched among p-powers p^m <= bound.
  std::uint64_t mat_order_mod_p(const FpMatrix& m, std::uint64_t bound);

  struct OrderCheck {
    bool holds;              // order is a power of p
    bool matches_ceiling;    // order equals p_power_ceil(n, p)
    std::uint64_t order;
    std::uint64_t expected;  // p_power_ceil(n, p)
  };

  OrderCheck verify_b_order(std::size_t n, Prime p);

} // namespace gauge

#endif // GAUGE_TORSION_MATFP_HPP
