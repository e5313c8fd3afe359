#ifndef GAUGE_TORSION_TESTS_ORACLES_HPP
#define GAUGE_TORSION_TESTS_ORACLES_HPP

// Independent reference computations used only by the tests. None of these
// call into the code paths they are used to check.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "gauge_torsion/chern.hpp"
#include "gauge_torsion/matfp.hpp"
#include "gauge_torsion/polyring.hpp"

namespace oracle {

  // Row n of Pascal's triangle by repeated addition.
  inline std::vector<mpz_class> pascal_row(unsigned n)
  {
    std::vector<mpz_class> row{1};
    for (unsigned r = 1; r <= n; ++r) {
      std::vector<mpz_class> next(r + 1);
      next[0] = next[r] = 1;
      for (unsigned j = 1; j < r; ++j)
        next[j] = row[j - 1] + row[j];
      row = std::move(next);
    }
    return row;
  }

  // Inverse mod p by exhaustive search.
  inline std::uint64_t inverse_by_search(std::uint64_t a, std::uint64_t p)
  {
    for (std::uint64_t x = 1; x < p; ++x)
      if ((a * x) % p == 1)
        return x;
    return 0;
  }

  // Laplace expansion along the last column, skipping zero entries.
  inline mpz_class laplace_det(const std::vector<std::vector<mpz_class>>& m)
  {
    const std::size_t n = m.size();
    if (n == 1)
      return m[0][0];
    mpz_class total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i][n - 1] == 0)
        continue;
      std::vector<std::vector<mpz_class>> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i)
          continue;
        minor.emplace_back(m[r].begin(), m[r].end() - 1);
      }
      mpz_class term = m[i][n - 1] * laplace_det(minor);
      if ((i + n - 1) % 2 == 1)
        term = -term;
      total += term;
    }
    return total;
  }

  inline std::vector<std::vector<mpz_class>> rows_of(const gauge::IntMatrix& x)
  {
    std::vector<std::vector<mpz_class>> rows(x.dim(), std::vector<mpz_class>(x.dim()));
    for (std::size_t i = 0; i < x.dim(); ++i)
      for (std::size_t j = 0; j < x.dim(); ++j)
        rows[i][j] = x(i, j);
    return rows;
  }

  // Order by multiplying M into an accumulator until it returns to I.
  inline std::uint64_t brute_force_order(const gauge::FpMatrix& m, std::uint64_t cap)
  {
    gauge::FpMatrix acc = m;
    for (std::uint64_t e = 1; e <= cap; ++e) {
      if (acc.is_identity())
        return e;
      acc = gauge::mat_mul(acc, m);
    }
    return 0;
  }

  // Sum over monomials of t^e written term by term with explicit exponent lists.
  inline gauge::MultiPoly poly(std::size_t n, gauge::Prime p,
                               const std::vector<std::pair<std::int64_t, std::vector<std::uint32_t>>>& terms)
  {
    gauge::MultiPoly f(n, p);
    for (const auto& [c, e] : terms)
      f.add_term(gauge::TMonomial(e), gauge::FpScalar(c, p));
    return f;
  }

  inline gauge::ChernPoly chern_poly(std::size_t n, gauge::Prime p,
                                     const std::vector<std::pair<std::int64_t, std::vector<std::uint32_t>>>& terms)
  {
    gauge::ChernPoly f(n, p);
    for (const auto& [c, e] : terms)
      f.add_term(gauge::ChernMonomial(e), gauge::FpScalar(c, p));
    return f;
  }

  // Random sparse polynomial with up to max_terms terms of total degree <= max_degree.
  template <class Poly>
  Poly random_poly(std::mt19937_64& rng, std::size_t n, gauge::Prime p, unsigned max_terms, unsigned max_degree)
  {
    Poly f(n, p);
    std::uniform_int_distribution<unsigned> nterms(0, max_terms);
    std::uniform_int_distribution<std::int64_t> coeff(1, static_cast<std::int64_t>(p.value()) - 1);
    std::uniform_int_distribution<std::size_t> var(0, n - 1);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    const unsigned count = nterms(rng);
    for (unsigned t = 0; t < count; ++t) {
      typename Poly::monomial_type m(n);
      const unsigned d = deg(rng);
      for (unsigned s = 0; s < d; ++s)
        m[var(rng)] += 1;
      f.add_term(m, gauge::FpScalar(coeff(rng), p));
    }
    return f;
  }

} // namespace oracle

#endif // GAUGE_TORSION_TESTS_ORACLES_HPP
