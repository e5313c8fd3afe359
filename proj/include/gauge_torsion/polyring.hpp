#ifndef GAUGE_TORSION_POLYRING_HPP
#define GAUGE_TORSION_POLYRING_HPP

#include <cstdint>
#include <map>
#include <string>

#include "gauge_torsion/fp_core.hpp"
#include "gauge_torsion/sparse_poly.hpp"

namespace gauge {

  // t_1..t_n, each of internal degree 1 (cohomological degree 2).
  struct TVariables {
    static constexpr std::uint32_t weight(std::size_t) { return 1; }
    static std::string name(std::size_t i) { return "t" + std::to_string(i + 1); }
  };

  using TMonomial = Monomial<TVariables>;
  using MultiPoly = SparsePoly<TVariables>;

  inline std::uint64_t cohomological_degree(const TMonomial& m) { return 2 * m.degree(); }

  // Polynomial in the single class u (cohomological degree 2).
  class UniPoly {
  public:
    explicit UniPoly(Prime p) : p_(p) {}

    static UniPoly monomial(Prime p, std::uint64_t exponent, const FpScalar& c)
    {
      UniPoly f(p);
      f.add_term(exponent, c);
      return f;
    }

    Prime prime() const { return p_; }
    const std::map<std::uint64_t, FpScalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    FpScalar coefficient(std::uint64_t e) const;

    void add_term(std::uint64_t exponent, const FpScalar& c);

    UniPoly& operator+=(const UniPoly& g);
    UniPoly& operator-=(const UniPoly& g);
    friend UniPoly operator+(UniPoly f, const UniPoly& g) { return f += g; }
    friend UniPoly operator-(UniPoly f, const UniPoly& g) { return f -= g; }
    friend UniPoly operator*(const UniPoly& f, const UniPoly& g);
    UniPoly scaled(const FpScalar& s) const;

    friend bool operator==(const UniPoly& f, const UniPoly& g);

    // "2*u^3 + u"
    std::string to_string() const;

  private:
    void check_ring(const UniPoly& g) const;

    Prime p_;
    std::map<std::uint64_t, FpScalar> coeffs_;
  };

  MultiPoly poly_add(const MultiPoly& f, const MultiPoly& g);
  MultiPoly poly_mul(const MultiPoly& f, const MultiPoly& g);

  // e_i(t_1..t_n); e_0 = 1 and e_i = 0 for i > n.
  MultiPoly elementary_sym(std::size_t n, std::size_t i, Prime p);

  // t_1^i + ... + t_n^i for i >= 1.
  MultiPoly power_sum(std::size_t n, std::size_t i, Prime p);

  // Invariance under every adjacent transposition.
  bool is_symmetric(const MultiPoly& f);

  // t_i -> u for every i.
  UniPoly diagonal_eval(const MultiPoly& f);

} // namespace gauge

#endif // GAUGE_TORSION_POLYRING_HPP
