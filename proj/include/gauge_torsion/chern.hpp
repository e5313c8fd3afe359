#ifndef GAUGE_TORSION_CHERN_HPP
#define GAUGE_TORSION_CHERN_HPP

#include <cstdint>

#include "gauge_torsion/polyring.hpp"
#include "gauge_torsion/sparse_poly.hpp"

namespace gauge {

  // c_1..c_n with c_j in weighted degree j (cohomological degree 2j).
  struct ChernClasses {
    static constexpr std::uint32_t weight(std::size_t i) { return static_cast<std::uint32_t>(i + 1); }
    static std::string name(std::size_t i) { return "c" + std::to_string(i + 1); }
  };

  using ChernMonomial = Monomial<ChernClasses>;
  using ChernPoly = SparsePoly<ChernClasses>;

  inline ChernPoly chern_class(std::size_t n, Prime p, std::size_t j) { return ChernPoly::generator(n, p, j); }

  // Formal partial derivative in c_j (1-based).
  ChernPoly partial_derivative(const ChernPoly& f, std::size_t j);

  // c_j -> e_j(t_1..t_n).
  MultiPoly iota_star(const ChernPoly& f);

  // c_j -> binom(n, j) u^j; agrees with diagonal_eval(iota_star(f)).
  UniPoly phi_star(const ChernPoly& f);

  // S_m in c_1..c_n with iota_star(S_m) = s_m, from Newton's identities.
  // Memoized per (n, p); m >= 1.
  const ChernPoly& lift_power_sum(std::size_t m, std::size_t n, Prime p);

  struct NewtonCheck {
    bool holds;
    MultiPoly residual;
  };

  // s_(n+i+1) + sum_{j=1}^n (-1)^j e_j s_(n+i+1-j), evaluated in the t-ring.
  NewtonCheck verify_newton(std::size_t n, std::size_t i, Prime p);

} // namespace gauge

#endif // GAUGE_TORSION_CHERN_HPP
