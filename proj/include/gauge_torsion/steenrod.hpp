#ifndef GAUGE_TORSION_STEENROD_HPP
#define GAUGE_TORSION_STEENROD_HPP

#include <cstdint>

#include "gauge_torsion/polyring.hpp"

namespace gauge {

  // Reduced power R^i on F_p[t_1..t_n] with every t_k in degree 2:
  //   R^i(t^e) = binom(e, i) t^(e + i(p-1)),  R^i(fg) = sum_{a+b=i} R^a(f) R^b(g).
  // For p = 2 this is Sq^(2i) on the even-degree subring.
  MultiPoly reduced_power(std::uint64_t i, const MultiPoly& f);

  // Q_l as the derivation with Q_l(t_k) = t_k^(p^l).
  MultiPoly milnor_q_closed(unsigned l, const MultiPoly& f);

  // Q_1 = R^1, Q_l = R^(p^(l-1)) Q_(l-1) - Q_(l-1) R^(p^(l-1)).
  MultiPoly milnor_q_recursive(unsigned l, const MultiPoly& f);

  struct MilnorC2Check {
    bool holds;
    MultiPoly q_of_c2;          // Q_l(e_2)
    MultiPoly power_sum_side;   // s_1 s_(p^l) - s_(p^l + 1)
  };

  // Q_l c_2 = s_1 s_(p^l) - s_(p^l + 1) inside F_p[t_1..t_n].
  MilnorC2Check verify_milnor_c2(std::size_t n, Prime p, unsigned l);

} // namespace gauge

#endif // GAUGE_TORSION_STEENROD_HPP
