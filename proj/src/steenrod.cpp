#include "gauge_torsion/steenrod.hpp"

#include "gauge_torsion/errors.hpp"

namespace gauge {

  namespace {

    std::uint64_t ipow(std::uint64_t base, unsigned e)
    {
      std::uint64_t r = 1;
      while (e--)
        r *= base;
      return r;
    }

    // Distributes the remaining index over variables v.. of the source
    // monomial (Cartan formula on a product of generators).
    void expand_monomial(const TMonomial& source, std::size_t v, std::uint64_t remaining, std::uint64_t shift,
                         TMonomial& current, const FpScalar& coeff, MultiPoly& out)
    {
      const Prime p = out.prime();
      if (v == source.size()) {
        if (remaining == 0)
          out.add_term(current, coeff);
        return;
      }
      const std::uint32_t e = source[v];
      const std::uint64_t top = std::min<std::uint64_t>(e, remaining);
      for (std::uint64_t iv = 0; iv <= top; ++iv) {
        FpScalar b = binom_mod(e, static_cast<std::int64_t>(iv), p);
        if (b.is_zero())
          continue;
        current[v] = static_cast<std::uint32_t>(e + iv * shift);
        expand_monomial(source, v + 1, remaining - iv, shift, current, coeff * b, out);
      }
      current[v] = e;
    }

  } // namespace

  MultiPoly reduced_power(std::uint64_t i, const MultiPoly& f)
  {
    if (i == 0)
      return f;
    const std::uint64_t shift = f.prime().value() - 1;
    MultiPoly out(f.nvars(), f.prime());
    for (const auto& [m, c] : f.terms()) {
      TMonomial current = m;
      expand_monomial(m, 0, i, shift, current, c, out);
    }
    return out;
  }

  MultiPoly milnor_q_closed(unsigned l, const MultiPoly& f)
  {
    if (l == 0)
      throw DomainError("Milnor primitive index must be >= 1");
    const Prime p = f.prime();
    const auto bump = static_cast<std::uint32_t>(ipow(p, l) - 1);
    MultiPoly out(f.nvars(), p);
    for (const auto& [m, c] : f.terms()) {
      for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0)
          continue;
        TMonomial d = m;
        d[v] += bump;
        out.add_term(d, c * FpScalar(static_cast<std::int64_t>(m[v]), p));
      }
    }
    return out;
  }

  MultiPoly milnor_q_recursive(unsigned l, const MultiPoly& f)
  {
    if (l == 0)
      throw DomainError("Milnor primitive index must be >= 1");
    if (l == 1)
      return reduced_power(1, f);
    const std::uint64_t q = ipow(f.prime(), l - 1);
    return reduced_power(q, milnor_q_recursive(l - 1, f)) - milnor_q_recursive(l - 1, reduced_power(q, f));
  }

  MilnorC2Check verify_milnor_c2(std::size_t n, Prime p, unsigned l)
  {
    if (n < 2)
      throw DomainError("Milnor c_2 formula needs n >= 2");
    if (l == 0)
      throw DomainError("Milnor primitive index must be >= 1");
    const std::uint64_t q = ipow(p, l);
    MultiPoly lhs = milnor_q_recursive(l, elementary_sym(n, 2, p));
    MultiPoly rhs = power_sum(n, 1, p) * power_sum(n, q, p) - power_sum(n, q + 1, p);
    bool holds = lhs == rhs;
    return {holds, std::move(lhs), std::move(rhs)};
  }

} // namespace gauge
