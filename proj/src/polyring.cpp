#include "gauge_torsion/polyring.hpp"

#include <sstream>

#include "gauge_torsion/errors.hpp"

namespace gauge {

  FpScalar UniPoly::coefficient(std::uint64_t e) const
  {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? FpScalar::zero(p_) : it->second;
  }

  void UniPoly::add_term(std::uint64_t exponent, const FpScalar& c)
  {
    if (c.modulus() != p_)
      throw StructuralError("coefficient field differs from F_p[u]");
    if (c.is_zero())
      return;
    auto [it, inserted] = coeffs_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        coeffs_.erase(it);
    }
  }

  void UniPoly::check_ring(const UniPoly& g) const
  {
    if (p_ != g.p_)
      throw StructuralError("F_p[u] modulus mismatch");
  }

  UniPoly& UniPoly::operator+=(const UniPoly& g)
  {
    check_ring(g);
    for (const auto& [e, c] : g.coeffs_)
      add_term(e, c);
    return *this;
  }

  UniPoly& UniPoly::operator-=(const UniPoly& g)
  {
    check_ring(g);
    for (const auto& [e, c] : g.coeffs_)
      add_term(e, -c);
    return *this;
  }

  UniPoly operator*(const UniPoly& f, const UniPoly& g)
  {
    f.check_ring(g);
    UniPoly out(f.p_);
    for (const auto& [ef, cf] : f.coeffs_)
      for (const auto& [eg, cg] : g.coeffs_)
        out.add_term(ef + eg, cf * cg);
    return out;
  }

  UniPoly UniPoly::scaled(const FpScalar& s) const
  {
    UniPoly out(p_);
    for (const auto& [e, c] : coeffs_)
      out.add_term(e, c * s);
    return out;
  }

  bool operator==(const UniPoly& f, const UniPoly& g)
  {
    f.check_ring(g);
    return f.coeffs_ == g.coeffs_;
  }

  std::string UniPoly::to_string() const
  {
    if (coeffs_.empty())
      return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      if (!first)
        os << " + ";
      first = false;
      const auto& [e, c] = *it;
      if (e == 0) {
        os << c.residue();
        continue;
      }
      if (c.residue() != 1)
        os << c.residue() << '*';
      os << 'u';
      if (e > 1)
        os << '^' << e;
    }
    return os.str();
  }

  MultiPoly poly_add(const MultiPoly& f, const MultiPoly& g)
  {
    return f + g;
  }

  MultiPoly poly_mul(const MultiPoly& f, const MultiPoly& g)
  {
    return f * g;
  }

  namespace {

    void collect_subsets(std::size_t n, std::size_t remaining, std::size_t start, TMonomial& current,
                         MultiPoly& out)
    {
      if (remaining == 0) {
        out.add_term(current, FpScalar::one(out.prime()));
        return;
      }
      for (std::size_t v = start; v + remaining <= n; ++v) {
        current[v] = 1;
        collect_subsets(n, remaining - 1, v + 1, current, out);
        current[v] = 0;
      }
    }

  } // namespace

  MultiPoly elementary_sym(std::size_t n, std::size_t i, Prime p)
  {
    MultiPoly out(n, p);
    if (i > n)
      return out;
    TMonomial current(n);
    collect_subsets(n, i, 0, current, out);
    return out;
  }

  MultiPoly power_sum(std::size_t n, std::size_t i, Prime p)
  {
    if (i == 0)
      throw DomainError("power sum s_0 is undefined");
    MultiPoly out(n, p);
    for (std::size_t v = 0; v < n; ++v)
      out.add_term(TMonomial::variable(n, v, static_cast<std::uint32_t>(i)), FpScalar::one(p));
    return out;
  }

  bool is_symmetric(const MultiPoly& f)
  {
    const std::size_t n = f.nvars();
    for (std::size_t v = 0; v + 1 < n; ++v) {
      for (const auto& [m, c] : f.terms()) {
        TMonomial swapped = m;
        std::swap(swapped[v], swapped[v + 1]);
        if (f.coefficient(swapped).residue() != c.residue())
          return false;
      }
    }
    return true;
  }

  UniPoly diagonal_eval(const MultiPoly& f)
  {
    UniPoly out(f.prime());
    for (const auto& [m, c] : f.terms())
      out.add_term(m.degree(), c);
    return out;
  }

} // namespace gauge
