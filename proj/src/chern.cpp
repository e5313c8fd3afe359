#include "gauge_torsion/chern.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "gauge_torsion/errors.hpp"

namespace gauge {

  ChernPoly partial_derivative(const ChernPoly& f, std::size_t j)
  {
    if (j < 1 || j > f.nvars())
      throw DomainError("derivative index out of range");
    const Prime p = f.prime();
    ChernPoly out(f.nvars(), p);
    for (const auto& [m, c] : f.terms()) {
      const std::uint32_t e = m[j - 1];
      if (e == 0)
        continue;
      ChernMonomial d = m;
      d[j - 1] = e - 1;
      out.add_term(d, c * FpScalar(static_cast<std::int64_t>(e), p));
    }
    return out;
  }

  MultiPoly iota_star(const ChernPoly& f)
  {
    const std::size_t n = f.nvars();
    const Prime p = f.prime();
    // powers[j][e] = e_(j+1)^e, filled on demand
    std::vector<std::vector<MultiPoly>> powers(n);
    auto power_of = [&](std::size_t j, std::uint32_t e) -> const MultiPoly& {
      auto& row = powers[j];
      if (row.empty())
        row.push_back(MultiPoly::one(n, p));
      while (row.size() <= e)
        row.push_back(row.back() * elementary_sym(n, j + 1, p));
      return row[e];
    };

    MultiPoly out(n, p);
    for (const auto& [m, c] : f.terms()) {
      MultiPoly term = MultiPoly::constant(n, p, c);
      for (std::size_t j = 0; j < n; ++j)
        if (m[j] > 0)
          term *= power_of(j, m[j]);
      out += term;
    }
    return out;
  }

  UniPoly phi_star(const ChernPoly& f)
  {
    const std::size_t n = f.nvars();
    const Prime p = f.prime();
    std::vector<FpScalar> images;
    images.reserve(n);
    for (std::size_t j = 1; j <= n; ++j)
      images.push_back(binom_mod(static_cast<std::int64_t>(n), static_cast<std::int64_t>(j), p));

    UniPoly out(p);
    for (const auto& [m, c] : f.terms()) {
      FpScalar value = c;
      for (std::size_t j = 0; j < n && !value.is_zero(); ++j)
        if (m[j] > 0)
          value *= images[j].pow(m[j]);
      out.add_term(m.degree(), value);
    }
    return out;
  }

  namespace {

    struct PowerSumTable {
      std::mutex mutex;
      // deque: references to earlier entries stay valid while it grows
      std::map<std::pair<std::size_t, std::uint64_t>, std::deque<ChernPoly>> lifts;
    };

    PowerSumTable& power_sum_table()
    {
      static PowerSumTable table;
      return table;
    }

  } // namespace

  const ChernPoly& lift_power_sum(std::size_t m, std::size_t n, Prime p)
  {
    if (m == 0)
      throw DomainError("power sum s_0 is undefined");
    if (n < 1)
      throw DomainError("Chern ring needs n >= 1");

    auto& table = power_sum_table();
    std::lock_guard lock(table.mutex);
    auto& lifts = table.lifts[{n, p.value()}];
    // lifts[k] holds S_(k+1)
    while (lifts.size() < m) {
      const std::size_t next = lifts.size() + 1;
      ChernPoly s(n, p);
      const std::size_t top = std::min(next - 1, n);
      for (std::size_t j = 1; j <= top; ++j) {
        ChernPoly term = chern_class(n, p, j) * lifts[next - j - 1];
        if (j % 2 == 1)
          s += term;
        else
          s -= term;
      }
      if (next <= n) {
        FpScalar coeff(static_cast<std::int64_t>(next), p);
        if (next % 2 == 0)
          coeff = -coeff;
        s += chern_class(n, p, next).scaled(coeff);
      }
      lifts.push_back(std::move(s));
    }
    return lifts[m - 1];
  }

  NewtonCheck verify_newton(std::size_t n, std::size_t i, Prime p)
  {
    if (n < 1)
      throw DomainError("Newton identity needs n >= 1");
    const std::size_t top = n + i + 1;
    MultiPoly residual = power_sum(n, top, p);
    for (std::size_t j = 1; j <= n; ++j) {
      MultiPoly term = elementary_sym(n, j, p) * power_sum(n, top - j, p);
      if (j % 2 == 1)
        residual -= term;
      else
        residual += term;
    }
    bool holds = residual.is_zero();
    return {holds, std::move(residual)};
  }

} // namespace gauge
