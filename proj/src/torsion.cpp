#include "gauge_torsion/torsion.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "gauge_torsion/chern.hpp"
#include "gauge_torsion/errors.hpp"
#include "gauge_torsion/matfp.hpp"

namespace gauge {

  std::string verdict_name(VerdictKind kind)
  {
    switch (kind) {
    case VerdictKind::no_torsion_coprime:
      return "NoTorsionCase1";
    case VerdictKind::no_torsion_k_unit:
      return "NoTorsionCase2";
    case VerdictKind::torsion:
      return "Torsion";
    }
    return "unknown";
  }

  std::int64_t reduce_class(std::int64_t k, std::int64_t n)
  {
    std::int64_t r = k % n;
    return r < 0 ? r + n : r;
  }

  namespace {

    const std::vector<std::string>& torsion_annotations()
    {
      static const std::vector<std::string> notes = {
        "p-torsion in Map_k(S^2, BPU(n)) <=> odd-degree classes in its mod p cohomology <=> "
        "phi* : H^2(Map_k(S^2, BU(n))) -> H^2(BS^1) vanishes (homotopy-theoretic input, not machine-checked)",
        "H^2(Map_k(S^2, BU(n))) is generated by pi*(c1) and sigma(c2), and sigma(c2) pulls back to -alpha_p u "
        "when p | n; so phi* vanishes <=> phi*(c1) = 0 and alpha_p = 0",
        "alpha_p = k mod p whenever p | n (mechanized below)",
      };
      return notes;
    }

    // Per-(n, p) facts independent of k. Filled once, never modified.
    struct MatrixFacts {
      std::uint64_t order;
      bool recurrence_matches;
    };

    const MatrixFacts& matrix_facts(std::size_t n, Prime p)
    {
      static std::mutex mutex;
      static std::map<std::pair<std::size_t, std::uint64_t>, MatrixFacts> table;
      std::lock_guard lock(mutex);
      auto key = std::make_pair(n, p.value());
      auto it = table.find(key);
      if (it != table.end())
        return it->second;
      const FpMatrix b = mat_reduce(build_B(n), p);
      MatrixFacts facts{mat_order_mod_p(b, p_power_ceil(n, p) * p), derive_recurrence(n, p) == b};
      return table.emplace(key, facts).first->second;
    }

  } // namespace

  Certificate decide_p(std::int64_t n, std::int64_t k, Prime p)
  {
    if (n < 2)
      throw DomainError("n must be >= 2, got " + std::to_string(n));
    const std::int64_t kr = reduce_class(k, n);
    const auto un = static_cast<std::size_t>(n);

    const UniPoly phi_c1_image = phi_star(chern_class(un, p, 1));
    Certificate cert{{VerdictKind::no_torsion_coprime, n, kr, p}, phi_c1_image.coefficient(1),
                     std::nullopt, std::nullopt, std::nullopt, torsion_annotations(), {}};

    // mechanized route
    VerdictKind mechanized = VerdictKind::no_torsion_coprime;
    if (cert.phi_c1.is_zero()) {
      AlphaSolution solution = solve_alpha_p(un, p, kr);
      const MatrixFacts& facts = matrix_facts(un, p);
      cert.alpha_p = solution.alpha_p;
      cert.matrix_order = facts.order;
      cert.recurrence_check = facts.recurrence_matches;
      cert.trace = std::move(solution.trace);
      mechanized = solution.alpha_p.is_zero() ? VerdictKind::torsion : VerdictKind::no_torsion_k_unit;
    }

    // divisibility route
    VerdictKind divisibility = VerdictKind::no_torsion_coprime;
    if (n % static_cast<std::int64_t>(p.value()) == 0)
      divisibility = (kr % static_cast<std::int64_t>(p.value()) == 0) ? VerdictKind::torsion
                                                                       : VerdictKind::no_torsion_k_unit;

    if (mechanized != divisibility)
      throw ContradictionError("verdict routes disagree for n = " + std::to_string(n) + ", k = " + std::to_string(kr)
                               + ", p = " + std::to_string(p.value()) + ": " + verdict_name(mechanized) + " vs "
                               + verdict_name(divisibility));
    if (cert.recurrence_check && !*cert.recurrence_check)
      throw ContradictionError("derived recurrence differs from B mod p for n = " + std::to_string(n));
    if (cert.matrix_order && !is_power_of(*cert.matrix_order, p))
      throw ContradictionError("order of B mod p is not a power of p for n = " + std::to_string(n));

    cert.verdict.kind = mechanized;
    return cert;
  }

  GlobalDecision decide_global(std::int64_t n, std::int64_t k)
  {
    if (n < 2)
      throw DomainError("n must be >= 2, got " + std::to_string(n));
    const std::int64_t kr = reduce_class(k, n);
    GlobalDecision out{n, kr, std::gcd(n, kr) == 1, std::nullopt, {}};
    for (Prime p : prime_divisors(static_cast<std::uint64_t>(n))) {
      out.primes.push_back(decide_p(n, kr, p));
      if (!out.witness_prime && out.primes.back().verdict.kind == VerdictKind::torsion)
        out.witness_prime = p;
    }
    if (out.torsion_free == out.witness_prime.has_value())
      throw ContradictionError("gcd criterion and per-prime certificates disagree for n = " + std::to_string(n)
                               + ", k = " + std::to_string(kr));
    return out;
  }

} // namespace gauge
