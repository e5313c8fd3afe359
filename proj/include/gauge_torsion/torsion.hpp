#ifndef GAUGE_TORSION_TORSION_HPP
#define GAUGE_TORSION_TORSION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gauge_torsion/fp_core.hpp"
#include "gauge_torsion/suspension.hpp"

namespace gauge {

  // Map_k(S^2, BPU(n)) at a prime p:
  //   no_torsion_coprime   p does not divide n
  //   no_torsion_k_unit    p | n, p does not divide k
  //   torsion              p | n and p | k
  enum class VerdictKind { no_torsion_coprime, no_torsion_k_unit, torsion };

  std::string verdict_name(VerdictKind kind);

  struct Verdict {
    VerdictKind kind;
    std::int64_t n;
    std::int64_t k;   // reduced into [0, n)
    Prime p;
  };

  struct Certificate {
    Verdict verdict;
    FpScalar phi_c1;                          // coefficient of phi*(c_1) = binom(n,1) u
    std::optional<FpScalar> alpha_p;          // present iff p | n
    std::optional<std::uint64_t> matrix_order;  // order of B mod p, present iff p | n
    std::optional<bool> recurrence_check;     // derived recurrence == B mod p, present iff p | n
    std::vector<std::string> annotations;
    std::vector<TraceRecord> trace;           // alpha_p derivation, empty when p does not divide n
  };

  // k reduced mod n into [0, n).
  std::int64_t reduce_class(std::int64_t k, std::int64_t n);

  // Verdict for one prime. The kind is computed from phi*(c_1) and alpha_p and
  // cross-checked against the divisibility of n and k; any disagreement
  // raises ContradictionError.
  Certificate decide_p(std::int64_t n, std::int64_t k, Prime p);

  struct GlobalDecision {
    std::int64_t n;
    std::int64_t k;   // reduced
    bool torsion_free;
    std::optional<Prime> witness_prime;   // smallest prime reporting torsion
    std::vector<Certificate> primes;      // one per prime divisor of n, ascending
  };

  // Torsion-free iff gcd(n, k) = 1 (with gcd(n, 0) = n); checked against the
  // per-prime certificates.
  GlobalDecision decide_global(std::int64_t n, std::int64_t k);

} // namespace gauge

#endif // GAUGE_TORSION_TORSION_HPP
