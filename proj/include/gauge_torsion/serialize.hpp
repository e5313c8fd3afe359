#ifndef GAUGE_TORSION_SERIALIZE_HPP
#define GAUGE_TORSION_SERIALIZE_HPP

#include <vector>

#include <json.hpp>

#include "gauge_torsion/matfp.hpp"
#include "gauge_torsion/suspension.hpp"
#include "gauge_torsion/torsion.hpp"

namespace gauge {

  using ordered_json = nlohmann::ordered_json;

  // {n, k, p, verdict, phi_c1, alpha_p, matrix_order, recurrence_check,
  //  annotations[]}, absent fields as null. The alpha_p derivation trace is
  // appended as "trace" when with_trace is set.
  ordered_json to_json(const Certificate& cert, bool with_trace = false);

  // {n, k, torsion_free, witness_prime, primes[]}
  ordered_json to_json(const GlobalDecision& decision, bool with_trace = false);

  // [{relation, source, resolved_value}, ...]
  ordered_json to_json(const std::vector<TraceRecord>& trace);

  // Nested arrays of decimal strings.
  ordered_json to_json(const IntMatrix& m);
  ordered_json to_json(const FpMatrix& m);

} // namespace gauge

#endif // GAUGE_TORSION_SERIALIZE_HPP
