#include "gauge_torsion/serialize.hpp"

namespace gauge {

  ordered_json to_json(const std::vector<TraceRecord>& trace)
  {
    ordered_json out = ordered_json::array();
    for (const auto& r : trace)
      out.push_back({{"relation", r.relation}, {"source", r.source}, {"resolved_value", r.resolved_value}});
    return out;
  }

  ordered_json to_json(const Certificate& cert, bool with_trace)
  {
    ordered_json out;
    out["n"] = cert.verdict.n;
    out["k"] = cert.verdict.k;
    out["p"] = cert.verdict.p.value();
    out["verdict"] = verdict_name(cert.verdict.kind);
    out["phi_c1"] = cert.phi_c1.residue();
    out["alpha_p"] = cert.alpha_p ? ordered_json(cert.alpha_p->residue()) : ordered_json(nullptr);
    out["matrix_order"] = cert.matrix_order ? ordered_json(*cert.matrix_order) : ordered_json(nullptr);
    out["recurrence_check"] = cert.recurrence_check ? ordered_json(*cert.recurrence_check) : ordered_json(nullptr);
    out["annotations"] = cert.annotations;
    if (with_trace)
      out["trace"] = to_json(cert.trace);
    return out;
  }

  ordered_json to_json(const GlobalDecision& decision, bool with_trace)
  {
    ordered_json out;
    out["n"] = decision.n;
    out["k"] = decision.k;
    out["torsion_free"] = decision.torsion_free;
    out["witness_prime"] =
      decision.witness_prime ? ordered_json(decision.witness_prime->value()) : ordered_json(nullptr);
    out["primes"] = ordered_json::array();
    for (const auto& cert : decision.primes)
      out["primes"].push_back(to_json(cert, with_trace));
    return out;
  }

  ordered_json to_json(const IntMatrix& m)
  {
    return ordered_json(m.to_strings());
  }

  ordered_json to_json(const FpMatrix& m)
  {
    return ordered_json(m.to_strings());
  }

} // namespace gauge
