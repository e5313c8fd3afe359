#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "gauge_torsion/chern.hpp"
#include "gauge_torsion/errors.hpp"
#include "gauge_torsion/matfp.hpp"
#include "gauge_torsion/serialize.hpp"
#include "gauge_torsion/steenrod.hpp"
#include "gauge_torsion/suspension.hpp"
#include "gauge_torsion/torsion.hpp"

namespace gauge::cli {

  namespace {

    // Raised for input that passes the parser but fails range validation.
    struct UsageError : std::invalid_argument {
      using std::invalid_argument::invalid_argument;
    };

    struct RunConfig {
      std::string format;
      std::string output;

      std::int64_t n = 0;
      std::int64_t k = 0;
      std::int64_t p = 0;   // 0: not given
      bool trace = false;

      std::string target;
      std::int64_t n_max = 0;   // 0: target default
      std::int64_t i_max = 6;
      std::string primes;       // empty: target default
      unsigned l_max = 2;
      std::uint64_t max_power = 26;
      std::uint64_t samples = 500;
      std::uint64_t seed = 1;
    };

    // One row of a verification report; every row of a target has the same keys.
    using Row = ordered_json;

    std::string cell(const ordered_json& v)
    {
      if (v.is_null())
        return "";
      if (v.is_string())
        return v.get<std::string>();
      return v.dump();
    }

    std::string csv_cell(const ordered_json& v)
    {
      std::string s = cell(v);
      if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
      std::string quoted = "\"";
      for (char c : s)
        quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
      return quoted + "\"";
    }

    void write_csv(std::ostream& out, const std::vector<Row>& rows, const std::vector<std::string>& columns)
    {
      for (std::size_t i = 0; i < columns.size(); ++i)
        out << (i ? "," : "") << columns[i];
      out << "\n";
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i)
          out << (i ? "," : "") << csv_cell(row[columns[i]]);
        out << "\n";
      }
    }

    std::vector<std::string> keys_of(const Row& row)
    {
      std::vector<std::string> keys;
      for (auto it = row.begin(); it != row.end(); ++it)
        keys.push_back(it.key());
      return keys;
    }

    Prime checked_prime(std::int64_t value)
    {
      if (value < 2 || !is_prime(static_cast<std::uint64_t>(value)))
        throw UsageError("--p must be a prime, got " + std::to_string(value));
      return Prime(static_cast<std::uint64_t>(value));
    }

    std::vector<Prime> checked_primes(const std::string& text, const std::string& fallback)
    {
      try {
        auto primes = parse_prime_list(text.empty() ? fallback : text);
        if (primes.empty())
          throw UsageError("--primes is empty");
        return primes;
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--primes: ") + e.what());
      } catch (const std::domain_error& e) {
        throw UsageError(std::string("--primes: ") + e.what());
      }
    }

    std::size_t checked_n_max(std::int64_t given, std::int64_t fallback)
    {
      const std::int64_t v = given == 0 ? fallback : given;
      if (v < 2)
        throw UsageError("--n-max must be >= 2, got " + std::to_string(v));
      return static_cast<std::size_t>(v);
    }

    // ---- decide ----

    void text_certificate(std::ostream& out, const Certificate& c, bool with_trace)
    {
      out << "p = " << c.verdict.p.value() << ": " << verdict_name(c.verdict.kind) << "\n";
      out << "  phi_c1 = " << c.phi_c1.residue() << "\n";
      if (c.alpha_p)
        out << "  alpha_p = " << c.alpha_p->residue() << "\n";
      if (c.matrix_order)
        out << "  matrix_order = " << *c.matrix_order << "\n";
      if (c.recurrence_check)
        out << "  recurrence_check = " << (*c.recurrence_check ? "true" : "false") << "\n";
      if (with_trace)
        for (const auto& r : c.trace)
          out << "  [" << r.source << "] " << r.relation << " => " << r.resolved_value << "\n";
    }

    int cmd_decide(const RunConfig& cfg, std::ostream& out)
    {
      if (cfg.format == "csv")
        throw UsageError("decide supports --format text or json");
      if (cfg.n < 2)
        throw UsageError("--n must be >= 2, got " + std::to_string(cfg.n));
      if (cfg.p != 0) {
        const Certificate c = decide_p(cfg.n, cfg.k, checked_prime(cfg.p));
        if (cfg.format == "json") {
          out << to_json(c, cfg.trace).dump(2) << "\n";
        } else {
          out << "n = " << c.verdict.n << ", k = " << c.verdict.k << "\n";
          text_certificate(out, c, cfg.trace);
        }
        return exit_ok;
      }
      const GlobalDecision d = decide_global(cfg.n, cfg.k);
      if (cfg.format == "json") {
        out << to_json(d, cfg.trace).dump(2) << "\n";
        return exit_ok;
      }
      out << "n = " << d.n << ", k = " << d.k << "\n";
      out << "torsion_free = " << (d.torsion_free ? "true" : "false");
      if (d.witness_prime)
        out << " (witness p = " << d.witness_prime->value() << ")";
      out << "\n";
      for (const auto& c : d.primes)
        text_certificate(out, c, cfg.trace);
      return exit_ok;
    }

    // ---- verify ----

    MultiPoly random_poly(std::mt19937_64& rng, std::size_t n, Prime p)
    {
      std::uniform_int_distribution<int> terms(1, 4);
      std::uniform_int_distribution<std::uint32_t> exponent(0, 6);
      std::uniform_int_distribution<std::int64_t> coeff(1, static_cast<std::int64_t>(p.value()) - 1);
      MultiPoly f(n, p);
      const int count = terms(rng);
      for (int t = 0; t < count; ++t) {
        std::vector<std::uint32_t> e(n);
        std::uint32_t budget = 6;
        for (auto& x : e) {
          x = std::min(exponent(rng), budget);
          budget -= x;
        }
        f.add_term(TMonomial(e), FpScalar(coeff(rng), p));
      }
      return f;
    }

    // Runs check, turning library exceptions into failing rows with the message as witness.
    Row guarded(Row row, const std::function<std::pair<bool, std::string>()>& check)
    {
      try {
        auto [pass, witness] = check();
        row["pass"] = pass;
        row["witness"] = witness;
      } catch (const std::exception& e) {
        row["pass"] = false;
        row["witness"] = e.what();
      }
      return row;
    }

    std::vector<Row> verify_newton_rows(const RunConfig& cfg)
    {
      const std::size_t n_max = checked_n_max(cfg.n_max, 6);
      if (cfg.i_max < 0)
        throw UsageError("--i-max must be >= 0");
      const auto primes = checked_primes(cfg.primes, "2,3,5");
      std::vector<Row> rows;
      for (std::size_t n = 2; n <= n_max; ++n)
        for (std::int64_t i = 0; i <= cfg.i_max; ++i)
          for (Prime p : primes)
            rows.push_back(guarded({{"n", n}, {"i", i}, {"p", p.value()}}, [&] {
              auto r = verify_newton(n, static_cast<std::size_t>(i), p);
              return std::make_pair(r.holds, r.holds ? std::string() : r.residual.to_string());
            }));
      return rows;
    }

    std::vector<Row> verify_milnor_rows(const RunConfig& cfg)
    {
      const std::size_t n_max = checked_n_max(cfg.n_max, 5);
      if (cfg.l_max < 1)
        throw UsageError("--l-max must be >= 1");
      const auto primes = checked_primes(cfg.primes, "2,3,5");
      std::vector<Row> rows;
      for (std::size_t n = 2; n <= n_max; ++n)
        for (Prime p : primes)
          for (unsigned l = 1; l <= cfg.l_max; ++l) {
            std::uint64_t power = 1;
            for (unsigned e = 0; e < l && power <= cfg.max_power; ++e)
              power *= p.value();
            if (power + 1 > cfg.max_power)
              continue;
            rows.push_back(guarded({{"check", "c2"}, {"n", n}, {"p", p.value()}, {"l", l}, {"samples", 1}}, [&] {
              auto r = verify_milnor_c2(n, p, l);
              return std::make_pair(r.holds, r.holds ? std::string() : r.q_of_c2.to_string());
            }));
          }
      std::mt19937_64 rng(cfg.seed);
      for (Prime p : primes)
        for (unsigned l = 1; l <= std::min(cfg.l_max, 2u); ++l)
          rows.push_back(guarded(
            {{"check", "closed-vs-recursive"}, {"n", nullptr}, {"p", p.value()}, {"l", l}, {"samples", cfg.samples}},
            [&] {
              for (std::uint64_t s = 0; s < cfg.samples; ++s) {
                const MultiPoly f = random_poly(rng, 1 + s % 3, p);
                if (milnor_q_closed(l, f) != milnor_q_recursive(l, f))
                  return std::make_pair(false, f.to_string());
              }
              return std::make_pair(true, std::string());
            }));
      return rows;
    }

    std::vector<Row> verify_conjugation_rows(const RunConfig& cfg)
    {
      const std::size_t n_max = checked_n_max(cfg.n_max, 40);
      std::vector<Row> rows;
      for (std::size_t n = 2; n <= n_max; ++n) {
        Row row{{"n", n}};
        try {
          const ConjugationCheck c = verify_conjugation(n);
          row["ba_equals_ad"] = c.ba_equals_ad;
          row["ba_matches_binomials"] = c.ba_matches_binomials;
          row["conjugate_equals_d"] = c.conjugate_equals_d;
          row["pass"] = c.holds;
          row["witness"] = c.holds ? std::string() : c.ba.to_inline();
        } catch (const std::exception& e) {
          row["ba_equals_ad"] = nullptr;
          row["ba_matches_binomials"] = nullptr;
          row["conjugate_equals_d"] = nullptr;
          row["pass"] = false;
          row["witness"] = e.what();
        }
        rows.push_back(row);
      }
      return rows;
    }

    std::vector<Row> verify_order_rows(const RunConfig& cfg)
    {
      const std::size_t n_max = checked_n_max(cfg.n_max, 50);
      const auto primes = checked_primes(cfg.primes, "2,3,5,7,11");
      std::vector<Row> rows;
      for (std::size_t n = 2; n <= n_max; ++n)
        for (Prime p : primes) {
          Row row{{"n", n}, {"p", p.value()}};
          try {
            const OrderCheck c = verify_b_order(n, p);
            row["order"] = c.order;
            row["expected"] = c.expected;
            row["p_power"] = c.holds;
            row["matches_ceiling"] = c.matches_ceiling;
            row["pass"] = c.holds && c.matches_ceiling;
            row["witness"] = "";
          } catch (const std::exception& e) {
            row["order"] = nullptr;
            row["expected"] = p_power_ceil(n, p);
            row["p_power"] = false;
            row["matches_ceiling"] = false;
            row["pass"] = false;
            row["witness"] = e.what();
          }
          rows.push_back(row);
        }
      return rows;
    }

    std::vector<Row> verify_recurrence_rows(const RunConfig& cfg)
    {
      const std::size_t n_max = checked_n_max(cfg.n_max, 20);
      const auto primes = checked_primes(cfg.primes, "2,3,5");
      std::vector<Row> rows;
      for (Prime p : primes)
        for (std::size_t n = p; n <= n_max; n += p)
          rows.push_back(guarded({{"n", n}, {"p", p.value()}}, [&] {
            const FpMatrix b = mat_reduce(build_B(n), p);
            const FpMatrix derived = derive_recurrence(n, p);
            if (!(derived == b))
              return std::make_pair(false, derived.to_inline());
            for (std::size_t k = 0; k < n; ++k) {
              const AlphaSolution s = solve_alpha_p(n, p, static_cast<std::int64_t>(k));
              if (!(s.alpha_p == FpScalar(static_cast<std::int64_t>(k), p)))
                return std::make_pair(false, "k = " + std::to_string(k) + ": alpha_p = "
                                               + std::to_string(s.alpha_p.residue()));
            }
            return std::make_pair(true, std::string());
          }));
      return rows;
    }

    int cmd_verify(const RunConfig& cfg, std::ostream& out)
    {
      std::vector<Row> rows;
      if (cfg.target == "newton")
        rows = verify_newton_rows(cfg);
      else if (cfg.target == "milnor")
        rows = verify_milnor_rows(cfg);
      else if (cfg.target == "conjugation")
        rows = verify_conjugation_rows(cfg);
      else if (cfg.target == "order")
        rows = verify_order_rows(cfg);
      else
        rows = verify_recurrence_rows(cfg);
      return detail::emit_verify_report(cfg.target, rows, cfg.format, out);
    }

    // ---- sweep ----

    int cmd_sweep(const RunConfig& cfg, std::ostream& out)
    {
      if (cfg.n_max < 2)
        throw UsageError("--n-max must be >= 2, got " + std::to_string(cfg.n_max));
      std::vector<Row> rows;
      for (std::int64_t n = 2; n <= cfg.n_max; ++n)
        for (std::int64_t k = 0; k < n; ++k) {
          const GlobalDecision d = decide_global(n, k);
          rows.push_back({{"n", n},
                          {"k", k},
                          {"torsion_free", d.torsion_free},
                          {"witness_prime", d.witness_prime ? ordered_json(d.witness_prime->value()) : nullptr}});
        }
      const std::vector<std::string> columns{"n", "k", "torsion_free", "witness_prime"};
      if (cfg.format == "json") {
        out << ordered_json(rows).dump(2) << "\n";
      } else if (cfg.format == "csv") {
        write_csv(out, rows, columns);
      } else {
        out << "   n    k  torsion_free  witness_prime\n";
        for (const auto& r : rows) {
          char line[64];
          std::snprintf(line, sizeof line, "%4s %4s  %-12s  %s\n", cell(r["n"]).c_str(), cell(r["k"]).c_str(),
                        cell(r["torsion_free"]).c_str(), r["witness_prime"].is_null() ? "-" : cell(r["witness_prime"]).c_str());
          out << line;
        }
      }
      return exit_ok;
    }

    // ---- matrix ----

    std::vector<std::string> lines_of(const std::string& text)
    {
      std::vector<std::string> lines;
      std::istringstream in(text);
      for (std::string line; std::getline(in, line);)
        lines.push_back(line);
      return lines;
    }

    int cmd_matrix(const RunConfig& cfg, std::ostream& out)
    {
      if (cfg.format == "csv")
        throw UsageError("matrix supports --format text or json");
      if (cfg.n < 2)
        throw UsageError("--n must be >= 2, got " + std::to_string(cfg.n));
      const auto n = static_cast<std::size_t>(cfg.n);
      const IntMatrix b = build_B(n), a = build_A(n), d = build_D(n);
      const IntMatrix ba = mat_mul(b, a), ad = mat_mul(a, d);

      struct Named {
        std::string name;
        std::string text;
        ordered_json json;
      };
      std::vector<Named> mats;
      std::string suffix;
      bool equal = ba == ad;
      if (cfg.p != 0) {
        const Prime p = checked_prime(cfg.p);
        suffix = " mod " + std::to_string(p.value());
        const FpMatrix bp = mat_reduce(b, p), ap = mat_reduce(a, p), dp = mat_reduce(d, p);
        const FpMatrix bap = mat_mul(bp, ap), adp = mat_mul(ap, dp);
        equal = bap == adp;
        for (const auto& [name, m] : std::vector<std::pair<std::string, const FpMatrix*>>{
               {"B", &bp}, {"A", &ap}, {"D", &dp}, {"BA", &bap}, {"AD", &adp}})
          mats.push_back({name, m->to_text(), to_json(*m)});
      } else {
        for (const auto& [name, m] : std::vector<std::pair<std::string, const IntMatrix*>>{
               {"B", &b}, {"A", &a}, {"D", &d}, {"BA", &ba}, {"AD", &ad}})
          mats.push_back({name, m->to_text(), to_json(*m)});
      }

      if (cfg.format == "json") {
        ordered_json j{{"n", cfg.n}, {"p", cfg.p != 0 ? ordered_json(cfg.p) : ordered_json(nullptr)}};
        for (const auto& m : mats)
          j[m.name] = m.json;
        j["ba_equals_ad"] = equal;
        out << j.dump(2) << "\n";
        return exit_ok;
      }
      for (std::size_t i = 0; i < 3; ++i)
        out << mats[i].name << suffix << " =\n" << mats[i].text << "\n\n";
      const auto left = lines_of(mats[3].text), right = lines_of(mats[4].text);
      const std::size_t width = left.front().size();
      std::string header = "BA" + suffix;
      header.resize(width + 3, ' ');
      out << header << "AD" << suffix << "\n";
      for (std::size_t i = 0; i < left.size(); ++i)
        out << left[i] << "   " << right[i] << "\n";
      out << "BA == AD: " << (equal ? "true" : "false") << "\n";
      return exit_ok;
    }

  } // namespace

  namespace detail {

    int emit_verify_report(const std::string& target, const std::vector<ordered_json>& rows,
                           const std::string& format, std::ostream& out)
    {
      std::size_t passed = 0;
      for (const auto& r : rows)
        passed += r["pass"].get<bool>() ? 1 : 0;
      const bool all_pass = passed == rows.size();

      if (format == "json") {
        ordered_json report{{"target", target}, {"cases", rows.size()}, {"passed", passed},
                            {"all_pass", all_pass}, {"results", rows}};
        out << report.dump(2) << "\n";
      } else if (format == "csv") {
        if (!rows.empty())
          write_csv(out, rows, keys_of(rows.front()));
      } else {
        for (const auto& r : rows) {
          std::string line;
          for (auto it = r.begin(); it != r.end(); ++it) {
            if (it.key() == "pass" || it.key() == "witness" || it->is_null())
              continue;
            line += it.key() + "=" + cell(*it) + " ";
          }
          line += r["pass"].get<bool>() ? "pass" : "FAIL";
          if (!r["pass"].get<bool>())
            line += " witness: " + cell(r["witness"]);
          out << line << "\n";
        }
        out << target << ": " << passed << "/" << rows.size() << " passed\n";
      }
      return all_pass ? exit_ok : exit_falsified;
    }

    int exit_code_for(std::exception_ptr error, std::ostream& err)
    {
      try {
        std::rethrow_exception(error);
      } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
      } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
      } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
      } catch (const std::exception& e) {
        // A contradiction between independent routes is a falsification.
        err << "falsified: " << e.what() << "\n";
        return exit_falsified;
      }
    }

  } // namespace detail

  int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
  {
    RunConfig cfg;
    CLI::App app{"Decide p-torsion in Map_k(S^2, BPU(n)) and check the supporting identities.", "gauge_torsion"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "gauge_torsion 0.1.0");

    const std::vector<std::string> formats{"text", "json", "csv"};
    auto add_common = [&](CLI::App* sub) {
      sub->add_option("--format", cfg.format, "Output format (default from $GAUGE_TORSION_FORMAT, else text)")
        ->check(CLI::IsMember(formats));
      sub->add_option("-o,--output", cfg.output, "Write the report to a file instead of standard output");
    };

    auto* decide = app.add_subcommand("decide", "Per-prime certificates for Map_k(S^2, BPU(n))");
    decide->add_option("--n", cfg.n, "Rank n >= 2")->required();
    decide->add_option("--k", cfg.k, "Bundle class k (reduced mod n)")->required();
    decide->add_option("--p", cfg.p, "Single prime; all prime divisors of n when omitted");
    decide->add_flag("--trace", cfg.trace, "Include the alpha_p derivation");
    add_common(decide);

    auto* verify = app.add_subcommand("verify", "Run an identity check over a range");
    verify->add_option("target", cfg.target, "newton | milnor | conjugation | order | recurrence")
      ->required()
      ->check(CLI::IsMember({"newton", "milnor", "conjugation", "order", "recurrence"}));
    verify->add_option("--n-max", cfg.n_max, "Largest n");
    verify->add_option("--i-max", cfg.i_max, "Largest shift i (newton)");
    verify->add_option("--primes", cfg.primes, "Comma-separated primes");
    verify->add_option("--l-max", cfg.l_max, "Largest l (milnor)");
    verify->add_option("--max-power", cfg.max_power, "Skip l with p^l + 1 above this (milnor)");
    verify->add_option("--samples", cfg.samples, "Random polynomials per (p, l) (milnor)");
    verify->add_option("--seed", cfg.seed, "Seed for random samples");
    add_common(verify);

    auto* sweep = app.add_subcommand("sweep", "Global torsion table for 2 <= n <= n-max, 0 <= k < n");
    sweep->add_option("--n-max", cfg.n_max, "Largest n")->required();
    add_common(sweep);

    auto* matrix = app.add_subcommand("matrix", "Print B, A, D and the products BA, AD");
    matrix->add_option("--n", cfg.n, "Dimension n >= 2")->required();
    matrix->add_option("--p", cfg.p, "Reduce mod this prime");
    add_common(matrix);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_usage;
    }

    if (cfg.format.empty()) {
      const char* env = std::getenv(format_env);
      cfg.format = env ? env : "text";
      if (std::find(formats.begin(), formats.end(), cfg.format) == formats.end()) {
        err << format_env << " must be one of text, json, csv; got " << cfg.format << "\n";
        return exit_usage;
      }
    }

    std::ofstream file;
    if (!cfg.output.empty()) {
      file.open(cfg.output);
      if (!file) {
        err << "cannot open " << cfg.output << " for writing\n";
        return exit_usage;
      }
    }
    std::ostream& sink = cfg.output.empty() ? out : file;

    try {
      if (*decide)
        return cmd_decide(cfg, sink);
      if (*verify)
        return cmd_verify(cfg, sink);
      if (*sweep)
        return cmd_sweep(cfg, sink);
      return cmd_matrix(cfg, sink);
    } catch (...) {
      return detail::exit_code_for(std::current_exception(), err);
    }
  }

} // namespace gauge::cli
