#ifndef GAUGE_TORSION_CLI_HPP
#define GAUGE_TORSION_CLI_HPP

#include <exception>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace gauge::cli {

  // Exit codes.
  inline constexpr int exit_ok = 0;
  inline constexpr int exit_falsified = 1;
  inline constexpr int exit_usage = 2;

  // Default output format when --format is absent.
  inline constexpr const char* format_env = "GAUGE_TORSION_FORMAT";

  // Runs one command line (without the program name). Reports go to out
  // unless --output names a file; diagnostics go to err.
  int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

  namespace detail {

    // Writes a verification report (rows carry "pass" and "witness") and
    // returns exit_ok if every row passed, exit_falsified otherwise.
    int emit_verify_report(const std::string& target, const std::vector<nlohmann::ordered_json>& rows,
                           const std::string& format, std::ostream& out);

    // Exit code for an exception escaping a command; writes the diagnostic.
    int exit_code_for(std::exception_ptr error, std::ostream& err);

  } // namespace detail

} // namespace gauge::cli

#endif // GAUGE_TORSION_CLI_HPP
