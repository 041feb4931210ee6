#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "pbw/problem.hpp"

namespace pbw {

inline constexpr const char* kProblemFormat = "pbwdef-problem/1";

/// Problem file text. Output is canonical: reloading and re-emitting
/// reproduces it byte for byte.
std::string emit_problem(const Problem& p);

/// Parses a problem document. Throws ParseError (with line and column for
/// malformed JSON, with the offending block otherwise) and ValidationError
/// carrying the failed axioms. Hopf axioms are always checked; `validate`
/// controls the module algebra axioms.
Problem parse_problem(std::string_view text, int cutoff = 6, bool validate = true);
Problem load_spec(const std::string& path, int cutoff = 6, bool validate = true);

/// Writes the preset to `path`, or returns its text when `path` is empty.
std::string emit_preset(std::string_view name, bool with_kappa, const std::string& path = {});

/// One line per failure, with witnesses rendered through basis labels.
std::string format_report(const ValidationReport& rep, const Problem& p, bool hopf_section);

/// Entry point of the command-line tool. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pbw
