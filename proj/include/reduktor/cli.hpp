#pragma once

// Command surface: problem files in, JSON reports out.  stdout carries only
// the report (byte-identical for identical argv and seed); diagnostics and
// timings go to the error stream.  Exit codes: 0 success, 1 property
// violation, 2 usage or input error, 3 resource budget, 4 internal
// inconsistency.

#include <iosfwd>
#include <string>
#include <vector>

#include "reduktor/parse.hpp"

namespace reduktor {

// Infix form of a parsed expression; parses back to the same tree value.
std::string expression_to_text(const Expr& e);

// Canonical problem-file text; re-parsing yields the same presentation.
std::string problem_to_text(const ProblemFile& pf);

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace reduktor
