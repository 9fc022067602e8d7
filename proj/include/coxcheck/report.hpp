#pragma once

// MukaiReport serialisation. The text and JSON renderings carry the same
// numbers; JSON reports can be read back for independent re-checking.

#include "coxcheck/mukai.hpp"

#include <string>
#include <string_view>

namespace coxcheck {

/// Exit-code contract shared by the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_hypothesis = 1, exit_input = 2, exit_contradiction = 3 };
int exit_code(const MukaiReport& r);
const char* to_string(Outcome o);

std::string report_to_json(const MukaiReport& r, const std::string& instance_name);
/// Throws InputError on malformed reports.
MukaiReport report_from_json(std::string_view text);
std::string report_to_text(const MukaiReport& r, const std::string& instance_name);

}  // namespace coxcheck
