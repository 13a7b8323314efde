#pragma once

// Rendering of suite reports.

#include <string>
#include <string_view>

#include "reflex/suites.hpp"

namespace reflex {

/// Two-space indented JSON, fields in schema order, trailing newline.
std::string to_json(const SuiteReport& report);

/// Inverse of to_json. Throws Error on malformed input. The node cap is not
/// serialized and comes back as the default.
SuiteReport report_from_json(std::string_view text);

std::string to_text(const SuiteReport& report);

/// 0 holds, 3 fails, 2 inconclusive or no counterexample.
int exit_code(Status status);

Status status_from_string(std::string_view s);
Verdict verdict_from_string(std::string_view s, std::string left = {}, std::string right = {});

}  // namespace reflex
