#pragma once

// The pie-lifter command line: subcommands over a workspace loaded from a
// corpus directory and extra files, reports as canonical JSON.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "pielift/dsl.hpp"

namespace pielift::cli {

using Json = nlohmann::json;

inline constexpr const char* kToolName = "pie-lifter";
inline constexpr const char* kToolVersion = "1.0.0";

/// Exit codes.
enum : int { kPass = 0, kVerdictFailed = 1, kInputError = 2 };

/// Sorted keys, two-space indent, trailing newline.
std::string emit_report(const Json& j);

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& bytes);

/// Writes to a temporary file beside `path` and renames it over `path`.
/// Throws std::runtime_error.
void write_atomic(const std::string& path, const std::string& text);

/// Runs one invocation; `args` excludes the program name. The report goes
/// to `--out` when given, else to `out`; messages go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Report fragments, shared with the acceptance suite.
Json functor_json(const Functor& f);
Json natural_json(const NatTrans& n);
Json pie_json(const TwoCategory& a, const SigmaFamily& s);
Json inputs_json(const dsl::Workspace& w);

}  // namespace pielift::cli
