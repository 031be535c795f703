#pragma once

// Command reports over parsed documents, and the per-file driver used by
// the command-line tool.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "equibundle/document.hpp"

namespace equibundle {

struct RunOptions {
    /// Field for documents without a field line; must agree with it otherwise.
    std::optional<Field> field;
    std::optional<std::pair<std::int64_t, std::int64_t>> twist_window;
    std::optional<std::int64_t> degree_bound;
    /// Recompute each answer with an independent method and report agreement.
    bool verify = false;
    /// Randomizes choices that admit several answers (split-filtration).
    std::optional<std::uint64_t> seed;
};

/// Command names, in help order.
const std::vector<std::string>& command_names();

/// Report for one document. Throws InvalidArgument when the document kind
/// does not fit the command or the object is invalid for it.
std::string run_command(std::string_view command, const Document& doc, const RunOptions& options);

enum ExitCode : int { exit_ok = 0, exit_parse_error = 2, exit_invalid_input = 3 };

struct FileResult {
    int exit_code = exit_ok;
    std::string report;
    std::string error;
};

/// Parses the text and runs the command, mapping ParseError to exit code 2
/// and every other library error to exit code 3.
FileResult process_document(std::string_view command, std::string_view text, const RunOptions& options);

}  // namespace equibundle
