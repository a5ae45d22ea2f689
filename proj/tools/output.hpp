#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace rwords::cli {

enum class Format { Json, Csv, TsvPlain };

Format parse_format(const std::string& name);

/// One command's result, rendered to any of the output formats.
/// `rows` commands produce a table with the declared column order;
/// `summary` commands produce a single key/value block (a one-row table
/// in csv/tsv). JSON always carries command, params, seed (null when
/// the command is deterministic), workers and versions.
struct CommandOutput {
    std::string command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::optional<std::uint64_t> seed;
    int workers = 1;

    std::vector<std::string> columns;
    std::vector<nlohmann::ordered_json> rows;
    nlohmann::ordered_json summary; // object; used when columns is empty
    bool is_summary = false;
};

std::string render(const CommandOutput& out, Format format);

/// RFC-4180 field quoting: wraps in double quotes when the value holds
/// a comma, quote, or line break, doubling embedded quotes.
std::string csv_quote(const std::string& field);

} // namespace rwords::cli
