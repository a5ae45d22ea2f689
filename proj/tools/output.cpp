#include "output.hpp"

#include <cstdio>
#include <stdexcept>

namespace rwords::cli {

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "tsv-plain") return Format::TsvPlain;
    throw std::invalid_argument("unknown format: " + name);
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

namespace {

std::string cell_to_string(const nlohmann::ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    if (v.is_number_float()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
        return buf;
    }
    return v.dump();
}

std::string render_table(const CommandOutput& out, char sep, bool quote, bool metadata) {
    std::string text;
    if (metadata) {
        const auto meta_line = [&](const std::string& key, const std::string& value) {
            text += "# " + key;
            text += sep;
            text += value + "\n";
        };
        meta_line("command", out.command);
        for (const auto& [key, value] : out.params.items()) meta_line(key, cell_to_string(value));
        meta_line("seed", out.seed ? std::to_string(*out.seed) : "none");
        meta_line("workers", std::to_string(out.workers));
    }

    std::vector<std::string> columns = out.columns;
    std::vector<nlohmann::ordered_json> rows = out.rows;
    if (out.is_summary) {
        columns.clear();
        for (const auto& [key, value] : out.summary.items()) columns.push_back(key);
        rows = {out.summary};
    }

    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) text += sep;
        text += quote ? csv_quote(columns[c]) : columns[c];
    }
    text += '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c) text += sep;
            const auto it = row.find(columns[c]);
            const std::string cell = it == row.end() ? "" : cell_to_string(*it);
            text += quote ? csv_quote(cell) : cell;
        }
        text += '\n';
    }
    return text;
}

} // namespace

std::string render(const CommandOutput& out, Format format) {
    switch (format) {
    case Format::Json: {
        nlohmann::ordered_json doc;
        doc["command"] = out.command;
        doc["params"] = out.params;
        if (out.seed)
            doc["seed"] = *out.seed;
        else
            doc["seed"] = nullptr;
        doc["workers"] = out.workers;
        if (out.is_summary)
            doc["summary"] = out.summary;
        else {
            doc["rows"] = nlohmann::ordered_json::array();
            for (const auto& row : out.rows) doc["rows"].push_back(row);
        }
        doc["versions"] = {{"rwords", RWORDS_VERSION}, {"schema", 1}};
        return doc.dump(2) + "\n";
    }
    case Format::Csv:
        return render_table(out, ',', true, false);
    case Format::TsvPlain:
        return render_table(out, '\t', false, true);
    }
    return {};
}

} // namespace rwords::cli
