#pragma once

#include "reshoreval/error.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reshoreval::io {

struct CsvRow
{
    std::size_t line = 0;  // 1-based; the header is line 1
    std::vector<std::string> fields;
};

struct CsvTable
{
    std::string file;
    std::vector<std::string> header;
    std::size_t header_line = 1;
    std::vector<CsvRow> rows;

    /// Index of `name` in the header, if present.
    std::optional<std::size_t> column(std::string_view name) const;
};

/// Comma-separated UTF-8 with a mandatory header row. Fields may be double
/// quoted ("" escapes a quote) but may not span lines. A leading BOM, CRLF line
/// ends and blank lines are tolerated; surrounding whitespace is trimmed from
/// unquoted fields. Structural problems are appended to `diagnostics` and the
/// offending row is dropped.
CsvTable parse_csv(std::string_view text, std::string file, std::vector<Diagnostic>& diagnostics);

/// Reads and parses a file; an unreadable file becomes a diagnostic.
CsvTable read_csv(const std::filesystem::path& path, std::vector<Diagnostic>& diagnostics);

/// Plain decimal notation: optional sign, digits, optional fraction. No
/// exponents, no locale separators, no inf/nan.
std::optional<double> parse_decimal(std::string_view text);

/// Shortest text that parses back to exactly `value`.
std::string format_exact(double value);

/// Fixed two-decimal rendering used for display fields.
std::string format_2dp(double value);

}  // namespace reshoreval::io
