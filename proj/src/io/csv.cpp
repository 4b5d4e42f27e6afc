#include "reshoreval/io/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace reshoreval::io {

namespace {

std::string_view trim(std::string_view s)
{
    const auto is_space = [](char c) { return c == ' ' || c == '\t'; };
    while (!s.empty() && is_space(s.front()))
        s.remove_prefix(1);
    while (!s.empty() && is_space(s.back()))
        s.remove_suffix(1);
    return s;
}

/// Splits one physical line. Returns an error message on malformed quoting.
std::optional<std::string> split_line(std::string_view line, std::vector<std::string>& out)
{
    out.clear();
    std::size_t i = 0;
    while (true) {
        std::string field;
        // skip leading blanks before a possible quote
        std::size_t j = i;
        while (j < line.size() && (line[j] == ' ' || line[j] == '\t'))
            ++j;
        if (j < line.size() && line[j] == '"') {
            ++j;
            bool closed = false;
            while (j < line.size()) {
                if (line[j] == '"') {
                    if (j + 1 < line.size() && line[j + 1] == '"') {
                        field += '"';
                        j += 2;
                        continue;
                    }
                    closed = true;
                    ++j;
                    break;
                }
                field += line[j++];
            }
            if (!closed)
                return "unterminated quoted field";
            while (j < line.size() && (line[j] == ' ' || line[j] == '\t'))
                ++j;
            if (j < line.size() && line[j] != ',')
                return "unexpected text after quoted field";
            out.push_back(std::move(field));
            if (j >= line.size())
                return std::nullopt;
            i = j + 1;
            continue;
        }
        const auto comma = line.find(',', i);
        const auto raw = line.substr(i, comma == std::string_view::npos ? std::string_view::npos : comma - i);
        if (raw.find('"') != std::string_view::npos)
            return "stray quote inside unquoted field";
        out.emplace_back(trim(raw));
        if (comma == std::string_view::npos)
            return std::nullopt;
        i = comma + 1;
    }
}

}  // namespace

std::optional<std::size_t> CsvTable::column(std::string_view name) const
{
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name)
            return i;
    return std::nullopt;
}

CsvTable parse_csv(std::string_view text, std::string file, std::vector<Diagnostic>& diagnostics)
{
    CsvTable table;
    table.file = std::move(file);

    if (text.starts_with("\xEF\xBB\xBF"))
        text.remove_prefix(3);

    std::size_t line_no = 0;
    bool have_header = false;
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.find('\0') != std::string_view::npos) {
            diagnostics.push_back({table.file, line_no, {}, "line contains a NUL byte"});
            continue;
        }
        if (trim(line).empty())
            continue;

        if (const auto err = split_line(line, fields)) {
            diagnostics.push_back({table.file, line_no, {}, *err});
            if (!have_header)
                return table;
            continue;
        }
        if (!have_header) {
            table.header = fields;
            table.header_line = line_no;
            have_header = true;
            continue;
        }
        if (fields.size() != table.header.size()) {
            diagnostics.push_back({table.file, line_no, {},
                                   "expected " + std::to_string(table.header.size()) + " fields, found " +
                                       std::to_string(fields.size())});
            continue;
        }
        table.rows.push_back({line_no, fields});
    }
    if (!have_header)
        diagnostics.push_back({table.file, 1, {}, "missing header row"});
    return table;
}

CsvTable read_csv(const std::filesystem::path& path, std::vector<Diagnostic>& diagnostics)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        diagnostics.push_back({path.filename().string(), 0, {}, "cannot open " + path.string()});
        CsvTable t;
        t.file = path.filename().string();
        return t;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), path.filename().string(), diagnostics);
}

std::optional<double> parse_decimal(std::string_view text)
{
    if (text.empty())
        return std::nullopt;
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-')
        ++i;
    std::size_t int_digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        ++i;
        ++int_digits;
    }
    std::size_t frac_digits = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            ++i;
            ++frac_digits;
        }
    }
    if (i != text.size() || int_digits + frac_digits == 0)
        return std::nullopt;

    // from_chars rejects a leading '+'
    const auto body = text.front() == '+' ? text.substr(1) : text;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value, std::chars_format::fixed);
    if (ec != std::errc() || ptr != body.data() + body.size() || !std::isfinite(value))
        return std::nullopt;
    return value;
}

std::string format_exact(double value)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc())
        return "nan";
    return std::string(buf.data(), ptr);
}

std::string format_2dp(double value)
{
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.2f", value);
    std::string s(buf.data());
    if (s == "-0.00")
        s = "0.00";
    return s;
}

}  // namespace reshoreval::io
