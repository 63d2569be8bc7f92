#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "wavereg/errors.hpp"
#include "wavereg/time_series.hpp"

// CSV ingestion and serialization.
//
// Dialect: comma-delimited, one header row, "." decimal point, optional
// double quotes (doubled quote escapes a literal one).  Parsing is
// locale-independent.  Data rows are numbered from 0, header excluded;
// error messages use that numbering.

namespace wavereg {

namespace detail {

inline std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cells.push_back(std::move(cell));
            cell.clear();
        } else {
            cell += c;
        }
    }
    cells.push_back(std::move(cell));
    return cells;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

/// Parse a cell as a double.  Returns nullopt on syntax errors or trailing
/// junk; the caller keeps the finiteness check so "nan"/"inf" cells get the
/// same diagnostic as unparseable ones.
inline std::optional<double> parse_double(std::string_view cell) {
    cell = trim(cell);
    if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
    if (cell.empty()) return std::nullopt;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) return std::nullopt;
    return value;
}

inline std::optional<long long> parse_year(std::string_view cell) {
    cell = trim(cell);
    if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
    if (cell.empty()) return std::nullopt;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) return std::nullopt;
    return value;
}

inline bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

/// Full precision for machine round-trips: 17 significant digits.
inline std::string format_full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

/// A parsed CSV file: header plus raw cell rows, order preserved.
struct CsvFile {
    std::string path;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Index of the named column, or -1.  Exact match; throws on duplicates
    /// so a selection can never silently bind to the wrong column.
    int find_column(const std::string& name) const {
        int found = -1;
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (std::string_view(detail::trim(header[i])) == name) {
                if (found >= 0) throw DuplicateNameError(name);
                found = static_cast<int>(i);
            }
        }
        return found;
    }

    /// Index of the year column: the header entry equal to "year"
    /// case-insensitively, or -1 when absent.
    int find_year_column() const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (detail::iequals(detail::trim(header[i]), "year")) return static_cast<int>(i);
        return -1;
    }
};

inline CsvFile read_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileNotFoundError(path);
    CsvFile file;
    file.path = path;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        line = detail::strip_cr(std::move(line));
        if (line.empty()) continue;
        auto cells = detail::split_csv_line(line);
        if (first) {
            file.header = std::move(cells);
            first = false;
        } else {
            file.rows.push_back(std::move(cells));
        }
    }
    if (first) throw EmptySelectionError();
    return file;
}

namespace detail {

/// The shared index axis of a file: the year column when present, else row
/// positions 0..n-1 (with a warning, since positional indexes are a guess).
inline std::vector<long long> file_index(const CsvFile& file, std::vector<std::string>* warnings) {
    std::vector<long long> index;
    index.reserve(file.rows.size());
    const int ycol = file.find_year_column();
    if (ycol < 0) {
        if (warnings != nullptr)
            warnings->push_back("no \"year\" column in " + file.path +
                                "; using row positions 0.." + std::to_string(file.rows.size() - 1) +
                                " as the index");
        for (std::size_t r = 0; r < file.rows.size(); ++r)
            index.push_back(static_cast<long long>(r));
        return index;
    }
    const std::string year_name = file.header[static_cast<std::size_t>(ycol)];
    for (std::size_t r = 0; r < file.rows.size(); ++r) {
        const auto& row = file.rows[r];
        if (static_cast<std::size_t>(ycol) >= row.size())
            throw UnparseableCellError(r, year_name, "");
        auto y = parse_year(row[static_cast<std::size_t>(ycol)]);
        if (!y) throw UnparseableCellError(r, year_name, row[static_cast<std::size_t>(ycol)]);
        index.push_back(*y);
    }
    return index;
}

/// One named column as finite doubles.  Any missing or non-numeric cell
/// fails the whole load; silent row dropping would bias every statistic
/// downstream.
inline std::vector<double> file_column(const CsvFile& file, const std::string& name) {
    const int col = file.find_column(name);
    if (col < 0) throw MissingColumnError(name);
    std::vector<double> values;
    values.reserve(file.rows.size());
    for (std::size_t r = 0; r < file.rows.size(); ++r) {
        const auto& row = file.rows[r];
        if (static_cast<std::size_t>(col) >= row.size()) throw UnparseableCellError(r, name, "");
        auto v = parse_double(row[static_cast<std::size_t>(col)]);
        if (!v || !std::isfinite(*v))
            throw UnparseableCellError(r, name, row[static_cast<std::size_t>(col)]);
        values.push_back(*v);
    }
    return values;
}

}  // namespace detail

/// Load one column from a CSV file as a TimeSeries (decomposition input).
inline TimeSeries load_series(const std::string& path, const std::string& column,
                              std::vector<std::string>* warnings = nullptr) {
    const CsvFile file = read_csv_file(path);
    if (file.rows.empty()) throw EmptySelectionError();
    auto index = detail::file_index(file, warnings);
    auto values = detail::file_column(file, column);
    return TimeSeries(column, std::move(index), std::move(values));
}

/// Load a dependent plus independents from a CSV file, sharing the file's
/// year axis.  Values appear in file row order.
inline AlignedDataset load_csv(const std::string& path, const std::string& dependent_name,
                               const std::vector<std::string>& independent_names,
                               std::vector<std::string>* warnings = nullptr) {
    const CsvFile file = read_csv_file(path);
    if (file.rows.empty()) throw EmptySelectionError();
    if (independent_names.empty()) throw Error("dataset needs at least one independent series");
    const auto index = detail::file_index(file, warnings);
    TimeSeries dependent(dependent_name, index, detail::file_column(file, dependent_name));
    std::vector<TimeSeries> independents;
    independents.reserve(independent_names.size());
    for (const auto& name : independent_names)
        independents.emplace_back(name, index, detail::file_column(file, name));
    return AlignedDataset(std::move(dependent), std::move(independents));
}

/// Serialize text to a file atomically: write a sibling temp file, then
/// rename over the target, so readers never observe a half-written file.
inline void write_text_atomic(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open for writing: " + tmp);
        out << text;
        if (!out) throw Error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw Error("cannot rename " + tmp + " to " + path);
    }
}

/// Render a year-indexed table as CSV with 17-significant-digit values,
/// so reloading reproduces every double bit-for-bit.
inline std::string render_table_csv(const std::vector<std::string>& column_names,
                                    const std::vector<long long>& index,
                                    const std::vector<std::vector<double>>& columns) {
    if (column_names.size() != columns.size() + 1)
        throw LengthMismatchError(column_names.size(), columns.size() + 1);
    for (const auto& c : columns)
        if (c.size() != index.size()) throw LengthMismatchError(c.size(), index.size());
    std::string out;
    for (std::size_t i = 0; i < column_names.size(); ++i) {
        if (i > 0) out += ',';
        out += column_names[i];
    }
    out += '\n';
    for (std::size_t r = 0; r < index.size(); ++r) {
        out += std::to_string(index[r]);
        for (const auto& c : columns) {
            out += ',';
            out += detail::format_full(c[r]);
        }
        out += '\n';
    }
    return out;
}

/// Render an AlignedDataset as CSV (year, dependent, independents).
inline std::string render_dataset_csv(const AlignedDataset& data) {
    std::vector<std::string> names{"year", data.dependent().name()};
    std::vector<std::vector<double>> columns{data.dependent().values()};
    for (const auto& s : data.independents()) {
        names.push_back(s.name());
        columns.push_back(s.values());
    }
    return render_table_csv(names, data.dependent().index(), columns);
}

/// Write an AlignedDataset back to CSV (year, dependent, independents).
inline void write_csv(const std::string& path, const AlignedDataset& data) {
    write_text_atomic(path, render_dataset_csv(data));
}

}  // namespace wavereg
