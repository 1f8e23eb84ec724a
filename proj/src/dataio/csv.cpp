#include "dataio/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string_view>
#include <vector>

namespace dataio {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_cells(std::string_view line, TextFormat format) {
    std::vector<std::string_view> cells;
    if (format == TextFormat::csv) {
        std::size_t pos = 0;
        for (;;) {
            const auto comma = line.find(',', pos);
            cells.push_back(trim(line.substr(pos, comma == std::string_view::npos ? line.npos : comma - pos)));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return cells;
    }
    std::size_t pos = 0;
    while (pos < line.size()) {
        const auto start = line.find_first_not_of(" \t\r", pos);
        if (start == std::string_view::npos) break;
        auto end = line.find_first_of(" \t\r", start);
        if (end == std::string_view::npos) end = line.size();
        cells.push_back(line.substr(start, end - start));
        pos = end;
    }
    return cells;
}

double parse_cell(std::string_view cell, const std::string& source, std::size_t line) {
    if (cell.empty()) throw ParseError(source, line, "empty cell");
    std::string_view digits = cell;
    if (digits.front() == '+') digits.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
        throw ParseError(source, line, "non-numeric cell '" + std::string(cell) + "'");
    if (!std::isfinite(value))
        throw ParseError(source, line, "non-finite value '" + std::string(cell) + "'");
    return value;
}

} // namespace

TextFormat parse_format(const std::string& name) {
    if (name == "csv") return TextFormat::csv;
    if (name == "whitespace" || name == "ws") return TextFormat::whitespace;
    throw std::invalid_argument("unknown data format '" + name + "'");
}

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

mssc::Dataset parse_dataset(std::istream& in, const LoadOptions& options, const std::string& source) {
    std::vector<double> values;
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::size_t line_no = 0;
    bool header_pending = options.skip_header;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const auto content = trim(line);
        if (content.empty()) continue;
        if (header_pending) {
            header_pending = false;
            continue;
        }
        const auto cells = split_cells(content, options.format);
        if (rows == 0) cols = cells.size();
        else if (cells.size() != cols)
            throw ParseError(source, line_no,
                             "ragged row: expected " + std::to_string(cols) + " values, found " +
                                 std::to_string(cells.size()));
        for (const auto cell : cells) values.push_back(parse_cell(cell, source, line_no));
        ++rows;
    }
    if (rows == 0) throw ParseError(source, line_no, "no data rows");
    return mssc::Dataset(rows, cols, std::move(values));
}

mssc::Dataset load_dataset(const std::filesystem::path& path, const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return parse_dataset(in, options, path.string());
}

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw std::runtime_error("cannot format number");
    return std::string(buf, ptr);
}

void write_matrix(const std::filesystem::path& path, mssc::MatrixView values, TextFormat format) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    const char sep = format == TextFormat::csv ? ',' : ' ';
    for (std::size_t i = 0; i < values.rows; ++i) {
        for (std::size_t j = 0; j < values.cols; ++j) {
            if (j) out << sep;
            out << format_double(values(i, j));
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

} // namespace dataio
