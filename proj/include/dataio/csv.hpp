#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mssc/matrix.hpp"

namespace dataio {

enum class TextFormat { csv, whitespace };

TextFormat parse_format(const std::string& name);

struct LoadOptions {
    TextFormat format = TextFormat::csv;
    bool skip_header = false;
};

/// Parse failure carrying the 1-based line number of the offending input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Reads a numeric matrix. Blank lines are ignored. Rejects empty input,
/// non-numeric cells, NaN/inf and rows whose width differs from the first.
mssc::Dataset load_dataset(const std::filesystem::path& path, const LoadOptions& options = {});
mssc::Dataset parse_dataset(std::istream& in, const LoadOptions& options,
                            const std::string& source = "<input>");

/// Writes values with shortest round-trip formatting.
void write_matrix(const std::filesystem::path& path, mssc::MatrixView values,
                  TextFormat format = TextFormat::csv);

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

} // namespace dataio
