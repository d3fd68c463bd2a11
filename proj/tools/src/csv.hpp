#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mstat::cli {

enum class CsvSchema { returns, yearly_values };

/// One loaded time-series table: a year column plus one value column
/// (`rate` for the returns schema, `value` for yearly values). Rows are
/// sorted by year after load.
struct DataTable {
    std::vector<int> years;
    std::vector<double> values;

    std::size_t size() const noexcept { return years.size(); }
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what), line_(0) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Loads a two-column CSV with a mandatory header (`year,rate` or
/// `year,value` depending on the schema). Accepts LF or CRLF, skips a
/// UTF-8 BOM, rejects malformed or non-finite cells with the 1-based
/// line number. percent = true divides values by 100.
DataTable parse_csv(const std::string& path, CsvSchema schema, bool percent = false);

/// Same grammar, from an in-memory string (used by the tests).
DataTable parse_csv_text(const std::string& text, CsvSchema schema, bool percent = false);

}  // namespace mstat::cli
