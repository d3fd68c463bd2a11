#include "csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace mstat::cli {

namespace {

std::string strip(std::string s) {
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

std::pair<std::string, std::string> split_two(const std::string& line, std::size_t line_no) {
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
        throw ParseError("expected two comma-separated columns", line_no);
    }
    if (line.find(',', comma + 1) != std::string::npos) {
        throw ParseError("expected exactly two columns", line_no);
    }
    return {strip(line.substr(0, comma)), strip(line.substr(comma + 1))};
}

int parse_year(const std::string& cell, std::size_t line_no) {
    int year = 0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), year);
    if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
        throw ParseError("cannot parse year '" + cell + "'", line_no);
    }
    return year;
}

double parse_value(const std::string& cell, std::size_t line_no) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
        throw ParseError("cannot parse value '" + cell + "'", line_no);
    }
    if (!std::isfinite(value)) {
        throw ParseError("value '" + cell + "' is not finite", line_no);
    }
    return value;
}

}  // namespace

DataTable parse_csv_text(const std::string& text, CsvSchema schema, bool percent) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;

    const std::string value_column = schema == CsvSchema::returns ? "rate" : "value";

    if (!std::getline(in, line)) {
        throw ParseError("empty file");
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
    {
        const auto [c0, c1] = split_two(line, line_no);
        if (c0 != "year" || c1 != value_column) {
            throw ParseError("expected header 'year," + value_column + "', got '" + line + "'",
                             line_no);
        }
    }

    DataTable table;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (strip(line).empty()) {
            if (in.eof()) break;  // tolerate one trailing newline
            throw ParseError("blank row", line_no);
        }
        const auto [year_cell, value_cell] = split_two(line, line_no);
        table.years.push_back(parse_year(year_cell, line_no));
        double v = parse_value(value_cell, line_no);
        if (percent) v /= 100.0;
        table.values.push_back(v);
    }
    if (table.years.empty()) {
        throw ParseError("no data rows");
    }

    std::vector<std::size_t> order(table.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&table](std::size_t i, std::size_t j) {
        return table.years[i] < table.years[j];
    });
    DataTable sorted;
    sorted.years.reserve(table.size());
    sorted.values.reserve(table.size());
    for (std::size_t i : order) {
        sorted.years.push_back(table.years[i]);
        sorted.values.push_back(table.values[i]);
    }
    return sorted;
}

DataTable parse_csv(const std::string& path, CsvSchema schema, bool percent) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv_text(buf.str(), schema, percent);
}

}  // namespace mstat::cli
