#include "qpov/csv.hpp"

#include "qpov/error.hpp"
#include "qpov/format.hpp"

#include <fstream>
#include <sstream>

namespace qpov {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

std::size_t CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw ValidationError("missing column '" + name + "'");
}

std::vector<double> CsvTable::values(const std::string& name) const {
    std::size_t c = column(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r[c]);
    return out;
}

CsvTable read_csv(std::istream& in, const std::string& source) {
    CsvTable t;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        auto cells = split(line);
        if (!have_header) {
            for (auto& c : cells) t.header.push_back(trim(c));
            have_header = true;
            continue;
        }
        if (cells.size() != t.header.size())
            throw ValidationError(source + ":" + std::to_string(lineno) + ": expected " +
                                  std::to_string(t.header.size()) + " cells, found " +
                                  std::to_string(cells.size()));
        std::vector<double> row;
        for (const auto& c : cells)
            row.push_back(parse_number(c, source + ":" + std::to_string(lineno)));
        t.rows.push_back(std::move(row));
    }
    if (!have_header) throw ValidationError(source + ": empty input, no header row");
    return t;
}

CsvTable read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return read_csv(in, path);
}

} // namespace qpov
