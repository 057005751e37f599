#pragma once

#include <istream>
#include <string>
#include <vector>

namespace qpov {

// A numeric CSV table: a header row followed by rows of numbers.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    // Index of a column; throws ValidationError when absent.
    std::size_t column(const std::string& name) const;
    std::vector<double> values(const std::string& name) const;
};

// Reads comma-separated numbers. Blank lines are skipped; every row must
// have as many cells as the header. `source` names the input in messages.
CsvTable read_csv(std::istream& in, const std::string& source);

// Opens and reads a file; throws IoError when it cannot be opened.
CsvTable read_csv_file(const std::string& path);

} // namespace qpov
