#include "jumprec/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace jumprec {

CsvWriter::CsvWriter(const std::string& path, const std::string& header)
    : out_(path), path_(path) {
    if (!out_) throw std::runtime_error("cannot open " + path + " for writing");
    out_ << header << '\n';
}

std::string CsvWriter::format(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void CsvWriter::row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out_ << ',';
        out_ << format(values[i]);
    }
    out_ << '\n';
    if (!out_) throw std::runtime_error("write failed: " + path_);
}

void CsvWriter::row_raw(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        out_ << cells[i];
    }
    out_ << '\n';
    if (!out_) throw std::runtime_error("write failed: " + path_);
}

}  // namespace jumprec
