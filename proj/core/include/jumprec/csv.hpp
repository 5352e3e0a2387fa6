#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace jumprec {

/// CSV writer with one header line and fixed 17-significant-digit formatting
/// (lossless double round-trip for regression baselines).
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::string& header);

    void row(const std::vector<double>& values);
    /// Mixed row: pre-formatted cells (e.g. integers or labels) pass through.
    void row_raw(const std::vector<std::string>& cells);

    static std::string format(double v);

private:
    std::ofstream out_;
    std::string path_;
};

}  // namespace jumprec
