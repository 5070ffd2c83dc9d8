#include "svdkit/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>

#include "svdkit/errors.hpp"

namespace svdkit {

std::string format_double(double value) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_field(std::string_view field, std::size_t line_no) {
    const std::string_view t = trim(field);
    double value = 0.0;
    const auto result = std::from_chars(t.data(), t.data() + t.size(), value);
    if (result.ec != std::errc{} || result.ptr != t.data() + t.size() || t.empty() ||
        !std::isfinite(value)) {
        throw FormatError("csv: bad number '" + std::string(field) + "' on line " +
                              std::to_string(line_no),
                          line_no);
    }
    return value;
}

} // namespace

DenseMatrix read_matrix_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        std::vector<double> row;
        std::string_view rest(line);
        while (true) {
            const std::size_t comma = rest.find(',');
            row.push_back(parse_field(rest.substr(0, comma), line_no));
            if (comma == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(comma + 1);
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw FormatError("csv: line " + std::to_string(line_no) + " has " +
                                  std::to_string(row.size()) + " fields, expected " +
                                  std::to_string(rows.front().size()),
                              line_no);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw FormatError("csv: no data rows", 0);
    }

    const std::size_t m = rows.size();
    const std::size_t n = rows.front().size();
    DenseMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = rows[i][j];
        }
    }
    return a;
}

DenseMatrix read_matrix_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    return read_matrix_csv(in);
}

void write_matrix_csv(const DenseMatrix& a, std::ostream& out) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j > 0) {
                out << ',';
            }
            out << format_double(a(i, j));
        }
        out << '\n';
    }
}

void write_matrix_csv_file(const DenseMatrix& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    write_matrix_csv(a, out);
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

void write_vector_csv_file(const std::vector<double>& values, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    for (double v : values) {
        out << format_double(v) << '\n';
    }
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

} // namespace svdkit
