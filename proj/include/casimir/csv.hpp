#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir::csv {

struct Row {
    std::vector<std::string> fields;
    std::size_t line_number = 0;  // 1-based, for error messages
};

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Reads a CSV file: '#' lines are comments, the first non-comment line is the
// header. Returns header fields and data rows with their line numbers.
struct Table {
    std::vector<std::string> header;
    std::vector<Row> rows;
    std::vector<std::string> comments;  // leading '#' lines, '#' stripped
};

inline Table read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open '" + path + "' for reading");
    Table t;
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty()) continue;
        if (s[0] == '#') {
            t.comments.push_back(trim(s.substr(1)));
            continue;
        }
        Row row;
        row.line_number = lineno;
        std::stringstream ss(s);
        std::string field;
        while (std::getline(ss, field, ',')) row.fields.push_back(trim(field));
        if (!s.empty() && s.back() == ',') row.fields.push_back("");
        if (!have_header) {
            t.header = row.fields;
            have_header = true;
        } else {
            t.rows.push_back(std::move(row));
        }
    }
    if (!have_header) throw io_error("'" + path + "' has no header row");
    return t;
}

inline void expect_header(const Table& t, const std::vector<std::string>& expected,
                          const std::string& path) {
    if (t.header != expected) {
        std::string want;
        for (const auto& h : expected) want += (want.empty() ? "" : ",") + h;
        std::string got;
        for (const auto& h : t.header) got += (got.empty() ? "" : ",") + h;
        throw io_error("'" + path + "': expected header '" + want + "', got '" + got + "'");
    }
}

inline double parse_double(const std::string& field, const std::string& path,
                           std::size_t lineno) {
    try {
        std::size_t pos = 0;
        double v = std::stod(field, &pos);
        if (pos != field.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw io_error("'" + path + "' line " + std::to_string(lineno) +
                       ": cannot parse number from '" + field + "'");
    }
}

// Shortest representation that round-trips a double exactly.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    double back = 0.0;
    for (int prec = 9; prec <= 16; ++prec) {
        char shorter[40];
        std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
        std::sscanf(shorter, "%lf", &back);
        if (back == v) return shorter;
    }
    return buf;
}

class Writer {
public:
    explicit Writer(const std::string& path) : path_(path), out_(path) {
        if (!out_) throw io_error("cannot open '" + path + "' for writing");
    }

    void comment(const std::string& text) { out_ << "# " << text << "\n"; }

    void header(const std::vector<std::string>& fields) { raw_row(fields); }

    void row(const std::vector<double>& values) {
        std::vector<std::string> fields(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) fields[i] = format_double(values[i]);
        raw_row(fields);
    }

    void raw_row(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i)
            out_ << (i ? "," : "") << fields[i];
        out_ << "\n";
    }

    void close() {
        out_.flush();
        if (!out_) throw io_error("write failed for '" + path_ + "'");
        out_.close();
    }

private:
    std::string path_;
    std::ofstream out_;
};

}  // namespace casimir::csv
