#include "leelat/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace leelat {

namespace {

std::string next_content_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        if (line.back() == '\r') line.pop_back();
        return line;
    }
    throw ParseError("unexpected end of input");
}

}  // namespace

ZqMatrix read_matrix(std::istream& in) {
    std::istringstream head(next_content_line(in));
    long long q = 0;
    int rows = -1, cols = -1;
    if (!(head >> q >> rows >> cols))
        throw ParseError("matrix header must be 'q rows cols'");
    if (q < 2) throw ParseError("matrix modulus must be >= 2");
    if (rows < 0 || cols < 1) throw ParseError("bad matrix dimensions");
    std::vector<long long> entries;
    entries.reserve(static_cast<size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
        std::istringstream row(next_content_line(in));
        long long v;
        int got = 0;
        while (row >> v) {
            entries.push_back(v);
            ++got;
        }
        if (got != cols) throw ParseError("matrix row has wrong entry count");
    }
    if (rows == 0) return ZqMatrix{q, 0, cols, {}};
    return reduce_mod_q(rows, cols, entries, q);
}

void write_matrix(std::ostream& out, const ZqMatrix& m) {
    out << m.q << ' ' << m.rows << ' ' << m.cols << '\n';
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) out << (c ? " " : "") << m.at(r, c);
        out << '\n';
    }
}

LatticeInput read_lattice_file(std::istream& in) {
    const std::string kind = next_content_line(in);
    LatticeInput input;
    if (kind == "code") {
        const ZqMatrix g = read_matrix(in);
        input.code = build_code(g);
        input.lattice = build_lattice(input.code);
        input.from_generator = true;
    } else if (kind == "blocks") {
        const ZqMatrix b = read_matrix(in);
        const int k = b.cols, n = b.rows + b.cols;
        input.code = code_from_blocks(b.q, n, k, b);
        input.lattice = build_lattice_from_blocks(b.q, n, k, b);
    } else {
        throw ParseError("lattice file must start with 'code' or 'blocks', got '" + kind + "'");
    }
    return input;
}

LatticeInput read_lattice_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_lattice_file(in);
}

std::vector<double> parse_vector(const std::string& line) {
    std::istringstream ss(line);
    std::vector<double> v;
    double x;
    while (ss >> x) {
        if (!std::isfinite(x)) throw ParseError("vector coordinates must be finite");
        v.push_back(x);
    }
    std::string rest;
    if (ss.clear(), ss >> rest) throw ParseError("bad vector token '" + rest + "'");
    if (v.empty()) throw ParseError("empty vector");
    return v;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void write_csv(std::ostream& out, const Csv& csv) {
    for (size_t i = 0; i < csv.header.size(); ++i) out << (i ? "," : "") << csv.header[i];
    out << '\n';
    for (const auto& row : csv.rows) {
        for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
    }
}

Csv read_csv(std::istream& in) {
    Csv csv;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ss(line);
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (first) {
            csv.header = std::move(cells);
            first = false;
        } else {
            if (cells.size() != csv.header.size()) throw ParseError("ragged CSV row");
            csv.rows.push_back(std::move(cells));
        }
    }
    if (first) throw ParseError("empty CSV");
    return csv;
}

void write_svg_chart(std::ostream& out, const std::string& title,
                     const std::vector<ChartSeries>& series, bool log_y) {
    const double width = 640, height = 440, left = 70, bottom = 50, top = 40, right = 20;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : series)
        for (size_t i = 0; i < s.x.size(); ++i) {
            double y = s.y[i];
            if (log_y) {
                if (y <= 0) continue;
                y = std::log10(y);
            }
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (xmin > xmax || ymin > ymax) throw ParseError("chart has no plottable points");
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    const auto px = [&](double x) {
        return left + (x - xmin) / (xmax - xmin) * (width - left - right);
    };
    const auto py = [&](double y) {
        if (log_y) y = std::log10(y);
        return height - bottom - (y - ymin) / (ymax - ymin) * (height - top - bottom);
    };
    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
        << title << "</text>\n";
    out << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right
        << "\" y2=\"" << height - bottom << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
        << height - bottom << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << left << "\" y=\"" << height - bottom + 18
        << "\" font-size=\"11\" text-anchor=\"middle\">" << xmin << "</text>\n";
    out << "<text x=\"" << width - right << "\" y=\"" << height - bottom + 18
        << "\" font-size=\"11\" text-anchor=\"middle\">" << xmax << "</text>\n";
    out << "<text x=\"" << left - 8 << "\" y=\"" << height - bottom
        << "\" font-size=\"11\" text-anchor=\"end\">" << (log_y ? "1e" : "")
        << (log_y ? std::to_string(ymin) : format_double(ymin)) << "</text>\n";
    out << "<text x=\"" << left - 8 << "\" y=\"" << top + 4
        << "\" font-size=\"11\" text-anchor=\"end\">" << (log_y ? "1e" : "")
        << (log_y ? std::to_string(ymax) : format_double(ymax)) << "</text>\n";
    for (size_t s = 0; s < series.size(); ++s) {
        out << "<polyline fill=\"none\" stroke=\"" << kColors[s % 4] << "\" points=\"";
        for (size_t i = 0; i < series[s].x.size(); ++i) {
            if (log_y && series[s].y[i] <= 0) continue;
            out << px(series[s].x[i]) << ',' << py(series[s].y[i]) << ' ';
        }
        out << "\"/>\n";
        out << "<text x=\"" << width - right - 6 << "\" y=\"" << top + 16 + 16 * s
            << "\" font-size=\"12\" text-anchor=\"end\" fill=\"" << kColors[s % 4] << "\">"
            << series[s].label << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace leelat
