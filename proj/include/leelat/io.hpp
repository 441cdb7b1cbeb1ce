#ifndef LEELAT_IO_HPP
#define LEELAT_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "leelat/lattice.hpp"

namespace leelat {

/// Shared matrix text format: first line "q rows cols", then rows of
/// space-separated integers. Entries are canonicalized mod q on read.
ZqMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const ZqMatrix& m);

/// Code/lattice file: a header flag line "code" (an n x k generator follows)
/// or "blocks" (the (n-k) x k lower block of the lattice basis follows;
/// zero rows means k == n), then the shared matrix format.
struct LatticeInput {
    QaryCode code;
    QaryLattice lattice;
    bool from_generator = false;  // true when the file held a raw generator
};
LatticeInput read_lattice_file(std::istream& in);
LatticeInput read_lattice_file(const std::string& path);

/// One vector per line, space-separated numbers (reals accepted).
std::vector<double> parse_vector(const std::string& line);

/// CSV: header row, comma separators, '.' decimal, LF line endings.
struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};
void write_csv(std::ostream& out, const Csv& csv);
Csv read_csv(std::istream& in);
std::string format_double(double v);  // fixed 6-digit form used in CSV cells

/// Minimal self-contained line chart, one polyline per series.
struct ChartSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};
void write_svg_chart(std::ostream& out, const std::string& title,
                     const std::vector<ChartSeries>& series, bool log_y);

}  // namespace leelat

#endif
