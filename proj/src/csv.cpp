#include "ars3d/csv.hpp"

#include <charconv>

namespace ars3d {

std::string csv_number(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << csv_field(fields[i]);
    }
    out << '\n';
}

void write_locus_csv(std::ostream& out, const std::vector<LocusSample>& samples, bool plane_stack) {
    std::vector<std::string> header{"t", "x", "y", "F-residual"};
    if (plane_stack) header.push_back("plane");
    csv_row(out, header);
    for (const LocusSample& s : samples) {
        std::vector<std::string> row{csv_number(s.g.t), csv_number(s.g.v.x), csv_number(s.g.v.y),
                                     csv_number(s.residual)};
        if (plane_stack) row.push_back(std::to_string(s.plane));
        csv_row(out, row);
    }
}

}  // namespace ars3d
