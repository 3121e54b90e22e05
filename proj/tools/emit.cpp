#include "emit.hpp"

#include <cmath>
#include <cstdio>

namespace hsf::cli {

double convert_energy(double hartree, Units u) {
    switch (u) {
        case Units::hartree: return hartree;
        case Units::rydberg: return 2.0 * hartree;
        default: return kHartreeEv * hartree;
    }
}

const char* unit_name(Units u) {
    switch (u) {
        case Units::hartree: return "hartree";
        case Units::rydberg: return "rydberg";
        default: return "ev";
    }
}

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0";
    const double ax = std::fabs(x);
    char buf[48];
    if (ax < 1e-3 || ax > 1e6) {
        std::snprintf(buf, sizeof buf, "%.11e", x);
    } else {
        int lead = static_cast<int>(std::floor(std::log10(ax)));  // in [-3, 6]
        int decimals = 11 - lead;
        if (decimals < 0) decimals = 0;
        std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    }
    return buf;
}

std::string render_table(const Document& doc) {
    std::vector<std::size_t> width(doc.columns.size());
    for (std::size_t c = 0; c < doc.columns.size(); ++c) width[c] = doc.columns[c].size();
    for (const auto& row : doc.rows)
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
            width[c] = std::max(width[c], row[c].size());

    std::string out;
    const auto emit_row = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) out += "  ";
            out.append(width[c] - cells[c].size(), ' ');
            out += cells[c];
        }
        out += '\n';
    };
    emit_row(doc.columns);
    for (const auto& row : doc.rows) emit_row(row);
    return out;
}

std::string render_csv(const Document& doc) {
    std::string out;
    const auto emit_row = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) out += ',';
            out += cells[c];
        }
        out += '\n';
    };
    emit_row(doc.columns);
    for (const auto& row : doc.rows) emit_row(row);
    return out;
}

std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace hsf::cli
