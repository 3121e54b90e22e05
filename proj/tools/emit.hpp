#pragma once

#include <string>
#include <vector>

namespace hsf::cli {

enum class Format { table, csv, json };
enum class Units { hartree, rydberg, ev };

// 1 hartree = 2 rydberg = 27.211386245988 eV (CODATA 2018).
inline constexpr double kHartreeEv = 27.211386245988;

double convert_energy(double hartree, Units u);
const char* unit_name(Units u);

// 12 significant digits, scientific notation for |x| outside [1e-3, 1e6].
// The fixed formatting is what makes repeated runs byte-identical and the
// CSV/JSON encodings numerically equal.
std::string format_number(double x);

// A flat row document; every cell is pre-formatted.
struct Document {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string render_table(const Document& doc);
std::string render_csv(const Document& doc);

// Minimal JSON writing; values() gets pre-rendered JSON value text, so
// callers decide number/string/null per cell.
std::string json_quote(const std::string& s);

}  // namespace hsf::cli
