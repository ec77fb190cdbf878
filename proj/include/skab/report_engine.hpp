#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "skab/order_bound.hpp"

namespace skab {

struct TableRow {
    Int k = 0;
    Int a = 0;
    Int b = 0;
    Int degree = 0;
    Int d = 0;      // best two-point order bound at dimension k
    Int goppa = 0;  // Goppa dual bound of the (a, b) witness
    Int d1 = 0;     // best one-point order bound at dimension k
    Int b_prime = 0;
    Int delta = 0;  // d - d1

    bool operator==(const TableRow&) const = default;
};

enum class ExportFormat { csv, json };

struct SweepConfig {
    Int s = 1;
    // Unset upper limits default to 4g - 1; a + b is capped by max_degree.
    Int a_min = 1;
    Int a_max = -1;
    Int b_min = 1;
    Int b_max = -1;
    Int max_degree = -1;
    Int min_delta = 10;
    unsigned jobs = 1;
    ExportFormat format = ExportFormat::csv;
};

// The sweep tabulates a triangle of side 4g; this caps it near 8 * 10^7 cells.
inline constexpr Int kMaxLatticeSide = 12'800;

/// Throws std::domain_error for empty ranges, a negative threshold, s < 1, or
/// an s whose order-bound lattice is too large to tabulate.
void validate(const SweepConfig& cfg);

/// One row per dual dimension reached by the two-point grid: the largest d
/// (lexicographically smallest witness) against the best one-point code.
/// Unfiltered and sorted by k.
std::vector<TableRow> compare_by_dimension(const SweepConfig& cfg);

/// Rows with delta >= min_delta, order preserved.
std::vector<TableRow> filter_rows(const std::vector<TableRow>& rows, Int min_delta);

/// compare_by_dimension followed by filter_rows(cfg.min_delta).
std::vector<TableRow> sweep(const SweepConfig& cfg);

inline constexpr const char* kTableCsvHeader = "k,a,b,deg,d,goppa,d1,b_prime,delta";

void write_rows(const std::vector<TableRow>& rows, ExportFormat format, std::ostream& out);

/// Writes to `destination`; throws std::runtime_error naming the path on I/O failure.
void export_rows(const std::vector<TableRow>& rows, ExportFormat format,
                 const std::filesystem::path& destination);

ExportFormat parse_export_format(const std::string& name);

} // namespace skab
