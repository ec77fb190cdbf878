#include "skab/report_engine.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace skab {

namespace {

struct Resolved {
    Int a_min, a_max, b_min, b_max, max_degree;
};

Resolved resolve(const SweepConfig& cfg, const CurveParams& params)
{
    const Int saturation = 4 * params.genus - 1;
    Resolved r{cfg.a_min, cfg.a_max, cfg.b_min, cfg.b_max, cfg.max_degree};
    if (r.a_max < 0)
        r.a_max = saturation;
    if (r.b_max < 0)
        r.b_max = saturation;
    if (r.max_degree < 0)
        r.max_degree = saturation;
    return r;
}

} // namespace

void validate(const SweepConfig& cfg)
{
    if (cfg.s < 1)
        throw std::domain_error("s must be >= 1");
    if (cfg.min_delta < 0)
        throw std::domain_error("delta threshold must be >= 0");
    if (cfg.a_min < 0 || cfg.b_min < 0)
        throw std::domain_error("sweep ranges must be nonnegative");
    if ((cfg.a_max >= 0 && cfg.a_max < cfg.a_min) || (cfg.b_max >= 0 && cfg.b_max < cfg.b_min))
        throw std::domain_error("sweep range is empty");
    if (cfg.max_degree >= 0 && cfg.max_degree < std::max<Int>(1, cfg.a_min + cfg.b_min))
        throw std::domain_error("sweep degree cap excludes every divisor");
    const CurveParams params = make_params(cfg.s);
    const Int side = 4 * params.genus;
    if (side > kMaxLatticeSide)
        throw std::domain_error("order-bound lattice for s = " + std::to_string(cfg.s) +
                                " has side " + std::to_string(side) + ", above the sweep limit " +
                                std::to_string(kMaxLatticeSide));
}

std::vector<TableRow> compare_by_dimension(const SweepConfig& cfg)
{
    validate(cfg);
    const CurveParams params = make_params(cfg.s);
    const Resolved range = resolve(cfg, params);
    const TwoPointSemigroup semigroup(params);
    const OrderBound bound(semigroup);
    const OrderBoundLattice lattice(bound, cfg.jobs);
    const Int n = params.code_length;
    const Int lattice_top = lattice.max_degree();

    // Two-point side: dim L(aP + bP_inf) accumulated along a for each b.
    std::map<Int, TableRow> by_k;
    for (Int b = range.b_min; b <= range.b_max; ++b) {
        Int a = range.a_min;
        if (a + b > range.max_degree)
            break;
        Int dim = semigroup.rr_dim({a, b});
        for (; a <= range.a_max && a + b <= range.max_degree; ++a) {
            if (a + b >= 1) {
                const DivisorSpec g{a, b};
                const Int k = n - dim;
                const Int d = lattice.at(g);
                auto [it, fresh] = by_k.try_emplace(k);
                TableRow& row = it->second;
                const bool better = fresh || d > row.d ||
                                    (d == row.d && std::pair(a, b) < std::pair(row.a, row.b));
                if (better) {
                    row.k = k;
                    row.a = a;
                    row.b = b;
                    row.degree = a + b;
                    row.d = d;
                    row.goppa = bound.goppa_dual(g);
                }
            }
            if (semigroup.increases_dimension(Point::P, {a, b}))
                ++dim;
        }
    }

    // One-point side: dim L(b' P_inf) over b' >= 1, up to the largest two-point degree.
    std::map<Int, OnePointBest> one_point;
    const Int bp_top = std::max(range.max_degree, lattice_top);
    Int dim = semigroup.rr_dim({0, 1});
    for (Int bp = 1; bp <= bp_top && bp < n; ++bp) {
        const Int k = n - dim;
        const Int d1 = lattice.at({0, bp});
        auto [it, fresh] = one_point.try_emplace(k, OnePointBest{bp, d1});
        if (!fresh && d1 > it->second.d1)
            it->second = {bp, d1};
        if (semigroup.increases_dimension(Point::Pinf, {0, bp}))
            ++dim;
    }

    std::vector<TableRow> rows;
    rows.reserve(by_k.size());
    for (auto& [k, row] : by_k) {
        auto it = one_point.find(k);
        if (it == one_point.end()) {
            const OnePointBest best = bound.best_one_point(k);
            it = one_point.emplace(k, best).first;
        }
        row.d1 = it->second.d1;
        row.b_prime = it->second.b_prime;
        row.delta = row.d - row.d1;
        rows.push_back(row);
    }
    return rows;
}

std::vector<TableRow> filter_rows(const std::vector<TableRow>& rows, Int min_delta)
{
    std::vector<TableRow> out;
    std::copy_if(rows.begin(), rows.end(), std::back_inserter(out),
                 [&](const TableRow& r) { return r.delta >= min_delta; });
    return out;
}

std::vector<TableRow> sweep(const SweepConfig& cfg)
{
    return filter_rows(compare_by_dimension(cfg), cfg.min_delta);
}

void write_rows(const std::vector<TableRow>& rows, ExportFormat format, std::ostream& out)
{
    if (format == ExportFormat::csv) {
        out << kTableCsvHeader << '\n';
        for (const TableRow& r : rows)
            out << r.k << ',' << r.a << ',' << r.b << ',' << r.degree << ',' << r.d << ','
                << r.goppa << ',' << r.d1 << ',' << r.b_prime << ',' << r.delta << '\n';
        return;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const TableRow& r : rows) {
        arr.push_back({{"k", r.k},
                       {"a", r.a},
                       {"b", r.b},
                       {"deg", r.degree},
                       {"d", r.d},
                       {"goppa", r.goppa},
                       {"d1", r.d1},
                       {"b_prime", r.b_prime},
                       {"delta", r.delta}});
    }
    out << arr.dump() << '\n';
}

void export_rows(const std::vector<TableRow>& rows, ExportFormat format,
                 const std::filesystem::path& destination)
{
    std::ofstream file(destination, std::ios::binary | std::ios::trunc);
    if (!file)
        throw std::runtime_error("cannot open " + destination.string() + " for writing");
    write_rows(rows, format, file);
    file.flush();
    if (!file)
        throw std::runtime_error("write failed for " + destination.string());
}

ExportFormat parse_export_format(const std::string& name)
{
    if (name == "csv")
        return ExportFormat::csv;
    if (name == "json")
        return ExportFormat::json;
    throw std::domain_error("unknown export format '" + name + "'");
}

} // namespace skab
