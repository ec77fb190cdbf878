#include "skab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "skab/order_bound.hpp"
#include "skab/report_engine.hpp"

namespace skab::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json to_json(const CurveParams& p)
{
    return Json{{"s", p.s},
                {"q0", p.q0},
                {"q", p.q},
                {"m", p.m},
                {"genus", p.genus},
                {"period", p.period},
                {"num_points", p.num_points},
                {"code_length", p.code_length},
                {"semigroup_generators", p.semigroup_generators}};
}

void add_decomposition(Json& j, const Decomposition& d)
{
    j["k"] = d.k;
    j["r"] = d.r;
    j["case_low"] = d.case_low;
    j["a_t"] = d.a_t;
    j["a_x"] = d.a_x;
    j["a_y"] = d.a_y;
    j["a_z"] = d.a_z;
}

Json to_json(const BoundReport& r)
{
    return Json{{"a", r.a},
                {"b", r.b},
                {"degree", r.degree},
                {"rr_dimension", r.rr_dimension},
                {"dual_dimension", r.dual_dimension},
                {"goppa_dual", r.goppa_dual},
                {"order_bound", r.order_bound},
                {"horizon", r.horizon}};
}

std::string scalar_text(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (const auto& x : v)
            s += (s.empty() ? "" : " ") + scalar_text(x);
        return s;
    }
    return v.dump();
}

// Flat objects print as JSON or as "key: value" lines.
void emit_object(const Json& obj, const std::string& format, std::ostream& out)
{
    if (format == "json") {
        out << obj.dump() << '\n';
        return;
    }
    if (format == "text") {
        for (const auto& [key, value] : obj.items())
            out << key << ": " << scalar_text(value) << '\n';
        return;
    }
    throw UsageError("format '" + format + "' is not supported by this subcommand");
}

// JSON summary, or one gap per line as text.
void emit_semigroup(const NumericalSemigroup& sg, const std::string& format, std::ostream& out)
{
    if (format == "text") {
        for (Int gap : sg.gaps())
            out << gap << '\n';
        return;
    }
    if (format != "json")
        throw UsageError("format '" + format + "' is not supported by this subcommand");
    out << Json{{"generators", std::vector<Int>(sg.generators().begin(), sg.generators().end())},
                {"conductor", sg.conductor()},
                {"genus", sg.genus()},
                {"gaps", std::vector<Int>(sg.gaps().begin(), sg.gaps().end())}}
               .dump()
        << '\n';
}

unsigned resolve_jobs(std::optional<unsigned> flag)
{
    if (flag)
        return std::max(1u, *flag);
    if (const char* env = std::getenv("SKAB_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("SKAB_JOBS must be a positive integer, got '") + env + "'");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Two-point Weierstrass semigroup and order-bound toolkit for the Skabelund curve", "skab"};
    app.fallthrough();
    app.require_subcommand(1);

    Int s = 1;
    std::string format;
    app.add_option("--s", s, "Curve exponent, q0 = 2^s")->capture_default_str();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

    Int i = 0, j = 0, a = 0, b = 0, k = 0;
    std::optional<Int> horizon;
    std::vector<Int> gens;
    Int min_delta = 10;
    Int window = 2;
    std::string out_path;
    std::optional<unsigned> jobs;

    auto* params_cmd = app.add_subcommand("params", "Derived curve parameters");
    auto* semigroup_cmd = app.add_subcommand("semigroup", "Weierstrass semigroup: conductor, genus, gaps");
    semigroup_cmd->add_option("--gens", gens, "Custom generators instead of the curve's")->delimiter(',');
    auto* tau_cmd = app.add_subcommand("tau", "tau(i) with its decomposition");
    tau_cmd->add_option("--i", i)->required();
    auto* tau_inv_cmd = app.add_subcommand("tau-inv", "tau^-1(j) with the decomposition of the preimage");
    tau_inv_cmd->add_option("--j", j)->required();
    auto* member_cmd = app.add_subcommand("member", "Membership of (i, j) in H(P, P_inf)");
    member_cmd->add_option("--i", i)->required();
    member_cmd->add_option("--j", j)->required();
    auto* dim_cmd = app.add_subcommand("dim", "dim L(aP + bP_inf) and the dual code dimension");
    dim_cmd->add_option("--a", a)->required();
    dim_cmd->add_option("--b", b)->required();
    auto* nu_cmd = app.add_subcommand("nu", "nu(P; G) and nu(P_inf; G)");
    nu_cmd->add_option("--a", a)->required();
    nu_cmd->add_option("--b", b)->required();
    auto* bound_cmd = app.add_subcommand("bound", "Order bound report for G = aP + bP_inf");
    bound_cmd->add_option("--a", a)->required();
    bound_cmd->add_option("--b", b)->required();
    bound_cmd->add_option("--horizon", horizon, "Free sequence steps (only lowers the natural horizon)");
    auto* onepoint_cmd = app.add_subcommand("onepoint", "Best one-point code of dual dimension k");
    onepoint_cmd->add_option("--k", k)->required();
    auto* table_cmd = app.add_subcommand("table", "Two-point versus one-point comparison table");
    table_cmd->add_option("--min-delta", min_delta)->capture_default_str();
    table_cmd->add_option("--out", out_path, "Output file (default: standard output)");
    table_cmd->add_option("--jobs", jobs, "Worker threads (falls back to SKAB_JOBS)");
    auto* figure_cmd = app.add_subcommand("figure", "Points of H(P, P_inf) in a window, as CSV");
    figure_cmd->add_option("--window", window, "Window half-width in periods")->capture_default_str();
    figure_cmd->add_option("--out", out_path, "Output file (default: standard output)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    auto format_or = [&](const char* fallback) { return format.empty() ? std::string(fallback) : format; };
    auto with_output = [&](auto&& write) {
        if (out_path.empty()) {
            write(out);
            return;
        }
        std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
        if (!file)
            throw std::runtime_error("cannot open " + out_path + " for writing");
        write(file);
        file.flush();
        if (!file)
            throw std::runtime_error("write failed for " + out_path);
    };

    try {
        if (semigroup_cmd->parsed() && !gens.empty()) {
            emit_semigroup(NumericalSemigroup::from_generators(gens), format_or("json"), out);
            return kExitOk;
        }

        const CurveParams params = make_params(s);

        if (params_cmd->parsed()) {
            emit_object(to_json(params), format_or("json"), out);
        } else if (semigroup_cmd->parsed()) {
            emit_semigroup(weierstrass_semigroup(params), format_or("json"), out);
        } else if (tau_cmd->parsed()) {
            const TauTable table(params);
            Json obj{{"i", i}, {"tau", table.tau(i)}};
            add_decomposition(obj, decompose(params, i));
            emit_object(obj, format_or("json"), out);
        } else if (tau_inv_cmd->parsed()) {
            const TauTable table(params);
            const Int pre = table.tau_inv(j);
            Json obj{{"j", j}, {"tau_inv", pre}};
            add_decomposition(obj, decompose(params, pre));
            emit_object(obj, format_or("json"), out);
        } else if (member_cmd->parsed()) {
            const TwoPointSemigroup sg(params);
            emit_object(Json{{"i", i},
                             {"j", j},
                             {"member", sg.in_semigroup(i, j)},
                             {"tau_i", sg.tau(i)},
                             {"tau_inv_j", sg.tau_inv(j)}},
                        format_or("json"), out);
        } else if (dim_cmd->parsed()) {
            const TwoPointSemigroup sg(params);
            const OrderBound bound(sg);
            Json obj{{"a", a}, {"b", b}, {"rr_dimension", sg.rr_dim({a, b})}};
            obj["dual_dimension"] = bound.dual_dimension({a, b});
            emit_object(obj, format_or("json"), out);
        } else if (nu_cmd->parsed()) {
            const TwoPointSemigroup sg(params);
            emit_object(Json{{"a", a}, {"b", b}, {"nu_P", sg.nu_P({a, b})}, {"nu_Pinf", sg.nu_Pinf({a, b})}},
                        format_or("json"), out);
        } else if (bound_cmd->parsed()) {
            const TwoPointSemigroup sg(params);
            const OrderBound bound(sg);
            emit_object(to_json(bound.report({a, b}, horizon)), format_or("json"), out);
        } else if (onepoint_cmd->parsed()) {
            const TwoPointSemigroup sg(params);
            const OrderBound bound(sg);
            const OnePointBest best = bound.best_one_point(k);
            emit_object(Json{{"k", k}, {"b_prime", best.b_prime}, {"d1", best.d1}}, format_or("json"), out);
        } else if (table_cmd->parsed()) {
            const std::string f = format_or("csv");
            if (f == "text")
                throw UsageError("table supports csv or json");
            SweepConfig cfg;
            cfg.s = s;
            cfg.min_delta = min_delta;
            cfg.jobs = resolve_jobs(jobs);
            cfg.format = parse_export_format(f);
            const auto rows = sweep(cfg);
            if (out_path.empty())
                write_rows(rows, cfg.format, out);
            else
                export_rows(rows, cfg.format, out_path);
        } else if (figure_cmd->parsed()) {
            if (format_or("csv") != "csv")
                throw UsageError("figure supports csv only");
            const TwoPointSemigroup sg(params);
            const auto points = sg.figure_points(window);
            with_output([&](std::ostream& o) {
                o << "i,j\n";
                for (const auto& [pi, pj] : points)
                    o << pi << ',' << pj << '\n';
            });
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitOk;
}

} // namespace skab::cli
