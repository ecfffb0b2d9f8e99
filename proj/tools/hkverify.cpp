// Command-line front end: evaluate the polynomial/Mittag-Leffler families on
// grids, run the identity verification suites, and emit the numeric tables.
//
// Exit codes: 0 = all checks pass or flagged, 1 = at least one check failed,
// 2 = usage error.

#include "hkml/detail/format.hpp"
#include "hkml/errors.hpp"
#include "hkml/hk2d.hpp"
#include "hkml/mittag_leffler.hpp"
#include "hkml/polynomials.hpp"
#include "hkml/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using hkml::detail::fmt_double;
using ordered_json = nlohmann::ordered_json;

// ---- eval function registry ------------------------------------------------

struct ParamSpec {
    const char* name;
    bool integer;
};

struct EvalResult {
    double value;
    double abs_error_est;
};

struct FunctionSpec {
    const char* name;
    std::vector<ParamSpec> params;
    EvalResult (*eval)(const std::map<std::string, double>&);
};

double arg(const std::map<std::string, double>& a, const char* k)
{
    return a.at(k);
}
int iarg(const std::map<std::string, double>& a, const char* k)
{
    return static_cast<int>(a.at(k));
}

const std::vector<FunctionSpec>& function_registry()
{
    using M = std::map<std::string, double>;
    static const std::vector<FunctionSpec> reg = {
        {"hermite",
         {{"n", true}, {"x", false}},
         [](const M& a) {
             return EvalResult{hkml::hermite(iarg(a, "n"), arg(a, "x")), 0.0};
         }},
        {"konhauser_z",
         {{"n", true}, {"rho", false}, {"k", true}, {"t", false}},
         [](const M& a) {
             return EvalResult{hkml::konhauser_z(iarg(a, "n"), arg(a, "rho"),
                                                 iarg(a, "k"), arg(a, "t")),
                               0.0};
         }},
        {"konhauser_y",
         {{"n", true}, {"rho", false}, {"k", true}, {"t", false}},
         [](const M& a) {
             return EvalResult{hkml::konhauser_y(iarg(a, "n"), arg(a, "rho"),
                                                 iarg(a, "k"), arg(a, "t")),
                               0.0};
         }},
        {"hk2d",
         {{"n", true}, {"rho", false}, {"k", true}, {"x", false}, {"y", false}},
         [](const M& a) {
             return EvalResult{
                 hkml::hk2d({iarg(a, "n"), arg(a, "rho"), iarg(a, "k")},
                            arg(a, "x"), arg(a, "y")),
                 0.0};
         }},
        {"hk2d_partner",
         {{"m", true}, {"rho", false}, {"k", true}, {"x", false}, {"y", false}},
         [](const M& a) {
             return EvalResult{hkml::hk2d_partner(iarg(a, "m"), arg(a, "rho"),
                                                  iarg(a, "k"), arg(a, "x"),
                                                  arg(a, "y")),
                               0.0};
         }},
        {"hk2d_modified",
         {{"n", true},
          {"kappa", false},
          {"rho", false},
          {"c", false},
          {"k", true},
          {"x", false},
          {"y", false}},
         [](const M& a) {
             return EvalResult{
                 hkml::hk2d_modified({iarg(a, "n"), arg(a, "kappa"),
                                      arg(a, "rho"), arg(a, "c"), iarg(a, "k")},
                                     arg(a, "x"), arg(a, "y")),
                 0.0};
         }},
        {"jk2d",
         {{"n", true},
          {"alpha", false},
          {"rho", false},
          {"k", true},
          {"x", false},
          {"y", false}},
         [](const M& a) {
             return EvalResult{hkml::jk2d(iarg(a, "n"), arg(a, "alpha"),
                                          arg(a, "rho"), iarg(a, "k"),
                                          arg(a, "x"), arg(a, "y")),
                               0.0};
         }},
        {"ml_prabhakar",
         {{"alpha", false}, {"beta", false}, {"gamma", false}, {"z", false}},
         [](const M& a) {
             auto r = hkml::ml_prabhakar(arg(a, "alpha"), arg(a, "beta"),
                                         arg(a, "gamma"), arg(a, "z"));
             return EvalResult{r.value, r.abs_error_est};
         }},
        {"ml_hk3",
         {{"g1", false},
          {"g2", false},
          {"g3", false},
          {"rho", false},
          {"k", true},
          {"x", false},
          {"y", false}},
         [](const M& a) {
             auto r = hkml::ml_hk3({arg(a, "g1"), arg(a, "g2"), arg(a, "g3"),
                                    arg(a, "rho"), iarg(a, "k")},
                                   arg(a, "x"), arg(a, "y"));
             return EvalResult{r.value, r.abs_error_est};
         }},
        {"ml_hk4",
         {{"g1", false},
          {"g2", false},
          {"g3", false},
          {"g4", false},
          {"kappa", false},
          {"rho", false},
          {"k", true},
          {"x", false},
          {"y", false}},
         [](const M& a) {
             auto r = hkml::ml_hk4({arg(a, "g1"), arg(a, "g2"), arg(a, "g3"),
                                    arg(a, "g4"), arg(a, "kappa"),
                                    arg(a, "rho"), iarg(a, "k")},
                                   arg(a, "x"), arg(a, "y"));
             return EvalResult{r.value, r.abs_error_est};
         }},
        {"ml_jk2",
         {{"g1", false},
          {"g2", false},
          {"kappa", false},
          {"rho", false},
          {"k", true},
          {"x", false},
          {"y", false}},
         [](const M& a) {
             auto r = hkml::ml_jk2(arg(a, "g1"), arg(a, "g2"), arg(a, "kappa"),
                                   arg(a, "rho"), iarg(a, "k"), arg(a, "x"),
                                   arg(a, "y"));
             return EvalResult{r.value, r.abs_error_est};
         }},
    };
    return reg;
}

// ---- key=value / axis parsing ----------------------------------------------

struct Axis {
    std::string name;
    std::vector<double> values;
};

bool parse_axis_values(const std::string& text, std::vector<double>& out)
{
    // scalar, or start:stop:count
    auto c1 = text.find(':');
    if (c1 == std::string::npos) {
        try {
            size_t pos = 0;
            double v = std::stod(text, &pos);
            if (pos != text.size())
                return false;
            out = {v};
            return true;
        } catch (...) {
            return false;
        }
    }
    auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos)
        return false;
    try {
        double start = std::stod(text.substr(0, c1));
        double stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        long count = std::stol(text.substr(c2 + 1));
        if (count < 1)
            return false;
        out.clear();
        for (long i = 0; i < count; i++)
            out.push_back(count == 1 ? start
                                     : start + (stop - start) * i / (count - 1));
        return true;
    } catch (...) {
        return false;
    }
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

struct OutputSink {
    std::ofstream file;
    std::ostream& stream()
    {
        return file.is_open() ? static_cast<std::ostream&>(file) : std::cout;
    }
};

int usage_error(const std::string& msg)
{
    std::cerr << "error: " << msg << "\n";
    return 2;
}

// ---- subcommand: eval --------------------------------------------------------

int run_eval(const std::string& fn_name, const std::vector<std::string>& kvs,
             const std::string& format, OutputSink& sink)
{
    const FunctionSpec* spec = nullptr;
    for (const auto& f : function_registry())
        if (fn_name == f.name)
            spec = &f;
    if (!spec) {
        std::string names;
        for (const auto& f : function_registry())
            names += std::string(" ") + f.name;
        return usage_error("unknown function '" + fn_name + "'; available:" + names);
    }

    std::vector<Axis> axes;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            return usage_error("malformed parameter '" + kv + "' (want key=value)");
        Axis ax;
        ax.name = kv.substr(0, eq);
        bool known = false;
        for (const auto& p : spec->params)
            known = known || ax.name == p.name;
        if (!known)
            return usage_error("function '" + fn_name + "' has no parameter '" +
                               ax.name + "'");
        if (!parse_axis_values(kv.substr(eq + 1), ax.values))
            return usage_error("malformed value '" + kv.substr(eq + 1) +
                               "' (want number or start:stop:count)");
        axes.push_back(std::move(ax));
    }
    for (const auto& p : spec->params) {
        bool present = false;
        for (const auto& ax : axes)
            present = present || ax.name == p.name;
        if (!present)
            return usage_error("missing parameter '" + std::string(p.name) + "'");
    }

    std::ostream& os = sink.stream();
    if (format == "csv") {
        std::string header;
        for (const auto& ax : axes)
            header += ax.name + ",";
        os << header << "value,abs_error_est\r\n";
    }

    std::vector<std::size_t> index(axes.size(), 0);
    bool done = false;
    while (!done) {
        std::map<std::string, double> args;
        for (std::size_t i = 0; i < axes.size(); i++)
            args[axes[i].name] = axes[i].values[index[i]];
        EvalResult r;
        try {
            r = spec->eval(args);
        } catch (const hkml::Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
        if (format == "json") {
            ordered_json row;
            for (const auto& ax : axes)
                row[ax.name] = args[ax.name];
            row["value"] = r.value;
            row["abs_error_est"] = r.abs_error_est;
            os << row.dump() << "\n";
        } else {
            std::string line;
            for (const auto& ax : axes)
                line += fmt_double(args[ax.name]) + ",";
            os << line << fmt_double(r.value) << ","
               << fmt_double(r.abs_error_est) << "\r\n";
        }
        // advance the cartesian product
        done = true;
        for (std::size_t i = axes.size(); i-- > 0;) {
            if (++index[i] < axes[i].values.size()) {
                done = false;
                break;
            }
            index[i] = 0;
        }
        if (axes.empty())
            break;
    }
    return 0;
}

// ---- subcommand: verify ------------------------------------------------------

int run_verify(const std::string& suite, const hkml::verify::VerifyOptions& opt,
               const std::string& format, bool timings, OutputSink& sink)
{
    using namespace hkml::verify;
    if (!is_suite(suite)) {
        std::string names;
        for (const auto& s : suite_names())
            names += " " + s;
        return usage_error("unknown suite '" + suite + "'; available:" + names);
    }
    std::vector<VerifyReport> reports = run_suite(suite, opt);
    std::ostream& os = sink.stream();
    bool any_fail = false;
    if (format == "csv")
        os << "check_id,paper_anchor,status,max_rel_err,tolerance,seed,details"
           << (timings ? ",runtime_ms" : "") << "\r\n";
    for (const auto& r : reports) {
        any_fail = any_fail || r.status == Status::fail;
        double tol = check_tolerance(r.check_id, opt);
        if (format == "json") {
            ordered_json row;
            row["check_id"] = r.check_id;
            row["paper_anchor"] = r.paper_anchor;
            row["status"] = status_name(r.status);
            row["max_rel_err"] = r.max_rel_err;
            row["tolerance"] = tol;
            row["seed"] = opt.seed;
            row["details"] = r.details;
            if (timings)
                row["runtime_ms"] = r.runtime_ms;
            os << row.dump() << "\n";
        } else {
            os << csv_escape(r.check_id) << "," << r.paper_anchor << ","
               << status_name(r.status) << "," << fmt_double(r.max_rel_err)
               << "," << fmt_double(tol) << "," << opt.seed << ","
               << csv_escape(r.details);
            if (timings)
                os << "," << fmt_double(r.runtime_ms);
            os << "\r\n";
        }
    }
    return any_fail ? 1 : 0;
}

// ---- subcommand: table -------------------------------------------------------

int run_table(const std::string& preset, const std::vector<std::string>& kvs,
              const hkml::verify::VerifyOptions& opt, OutputSink& sink)
{
    std::map<std::string, double> params;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            return usage_error("malformed parameter '" + kv + "'");
        try {
            params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
        } catch (...) {
            return usage_error("malformed value in '" + kv + "'");
        }
    }
    hkml::verify::TableResult t;
    try {
        t = hkml::verify::table_preset(preset, params, opt);
    } catch (const hkml::Error&) {
        std::string names;
        for (const auto& s : hkml::verify::table_presets())
            names += " " + s;
        return usage_error("unknown preset '" + preset + "'; available:" + names);
    }
    std::ostream& os = sink.stream();
    for (std::size_t i = 0; i < t.columns.size(); i++)
        os << (i ? "," : "") << csv_escape(t.columns[i]);
    os << "\r\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); i++)
            os << (i ? "," : "") << csv_escape(row[i]);
        os << "\r\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"2D Hermite-Konhauser / bivariate Mittag-Leffler verification tool"};
    app.require_subcommand(1);

    std::string out_path;
    std::string format = "csv";
    std::vector<std::string> tol_flags;
    std::uint64_t seed = 42;
    int jobs = 1;
    bool timings = false;
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--tol", tol_flags, "per-check tolerance override, check=value");
    app.add_option("--seed", seed, "seed for randomized checks");
    app.add_option("--jobs", jobs, "parallel check execution")
        ->check(CLI::PositiveNumber);
    app.add_flag("--timings", timings, "include runtime_ms in verify reports");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a function on a grid");
    std::string fn_name;
    std::vector<std::string> eval_kvs;
    eval_cmd->add_option("function", fn_name, "function id")->required();
    eval_cmd->add_option("params", eval_kvs, "key=value or key=start:stop:count");
    eval_cmd->fallthrough();

    auto* verify_cmd = app.add_subcommand("verify", "run identity checks");
    std::string suite = "all";
    verify_cmd->add_option("suite", suite, "suite name (default: all)");
    verify_cmd->fallthrough();

    auto* table_cmd = app.add_subcommand("table", "emit a numeric table (CSV)");
    std::string preset;
    std::vector<std::string> table_kvs;
    table_cmd->add_option("preset", preset, "preset name");
    table_cmd->add_option("params", table_kvs, "key=value");
    table_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    hkml::verify::VerifyOptions opt;
    opt.seed = seed;
    opt.jobs = jobs;
    for (const auto& tf : tol_flags) {
        auto eq = tf.find('=');
        if (eq == std::string::npos)
            return usage_error("malformed --tol '" + tf + "' (want check=value)");
        try {
            opt.tol_overrides[tf.substr(0, eq)] = std::stod(tf.substr(eq + 1));
        } catch (...) {
            return usage_error("malformed --tol value in '" + tf + "'");
        }
    }

    OutputSink sink;
    if (!out_path.empty()) {
        sink.file.open(out_path);
        if (!sink.file)
            return usage_error("cannot open output file '" + out_path + "'");
    }

    if (eval_cmd->parsed())
        return run_eval(fn_name, eval_kvs, format, sink);
    if (verify_cmd->parsed()) {
        // verify reports default to JSON lines
        std::string vfmt = app.count("--format") ? format : "json";
        return run_verify(suite, opt, vfmt, timings, sink);
    }
    if (table_cmd->parsed()) {
        if (preset.empty()) {
            std::string names;
            for (const auto& s : hkml::verify::table_presets())
                names += " " + s;
            return usage_error("missing table preset; available:" + names);
        }
        return run_table(preset, table_kvs, opt, sink);
    }
    return 2;
}
