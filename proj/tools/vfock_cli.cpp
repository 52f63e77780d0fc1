// Command-line front end. Talks to the library only through vfock.h.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vfock/vfock.h"

namespace {

enum Exit { exit_ok = 0, exit_falsified = 1, exit_usage = 2, exit_internal = 3 };

struct Failure {
    vf_status status;
    std::string message;
};

void check(vf_status s)
{
    if (s != VF_OK)
        throw Failure{s, vf_last_error()};
}

struct String {
    char* p = nullptr;
    ~String() { vf_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

struct Params {
    vf_params* p = nullptr;
    Params() { check(vf_params_create(&p)); }
    ~Params() { vf_params_free(p); }
    Params(const Params&) = delete;
    Params& operator=(const Params&) = delete;
};

struct Table {
    vf_table* t = nullptr;
    ~Table() { vf_table_free(t); }
};

struct Options {
    std::string kind = "schur";
    std::string z = "0";
    std::string w = "0";
    std::string gamma = "0";
    std::string M = "2";
    std::string x;
    std::string y;
    int max_degree = 4;
    std::string ring = "rational";
    std::string output = "json";
    std::vector<std::string> points;
    std::string suite = "all";
    int suite_degree = -1;
    std::string output_file;
    unsigned long long seed = 0;
};

void fill_params(const Params& p, const Options& o)
{
    check(vf_params_set(p.p, "z", o.z.c_str()));
    check(vf_params_set(p.p, "w", o.w.c_str()));
    check(vf_params_set(p.p, "gamma", o.gamma.c_str()));
    check(vf_params_set(p.p, "M", o.M.c_str()));
    check(vf_params_set_series(p.p, "x", o.x.c_str()));
    check(vf_params_set_series(p.p, "y", o.y.c_str()));
}

int run_measure(const Options& o, std::ostream& out)
{
    Params p;
    fill_params(p, o);
    Table t;
    check(vf_table_create(o.kind.c_str(), p.p, o.max_degree, o.ring == "poly-z", &t.t));
    String s;
    check(o.output == "csv" ? vf_table_csv(t.t, &s.p) : vf_table_jsonl(t.t, &s.p));
    out << s.str();
    return exit_ok;
}

int run_convert(const Options& o, std::ostream& out)
{
    Params p;
    fill_params(p, o);
    String s;
    check(vf_convert(p.p, o.max_degree, o.ring == "poly-z", &s.p));
    out << s.str();
    return exit_ok;
}

int run_correlations(const Options& o, std::ostream& out)
{
    Params p;
    fill_params(p, o);
    Table t;
    check(vf_table_create(o.kind.c_str(), p.p, o.max_degree, 0, &t.t));
    for (const auto& pts : o.points) {
        String s;
        check(vf_correlation(t.t, pts.c_str(), &s.p));
        out << s.str() << "\n";
    }
    out << R"({"summary":{"command":"correlations","kind":")" << o.kind << R"(","N":)" << o.max_degree
        << R"(,"count":)" << o.points.size() << "}}\n";
    return exit_ok;
}

int run_verify(const Options& o, std::ostream& out)
{
    std::vector<std::string> suites;
    if (o.suite == "all")
        for (size_t i = 0; i < vf_suite_count(); ++i)
            suites.push_back(vf_suite_name(i));
    else
        suites.push_back(o.suite);
    int code = exit_ok;
    for (const auto& name : suites) {
        String s;
        int falsified = 0;
        check(vf_verify(name.c_str(), o.seed, o.suite_degree, &s.p, &falsified));
        out << s.str();
        if (falsified > 0)
            code = exit_falsified;
    }
    return code;
}

int run_decompose(const Options& o, std::ostream& out)
{
    String s;
    int ok = 0;
    check(vf_decompose(o.z.c_str(), o.w.c_str(), o.max_degree, &s.p, &ok));
    out << s.str();
    return ok ? exit_ok : exit_falsified;
}

std::filesystem::path output_path(const std::string& file)
{
    std::filesystem::path path(file);
    const char* dir = std::getenv("VFOCK_OUTPUT_DIR");
    if (path.is_relative() && dir && *dir)
        path = std::filesystem::path(dir) / path;
    return path;
}

std::string json_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out += buf;
        } else {
            out += c;
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Exact operator calculus on the fermionic Fock space: measures, conversions and identity checks."};
    app.require_subcommand(1);
    app.add_option("--seed", o.seed, "Seed for random rational sweeps");
    app.add_option("--output-file", o.output_file,
                   "Write the report here instead of stdout (relative paths resolve against $VFOCK_OUTPUT_DIR)");

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--z", o.z, "Ket-side parameter z (p/q)");
        cmd->add_option("--w", o.w, "Bra-side parameter w (p/q)");
        cmd->add_option("--gamma", o.gamma, "Shared gamma (p/q)");
        cmd->add_option("--M", o.M, "Order of the M-Virasoro generators");
        cmd->add_option("--x", o.x, "Ket-side times, e.g. 1=1,2=1/2");
        cmd->add_option("--y", o.y, "Bra-side times, e.g. 1=1");
        cmd->add_option("--max-degree", o.max_degree, "Largest partition size")->check(CLI::NonNegativeNumber);
    };
    auto add_kind = [&](CLI::App* cmd) {
        cmd->add_option("--kind", o.kind, "Measure kind")
            ->check(CLI::IsMember({"schur", "virasoro", "m-virasoro"}));
    };
    auto add_ring = [&](CLI::App* cmd) {
        cmd->add_option("--ring", o.ring, "Coefficient ring")->check(CLI::IsMember({"rational", "poly-z"}));
    };

    auto* measure = app.add_subcommand("measure", "Weight table of a Schur, Virasoro or M-Virasoro measure");
    add_kind(measure);
    add_params(measure);
    add_ring(measure);
    measure->add_option("--output", o.output, "Output format")->check(CLI::IsMember({"json", "csv"}));

    auto* convert = app.add_subcommand("convert", "Schur parameters X_N, Y_N of a Virasoro measure");
    add_params(convert);
    add_ring(convert);

    auto* correlations = app.add_subcommand("correlations", "Occupation probabilities of point sets");
    add_kind(correlations);
    add_params(correlations);
    correlations->add_option("--points", o.points, "JSON list of half-integers, e.g. [\"1/2\",\"-3/2\"]")
        ->required()
        ->allow_extra_args(false)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", o.suite, "Suite name or 'all'");
    verify->add_option("--seed", o.seed, "Seed for random rational sweeps");
    verify->add_option("--max-degree", o.suite_degree, "Largest degree (default: per suite)");

    auto* decompose = app.add_subcommand("decompose", "Representation structure of the Kerov triple");
    decompose->add_option("--z", o.z, "Parameter z (p/q)");
    decompose->add_option("--w", o.w, "Parameter w (p/q)");
    decompose->add_option("--max-degree", o.max_degree, "Largest degree")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!o.output_file.empty()) {
        auto path = output_path(o.output_file);
        file.open(path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << path.string() << "\n";
            return exit_usage;
        }
        out = &file;
    }

    try {
        if (*measure)
            return run_measure(o, *out);
        if (*convert)
            return run_convert(o, *out);
        if (*correlations)
            return run_correlations(o, *out);
        if (*verify)
            return run_verify(o, *out);
        return run_decompose(o, *out);
    } catch (const Failure& f) {
        if (f.status == VF_ERR_FALSIFIED) {
            *out << R"({"error":"falsified","detail":")" << json_escape(f.message) << "\"}\n";
            return exit_falsified;
        }
        std::cerr << "error: " << vf_status_name(f.status) << ": " << f.message << "\n\n" << app.help();
        return f.status == VF_ERR_INTERNAL ? exit_internal : exit_usage;
    }
}
