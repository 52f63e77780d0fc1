// Acceptance run: one PASS/FAIL line per criterion.
//
// The exit status is 0 when the failing criteria are exactly the ones listed in
// known_falsified below, so that a newly failing criterion or a newly passing
// one both break the build.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "vfock/suites.hpp"

using namespace vfock;

namespace {

constexpr std::uint64_t seed = 7;

// Criterion 7 is false as stated: the weights differ from s_lambda(X) s_lambda(Y)
// from degree 2 on as soon as x_2 != 0. See README, "Known falsified results".
const std::set<int> known_falsified = {7};

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Lines of a suite report whose check name contains one of the given fragments
// (all checks when the list is empty).
Outcome suite_checks(const std::string& suite, int degree, const std::vector<std::string>& fragments = {})
{
    SuiteResult r = run_suite(suite, seed, degree);
    Outcome o;
    int matched = 0;
    for (const auto& line : r.lines) {
        if (!line.contains("check"))
            continue;
        std::string name = line["check"];
        bool wanted = fragments.empty();
        for (const auto& f : fragments)
            wanted = wanted || name.find(f) != std::string::npos;
        if (!wanted)
            continue;
        ++matched;
        if (line["status"] != "ok") {
            o.pass = false;
            Json brief = line;
            if (brief.contains("discrepancies"))
                brief["discrepancies"] = Json::array({brief["discrepancies"][0]});
            o.detail += suite + ": " + brief.dump() + "\n";
        }
    }
    if (matched == 0) {
        o.pass = false;
        o.detail += suite + ": no matching checks\n";
    }
    return o;
}

Outcome all_of(std::initializer_list<Outcome> parts)
{
    Outcome o;
    for (const auto& p : parts) {
        o.pass = o.pass && p.pass;
        o.detail += p.detail;
    }
    return o;
}

Outcome probes_reported(const std::string& suite, int degree)
{
    SuiteResult r = run_suite(suite, seed, degree);
    Outcome o;
    int mismatched = 0;
    for (const auto& line : r.lines)
        if (line.contains("probe") && !line["matches"].get<bool>())
            ++mismatched;
    if (r.probes == 0) {
        o.pass = false;
        o.detail = suite + ": no probes reported\n";
    } else {
        o.detail = "  " + suite + ": " + std::to_string(r.probes) + " probes, " + std::to_string(mismatched) +
                   " with structured deltas\n";
    }
    return o;
}

Outcome cauchy(int deg)
{
    RationalSampler rng(seed);
    Outcome o;
    for (int draw = 0; draw < 5; ++draw) {
        std::map<int, Rational> x, y, q;
        for (int k = 1; k <= 3; ++k) {
            x[k] = rng.any();
            y[k] = rng.any();
            q[k] = Rational(k) * x[k] * y[k];
        }
        auto h = complete_homogeneous(q, deg);
        std::vector<Rational> by_degree(static_cast<std::size_t>(deg + 1));
        for (const auto& lambda : partitions_up_to(deg))
            by_degree[static_cast<std::size_t>(lambda.size())] += schur_polynomial(lambda, x) * schur_polynomial(lambda, y);
        for (int n = 0; n <= deg; ++n)
            if (h[static_cast<std::size_t>(n)] != by_degree[static_cast<std::size_t>(n)]) {
                o.pass = false;
                o.detail += "draw " + std::to_string(draw) + " degree " + std::to_string(n) + ": " +
                            h[static_cast<std::size_t>(n)].str() + " vs " + by_degree[static_cast<std::size_t>(n)].str() +
                            "\n";
            }
        if (cauchy_normalizer(MiwaParams<Rational>{x, y}, deg) != [&] {
                Rational s;
                for (const auto& v : by_degree)
                    s += v;
                return s;
            }()) {
            o.pass = false;
            o.detail += "draw " + std::to_string(draw) + ": normalizer differs from the Schur sum\n";
        }
    }
    return o;
}

std::string run_capture(const std::string& cmd, int& status)
{
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0)
        out.append(buf.data(), n);
    status = pclose(p);
    return out;
}

Outcome determinism()
{
    const std::string cli = VFOCK_CLI_PATH;
    const std::vector<std::string> commands = {
        "measure --kind virasoro --z 1/2 --w 1/3 --x 1=1,2=1/2 --y 1=1 --max-degree 4 --output csv",
        "measure --kind m-virasoro --M 3 --z 2/3 --w -1/2 --x 1=1,3=1/5 --y 1=2 --max-degree 4",
        "measure --kind schur --x 1=x --max-degree 2",
        "convert --x 1=1,2=1 --y 1=1/3,2=-2 --max-degree 5 --ring poly-z",
        "correlations --kind virasoro --z 1/2 --w 1/3 --x 1=1 --y 1=1 --max-degree 5 --points [\\\"1/2\\\",\\\"-1/2\\\"]",
        "verify --suite all --seed 7",
        "verify --suite determinancy --seed 11 --max-degree 4",
        "decompose --z 0 --w 3 --max-degree 5",
    };
    Outcome o;
    for (const auto& c : commands) {
        std::string cmd = "\"" + cli + "\" " + c + " 2>&1";
        int s1 = 0, s2 = 0;
        std::string a = run_capture(cmd, s1);
        std::string b = run_capture(cmd, s2);
        if (a.empty() || a != b || s1 != s2) {
            o.pass = false;
            o.detail += "not reproducible: " + c + "\n";
        }
    }
    return o;
}

struct Criterion {
    int id;
    std::string title;
    double budget_seconds; // 0 for no limit
    std::function<Outcome()> run;
};

} // namespace

int main()
{
    std::vector<Criterion> criteria = {
        {1, "Heisenberg relations on degree <= 6, |n|,|m| <= 4", 10,
         [] { return suite_checks("heisenberg", 6, {"[a_n, a_m]"}); }},
        {2, "sl2 relations of the Kerov triple on degree <= 6, 5 random (z, w)", 10,
         [] { return suite_checks("sl2", 6); }},
        {3, "Virasoro relations with central charge on degree <= 5, |m|,|n| <= 3", 30,
         [] { return suite_checks("virasoro-cc", 5); }},
        {4, "Kerov U, D, L equal L_{-1}, L_1, 2L_0 on degree <= 7, 5 random (z, w)", 0,
         [] { return suite_checks("kerov-equiv", 7); }},
        {5, "rim-hook Kerov operators equal scaled L_{-r}, L_r for r <= 4, degree <= 6", 0,
         [] { return suite_checks("rimhook-equiv", 6); }},
        {6, "boson a_{-k} equals the signed rim-hook sum, k <= 6, |lambda| <= 8", 0,
         [] { return suite_checks("heisenberg", 6, {"a_{-k}|lambda>"}); }},
        {7, "Virasoro weights equal s_lambda(X) s_lambda(Y), |lambda| <= 6, 5 random draws", 60,
         [] { return suite_checks("determinancy", 6, {"random x_1..x_3"}); }},
        {8, "X_N linear in z, Y_N linear in w for N <= 6; printed X_1, X_2", 0,
         [] { return suite_checks("z-linearity", 6, {"z-degree", "w-degree", "X_1 = x_1 z"}); }},
        {9, "1 + sum v_N u^N = exp(sum B_n u^n) through u^6", 0,
         [] { return suite_checks("z-linearity", 6, {"exp(sum_n B_n"}); }},
        {10, "rank D on degree N equals p(N - 1), N <= 8 (degree 1 at w = 0 is the boundary case)", 60,
         [] { return suite_checks("rank", 8); }},
        {11, "ker U trivial in degrees 1..8, boundary-case relations, eigenvalues zw + 2N", 0,
         [] { return suite_checks("kernels", 8); }},
        {12, "M-Virasoro: M = 2 is Virasoro, M = 1 is Schur, M = 3 support; open forms probed", 0,
         [] {
             return all_of({suite_checks("m-virasoro", 5), suite_checks("prop62", 4), probes_reported("m-virasoro", 5),
                            probes_reported("prop62", 4)});
         }},
        {13, "truncated exp(sum k x_k y_k) equals sum s_lambda(x) s_lambda(y) through degree 6", 0,
         [] { return cauchy(6); }},
        {14, "repeated CLI runs with the same seed are byte-identical", 0, [] { return determinism(); }},
    };

    std::set<int> failed;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o = c.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && secs > c.budget_seconds) {
            o.pass = false;
            o.detail += "over the time budget of " + std::to_string(c.budget_seconds) + " s\n";
        }
        if (!o.pass)
            failed.insert(c.id);
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2f s", secs);
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " (" << timing << ")";
        if (!o.pass && known_falsified.count(c.id))
            std::cout << " [known falsified]";
        std::cout << "\n";
        if (!o.detail.empty())
            std::cout << o.detail;
    }

    std::cout << "\n" << criteria.size() - failed.size() << " of " << criteria.size() << " criteria pass\n";
    if (failed != known_falsified) {
        std::cout << "unexpected result: the failing set differs from the documented falsified set\n";
        return 1;
    }
    return 0;
}
