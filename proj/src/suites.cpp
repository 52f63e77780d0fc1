#include "vfock/suites.hpp"

#include <functional>
#include <map>

namespace vfock {

namespace {

using V = FockVector<Rational>;
using Op = OperatorSpec<Rational>;
using Miwa = std::map<int, Rational>;

constexpr std::size_t kSamples = 3;

// Aggregates many small comparisons into one report line.
class Tally {
public:
    void add(const CommutatorReport<Rational>& r)
    {
        ++cases_;
        checked_ += r.checked;
        failures_ += r.discrepancies.size();
        if (!r.ok() && samples_.size() < kSamples) {
            CommutatorReport<Rational> head = r;
            head.discrepancies.resize(std::min<std::size_t>(head.discrepancies.size(), 2));
            samples_.push_back(to_json(head));
        }
    }

    void compare(const std::string& what, const Partition& basis, const V& lhs, const V& rhs)
    {
        ++checked_;
        if (lhs == rhs)
            return;
        ++failures_;
        if (samples_.size() < kSamples)
            samples_.push_back(Json{{"case", what}, {"basis", to_json(basis)}, {"delta", to_json(lhs - rhs)}});
    }

    void compare(const std::string& what, const Json& at, const Rational& lhs, const Rational& rhs)
    {
        ++checked_;
        if (lhs == rhs)
            return;
        ++failures_;
        if (samples_.size() < kSamples)
            samples_.push_back(Json{{"case", what}, {"at", at}, {"lhs", lhs.str()}, {"rhs", rhs.str()},
                                    {"delta", (lhs - rhs).str()}});
    }

    void next_case() { ++cases_; }
    bool ok() const { return failures_ == 0; }

    Json json() const
    {
        Json j{{"checked", checked_}, {"discrepancy_count", failures_}};
        if (cases_)
            j["cases"] = cases_;
        if (!samples_.empty())
            j["discrepancies"] = samples_;
        return j;
    }

private:
    std::size_t cases_ = 0;
    std::size_t checked_ = 0;
    std::size_t failures_ = 0;
    Json samples_ = Json::array();
};

class Suite {
public:
    Suite(const std::string& name, const std::string& identity, std::uint64_t seed, int max_degree)
        : rng(seed), name_(name)
    {
        result_.lines.push_back(
            Json{{"suite", name}, {"identity", identity}, {"seed", seed}, {"max_degree", max_degree}});
    }

    void check(const std::string& what, const Tally& t) { check(what, t.ok(), t.json()); }

    void check(const std::string& what, bool ok, Json detail = Json::object())
    {
        Json line{{"check", what}, {"status", ok ? "ok" : "falsified"}};
        line.update(detail);
        result_.lines.push_back(std::move(line));
        ++result_.checks;
        if (!ok)
            ++result_.falsified;
    }

    void probe(const std::string& what, const Tally& t)
    {
        Json line{{"probe", what}, {"matches", t.ok()}};
        line.update(t.json());
        result_.lines.push_back(std::move(line));
        ++result_.probes;
    }

    SuiteResult finish()
    {
        result_.lines.push_back(Json{{"summary",
                                      {{"suite", name_},
                                       {"checks", result_.checks},
                                       {"falsified", result_.falsified},
                                       {"probes", result_.probes},
                                       {"status", result_.ok() ? "ok" : "falsified"}}}});
        return std::move(result_);
    }

    RationalSampler rng;

private:
    std::string name_;
    SuiteResult result_;
};

Miwa random_miwa(RationalSampler& rng, int n)
{
    Miwa m;
    for (int k = 1; k <= n; ++k)
        m[k] = rng.any();
    return m;
}

Json pair_json(const Rational& a, const char* an, const Rational& b, const char* bn)
{
    return Json{{an, a.str()}, {bn, b.str()}};
}

V signed_hook_sum(const Partition& lambda, int k, const std::function<Rational(const RimHookMove&)>& coeff)
{
    V out;
    for (const auto& m : rim_hooks_addable(lambda, k))
        out.add(MayaState::from_partition(m.result), coeff(m) * Rational(m.height % 2 ? 1 : -1));
    return out;
}

SuiteResult heisenberg(std::uint64_t seed, int deg)
{
    Suite s("heisenberg", "Heisenberg relations [a_n, a_m] = n delta_{n+m,0}; a_{-k} adds signed k-rim hooks", seed, deg);
    Rational alpha = s.rng.any();
    Tally t;
    for (int n = -4; n <= 4; ++n)
        for (int m = -4; m <= 4; ++m)
            t.add(commutator_check(Op::boson(n, alpha), Op::boson(m, alpha), {{}, Rational(n + m == 0 ? n : 0)}, deg));
    s.check("[a_n, a_m] = n delta_{n+m,0}, |n|,|m| <= 4", t);

    Tally mn;
    for (int k = 1; k <= 6; ++k)
        for (const auto& lambda : partitions_up_to(deg + 2)) {
            V lhs = boson(-k, V::basis(lambda), lambda.size() + k);
            V rhs = signed_hook_sum(lambda, k, [](const RimHookMove&) { return Rational(1); });
            mn.compare("k=" + std::to_string(k), lambda, lhs, rhs);
        }
    s.check("a_{-k}|lambda> = sum of (-1)^(height-1)|lambda + k-hook>, k <= 6, |lambda| <= " + std::to_string(deg + 2), mn);
    return s.finish();
}

SuiteResult virasoro_cc(std::uint64_t seed, int deg)
{
    Suite s("virasoro-cc", "[L_m, L_n] = (m - n) L_{m+n} + delta_{m+n,0} (m^3 - m)/12 (1 - 12 gamma^2)", seed, deg);
    Tally t;
    for (int draw = 0; draw < 3; ++draw) {
        VirasoroParams<Rational> p{s.rng.any(), s.rng.any()};
        Rational c = Rational(1) - Rational(12) * p.gamma * p.gamma;
        for (int m = -3; m <= 3; ++m)
            for (int n = -3; n <= 3; ++n) {
                LinearCombination<Rational> e;
                if (m != n)
                    e.terms.push_back({Rational(m - n), Op::virasoro(m + n, p)});
                if (m + n == 0)
                    e.identity = c * Rational(m * m * m - m, 12);
                t.add(commutator_check(Op::virasoro(m, p), Op::virasoro(n, p), e, deg));
            }
    }
    s.check("Virasoro relations with central term, |m|,|n| <= 3, 3 random (alpha, gamma)", t);
    return s.finish();
}

SuiteResult sl2(std::uint64_t seed, int deg)
{
    Suite s("sl2", "Kerov sl2 triple: [D, U] = L, [L, U] = 2U, [L, D] = -2D", seed, deg);
    Tally du, lu, ld;
    for (int draw = 0; draw < 5; ++draw) {
        KerovParams<Rational> p{s.rng.any(), s.rng.any()};
        du.add(commutator_check(Op::D(p), Op::U(p), {{{Rational(1), Op::L(p)}}, Rational(0)}, deg));
        lu.add(commutator_check(Op::L(p), Op::U(p), {{{Rational(2), Op::U(p)}}, Rational(0)}, deg));
        ld.add(commutator_check(Op::L(p), Op::D(p), {{{Rational(-2), Op::D(p)}}, Rational(0)}, deg));
    }
    s.check("[D, U] = L", du);
    s.check("[L, U] = 2U", lu);
    s.check("[L, D] = -2D", ld);
    return s.finish();
}

SuiteResult kerov_equiv(std::uint64_t seed, int deg)
{
    Suite s("kerov-equiv",
            "Kerov triple as Virasoro generators: U = L_{-1}, D = L_1, L = 2 L_0 at alpha = (z+w)/2, gamma = (w-z)/2",
            seed, deg);
    Tally u, d, l;
    for (int draw = 0; draw < 5; ++draw) {
        KerovParams<Rational> p{s.rng.any(), s.rng.any()};
        auto vp = virasoro_params_for_kerov(p);
        for (const auto& lambda : partitions_up_to(deg)) {
            V v = V::basis(lambda);
            u.compare("U", lambda, kerov_U(p, v), apply(Op::virasoro(-1, vp), v));
            d.compare("D", lambda, kerov_D(p, v), apply(Op::virasoro(1, vp), v));
            l.compare("L", lambda, kerov_L(p, v), apply(Op::virasoro(0, vp), v) * Rational(2));
        }
    }
    s.check("U = L_{-1}", u);
    s.check("D = L_1", d);
    s.check("L = 2 L_0", l);
    return s.finish();
}

SuiteResult rimhook_equiv(std::uint64_t seed, int deg)
{
    Suite s("rimhook-equiv",
            "rim-hook Kerov operators as Virasoro generators: L_{-r} = r U_r, L_r = r D_r at alpha = (z+w) r/2",
            seed, deg);
    Tally up, down, diag, triple;
    for (int draw = 0; draw < 3; ++draw) {
        KerovParams<Rational> p{s.rng.any(), s.rng.any()};
        for (int r = 1; r <= 4; ++r) {
            auto vp = virasoro_params_for_rimhook(r, p);
            Rational shift = Rational(r * r * r - r, 12 * r * r) * (Rational(1) - Rational(12) * vp.gamma * vp.gamma);
            for (const auto& lambda : partitions_up_to(deg)) {
                V v = V::basis(lambda);
                std::string tag = "r=" + std::to_string(r);
                up.compare(tag, lambda, rimhook_kerov(r, HookDirection::raise, p, v) * Rational(r),
                           apply(Op::virasoro(-r, vp), v));
                down.compare(tag, lambda, rimhook_kerov(r, HookDirection::lower, p, v) * Rational(r),
                             apply(Op::virasoro(r, vp), v));
                diag.compare(tag, lambda, rimhook_kerov(r, HookDirection::diagonal, p, v),
                             apply(Op::virasoro(0, vp), v) * Rational(2, r) + v * shift);
            }
            triple.add(commutator_check(Op::rimhook(r, HookDirection::lower, p), Op::rimhook(r, HookDirection::raise, p),
                                        {{{Rational(1), Op::rimhook(r, HookDirection::diagonal, p)}}, Rational(0)},
                                        deg));
        }
    }
    s.check("r U_r = L_{-r}, r <= 4", up);
    s.check("r D_r = L_r, r <= 4", down);
    s.check("L_r = (2/r) L_0 + (r^3 - r)(1 - 12 gamma^2)/(12 r^2), r <= 4", diag);
    s.check("[D_r, U_r] = L_r, r <= 4", triple);
    return s.finish();
}

void compare_with_schur(Tally& t, int draw, const Miwa& x, const Miwa& y, const Rational& z, const Rational& w, int deg)
{
    auto table = virasoro_weight_table(MeasureSpec<Rational>{MeasureKind::virasoro, {x, y}, {z, w}, Rational(0), 2, deg});
    auto X = schur_params_from_vir(x, z, deg);
    auto Y = y_side_params(y, w, deg);
    Miwa xm, ym;
    for (int n = 1; n <= deg; ++n) {
        xm[n] = X[static_cast<std::size_t>(n - 1)];
        ym[n] = Y[static_cast<std::size_t>(n - 1)];
    }
    t.next_case();
    for (const auto& [lambda, weight] : table.weights) {
        Rational schur = schur_polynomial(lambda, xm) * schur_polynomial(lambda, ym);
        t.compare("draw " + std::to_string(draw), to_json(lambda), weight, schur);
    }
}

SuiteResult determinancy(std::uint64_t seed, int deg)
{
    Suite s("determinancy",
            "Virasoro measure as a Schur measure: <lambda|exp(sum x_k L_{-k})|0><0|exp(sum y_k L_k)|lambda> = "
            "s_lambda(X) s_lambda(Y)",
            seed, deg);
    Tally full;
    for (int draw = 0; draw < 5; ++draw) {
        Miwa x = random_miwa(s.rng, 3), y = random_miwa(s.rng, 3);
        Rational z = s.rng.any(), w = s.rng.any();
        compare_with_schur(full, draw, x, y, z, w, deg);
    }
    s.check("weights equal s_lambda(X) s_lambda(Y) for random x_1..x_3, y_1..y_3", full);

    Tally single;
    for (int draw = 0; draw < 3; ++draw) {
        Miwa x{{1, s.rng.any()}}, y{{1, s.rng.any()}};
        Rational z = s.rng.any(), w = s.rng.any();
        compare_with_schur(single, draw, x, y, z, w, deg);
    }
    s.check("weights equal s_lambda(X) s_lambda(Y) when only x_1, y_1 are nonzero", single);

    // The obstruction at degree 2: L_{-2}|0> has a component along a_{-1}^2|0>.
    Tally witness;
    for (int draw = 0; draw < 3; ++draw) {
        Miwa x{{1, s.rng.any()}, {2, s.rng.nonzero()}};
        Rational z = s.rng.any();
        auto ket = ket_factors(x, virasoro_family<Rational>({z, Rational(0)}), 2);
        auto X = schur_params_from_vir(x, z, 2);
        Rational s11 = schur_polynomial(Partition{1, 1}, Miwa{{1, X[0]}, {2, X[1]}});
        witness.compare("draw " + std::to_string(draw), pair_json(x[2], "x_2", z, "z"), ket[Partition{1, 1}] - s11, x[2]);
    }
    s.check("<(1,1)|exp(sum x_k L_{-k})|0> - s_(1,1)(X) = x_2", witness);
    return s.finish();
}

// exp(sum_{n>=1} b_n u^n) truncated at u^N, by repeated multiplication.
std::vector<Rational> series_exp(const std::vector<Rational>& b, int N)
{
    std::vector<Rational> result(static_cast<std::size_t>(N + 1));
    std::vector<Rational> power(static_cast<std::size_t>(N + 1));
    result[0] = Rational(1);
    power[0] = Rational(1);
    for (int m = 1; m <= N; ++m) {
        std::vector<Rational> next(static_cast<std::size_t>(N + 1));
        for (int i = 0; i <= N; ++i)
            for (int j = 1; i + j <= N; ++j)
                next[static_cast<std::size_t>(i + j)] += power[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        power = next;
        for (int i = 0; i <= N; ++i)
            result[static_cast<std::size_t>(i)] += power[static_cast<std::size_t>(i)] / factorial(static_cast<unsigned>(m));
    }
    return result;
}

SuiteResult z_linearity(std::uint64_t seed, int deg)
{
    Suite s("z-linearity",
            "Schur parameters of the Virasoro measure are linear: X_N = A_N z + B_N and Y_N is linear in w", seed,
            deg);
    Miwa x = random_miwa(s.rng, deg), y = random_miwa(s.rng, deg);

    std::vector<LinearInZ<Rational>> lin;
    try {
        lin = z_linearity_witness(x, deg);
        s.check("z-degree of X_N <= 1 for N <= " + std::to_string(deg), true);
    } catch (const FalsifiedError& e) {
        s.check("z-degree of X_N <= 1 for N <= " + std::to_string(deg), false, Json{{"error", e.what()}});
    }
    try {
        w_linearity_witness(y, deg);
        s.check("w-degree of Y_N <= 1 for N <= " + std::to_string(deg), true);
    } catch (const FalsifiedError& e) {
        s.check("w-degree of Y_N <= 1 for N <= " + std::to_string(deg), false, Json{{"error", e.what()}});
    }

    Tally low;
    Poly z = Poly::variable();
    for (const Miwa& xs : {x, Miwa{{1, Rational(1)}, {2, Rational(1)}}}) {
        std::map<int, Poly> px;
        for (const auto& [k, v] : xs)
            px[k] = Poly(v);
        auto X = schur_params_from_vir(px, z, 2);
        Rational x1 = xs.at(1), x2 = xs.at(2);
        Poly X1 = z * Poly(x1);
        Poly X2 = z * Poly(x1 * x1 / Rational(2) + x2) + Poly(x2 / Rational(2));
        low.compare("X_1", Json{{"x_1", x1.str()}}, X[0].coeff(1), X1.coeff(1));
        low.compare("X_1 constant", Json{{"x_1", x1.str()}}, X[0].coeff(0), X1.coeff(0));
        low.compare("X_2", pair_json(x1, "x_1", x2, "x_2"), X[1].coeff(1), X2.coeff(1));
        low.compare("X_2 constant", pair_json(x1, "x_1", x2, "x_2"), X[1].coeff(0), X2.coeff(0));
        low.compare("X_2 degree", pair_json(x1, "x_1", x2, "x_2"), Rational(X[1].degree()), Rational(1));
    }
    s.check("X_1 = x_1 z, X_2 = (x_1^2/2 + x_2) z + x_2/2", low);

    Tally a, b;
    for (std::size_t i = 0; i < lin.size(); ++i) {
        int N = static_cast<int>(i) + 1;
        a.compare("N=" + std::to_string(N), Json(N), a_coeff_closed(N, x), lin[i].a);
        b.compare("N=" + std::to_string(N), Json(N), b_coeff_log_series(N, x), lin[i].b);
    }
    s.check("A_N = sum over compositions of prod x / R! * k_2 (k_2 + k_3) ... (k_2 + ... + k_R)", a);
    s.check("B_N = [u^N] log(1 + sum_l v_l u^l), v_l the single-row values at z = 0", b);

    Tally series;
    std::vector<Rational> B(static_cast<std::size_t>(deg + 1));
    for (int n = 1; n <= deg; ++n)
        B[static_cast<std::size_t>(n)] = b_coeff_log_series(n, x);
    auto e = series_exp(B, deg);
    for (int N = 1; N <= deg; ++N)
        series.compare("u^" + std::to_string(N), Json(N), e[static_cast<std::size_t>(N)], vir_row(N, x, Rational(0)));
    s.check("1 + sum_N v_N u^N = exp(sum_n B_n u^n) through u^" + std::to_string(deg), series);

    Tally printed;
    for (int N = 1; N <= deg; ++N)
        printed.compare("N=" + std::to_string(N), Json(N), b_coeff_closed(N, x), b_coeff_log_series(N, x));
    s.probe("B_N by the printed sum with multinomial weights N!/(l_1! ... l_n!)", printed);
    return s.finish();
}

std::vector<Rational> lemma_sweep(RationalSampler& rng, int N)
{
    std::vector<Rational> ws;
    for (int i = 0; i < 5; ++i)
        ws.push_back(rng.any());
    for (int w = -N - 1; w <= N + 1; ++w)
        ws.emplace_back(w);
    return ws;
}

SuiteResult rank(std::uint64_t seed, int deg)
{
    Suite s("rank", "rank of D on degree N equals the number of partitions of N - 1, for every w", seed, deg);
    Tally t;
    for (int N = 2; N <= deg; ++N)
        for (const Rational& w : lemma_sweep(s.rng, N))
            t.compare("N=" + std::to_string(N), Json{{"N", N}, {"w", w.str()}}, Rational(rank_of_D(N, w)),
                      Rational(static_cast<long>(partitions_of(N - 1).size())));
    s.check("rank D = p(N - 1) for 2 <= N <= " + std::to_string(deg) +
                ", 5 random w and every integer w in [-N-1, N+1]",
            t);

    Tally boundary;
    for (const Rational& w : lemma_sweep(s.rng, 1))
        boundary.compare("N=1", Json{{"w", w.str()}}, Rational(rank_of_D(1, w)), Rational(w.is_zero() ? 0 : 1));
    s.check("degree 1: rank D = 1 for w != 0 and 0 at w = 0", boundary);

    Tally generic;
    for (int N = 1; N <= deg; ++N)
        generic.compare("N=" + std::to_string(N), Json(N), Rational(rank_of_D(N, Poly::variable())),
                        Rational(static_cast<long>(partitions_of(N - 1).size())));
    s.check("generic rank over Q[w] equals p(N - 1)", generic);
    return s.finish();
}

SuiteResult kernels(std::uint64_t seed, int deg)
{
    Suite s("kernels",
            "kernel of U is trivial above the vacuum; kernel vectors of D in degree N are highest-weight vectors of "
            "weight zw + 2N; the four (z, w) cases of the decomposition",
            seed, deg);
    Tally u;
    for (int draw = 0; draw < 5; ++draw) {
        KerovParams<Rational> p{s.rng.nonzero(), s.rng.any()};
        for (int N = 1; N <= deg; ++N)
            u.compare("N=" + std::to_string(N), Json{{"N", N}, {"z", p.z.str()}, {"w", p.w.str()}},
                      Rational(static_cast<long>(kernel_basis(Op::U(p), N).size())), Rational(0));
    }
    s.check("ker U = 0 in degrees 1.." + std::to_string(deg) + " for 5 random nonzero z", u);

    Tally u0;
    KerovParams<Rational> zero_z{Rational(0), s.rng.any()};
    for (int N = 2; N <= deg; ++N)
        u0.compare("N=" + std::to_string(N), Json{{"N", N}, {"w", zero_z.w.str()}},
                   Rational(static_cast<long>(kernel_basis(Op::U(zero_z), N).size())), Rational(0));
    s.check("ker U = 0 in degrees >= 2 at z = 0", u0);

    Tally nullity, weights;
    KerovParams<Rational> p{s.rng.any(), s.rng.any()};
    for (int N = 0; N <= deg; ++N) {
        Json at{{"N", N}, {"z", p.z.str()}, {"w", p.w.str()}};
        auto ker = kernel_basis(Op::D(p), N);
        nullity.compare("N=" + std::to_string(N), at, Rational(rank_of_D(N, p.w) + static_cast<long>(ker.size())),
                        Rational(static_cast<long>(partitions_of(N).size())));
        try {
            auto hw = highest_weight_check(N, p.z, p.w);
            long expected = N >= 2 ? static_cast<long>(partitions_of(N).size() - partitions_of(N - 1).size())
                                   : static_cast<long>(hw.size());
            weights.compare("count N=" + std::to_string(N), at, Rational(static_cast<long>(hw.size())), Rational(expected));
        } catch (const FalsifiedError& e) {
            weights.compare(e.what(), at, Rational(1), Rational(0));
        }
    }
    s.check("rank D + dim ker D = p(N)", nullity);
    s.check("ker D in degree N has dimension p(N) - p(N-1) and L acts by zw + 2N on it", weights);

    Tally free;
    for (int N = 1; N <= std::min(deg, 6); ++N) {
        auto hw = highest_weight_check(N, p.z, p.w);
        auto targets = partitions_of(N + 1);
        std::vector<std::vector<Rational>> images;
        for (const auto& h : hw) {
            V image = kerov_U(p, h.vector);
            std::vector<Rational> row;
            for (const auto& mu : targets)
                row.push_back(image.coeff(mu));
            images.push_back(std::move(row));
        }
        free.compare("N=" + std::to_string(N), Json(N), Rational(matrix_rank(images)),
                     Rational(static_cast<long>(hw.size())));
    }
    s.check("U maps the highest-weight vectors of each degree <= 6 to independent vectors", free);

    for (auto [z, w] : {std::pair{Rational(0), Rational(0)}, std::pair{Rational(0), s.rng.nonzero()},
                        std::pair{s.rng.nonzero(), Rational(0)}, std::pair{s.rng.nonzero(), s.rng.nonzero()}}) {
        auto report = decomposition_report(z, w, std::min(deg, 6));
        s.check("case " + to_string(report.kerov_case) + " generator relations and degree data", report.ok(),
                Json{{"report", to_json(report)}});
    }
    return s.finish();
}

SuiteResult m_virasoro_suite(std::uint64_t seed, int deg)
{
    Suite s("m-virasoro",
            "M-Virasoro operators: M = 2 is Virasoro, M = 1 gives a rescaled Schur measure, L^(M)_{-k} adds a "
            "single k-rim hook",
            seed, deg);
    VirasoroParams<Rational> p{s.rng.any(), s.rng.any()};
    Tally two;
    for (const auto& lambda : partitions_up_to(deg))
        for (int k = -3; k <= 3; ++k) {
            if (k == 0)
                continue;
            V v = V::basis(lambda);
            two.compare("k=" + std::to_string(k), lambda, apply(Op::m_virasoro(2, k, p), v), apply(Op::virasoro(k, p), v));
        }
    s.check("L^(2)_k = L_k for 0 < |k| <= 3", two);

    Tally one;
    MiwaParams<Rational> mp{random_miwa(s.rng, 3), random_miwa(s.rng, 3)};
    Rational z = s.rng.any(), w = s.rng.any(), g = s.rng.any();
    MiwaParams<Rational> scaled;
    for (const auto& [k, v] : mp.x)
        scaled.x[k] = v * (Rational(1) - g * Rational(k));
    for (const auto& [k, v] : mp.y)
        scaled.y[k] = v * (Rational(1) + g * Rational(k));
    auto m1 = m_virasoro_weight_table(MeasureSpec<Rational>{MeasureKind::m_virasoro, mp, {z, w}, g, 1, deg});
    auto schur = schur_weight_table(MeasureSpec<Rational>{MeasureKind::schur, scaled, {}, {}, 2, deg});
    for (std::size_t i = 0; i < m1.weights.size(); ++i)
        one.compare("M=1", to_json(m1.weights[i].first), m1.weights[i].second, schur.weights[i].second);
    s.check("M = 1 table equals the Schur table at x_k (1 - gamma k), y_k (1 + gamma k)", one);

    Tally support;
    for (const auto& lambda : partitions_up_to(deg))
        for (int k = 1; k <= 3; ++k) {
            V out = apply(Op::m_virasoro(3, -k, p), V::basis(lambda));
            V off;
            for (const auto& [state, c] : out.terms()) {
                bool hook = false;
                for (const auto& m : rim_hooks_addable(lambda, k))
                    hook = hook || MayaState::from_partition(m.result) == state;
                if (!hook)
                    off.add(state, c);
            }
            support.compare("k=" + std::to_string(k), lambda, off, V());
        }
    s.check("L^(3)_{-k}|lambda> is supported on lambda + k-rim hooks, k <= 3", support);

    Rational zk = s.rng.any();
    VirasoroParams<Rational> q{zk, Rational(0)};
    Tally printed_two;
    for (const auto& lambda : partitions_up_to(deg))
        for (int k = -3; k <= 3; ++k) {
            if (k == 0)
                continue;
            V v = V::basis(lambda);
            printed_two.compare("k=" + std::to_string(k), lambda,
                                m_virasoro(2, k, p, v, v.degree() + std::abs(k), TupleWeight::once_per_multiset),
                                apply(Op::virasoro(k, p), v));
        }
    s.probe("weight |Stab|/M! per ordered tuple at M = 2 equals L_k", printed_two);

    for (TupleWeight weight : {TupleWeight::symmetric, TupleWeight::once_per_multiset})
        for (int M = 1; M <= 3; ++M) {
            Tally power;
            for (const auto& lambda : partitions_up_to(deg))
                for (int k = 1; k <= 3; ++k) {
                    V lhs = m_virasoro(M, -k, q, V::basis(lambda), lambda.size() + k, weight);
                    V rhs = signed_hook_sum(lambda, k, [&](const RimHookMove& m) {
                        return pow(zk + Rational(m.leftmost_content) + Rational(k - 1, 2), static_cast<unsigned>(M - 1));
                    });
                    power.compare("k=" + std::to_string(k), lambda, lhs, rhs);
                }
            std::string w = weight == TupleWeight::symmetric ? "1/M!" : "|Stab|/M!";
            s.probe("M=" + std::to_string(M) + ", weight " + w +
                        " per ordered tuple: L^(M)_{-k}|lambda> = sum (-1)^(height-1) (z + c + (k-1)/2)^(M-1) |mu>, "
                        "c the leftmost content",
                    power);
        }
    return s.finish();
}

constexpr int kPsiTrunc = 24;

SuiteResult prop52(std::uint64_t seed, int deg)
{
    Suite s("prop52",
            "fermion commutator [psi_x, L_{-k}] = a_{-k} psi_x - (alpha - gamma k + x - c + k/2) psi_{x+k} on charge c",
            seed, deg);
    VirasoroParams<Rational> p{s.rng.any(), s.rng.any()};
    Tally t;
    for (int c = -1; c <= 1; ++c)
        for (const auto& st : basis_states(deg, c))
            for (int k = 1; k <= 3; ++k)
                for (int d = -7; d <= 7; d += 2) {
                    HalfInt x = HalfInt::from_doubled(d);
                    V v = V::basis(st);
                    V lhs = psi(x, virasoro(-k, p, v, kPsiTrunc)) - virasoro(-k, p, psi(x, v), kPsiTrunc);
                    Rational coeff = p.alpha - p.gamma * Rational(k) + Rational(d, 2) - Rational(c) + Rational(k, 2);
                    V rhs = boson(-k, psi(x, v), kPsiTrunc) - psi(x + k, v) * coeff;
                    t.compare("c=" + std::to_string(c) + ",k=" + std::to_string(k) + ",x=" + x.str(), st.partition(), lhs, rhs);
                }
    s.check("corrected commutator, charges -1..1, k <= 3, |x| <= 7/2", t);

    Tally raw;
    Rational z = p.alpha;
    VirasoroParams<Rational> q{z, Rational(0)};
    for (const auto& lambda : partitions_up_to(deg))
        for (int k = 1; k <= 3; ++k)
            for (int d = -7; d <= 7; d += 2) {
                HalfInt x = HalfInt::from_doubled(d);
                V v = V::basis(lambda);
                V lhs = psi(x, virasoro(-k, q, v, kPsiTrunc)) - virasoro(-k, q, psi(x, v), kPsiTrunc);
                V rhs = boson(k, psi(x, v), kPsiTrunc) + psi(x + k, v) * (z + Rational(d, 2) + Rational(k, 2) - Rational(1));
                raw.compare("k=" + std::to_string(k) + ",x=" + x.str(), lambda, lhs, rhs);
            }
    s.probe("printed form [psi_x, L_{-k}] = a_k psi_x + (z + x + k/2 - 1) psi_{x+k}, gamma = 0", raw);
    return s.finish();
}

SuiteResult prop62(std::uint64_t seed, int deg)
{
    Suite s("prop62",
            "fermion commutator with M-Virasoro generators [psi_x, L^(M)_{-k}] in terms of lower M", seed, deg);
    Rational z = s.rng.any();
    VirasoroParams<Rational> q{z, Rational(0)};
    auto L = [&](int M, int k, const V& v) { return m_virasoro(M, k, q, v, v.degree() + std::abs(k) + kPsiTrunc); };

    Tally base;
    for (const auto& lambda : partitions_up_to(deg))
        for (int k = 1; k <= 3; ++k)
            for (int d = -7; d <= 7; d += 2) {
                HalfInt x = HalfInt::from_doubled(d);
                V v = V::basis(lambda);
                V lhs = psi(x, L(2, -k, v)) - L(2, -k, psi(x, v));
                V rhs = L(1, -k, psi(x, v)) - psi(x + k, v) * (z + Rational(d, 2) + Rational(k, 2));
                base.compare("k=" + std::to_string(k) + ",x=" + x.str(), lambda, lhs, rhs);
            }
    s.check("M = 2, gamma = 0: [psi_x, L^(2)_{-k}] = L^(1)_{-k} psi_x - (z + x + k/2) psi_{x+k}", base);

    for (int M = 2; M <= 3; ++M) {
        Tally printed;
        for (const auto& lambda : partitions_up_to(deg))
            for (int k = 1; k <= 3; ++k)
                for (int d = -7; d <= 7; d += 2) {
                    HalfInt x = HalfInt::from_doubled(d);
                    V v = V::basis(lambda);
                    V pv = psi(x, v);
                    V lhs = psi(x, L(M, -k, v)) - L(M, -k, pv);
                    V rhs = psi(x + k, v) * pow(z + Rational(d, 2) + Rational(k, 2) - Rational(1), static_cast<unsigned>(M - 1));
                    for (int r = 1; r <= M - 1; ++r)
                        rhs += L(M - r, -k, pv);
                    printed.compare("k=" + std::to_string(k) + ",x=" + x.str(), lambda, lhs, rhs);
                }
        s.probe("M=" + std::to_string(M) +
                    ": printed form (sum_{r=1}^{M-1} L^(M-r)_{-k}) psi_x + (z + x + k/2 - 1)^(M-1) psi_{x+k}",
                printed);
    }
    return s.finish();
}

using Runner = SuiteResult (*)(std::uint64_t, int);

struct Entry {
    const char* name;
    int default_degree;
    Runner run;
};

const std::vector<Entry>& registry()
{
    static const std::vector<Entry> entries = {
        {"heisenberg", 6, heisenberg},         {"virasoro-cc", 5, virasoro_cc},     {"sl2", 6, sl2},
        {"kerov-equiv", 7, kerov_equiv},       {"rimhook-equiv", 6, rimhook_equiv}, {"determinancy", 6, determinancy},
        {"z-linearity", 6, z_linearity},       {"rank", 8, rank},                   {"kernels", 8, kernels},
        {"m-virasoro", 5, m_virasoro_suite},   {"prop52", 4, prop52},               {"prop62", 4, prop62},
    };
    return entries;
}

const Entry& find(const std::string& name)
{
    for (const auto& e : registry())
        if (name == e.name)
            return e;
    throw ParseError("unknown suite '" + name + "'");
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : registry())
            out.emplace_back(e.name);
        return out;
    }();
    return names;
}

int default_max_degree(const std::string& suite)
{
    return find(suite).default_degree;
}

SuiteResult run_suite(const std::string& suite, std::uint64_t seed, int max_degree)
{
    const Entry& e = find(suite);
    return e.run(seed, max_degree < 0 ? e.default_degree : max_degree);
}

} // namespace vfock
