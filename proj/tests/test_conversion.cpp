#include "doctest.h"

#include "vfock/conversion.hpp"
#include "vfock/errors.hpp"

using namespace vfock;

namespace {

std::map<int, Rational> random_miwa(RationalSampler& rng, int n)
{
    std::map<int, Rational> m;
    for (int k = 1; k <= n; ++k)
        m[k] = rng.nonzero();
    return m;
}

std::map<int, Poly> lift(const std::map<int, Rational>& x)
{
    std::map<int, Poly> out;
    for (const auto& [k, v] : x)
        out[k] = Poly(v);
    return out;
}

} // namespace

TEST_CASE("compositions")
{
    CHECK(compositions_of(0).size() == 1);
    CHECK(compositions_of(4).size() == 8);
    CHECK(compositions_of(3).front() == std::vector<int>{1, 1, 1});
    CHECK(compositions_of(3).back() == std::vector<int>{3});
}

TEST_CASE("path polynomials")
{
    Poly z = Poly::variable();
    CHECK(path_polynomial<Poly>({{}}, z) == Poly(1));
    CHECK(path_polynomial<Poly>({{1, 1}}, z) == z * (z + Poly(1)));
    CHECK(path_polynomial<Poly>({{2}}, z) == z + Poly(Rational(1, 2)));
    CHECK(path_polynomial<Poly>({{1}, HalfInt::from_doubled(3)}, z) == z + Poly(2));
    CHECK(JumpComposition{{2, 1, 3}}.total() == 6);
    CHECK_THROWS_AS(path_polynomial<Poly>({{0}}, z), DomainError);
}

TEST_CASE("single-row coefficients")
{
    Poly z = Poly::variable();
    Rational x1(2, 5), x2(-1, 3);
    std::map<int, Poly> x{{1, Poly(x1)}, {2, Poly(x2)}};
    CHECK(vir_row(1, x, z) == Poly(x1) * z);
    CHECK(vir_row(2, x, z) == Poly(x2) * (z + Poly(Rational(1, 2))) + Poly(x1 * x1 / Rational(2)) * z * (z + Poly(1)));

    RationalSampler rng(4);
    for (int trial = 0; trial < 3; ++trial) {
        auto xr = random_miwa(rng, 4);
        Rational zr = rng.any();
        auto e = exp_raising(xr, virasoro_family<Rational>({zr, Rational()}), FockVector<Rational>::vacuum(), 6);
        for (int n = 1; n <= 6; ++n)
            CHECK(vir_row(n, xr, zr) == e.coeff(Partition{n}));
    }
}

TEST_CASE("Schur parameters from single rows")
{
    Poly z = Poly::variable();
    Rational x1(3, 2), x2(5, 7);
    auto X = schur_params_from_vir<Poly>({{1, Poly(x1)}, {2, Poly(x2)}}, z, 2);
    CHECK(X[0] == Poly(x1) * z);
    CHECK(X[1] == Poly(x1 * x1 / Rational(2) + x2) * z + Poly(x2 / Rational(2)));
    for (const auto& v : schur_params_from_vir<Poly>({}, z, 5))
        CHECK(v.is_zero());

    RationalSampler rng(6);
    auto xr = random_miwa(rng, 3);
    Rational zr = rng.any();
    auto Xr = schur_params_from_vir(xr, zr, 6);
    std::map<int, Rational> xm;
    for (std::size_t i = 0; i < Xr.size(); ++i)
        xm[static_cast<int>(i) + 1] = Xr[i];
    auto h = complete_homogeneous(xm, 6);
    for (int n = 1; n <= 6; ++n)
        CHECK(h[static_cast<std::size_t>(n)] == vir_row(n, xr, zr));
}

TEST_CASE("linearity in z")
{
    Rational x1(3, 2), x2(5, 7);
    auto lin = z_linearity_witness({{1, x1}, {2, x2}}, 2);
    REQUIRE(lin.size() == 2);
    CHECK(lin[0].a == x1);
    CHECK(lin[0].b == Rational(0));
    CHECK(lin[1].a == x1 * x1 / Rational(2) + x2);
    CHECK(lin[1].b == x2 / Rational(2));

    RationalSampler rng(8);
    for (int trial = 0; trial < 3; ++trial) {
        auto x = random_miwa(rng, 4);
        auto w = z_linearity_witness(x, 6);
        CHECK(w.size() == 6);
        for (int n = 1; n <= 6; ++n) {
            CHECK(a_coeff_closed(n, x) == w[static_cast<std::size_t>(n - 1)].a);
            CHECK(b_coeff_log_series(n, x) == w[static_cast<std::size_t>(n - 1)].b);
        }
    }
}

TEST_CASE("constant terms from the logarithm")
{
    RationalSampler rng(10);
    auto x = random_miwa(rng, 4);
    auto w = z_linearity_witness(x, 6);
    std::map<int, Rational> B;
    for (int n = 1; n <= 6; ++n)
        B[n] = w[static_cast<std::size_t>(n - 1)].b;
    auto h = complete_homogeneous(B, 6);
    for (int n = 1; n <= 6; ++n)
        CHECK(h[static_cast<std::size_t>(n)] == vir_row(n, x, Rational()));

    // Only x_1: v_l vanishes at z = 0 for every l, so does B.
    auto only = z_linearity_witness({{1, Rational(2, 3)}}, 6);
    for (const auto& l : only)
        CHECK(l.b == Rational(0));
}

TEST_CASE("printed closed form for the constant term")
{
    Rational x1(3, 2), x2(5, 7);
    std::map<int, Rational> x{{1, x1}, {2, x2}};
    CHECK(b_coeff_closed(1, x) == Rational(0));
    CHECK(b_coeff_closed(2, x) == x2 / Rational(2));
    CHECK(b_coeff_closed(3, x) == b_coeff_log_series(3, x));
    // The multinomial weight departs from the logarithm once v_2^2 enters.
    CHECK(b_coeff_closed(4, x) != b_coeff_log_series(4, x));
    CHECK(a_coeff_closed(1, x) == x1);
    CHECK(a_coeff_closed(2, x) == x1 * x1 / Rational(2) + x2);
}

TEST_CASE("bra side parameters")
{
    Poly w = Poly::variable();
    Rational y1(4, 9);
    auto Y = y_side_params<Poly>({{1, Poly(y1)}}, w, 3);
    CHECK(Y[0] == Poly(y1) * w);
    for (const auto& v : y_side_params<Poly>({}, w, 4))
        CHECK(v.is_zero());
    RationalSampler rng(12);
    for (int trial = 0; trial < 3; ++trial) {
        auto y = random_miwa(rng, 4);
        auto lin = w_linearity_witness(y, 6);
        CHECK(lin.size() == 6);
        // Bra rows mirror the ket rows at gamma = 0.
        auto ket = z_linearity_witness(y, 6);
        for (std::size_t i = 0; i < 6; ++i) {
            CHECK(lin[i].a == ket[i].a);
            CHECK(lin[i].b == ket[i].b);
        }
    }
}

TEST_CASE("Virasoro weights with a single Miwa parameter are Schur weights")
{
    RationalSampler rng(16);
    for (int trial = 0; trial < 3; ++trial) {
        std::map<int, Rational> x{{1, rng.nonzero()}};
        std::map<int, Rational> y{{1, rng.nonzero()}};
        Rational z = rng.any(), w = rng.any();
        auto X = schur_params_from_vir(x, z, 6);
        auto Y = y_side_params(y, w, 6);
        MiwaParams<Rational> conv;
        for (int n = 1; n <= 6; ++n) {
            conv.x[n] = X[static_cast<std::size_t>(n - 1)];
            conv.y[n] = Y[static_cast<std::size_t>(n - 1)];
            // exp(sum X_n t^n) = (1 - x_1 t)^(-z).
            CHECK(conv.x[n] == z * pow(x.at(1), static_cast<unsigned>(n)) / Rational(n));
        }
        auto t = virasoro_weight_table(MeasureSpec<Rational>{MeasureKind::virasoro, {x, y}, {z, w}, Rational(), 2, 6});
        for (const auto& [lambda, wt] : t.weights)
            CHECK(wt == schur_weight(lambda, conv));
    }
}

TEST_CASE("higher Miwa parameters break the Schur form")
{
    // L_{-2}|0> carries a_{-1}^2 |0> / 2, which no Schur-type state reproduces
    // once the degree-one coefficient vanishes. At degree two the column
    // factor misses s_{(1,1)}(X) by exactly x_2.
    Poly z = Poly::variable();
    RationalSampler rng(18);
    for (int trial = 0; trial < 3; ++trial) {
        std::map<int, Rational> x{{1, rng.any()}, {2, rng.nonzero()}, {3, rng.any()}};
        auto X = schur_params_from_vir(lift(x), z, 5);
        std::map<int, Poly> xm;
        for (std::size_t i = 0; i < X.size(); ++i)
            xm[static_cast<int>(i) + 1] = X[i];
        auto ket = ket_factors(lift(x), virasoro_family<Poly>({z, Poly()}), 5);
        for (int n = 1; n <= 5; ++n)
            CHECK(ket.at(Partition{n}) == schur_polynomial(Partition{n}, xm));
        CHECK(ket.at(Partition{1, 1}) - schur_polynomial(Partition{1, 1}, xm) == Poly(x.at(2)));
    }
}
