#include "doctest.h"

#include "oracles.hpp"
#include "vfock/errors.hpp"
#include "vfock/repstructure.hpp"

using namespace vfock;

namespace {

using V = FockVector<Rational>;

std::vector<Rational> lemma_sweep_values(RationalSampler& rng, int N)
{
    std::vector<Rational> ws;
    for (int i = 0; i < 5; ++i)
        ws.push_back(rng.any());
    for (int w = -N - 1; w <= N + 1; ++w)
        ws.emplace_back(w);
    return ws;
}

} // namespace

TEST_CASE("graded matrix examples")
{
    Rational z(2, 3), w(-5, 4);
    KerovParams<Rational> p{z, w};

    auto d2 = matrix_of(OperatorSpec<Rational>::D(p), 2);
    REQUIRE(d2.rows.size() == 1);
    REQUIRE(d2.cols.size() == 2);
    CHECK(d2.cols[0] == Partition{2});
    CHECK(d2.cols[1] == Partition{1, 1});
    CHECK(d2.at(0, 0) == w + Rational(1));
    CHECK(d2.at(0, 1) == w - Rational(1));

    auto u0 = matrix_of(OperatorSpec<Rational>::U(p), 0);
    REQUIRE(u0.rows.size() == 1);
    CHECK(u0.at(0, 0) == z);

    for (int N = 0; N <= 5; ++N) {
        auto l = matrix_of(OperatorSpec<Rational>::L(p), N);
        for (std::size_t i = 0; i < l.rows.size(); ++i)
            for (std::size_t j = 0; j < l.cols.size(); ++j)
                CHECK(l.at(i, j) == (i == j ? z * w + Rational(2 * N) : Rational(0)));
    }

    auto d0 = matrix_of(OperatorSpec<Rational>::D(p), 0);
    CHECK(d0.rows.empty());
    CHECK(d0.cols.size() == 1);
}

TEST_CASE("graded matrix entries connect diagrams differing by one box")
{
    KerovParams<Rational> p{Rational(1, 2), Rational(3)};
    for (int N = 1; N <= 6; ++N) {
        auto d = matrix_of(OperatorSpec<Rational>::D(p), N);
        CHECK(d.entries == oracle::kerov_d_matrix(N, p.w));
        auto u = matrix_of(OperatorSpec<Rational>::U(p), N);
        for (std::size_t i = 0; i < u.rows.size(); ++i)
            for (std::size_t j = 0; j < u.cols.size(); ++j) {
                if (u.at(i, j).is_zero())
                    continue;
                auto boxes = addable_boxes(u.cols[j]);
                bool one_box = false;
                for (const auto& b : boxes)
                    one_box = one_box || add_box(u.cols[j], b) == u.rows[i];
                CHECK(one_box);
            }
    }
}

TEST_CASE("rank of D on small degrees")
{
    RationalSampler rng(11);
    for (int t = 0; t < 5; ++t)
        CHECK(rank_of_D(2, rng.any()) == 1);
    CHECK(rank_of_D(5, Rational(3)) == 5);
    CHECK(rank_of_D(1, Rational(0)) == 0);
    CHECK(rank_of_D(1, Rational(2)) == 1);
    CHECK(rank_of_D(0, Rational(2)) == 0);
}

TEST_CASE("rank of D equals the number of partitions one degree down")
{
    RationalSampler rng(12);
    for (int N = 2; N <= 8; ++N)
        for (const Rational& w : lemma_sweep_values(rng, N)) {
            int r = rank_of_D(N, w);
            CHECK(r == oracle::partition_count(N - 1));
            CHECK(r == oracle::rational_rank(oracle::kerov_d_matrix(N, w)));
        }
}

TEST_CASE("generic rank over the polynomial ring agrees with specializations")
{
    Poly w = Poly::variable();
    RationalSampler rng(13);
    for (int N = 1; N <= 6; ++N) {
        int generic = rank_of_D(N, w);
        CHECK(generic == oracle::partition_count(N - 1));
        for (int t = 0; t < 3; ++t)
            CHECK(rank_of_D(N, rng.any()) <= generic);
    }
}

TEST_CASE("kernel of D in degree 2")
{
    RationalSampler rng(14);
    for (int t = 0; t < 5; ++t) {
        Rational w = rng.any();
        auto ker = kernel_basis(OperatorSpec<Rational>::D({Rational(1), w}), 2);
        REQUIRE(ker.size() == 1);
        const V& v = ker[0];
        // v is proportional to (w-1)|2> - (w+1)|1,1>.
        CHECK(v.coeff(Partition{2}) * -(w + Rational(1)) == v.coeff(Partition{1, 1}) * (w - Rational(1)));
        CHECK(kerov_D<Rational>({Rational(1), w}, v).is_zero());
    }
}

TEST_CASE("kernel of U is trivial above the vacuum")
{
    RationalSampler rng(15);
    for (int t = 0; t < 5; ++t) {
        KerovParams<Rational> p{rng.nonzero(), rng.any()};
        for (int N = 1; N <= 8; ++N)
            CHECK(kernel_basis(OperatorSpec<Rational>::U(p), N).empty());
    }
    KerovParams<Rational> zero_z{Rational(0), Rational(2, 5)};
    for (int N = 2; N <= 8; ++N)
        CHECK(kernel_basis(OperatorSpec<Rational>::U(zero_z), N).empty());
    auto vac = kernel_basis(OperatorSpec<Rational>::U(zero_z), 0);
    REQUIRE(vac.size() == 1);
    CHECK(vac[0] == V::vacuum());
}

TEST_CASE("rank plus nullity")
{
    RationalSampler rng(16);
    for (int t = 0; t < 3; ++t) {
        KerovParams<Rational> p{rng.any(), rng.any()};
        for (int N = 0; N <= 8; ++N) {
            auto D = OperatorSpec<Rational>::D(p);
            int rank = rank_of_D(N, p.w);
            CHECK(rank + static_cast<long>(kernel_basis(D, N).size()) == oracle::partition_count(N));
        }
    }
}

TEST_CASE("kernel vectors of D are highest-weight vectors")
{
    RationalSampler rng(17);
    Rational z = rng.any(), w = rng.any();
    auto two = highest_weight_check(2, z, w);
    REQUIRE(two.size() == 1);
    CHECK(two[0].eigenvalue == z * w + Rational(4));

    auto zero = highest_weight_check(0, z, w);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].vector == V::vacuum());
    CHECK(zero[0].eigenvalue == z * w);

    for (int N = 2; N <= 7; ++N) {
        auto hw = highest_weight_check(N, z, w);
        CHECK(static_cast<long>(hw.size()) == oracle::partition_count(N) - oracle::partition_count(N - 1));
        for (const auto& h : hw)
            CHECK(h.eigenvalue == z * w + Rational(2 * N));
    }
}

TEST_CASE("U is injective on highest-weight vectors")
{
    RationalSampler rng(18);
    for (int t = 0; t < 3; ++t) {
        KerovParams<Rational> p{rng.any(), rng.any()};
        for (int N = 1; N <= 6; ++N) {
            auto hw = highest_weight_check(N, p.z, p.w);
            auto targets = partitions_of(N + 1);
            std::vector<std::vector<Rational>> images;
            for (const auto& h : hw) {
                V u = kerov_U(p, h.vector);
                std::vector<Rational> row;
                for (const auto& mu : targets)
                    row.push_back(u.coeff(mu));
                images.push_back(row);
            }
            CHECK(oracle::rational_rank(images) == static_cast<int>(hw.size()));
        }
    }
}

TEST_CASE("decomposition report cases")
{
    auto both_zero = decomposition_report(Rational(0), Rational(0), 5);
    CHECK(both_zero.kerov_case == KerovCase::both_zero);
    CHECK(both_zero.ok());

    auto z_zero = decomposition_report(Rational(0), Rational(5), 5);
    CHECK(z_zero.kerov_case == KerovCase::z_zero);
    CHECK(z_zero.ok());
    bool found = false;
    for (const auto& r : z_zero.relations)
        found = found || (r.name == "D|1> = w|0>" && r.holds);
    CHECK(found);

    auto w_zero = decomposition_report(Rational(3, 2), Rational(0), 5);
    CHECK(w_zero.kerov_case == KerovCase::w_zero);
    CHECK(w_zero.ok());
    CHECK(w_zero.degrees[1].kernel_dim == 1);

    RationalSampler rng(19);
    auto generic = decomposition_report(rng.nonzero(), rng.nonzero(), 6);
    CHECK(generic.kerov_case == KerovCase::both_nonzero);
    CHECK(generic.ok());
    for (const auto& d : generic.degrees) {
        CHECK(d.rank_D + d.kernel_dim == d.dimension);
        if (d.N >= 2)
            CHECK(d.kernel_dim == oracle::partition_count(d.N) - oracle::partition_count(d.N - 1));
    }
    CHECK(to_string(KerovCase::z_zero) == "z-zero");
}

TEST_CASE("matrix_of rejects negative degrees")
{
    CHECK_THROWS_AS(matrix_of(OperatorSpec<Rational>::U({Rational(1), Rational(1)}), -1), DomainError);
}
