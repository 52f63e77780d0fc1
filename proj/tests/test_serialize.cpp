#include "doctest.h"

#include "vfock/errors.hpp"
#include "vfock/serialize.hpp"
#include "vfock/suites.hpp"

using namespace vfock;

TEST_CASE("scalar and combinatorial values")
{
    CHECK(to_json(HalfInt::from_doubled(-3)).dump() == "\"-3/2\"");
    CHECK(to_json(Partition{2, 1}).dump() == "[2,1]");
    CHECK(to_json(Partition()).dump() == "[]");
    CHECK(to_json(Rational(-3, 6)).dump() == "\"-1/2\"");
    Poly p = Poly::variable() * Poly(Rational(3, 2)) + Poly(Rational(1, 2));
    CHECK(to_json(p).dump() == R"({"poly":["1/2","3/2"]})");
}

TEST_CASE("Fock vectors list terms by degree then reverse lexicographic order")
{
    FockVector<Rational> v = FockVector<Rational>::basis(Partition{1, 1});
    v.add(MayaState::from_partition(Partition{2}), Rational(3));
    v.add(MayaState(), Rational(-1));
    CHECK(to_json(v).dump() ==
          R"({"charge":0,"terms":[{"partition":[],"coeff":"-1"},{"partition":[2],"coeff":"3"},{"partition":[1,1],"coeff":"1"}]})");
}

TEST_CASE("commutator reports")
{
    KerovParams<Rational> p{Rational(1), Rational(2)};
    using Op = OperatorSpec<Rational>;
    auto good = commutator_check(Op::D(p), Op::U(p), {{{Rational(1), Op::L(p)}}, Rational(0)}, 2);
    Json j = to_json(good);
    CHECK(j["lhs"]["family"] == "D");
    CHECK(j["rhs"]["z"] == "1");
    CHECK(j["degree"] == 2);
    CHECK(j["discrepancies"].empty());

    auto bad = commutator_check(Op::D(p), Op::U(p), {{}, Rational(0)}, 1);
    Json b = to_json(bad);
    REQUIRE(b["discrepancies"].size() == 2);
    CHECK(b["discrepancies"][0]["basis"].dump() == "[]");
    CHECK(b["discrepancies"][0]["delta"]["terms"][0]["coeff"] == "2");
}

TEST_CASE("weight tables")
{
    MeasureSpec<Rational> spec{MeasureKind::schur, {{{1, Rational(1)}}, {{1, Rational(1)}}}, {}, {}, 2, 2};
    auto t = schur_weight_table(spec);
    Json j = to_json(t, MeasureKind::schur);
    CHECK(j["kind"] == "schur");
    CHECK(j["ring"] == "rational");
    // s_(2) = s_(1,1) = 1/2 at x_1 = 1; Z_2 = 1 + 1 + 1/2.
    CHECK(j["z_trunc"] == "5/2");
    CHECK(j["weights"][1]["normalized"] == "2/5");
    CHECK(to_csv(t) == "partition,weight,normalized_weight\n"
                       "\"[]\",1,2/5\n"
                       "\"[1]\",1,2/5\n"
                       "\"[2]\",1/4,1/10\n"
                       "\"[1,1]\",1/4,1/10\n");

    MeasureSpec<Poly> ps{MeasureKind::schur, {{{1, Poly::variable()}}, {{1, Poly(1)}}}, {}, {}, 2, 1};
    auto pt = schur_weight_table(ps);
    Json pj = to_json(pt, MeasureKind::schur);
    CHECK(pj["weights"][1]["weight"].dump() == R"({"poly":["0","1"]})");
    CHECK(pj["weights"][1]["normalized"].is_null());
    CHECK(to_csv(pt).find("\"{\"\"poly\"\":[\"\"0\"\",\"\"1\"\"]}\",") != std::string::npos);
}

TEST_CASE("decomposition reports")
{
    Json j = to_json(decomposition_report(Rational(0), Rational(5), 2));
    CHECK(j["case"] == "z-zero");
    CHECK(j["ok"] == true);
    CHECK(j["degrees"].size() == 3);
    CHECK(j["degrees"][2]["kernel_dim"] == 1);
}

TEST_CASE("parsing index maps and points")
{
    auto m = parse_index_map("1=1,2=1/2");
    CHECK(m.size() == 2);
    CHECK(m[2] == Rational(1, 2));
    CHECK(parse_index_map("").empty());
    CHECK_THROWS_AS(parse_index_map("0=1"), ParseError);
    CHECK_THROWS_AS(parse_index_map("1=1,1=2"), ParseError);
    CHECK_THROWS_AS(parse_index_map("1:1"), ParseError);
    CHECK_THROWS_AS(parse_index_map("1=x"), ParseError);

    auto pts = parse_points(R"(["1/2", "-3/2"])");
    CHECK(pts.size() == 2);
    CHECK(pts.count(HalfInt::from_doubled(-3)) == 1);
    CHECK_THROWS_AS(parse_points("[1]"), ParseError);
    CHECK_THROWS_AS(parse_points("nope"), ParseError);
    CHECK_THROWS_AS(parse_points(R"(["1/3"])"), ParseError);
}

TEST_CASE("suite reports")
{
    auto r = run_suite("sl2", 7, 3);
    REQUIRE(r.lines.size() == 5);
    CHECK(r.lines.front()["suite"] == "sl2");
    CHECK(r.lines.front()["identity"].get<std::string>().find("[D, U] = L") != std::string::npos);
    CHECK(r.lines.back()["summary"]["status"] == "ok");
    CHECK(r.ok());

    auto again = run_suite("sl2", 7, 3);
    for (std::size_t i = 0; i < r.lines.size(); ++i)
        CHECK(r.lines[i].dump() == again.lines[i].dump());

    CHECK(default_max_degree("rank") == 8);
    CHECK_THROWS_AS(run_suite("nope", 1), ParseError);
    CHECK(suite_names().size() == 12);
}

TEST_CASE("probes report without failing")
{
    auto r = run_suite("prop62", 3, 2);
    CHECK(r.ok());
    CHECK(r.probes == 2);
    bool mismatch = false;
    for (const auto& line : r.lines)
        if (line.contains("probe"))
            mismatch = mismatch || !line["matches"].get<bool>();
    CHECK(mismatch);
}
