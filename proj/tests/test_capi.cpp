// Exercises the shared library through the C header only.

#include "doctest.h"

#include <string>

#include "vfock/vfock.h"

namespace {

std::string take(char* s)
{
    std::string out = s ? s : "";
    vf_string_free(s);
    return out;
}

} // namespace

TEST_CASE("status names and errors")
{
    CHECK(std::string(vf_status_name(VF_ERR_FALSIFIED)) == "falsified");
    vf_params* p = nullptr;
    REQUIRE(vf_params_create(&p) == VF_OK);
    CHECK(vf_params_set(p, "z", "1/0x") == VF_ERR_PARSE);
    CHECK(std::string(vf_last_error()).find("1/0x") != std::string::npos);
    CHECK(vf_params_set(p, "q", "1") == VF_ERR_DOMAIN);
    CHECK(vf_params_set(p, "M", "0") == VF_ERR_DOMAIN);
    CHECK(vf_params_set_series(p, "x", "1=1,1=2") == VF_ERR_PARSE);
    CHECK(vf_params_set(nullptr, "z", "1") == VF_ERR_ARGUMENT);
    vf_table* t = nullptr;
    CHECK(vf_table_create("nope", p, 2, 0, &t) == VF_ERR_PARSE);
    CHECK(vf_table_create("schur", p, -1, 0, &t) == VF_ERR_DOMAIN);
    CHECK(t == nullptr);
    vf_params_free(p);
}

TEST_CASE("schur table through the C interface")
{
    vf_params* p = nullptr;
    REQUIRE(vf_params_create(&p) == VF_OK);
    REQUIRE(vf_params_set_series(p, "x", "1=1") == VF_OK);
    REQUIRE(vf_params_set_series(p, "y", "1=1") == VF_OK);
    vf_table* t = nullptr;
    REQUIRE(vf_table_create("schur", p, 2, 0, &t) == VF_OK);
    CHECK(vf_table_size(t) == 4);

    int two[] = {2};
    char* s = nullptr;
    REQUIRE(vf_table_weight(t, two, 1, &s) == VF_OK);
    CHECK(take(s) == "\"1/4\"");

    REQUIRE(vf_table_jsonl(t, &s) == VF_OK);
    std::string lines = take(s);
    CHECK(lines.find(R"({"partition":[1],"weight":"1","normalized":"2/5"})") != std::string::npos);
    CHECK(lines.rfind(R"({"summary":{"kind":"schur","N":2,"ring":"rational","z_trunc":"5/2","count":4}})") !=
          std::string::npos);

    // 1/2 is occupied when lambda_i = i for some i: here (1) and (1,1).
    REQUIRE(vf_correlation(t, R"(["1/2"])", &s) == VF_OK);
    CHECK(take(s) == R"({"points":["1/2"],"correlation":"1/2"})");
    CHECK(vf_correlation(t, "[1]", &s) == VF_ERR_PARSE);

    vf_table_free(t);
    vf_params_free(p);
}

TEST_CASE("conversion lines")
{
    vf_params* p = nullptr;
    REQUIRE(vf_params_create(&p) == VF_OK);
    REQUIRE(vf_params_set_series(p, "x", "1=1,2=1") == VF_OK);
    char* s = nullptr;
    REQUIRE(vf_convert(p, 2, 1, &s) == VF_OK);
    std::string out = take(s);
    CHECK(out.find(R"({"side":"x","N":1,"A":"1","B":"0","X":{"poly":["0","1"]}})") != std::string::npos);
    CHECK(out.find(R"({"side":"x","N":2,"A":"3/2","B":"1/2","X":{"poly":["1/2","3/2"]}})") != std::string::npos);

    REQUIRE(vf_params_set(p, "z", "2") == VF_OK);
    REQUIRE(vf_convert(p, 2, 0, &s) == VF_OK);
    CHECK(take(s).find(R"("N":2,"A":"3/2","B":"1/2","X":"7/2")") != std::string::npos);
    vf_params_free(p);
}

TEST_CASE("operators and commutators")
{
    vf_vector* vac = nullptr;
    REQUIRE(vf_vector_basis(nullptr, 0, 0, &vac) == VF_OK);
    vf_operator* U = nullptr;
    vf_operator* D = nullptr;
    vf_operator* L = nullptr;
    REQUIRE(vf_operator_kerov('U', "2", "3", &U) == VF_OK);
    REQUIRE(vf_operator_kerov('D', "2", "3", &D) == VF_OK);
    REQUIRE(vf_operator_kerov('L', "2", "3", &L) == VF_OK);
    CHECK(vf_operator_kerov('X', "2", "3", &L) == VF_ERR_DOMAIN);

    // U|0> = z|1> and [D, U]|0> = L|0> = zw|0>.
    vf_vector* u = nullptr;
    REQUIRE(vf_apply(U, vac, &u) == VF_OK);
    char* s = nullptr;
    REQUIRE(vf_vector_json(u, &s) == VF_OK);
    CHECK(take(s) == R"({"charge":0,"terms":[{"partition":[1],"coeff":"2"}]})");

    vf_vector* du = nullptr;
    vf_vector* l = nullptr;
    REQUIRE(vf_commutator(D, U, vac, &du) == VF_OK);
    REQUIRE(vf_apply(L, vac, &l) == VF_OK);
    CHECK(vf_vector_equal(du, l));

    vf_vector* expect = nullptr;
    REQUIRE(vf_vector_basis(nullptr, 0, 0, &expect) == VF_OK);
    REQUIRE(vf_vector_axpy(expect, "5", vac) == VF_OK);
    CHECK(vf_vector_equal(expect, l));

    vf_operator* a = nullptr;
    CHECK(vf_operator_boson(0, &a) == VF_ERR_DOMAIN);
    REQUIRE(vf_operator_boson(-1, &a) == VF_OK);
    REQUIRE(vf_operator_json(a, &s) == VF_OK);
    CHECK(take(s).find("\"family\"") != std::string::npos);

    for (auto* v : {vac, u, du, l, expect})
        vf_vector_free(v);
    for (auto* op : {U, D, L, a})
        vf_operator_free(op);
}

TEST_CASE("suites and reports")
{
    CHECK(vf_suite_count() == 12);
    CHECK(std::string(vf_suite_name(0)) == "heisenberg");
    CHECK(vf_suite_name(12) == nullptr);

    char* s = nullptr;
    int falsified = -1;
    REQUIRE(vf_verify("sl2", 7, 3, &s, &falsified) == VF_OK);
    CHECK(falsified == 0);
    CHECK(take(s).find(R"("status":"ok")") != std::string::npos);

    REQUIRE(vf_verify("determinancy", 7, 3, &s, &falsified) == VF_OK);
    vf_string_free(s);
    CHECK(falsified == 1);
    CHECK(vf_verify("nope", 7, 3, &s, &falsified) == VF_ERR_PARSE);

    int ok = 0;
    REQUIRE(vf_decompose("0", "5", 3, &s, &ok) == VF_OK);
    CHECK(ok == 1);
    CHECK(take(s).find(R"("case":"z-zero")") != std::string::npos);
}
