#include "vfock/vfock.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <variant>

#include "vfock/suites.hpp"

using namespace vfock;

struct vf_params {
    std::map<int, Rational> x;
    std::map<int, Rational> y;
    Rational z;
    Rational w;
    Rational gamma;
    int M = 2;
};

struct vf_table {
    MeasureKind kind = MeasureKind::schur;
    std::variant<WeightTable<Rational>, WeightTable<Poly>> table;
};

struct vf_vector {
    FockVector<Rational> v;
};

struct vf_operator {
    OperatorSpec<Rational> op;
};

namespace {

thread_local std::string last_error;

struct ArgumentError : Error {
    using Error::Error;
};

template <class F>
vf_status guard(F&& f)
{
    try {
        f();
        last_error.clear();
        return VF_OK;
    } catch (const ParseError& e) {
        last_error = e.what();
        return VF_ERR_PARSE;
    } catch (const nlohmann::json::exception& e) {
        last_error = e.what();
        return VF_ERR_PARSE;
    } catch (const DomainError& e) {
        last_error = e.what();
        return VF_ERR_DOMAIN;
    } catch (const TruncationError& e) {
        last_error = e.what();
        return VF_ERR_TRUNCATION;
    } catch (const FalsifiedError& e) {
        last_error = e.what();
        return VF_ERR_FALSIFIED;
    } catch (const ArgumentError& e) {
        last_error = e.what();
        return VF_ERR_ARGUMENT;
    } catch (const std::exception& e) {
        last_error = e.what();
        return VF_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return VF_ERR_INTERNAL;
    }
}

void require(const void* p, const char* what)
{
    if (!p)
        throw ArgumentError(std::string(what) + " is null");
}

char* copy_out(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Rational parse_rational(const char* s, const char* what)
{
    require(s, what);
    return Rational::parse(s);
}

void check_degree(int max_degree)
{
    if (max_degree < 0)
        throw DomainError("max degree must be >= 0, got " + std::to_string(max_degree));
}

std::map<int, Poly> lift(const std::map<int, Rational>& m)
{
    std::map<int, Poly> out;
    for (const auto& [k, v] : m)
        out[k] = Poly(v);
    return out;
}

template <ScalarRing S>
std::string table_jsonl(const WeightTable<S>& t, MeasureKind kind)
{
    Json j = to_json(t, kind);
    std::string out;
    for (const auto& row : j["weights"])
        out += row.dump() + "\n";
    Json summary{{"kind", j["kind"]}, {"N", j["N"]}, {"ring", j["ring"]}, {"z_trunc", j["z_trunc"]},
                 {"count", j["weights"].size()}};
    out += Json{{"summary", summary}}.dump() + "\n";
    return out;
}

HookDirection hook_direction(char which)
{
    switch (which) {
    case 'U':
        return HookDirection::raise;
    case 'D':
        return HookDirection::lower;
    case 'L':
        return HookDirection::diagonal;
    }
    throw DomainError(std::string("operator must be 'U', 'L' or 'D', got '") + which + "'");
}

vf_status make_operator(vf_operator** out, OperatorSpec<Rational> op)
{
    return guard([&] {
        require(out, "out");
        *out = new vf_operator{op};
    });
}

} // namespace

extern "C" {

const char* vf_version(void)
{
    return "0.1.0";
}

const char* vf_status_name(vf_status status)
{
    switch (status) {
    case VF_OK:
        return "ok";
    case VF_ERR_PARSE:
        return "parse error";
    case VF_ERR_DOMAIN:
        return "domain error";
    case VF_ERR_TRUNCATION:
        return "truncation error";
    case VF_ERR_FALSIFIED:
        return "falsified";
    case VF_ERR_ARGUMENT:
        return "invalid argument";
    case VF_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char* vf_last_error(void)
{
    return last_error.c_str();
}

void vf_string_free(char* s)
{
    std::free(s);
}

vf_status vf_params_create(vf_params** out)
{
    return guard([&] {
        require(out, "out");
        *out = new vf_params();
    });
}

void vf_params_free(vf_params* p)
{
    delete p;
}

vf_status vf_params_set(vf_params* p, const char* key, const char* value)
{
    return guard([&] {
        require(p, "params");
        require(key, "key");
        std::string k = key;
        if (k == "M") {
            Rational m = parse_rational(value, "value");
            if (!m.is_integer() || m.sign() <= 0 || m > Rational(12))
                throw DomainError("M must be an integer in 1..12, got " + m.str());
            p->M = static_cast<int>(m.raw().get_num().get_si());
        } else if (k == "z") {
            p->z = parse_rational(value, "value");
        } else if (k == "w") {
            p->w = parse_rational(value, "value");
        } else if (k == "gamma") {
            p->gamma = parse_rational(value, "value");
        } else {
            throw DomainError("unknown parameter '" + k + "'");
        }
    });
}

vf_status vf_params_set_series(vf_params* p, const char* name, const char* index_map)
{
    return guard([&] {
        require(p, "params");
        require(name, "name");
        require(index_map, "index map");
        std::string n = name;
        if (n == "x")
            p->x = parse_index_map(index_map);
        else if (n == "y")
            p->y = parse_index_map(index_map);
        else
            throw DomainError("series must be 'x' or 'y', got '" + n + "'");
    });
}

vf_status vf_table_create(const char* kind, const vf_params* p, int max_degree, int poly_z, vf_table** out)
{
    return guard([&] {
        require(kind, "kind");
        require(p, "params");
        require(out, "out");
        check_degree(max_degree);
        MeasureKind k = parse_measure_kind(kind);
        auto t = std::make_unique<vf_table>();
        t->kind = k;
        if (poly_z) {
            MeasureSpec<Poly> spec{k, {lift(p->x), lift(p->y)}, {Poly::variable(), Poly(p->w)}, Poly(p->gamma), p->M,
                                   max_degree};
            t->table = weight_table(spec);
        } else {
            MeasureSpec<Rational> spec{k, {p->x, p->y}, {p->z, p->w}, p->gamma, p->M, max_degree};
            t->table = weight_table(spec);
        }
        *out = t.release();
    });
}

void vf_table_free(vf_table* t)
{
    delete t;
}

size_t vf_table_size(const vf_table* t)
{
    if (!t)
        return 0;
    return std::visit([](const auto& table) { return table.weights.size(); }, t->table);
}

vf_status vf_table_json(const vf_table* t, char** out)
{
    return guard([&] {
        require(t, "table");
        require(out, "out");
        *out = copy_out(std::visit([&](const auto& table) { return to_json(table, t->kind).dump(); }, t->table));
    });
}

vf_status vf_table_jsonl(const vf_table* t, char** out)
{
    return guard([&] {
        require(t, "table");
        require(out, "out");
        *out = copy_out(std::visit([&](const auto& table) { return table_jsonl(table, t->kind); }, t->table));
    });
}

vf_status vf_table_csv(const vf_table* t, char** out)
{
    return guard([&] {
        require(t, "table");
        require(out, "out");
        *out = copy_out(std::visit([](const auto& table) { return to_csv(table); }, t->table));
    });
}

vf_status vf_table_weight(const vf_table* t, const int* parts, size_t n, char** out)
{
    return guard([&] {
        require(t, "table");
        require(out, "out");
        if (n)
            require(parts, "parts");
        Partition lambda(std::vector<int>(parts, parts + n));
        *out = copy_out(std::visit([&](const auto& table) { return to_json(table.weight(lambda)).dump(); }, t->table));
    });
}

vf_status vf_correlation(const vf_table* t, const char* points_json, char** out)
{
    return guard([&] {
        require(t, "table");
        require(points_json, "points");
        require(out, "out");
        const auto* table = std::get_if<WeightTable<Rational>>(&t->table);
        if (!table)
            throw DomainError("correlations need a rational table");
        auto points = parse_points(points_json);
        Json pts = Json::array();
        for (HalfInt x : points)
            pts.push_back(to_json(x));
        Json j{{"points", pts}, {"correlation", correlation(points, *table).str()}};
        *out = copy_out(j.dump());
    });
}

vf_status vf_convert(const vf_params* p, int max_degree, int poly_z, char** out)
{
    return guard([&] {
        require(p, "params");
        require(out, "out");
        check_degree(max_degree);
        std::string text;
        int lines = 0;
        auto emit_side = [&](const char* side, const char* name, const std::map<int, Rational>& series,
                             const Rational& at, bool bra) {
            auto lin = bra ? w_linearity_witness(series, max_degree) : z_linearity_witness(series, max_degree);
            std::vector<Poly> sym;
            std::vector<Rational> num;
            if (poly_z)
                sym = bra ? y_side_params(lift(series), Poly::variable(), max_degree)
                          : schur_params_from_vir(lift(series), Poly::variable(), max_degree);
            else
                num = bra ? y_side_params(series, at, max_degree) : schur_params_from_vir(series, at, max_degree);
            for (int N = 1; N <= max_degree; ++N) {
                auto i = static_cast<std::size_t>(N - 1);
                Json j{{"side", side}, {"N", N}, {"A", lin[i].a.str()}, {"B", lin[i].b.str()}};
                j[name] = poly_z ? to_json(sym[i]) : to_json(num[i]);
                text += j.dump() + "\n";
                ++lines;
            }
        };
        emit_side("x", "X", p->x, p->z, false);
        if (!p->y.empty())
            emit_side("y", "Y", p->y, p->w, true);
        Json summary{{"command", "convert"},
                     {"N", max_degree},
                     {"ring", poly_z ? "poly-z" : "rational"},
                     {"lines", lines}};
        text += Json{{"summary", summary}}.dump() + "\n";
        *out = copy_out(text);
    });
}

vf_status vf_vector_basis(const int* parts, size_t n, int charge, vf_vector** out)
{
    return guard([&] {
        require(out, "out");
        if (n)
            require(parts, "parts");
        Partition lambda(std::vector<int>(parts, parts + n));
        *out = new vf_vector{FockVector<Rational>::basis(lambda, charge)};
    });
}

void vf_vector_free(vf_vector* v)
{
    delete v;
}

vf_status vf_vector_axpy(vf_vector* acc, const char* coeff, const vf_vector* v)
{
    return guard([&] {
        require(acc, "accumulator");
        require(v, "vector");
        acc->v += v->v * parse_rational(coeff, "coefficient");
    });
}

vf_status vf_vector_json(const vf_vector* v, char** out)
{
    return guard([&] {
        require(v, "vector");
        require(out, "out");
        *out = copy_out(to_json(v->v).dump());
    });
}

int vf_vector_equal(const vf_vector* a, const vf_vector* b)
{
    if (!a || !b)
        return 0;
    return a->v == b->v ? 1 : 0;
}

vf_status vf_operator_kerov(char which, const char* z, const char* w, vf_operator** out)
{
    return guard([&] {
        require(out, "out");
        KerovParams<Rational> p{parse_rational(z, "z"), parse_rational(w, "w")};
        HookDirection d = hook_direction(which);
        auto op = d == HookDirection::raise   ? OperatorSpec<Rational>::U(p)
                  : d == HookDirection::lower ? OperatorSpec<Rational>::D(p)
                                              : OperatorSpec<Rational>::L(p);
        *out = new vf_operator{op};
    });
}

vf_status vf_operator_rimhook(int r, char which, const char* z, const char* w, vf_operator** out)
{
    return guard([&] {
        require(out, "out");
        if (r < 1)
            throw DomainError("rim hook length must be positive");
        KerovParams<Rational> p{parse_rational(z, "z"), parse_rational(w, "w")};
        *out = new vf_operator{OperatorSpec<Rational>::rimhook(r, hook_direction(which), p)};
    });
}

vf_status vf_operator_virasoro(int k, const char* alpha, const char* gamma, vf_operator** out)
{
    return guard([&] {
        require(out, "out");
        VirasoroParams<Rational> p{parse_rational(alpha, "alpha"), parse_rational(gamma, "gamma")};
        *out = new vf_operator{OperatorSpec<Rational>::virasoro(k, p)};
    });
}

vf_status vf_operator_m_virasoro(int M, int k, const char* alpha, const char* gamma, vf_operator** out)
{
    return guard([&] {
        require(out, "out");
        if (M < 1)
            throw DomainError("M-Virasoro operators need M >= 1");
        VirasoroParams<Rational> p{parse_rational(alpha, "alpha"), parse_rational(gamma, "gamma")};
        *out = new vf_operator{OperatorSpec<Rational>::m_virasoro(M, k, p)};
    });
}

vf_status vf_operator_boson(int k, vf_operator** out)
{
    if (k == 0)
        return guard([] { throw DomainError("a_0 is a scalar; use vf_vector_axpy"); });
    return make_operator(out, OperatorSpec<Rational>::boson(k));
}

void vf_operator_free(vf_operator* op)
{
    delete op;
}

vf_status vf_operator_json(const vf_operator* op, char** out)
{
    return guard([&] {
        require(op, "operator");
        require(out, "out");
        *out = copy_out(to_json(op->op).dump());
    });
}

vf_status vf_apply(const vf_operator* op, const vf_vector* v, vf_vector** out)
{
    return guard([&] {
        require(op, "operator");
        require(v, "vector");
        require(out, "out");
        *out = new vf_vector{apply(op->op, v->v)};
    });
}

vf_status vf_commutator(const vf_operator* a, const vf_operator* b, const vf_vector* v, vf_vector** out)
{
    return guard([&] {
        require(a, "operator");
        require(b, "operator");
        require(v, "vector");
        require(out, "out");
        *out = new vf_vector{apply(a->op, apply(b->op, v->v)) - apply(b->op, apply(a->op, v->v))};
    });
}

size_t vf_suite_count(void)
{
    return suite_names().size();
}

const char* vf_suite_name(size_t i)
{
    const auto& names = suite_names();
    return i < names.size() ? names[i].c_str() : nullptr;
}

vf_status vf_verify(const char* suite, uint64_t seed, int max_degree, char** out, int* falsified)
{
    return guard([&] {
        require(suite, "suite");
        require(out, "out");
        SuiteResult r = run_suite(suite, seed, max_degree);
        std::string text;
        for (const auto& line : r.lines)
            text += line.dump() + "\n";
        *out = copy_out(text);
        if (falsified)
            *falsified = r.falsified;
    });
}

vf_status vf_decompose(const char* z, const char* w, int max_degree, char** out, int* ok)
{
    return guard([&] {
        require(out, "out");
        check_degree(max_degree);
        DecompositionReport r = decomposition_report(parse_rational(z, "z"), parse_rational(w, "w"), max_degree);
        *out = copy_out(to_json(r).dump() + "\n");
        if (ok)
            *ok = r.ok() ? 1 : 0;
    });
}

} // extern "C"
