#include "vfock/serialize.hpp"

#include <charconv>

namespace vfock {

Json to_json(HalfInt x)
{
    return x.str();
}

Json to_json(const Partition& lambda)
{
    Json a = Json::array();
    for (int p : lambda.parts())
        a.push_back(p);
    return a;
}

Json to_json(const Rational& q)
{
    return q.str();
}

Json to_json(const Poly& p)
{
    Json c = Json::array();
    for (const auto& q : p.coeffs())
        c.push_back(q.str());
    return Json{{"poly", c}};
}

template <ScalarRing S>
Json to_json(const FockVector<S>& v)
{
    Json terms = Json::array();
    for (const auto& [state, c] : v.sorted_terms())
        terms.push_back(Json{{"partition", to_json(state.partition())}, {"coeff", to_json(c)}});
    return Json{{"charge", v.charge()}, {"terms", terms}};
}

template <ScalarRing S>
Json to_json(const OperatorSpec<S>& op)
{
    static const char* names[] = {"U", "L", "D", "rimhook", "virasoro", "m-virasoro", "boson"};
    Json j{{"family", names[static_cast<int>(op.family)]}, {"label", op.label()}};
    switch (op.family) {
    case OperatorFamily::rimhook:
        j["r"] = op.r;
        [[fallthrough]];
    case OperatorFamily::kerov_U:
    case OperatorFamily::kerov_L:
    case OperatorFamily::kerov_D:
        j["z"] = to_json(op.kerov.z);
        j["w"] = to_json(op.kerov.w);
        break;
    case OperatorFamily::m_virasoro:
        j["M"] = op.M;
        [[fallthrough]];
    case OperatorFamily::virasoro:
        j["index"] = op.index;
        j["alpha"] = to_json(op.vir.alpha);
        j["gamma"] = to_json(op.vir.gamma);
        break;
    case OperatorFamily::boson:
        j["index"] = op.index;
        break;
    }
    return j;
}

template <ScalarRing S>
Json to_json(const CommutatorReport<S>& r)
{
    Json d = Json::array();
    for (const auto& x : r.discrepancies)
        d.push_back(Json{{"basis", to_json(x.basis.partition())}, {"delta", to_json(x.delta)}});
    return Json{{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)},         {"degree", r.degree},
                {"charge", r.charge},    {"checked", r.checked},          {"discrepancies", d}};
}

namespace {

template <ScalarRing S>
Json normalized(const S& w, const S& z)
{
    if constexpr (std::is_same_v<S, Rational>) {
        if (z.is_zero())
            return nullptr;
        return to_json(w / z);
    } else {
        return nullptr;
    }
}

std::string csv_cell(const Json& j)
{
    if (j.is_null())
        return "";
    if (j.is_string())
        return j.get<std::string>();
    std::string quoted = "\"";
    for (char c : j.dump()) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

} // namespace

template <ScalarRing S>
Json to_json(const WeightTable<S>& t, MeasureKind kind)
{
    Json w = Json::array();
    for (const auto& [lambda, wt] : t.weights)
        w.push_back(Json{{"partition", to_json(lambda)}, {"weight", to_json(wt)}, {"normalized", normalized(wt, t.z_trunc)}});
    return Json{{"kind", to_string(kind)}, {"N", t.N},          {"ring", ring_name<S>::value},
                {"z_trunc", to_json(t.z_trunc)}, {"weights", w}};
}

template <ScalarRing S>
std::string to_csv(const WeightTable<S>& t)
{
    std::string out = "partition,weight,normalized_weight\n";
    for (const auto& [lambda, wt] : t.weights) {
        out += csv_cell(to_json(lambda)) + ",";
        out += csv_cell(to_json(wt)) + ",";
        out += csv_cell(normalized(wt, t.z_trunc)) + "\n";
    }
    return out;
}

Json to_json(const DecompositionReport& r)
{
    Json rel = Json::array();
    for (const auto& x : r.relations) {
        Json j{{"relation", x.name}, {"holds", x.holds}};
        if (!x.detail.empty())
            j["note"] = x.detail;
        rel.push_back(j);
    }
    Json deg = Json::array();
    for (const auto& d : r.degrees) {
        Json ev = Json::array();
        for (const auto& e : d.eigenvalues)
            ev.push_back(e.str());
        deg.push_back(Json{{"N", d.N},
                           {"dimension", d.dimension},
                           {"rank_D", d.rank_D},
                           {"kernel_dim", d.kernel_dim},
                           {"verma_multiplicity", d.verma_multiplicity},
                           {"rank_U", d.rank_U},
                           {"eigenvalues", ev},
                           {"ok", d.ok}});
    }
    return Json{{"z", r.z.str()},   {"w", r.w.str()}, {"case", to_string(r.kerov_case)},
                {"relations", rel}, {"degrees", deg}, {"ok", r.ok()}};
}

std::map<int, Rational> parse_index_map(std::string_view text)
{
    std::map<int, Rational> out;
    if (text.empty())
        return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        std::size_t eq = item.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("expected k=p/q, got '" + std::string(item) + "'");
        std::string_view key = item.substr(0, eq);
        int k = 0;
        auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), k);
        if (ec != std::errc() || ptr != key.data() + key.size() || k < 1)
            throw ParseError("index must be a positive integer, got '" + std::string(key) + "'");
        if (!out.emplace(k, Rational::parse(item.substr(eq + 1))).second)
            throw ParseError("index " + std::to_string(k) + " given twice");
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

std::set<HalfInt> parse_points(std::string_view json_text)
{
    Json j = Json::parse(json_text, nullptr, false);
    if (j.is_discarded() || !j.is_array())
        throw ParseError("points must be a JSON array of \"p/2\" strings");
    std::set<HalfInt> out;
    for (const auto& e : j) {
        if (!e.is_string())
            throw ParseError("points must be a JSON array of \"p/2\" strings");
        out.insert(HalfInt::parse(e.get<std::string>()));
    }
    return out;
}

#define VFOCK_INSTANTIATE(S)                                          \
    template Json to_json<S>(const FockVector<S>&);                   \
    template Json to_json<S>(const OperatorSpec<S>&);                 \
    template Json to_json<S>(const CommutatorReport<S>&);             \
    template Json to_json<S>(const WeightTable<S>&, MeasureKind);     \
    template std::string to_csv<S>(const WeightTable<S>&);

VFOCK_INSTANTIATE(Rational)
VFOCK_INSTANTIATE(Poly)

#undef VFOCK_INSTANTIATE

} // namespace vfock
