#include "vfock/measures.hpp"

#include <bit>
#include <cstdlib>

namespace vfock {

std::string to_string(MeasureKind kind)
{
    switch (kind) {
    case MeasureKind::schur:
        return "schur";
    case MeasureKind::virasoro:
        return "virasoro";
    case MeasureKind::m_virasoro:
        return "m-virasoro";
    }
    return "?";
}

MeasureKind parse_measure_kind(std::string_view text)
{
    if (text == "schur")
        return MeasureKind::schur;
    if (text == "virasoro")
        return MeasureKind::virasoro;
    if (text == "m-virasoro")
        return MeasureKind::m_virasoro;
    throw ParseError("unknown measure kind '" + std::string(text) + "' (schur | virasoro | m-virasoro)");
}

template <ScalarRing S>
S WeightTable<S>::weight(const Partition& lambda) const
{
    for (const auto& [mu, w] : weights)
        if (mu == lambda)
            return w;
    if (lambda.size() > N)
        throw DomainError("partition " + lambda.str() + " lies beyond the table's degree bound");
    return S();
}

template <ScalarRing S>
std::vector<S> complete_homogeneous(const std::map<int, S>& x, int N)
{
    std::vector<S> h(static_cast<std::size_t>(std::max(N, 0) + 1));
    h[0] = S(Rational(1));
    for (int n = 1; n <= N; ++n) {
        S acc;
        for (const auto& [k, xk] : x)
            if (k >= 1 && k <= n)
                acc = acc + S(Rational(k)) * xk * h[static_cast<std::size_t>(n - k)];
        h[static_cast<std::size_t>(n)] = acc / Rational(n);
    }
    return h;
}

template <ScalarRing S>
S determinant(const std::vector<std::vector<S>>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return S(Rational(1));
    if (n > 20)
        throw DomainError("determinant too large for Laplace expansion");
    // minor[mask] = determinant of the rows n - popcount(mask) .. n-1 restricted to columns in mask.
    std::vector<std::optional<S>> memo(std::size_t(1) << n);
    auto minor = [&](auto&& self, unsigned mask) -> S {
        if (mask == 0)
            return S(Rational(1));
        auto& slot = memo[mask];
        if (slot)
            return *slot;
        std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
        S acc;
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (1u << c)))
                continue;
            const S& e = m[row][c];
            if (!e.is_zero()) {
                S sub = self(self, mask & ~(1u << c));
                acc = sign > 0 ? acc + e * sub : acc - e * sub;
            }
            sign = -sign;
        }
        slot = acc;
        return acc;
    };
    return minor(minor, (1u << n) - 1);
}

template <ScalarRing S>
S jacobi_trudi(const Partition& lambda, const std::vector<S>& h)
{
    const int n = lambda.length();
    if (lambda.size() >= static_cast<int>(h.size()))
        throw DomainError("h-sequence too short for " + lambda.str());
    std::vector<std::vector<S>> m(static_cast<std::size_t>(n), std::vector<S>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int idx = lambda.part(static_cast<std::size_t>(i)) - i + j;
            if (idx >= 0)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = h[static_cast<std::size_t>(idx)];
        }
    return determinant(m);
}

template <ScalarRing S>
S schur_polynomial(const Partition& lambda, const std::map<int, S>& x)
{
    return jacobi_trudi(lambda, complete_homogeneous(x, lambda.size()));
}

template <ScalarRing S>
S schur_weight(const Partition& lambda, const MiwaParams<S>& p)
{
    return schur_polynomial(lambda, p.x) * schur_polynomial(lambda, p.y);
}

namespace {

template <ScalarRing S>
void check_truncation(const MeasureSpec<S>& spec)
{
    if (spec.N < 0)
        throw DomainError("degree bound must be nonnegative");
    for (const auto* m : {&spec.params.x, &spec.params.y})
        for (const auto& [k, v] : *m)
            if (k < 1)
                throw DomainError("Miwa parameter index must be >= 1, got " + std::to_string(k));
}

template <ScalarRing S>
WeightTable<S> assemble(int N, const std::map<Partition, S>& ket, const std::map<Partition, S>& bra)
{
    WeightTable<S> t;
    t.N = N;
    for (const auto& lambda : partitions_up_to(N)) {
        auto a = ket.find(lambda);
        auto b = bra.find(lambda);
        S w = a == ket.end() || b == bra.end() ? S() : a->second * b->second;
        t.z_trunc = t.z_trunc + w;
        t.weights.emplace_back(lambda, w);
    }
    return t;
}

template <ScalarRing S>
WeightTable<S> family_table(const MeasureSpec<S>& spec, const Family<S>& up, const Family<S>& down)
{
    check_truncation(spec);
    return assemble(spec.N, ket_factors(spec.params.x, up, spec.N), bra_factors(spec.params.y, down, spec.N));
}

} // namespace

template <ScalarRing S>
std::map<Partition, S> ket_factors(const std::map<int, S>& x, const Family<S>& family, int N)
{
    FockVector<S> e = exp_raising(x, family, FockVector<S>::vacuum(), N);
    std::map<Partition, S> out;
    for (const auto& [s, c] : e.terms())
        out.emplace(s.partition(), c);
    return out;
}

template <ScalarRing S>
std::map<Partition, S> bra_factors(const std::map<int, S>& y, const Family<S>& family, int N)
{
    std::map<Partition, S> out;
    for (const auto& lambda : partitions_up_to(N)) {
        S b = exp_lowering_bra(y, family, lambda, N);
        if (!b.is_zero())
            out.emplace(lambda, b);
    }
    return out;
}

template <ScalarRing S>
WeightTable<S> schur_weight_table(const MeasureSpec<S>& spec)
{
    check_truncation(spec);
    auto hx = complete_homogeneous(spec.params.x, spec.N);
    auto hy = complete_homogeneous(spec.params.y, spec.N);
    std::map<Partition, S> ket, bra;
    for (const auto& lambda : partitions_up_to(spec.N)) {
        ket.emplace(lambda, jacobi_trudi(lambda, hx));
        bra.emplace(lambda, jacobi_trudi(lambda, hy));
    }
    return assemble(spec.N, ket, bra);
}

template <ScalarRing S>
WeightTable<S> virasoro_weight_table(const MeasureSpec<S>& spec)
{
    if (spec.kind != MeasureKind::virasoro)
        throw DomainError("virasoro_weight_table needs a virasoro spec");
    return family_table(spec, virasoro_family<S>({spec.kerov.z, spec.gamma}),
                        virasoro_family<S>({spec.kerov.w, spec.gamma}));
}

template <ScalarRing S>
WeightTable<S> m_virasoro_weight_table(const MeasureSpec<S>& spec)
{
    if (spec.kind != MeasureKind::m_virasoro)
        throw DomainError("m_virasoro_weight_table needs an m-virasoro spec");
    return family_table(spec, m_virasoro_family<S>(spec.M, {spec.kerov.z, spec.gamma}),
                        m_virasoro_family<S>(spec.M, {spec.kerov.w, spec.gamma}));
}

template <ScalarRing S>
WeightTable<S> weight_table(const MeasureSpec<S>& spec)
{
    switch (spec.kind) {
    case MeasureKind::schur:
        return schur_weight_table(spec);
    case MeasureKind::virasoro:
        return virasoro_weight_table(spec);
    case MeasureKind::m_virasoro:
        return m_virasoro_weight_table(spec);
    }
    throw DomainError("unknown measure kind");
}

template <ScalarRing S>
S cauchy_normalizer(const MiwaParams<S>& p, int N)
{
    std::map<int, S> q;
    for (const auto& [k, xk] : p.x) {
        auto it = p.y.find(k);
        if (it != p.y.end())
            q[k] = S(Rational(k)) * xk * it->second;
    }
    S total;
    for (const S& e : complete_homogeneous(q, N))
        total = total + e;
    return total;
}

Rational correlation(const std::set<HalfInt>& points, const WeightTable<Rational>& table)
{
    if (table.z_trunc.is_zero())
        throw DomainError("table normalizer vanishes");
    Rational acc;
    for (const auto& [lambda, w] : table.weights) {
        auto state = MayaState::from_partition(lambda);
        bool all = true;
        for (HalfInt x : points)
            if (!state.occupied(x)) {
                all = false;
                break;
            }
        if (all)
            acc += w;
    }
    return acc / table.z_trunc;
}

#define VFOCK_INSTANTIATE(S)                                                                       \
    template struct WeightTable<S>;                                                                \
    template std::vector<S> complete_homogeneous<S>(const std::map<int, S>&, int);                 \
    template S determinant<S>(const std::vector<std::vector<S>>&);                                 \
    template S jacobi_trudi<S>(const Partition&, const std::vector<S>&);                           \
    template S schur_polynomial<S>(const Partition&, const std::map<int, S>&);                     \
    template S schur_weight<S>(const Partition&, const MiwaParams<S>&);                            \
    template WeightTable<S> schur_weight_table<S>(const MeasureSpec<S>&);                          \
    template WeightTable<S> virasoro_weight_table<S>(const MeasureSpec<S>&);                       \
    template WeightTable<S> m_virasoro_weight_table<S>(const MeasureSpec<S>&);                     \
    template WeightTable<S> weight_table<S>(const MeasureSpec<S>&);                                \
    template std::map<Partition, S> ket_factors<S>(const std::map<int, S>&, const Family<S>&, int); \
    template std::map<Partition, S> bra_factors<S>(const std::map<int, S>&, const Family<S>&, int); \
    template S cauchy_normalizer<S>(const MiwaParams<S>&, int);

VFOCK_INSTANTIATE(Rational)
VFOCK_INSTANTIATE(Poly)

#undef VFOCK_INSTANTIATE

} // namespace vfock
