#include "vfock/operators.hpp"

#include <cstdlib>

namespace vfock {

namespace {

template <ScalarRing S>
FockVector<S> a(int k, const FockVector<S>& v)
{
    return boson(k, v, v.degree() + std::abs(k));
}

template <ScalarRing S>
S half_int(HalfInt x)
{
    return S(Rational(x.doubled(), 2));
}

void check_trunc(const char* what, int k, int degree, int trunc)
{
    if (trunc < degree + std::abs(k))
        throw TruncationError(std::string(what) + " with index " + std::to_string(k) + " needs truncation >= " +
                              std::to_string(degree + std::abs(k)) + ", got " + std::to_string(trunc));
}

template <ScalarRing S>
FockVector<S> box_moves(const FockVector<S>& v, bool addition, const S& param)
{
    return apply_linear(v, v.charge(), [&](const MayaState& s) {
        FockVector<S> out(s.charge());
        Partition lambda = s.partition();
        auto boxes = addition ? addable_boxes(lambda) : removable_boxes(lambda);
        for (const Box& b : boxes) {
            Partition mu = addition ? add_box(lambda, b) : remove_box(lambda, b);
            out.add(MayaState::from_partition(mu, s.charge()), param + S(Rational(b.content())));
        }
        return out;
    });
}

} // namespace

template <ScalarRing S>
FockVector<S> kerov_U(const KerovParams<S>& p, const FockVector<S>& v)
{
    return box_moves(v, true, p.z);
}

template <ScalarRing S>
FockVector<S> kerov_D(const KerovParams<S>& p, const FockVector<S>& v)
{
    return box_moves(v, false, p.w);
}

template <ScalarRing S>
FockVector<S> kerov_L(const KerovParams<S>& p, const FockVector<S>& v)
{
    return apply_linear(v, v.charge(), [&](const MayaState& s) {
        return FockVector<S>::basis(s, p.z * p.w + S(Rational(2 * s.degree())));
    });
}

template <ScalarRing S>
FockVector<S> rimhook_kerov(int r, HookDirection dir, const KerovParams<S>& p, const FockVector<S>& v)
{
    if (r < 1)
        throw DomainError("rim hook length must be positive");
    const S half(Rational(1, 2));
    const Rational inv_r(1, r);
    if (dir == HookDirection::diagonal) {
        // Finite part of sum_x l_r(x) over particles, relative to the vacuum.
        FockVector<S> vac = FockVector<S>::vacuum();
        S constant = rimhook_kerov(r, HookDirection::lower, p,
                                   rimhook_kerov(r, HookDirection::raise, p, vac)).coeff(MayaState());
        auto l = [&](int doubled) { return p.z + p.w + S(Rational(doubled, r)); };
        return apply_linear(v, v.charge(), [&](const MayaState& s) {
            S c = constant;
            for (int d : s.above())
                c = c + l(d);
            for (int d : s.below())
                c = c - l(d);
            return FockVector<S>::basis(s, c);
        });
    }
    bool raise = dir == HookDirection::raise;
    return apply_linear(v, v.charge(), [&](const MayaState& s) {
        FockVector<S> out(s.charge());
        for (const auto& j : single_jumps(s, raise ? r : -r)) {
            S x = half_int<S>(j.from) * S(inv_r);
            S c = raise ? p.z + x + half : p.w + x - half;
            out.add(j.result, c * S(Rational(j.sign)));
        }
        return out;
    });
}

template <ScalarRing S>
FockVector<S> virasoro(int k, const VirasoroParams<S>& p, const FockVector<S>& v, int trunc)
{
    if (v.is_zero())
        return FockVector<S>(v.charge());
    const int deg = v.degree();
    check_trunc("virasoro", k, deg, trunc);
    const S half(Rational(1, 2));

    FockVector<S> out(v.charge());
    if (k == 0)
        out = v * ((p.alpha * p.alpha - p.gamma * p.gamma) * half);
    else
        out = a(k, v) * (p.gamma * S(Rational(k)) + p.alpha);

    // a_p v for every annihilator that can act.
    std::vector<FockVector<S>> lowered(static_cast<std::size_t>(deg + 1));
    for (int q = 1; q <= deg; ++q)
        lowered[static_cast<std::size_t>(q)] = a(q, v);

    // Unordered pairs {j, k - j} with j, k - j nonzero; distinct pairs carry
    // weight 1, a repeated index weight 1/2.
    for (int q = std::max(1, k + 1); q <= deg; ++q) {
        const auto& lv = lowered[static_cast<std::size_t>(q)];
        if (!lv.is_zero())
            out += a(k - q, lv);
    }
    if (k > 0) {
        for (int j = 1; 2 * j <= k; ++j) {
            int i = k - j;
            if (i > deg)
                continue;
            const auto& lv = lowered[static_cast<std::size_t>(i)];
            if (lv.is_zero())
                continue;
            FockVector<S> term = a(j, lv);
            out += j == i ? term * half : term;
        }
    } else if (k < 0) {
        for (int j = -1; 2 * j >= k; --j) {
            int i = k - j;
            FockVector<S> term = a(j, a(i, v));
            out += j == i ? term * half : term;
        }
    }
    return out;
}

template <ScalarRing S>
FockVector<S> m_virasoro(int M, int k, const VirasoroParams<S>& p, const FockVector<S>& v, int trunc,
                         TupleWeight weight)
{
    if (M < 1)
        throw DomainError("M-Virasoro operators need M >= 1");
    if (v.is_zero())
        return FockVector<S>(v.charge());
    const int deg = v.degree();
    check_trunc("m_virasoro", k, deg, trunc);

    FockVector<S> out(v.charge());
    if (k != 0)
        out = a(k, v) * (p.gamma * S(Rational(k)));

    // A tuple containing an annihilator index above trunc kills every vector
    // of degree <= trunc, and the creators then total at most trunc + |k|.
    const int bound = trunc + std::abs(k);
    std::map<std::vector<int>, FockVector<S>> annihilated;
    std::vector<int> tuple;

    // Non-increasing tuples enumerate multisets; under the symmetric weight
    // each stands for |orbit| ordered tuples of weight 1/M!, i.e. 1/|Stab|.
    auto visit = [&](const std::vector<int>& t) {
        std::vector<int> positives;
        int zeros = 0;
        std::vector<int> negatives;
        for (int x : t) {
            if (x > 0)
                positives.push_back(x);
            else if (x == 0)
                ++zeros;
            else
                negatives.push_back(x);
        }
        auto it = annihilated.find(positives);
        if (it == annihilated.end()) {
            FockVector<S> w = v;
            for (int q : positives)
                w = a(q, w);
            it = annihilated.emplace(positives, std::move(w)).first;
        }
        if (it->second.is_zero())
            return;
        FockVector<S> w = it->second;
        for (int q : negatives)
            w = a(q, w);
        Rational stab(1);
        for (std::size_t i = 0; weight == TupleWeight::symmetric && i < t.size();) {
            std::size_t j = i;
            while (j < t.size() && t[j] == t[i])
                ++j;
            stab *= factorial(static_cast<unsigned>(j - i));
            i = j;
        }
        out += w * (scalar_pow(p.alpha, static_cast<unsigned>(zeros)) / stab);
    };

    auto extend = [&](auto&& self, int slots, int remaining, int cap, int positive_sum) -> void {
        if (slots == 0) {
            if (remaining == 0)
                visit(tuple);
            return;
        }
        for (int x = cap; x >= -bound; --x) {
            // The remaining slots can only lower the sum further.
            if (x * slots < remaining)
                break;
            if (remaining - x < -bound * (slots - 1))
                continue;
            int ps = positive_sum + std::max(x, 0);
            if (ps > deg)
                continue;
            tuple.push_back(x);
            self(self, slots - 1, remaining - x, x, ps);
            tuple.pop_back();
        }
    };
    extend(extend, M, k, std::min(bound, deg), 0);
    return out;
}

template <ScalarRing S>
Family<S> boson_family()
{
    return [](int index, const FockVector<S>& v) { return a(index, v); };
}

template <ScalarRing S>
Family<S> virasoro_family(const VirasoroParams<S>& p)
{
    return [p](int index, const FockVector<S>& v) {
        return virasoro(index, p, v, v.degree() + std::abs(index));
    };
}

template <ScalarRing S>
Family<S> m_virasoro_family(int M, const VirasoroParams<S>& p)
{
    return [M, p](int index, const FockVector<S>& v) {
        return m_virasoro(M, index, p, v, v.degree() + std::abs(index));
    };
}

template <ScalarRing S>
FockVector<S> exp_raising(const std::map<int, S>& terms, const Family<S>& family, const FockVector<S>& v,
                          int max_degree)
{
    for (const auto& [k, x] : terms)
        if (k < 1)
            throw DomainError("exp_raising needs raising operators (index -k with k >= 1), got k = " +
                              std::to_string(k));
    FockVector<S> result = v.truncated(max_degree);
    FockVector<S> term = result;
    for (int m = 1; !term.is_zero(); ++m) {
        FockVector<S> next(term.charge());
        for (const auto& [k, x] : terms) {
            if (x.is_zero())
                continue;
            FockVector<S> step = family(-k, term.truncated(max_degree - k));
            if (!step.is_zero() && step.min_degree() < term.min_degree() + k)
                throw DomainError("operator family does not raise degree at index " + std::to_string(-k));
            next += step * x;
        }
        term = next.truncated(max_degree) * S(Rational(1, m));
        result += term;
    }
    return result;
}

template <ScalarRing S>
S exp_lowering_bra(const std::map<int, S>& terms, const Family<S>& family, const Partition& lambda, int max_degree)
{
    if (lambda.size() > max_degree)
        throw DomainError("partition " + lambda.str() + " exceeds the degree bound " + std::to_string(max_degree));
    for (const auto& [k, y] : terms)
        if (k < 1)
            throw DomainError("exp_lowering_bra needs lowering operators (index k >= 1), got k = " +
                              std::to_string(k));
    FockVector<S> term = FockVector<S>::basis(lambda);
    S result = term.coeff(MayaState());
    for (int m = 1; !term.is_zero(); ++m) {
        FockVector<S> next(term.charge());
        for (const auto& [k, y] : terms) {
            if (y.is_zero())
                continue;
            FockVector<S> step = family(k, term);
            if (!step.is_zero() && step.degree() > term.degree() - k)
                throw DomainError("operator family does not lower degree at index " + std::to_string(k));
            next += step * y;
        }
        term = next * S(Rational(1, m));
        result = result + term.coeff(MayaState());
    }
    return result;
}

template <ScalarRing S>
std::string OperatorSpec<S>::label() const
{
    auto kp = [this] { return "z=" + scalar_str(kerov.z) + ",w=" + scalar_str(kerov.w); };
    auto vp = [this] { return "alpha=" + scalar_str(vir.alpha) + ",gamma=" + scalar_str(vir.gamma); };
    switch (family) {
    case OperatorFamily::kerov_U:
        return "U(" + kp() + ")";
    case OperatorFamily::kerov_L:
        return "L(" + kp() + ")";
    case OperatorFamily::kerov_D:
        return "D(" + kp() + ")";
    case OperatorFamily::rimhook: {
        const char* d = direction == HookDirection::raise ? "U" : direction == HookDirection::lower ? "D" : "L";
        return std::string(d) + "_" + std::to_string(r) + "(" + kp() + ")";
    }
    case OperatorFamily::virasoro:
        return "L_" + std::to_string(index) + "(" + vp() + ")";
    case OperatorFamily::m_virasoro:
        return "L^(" + std::to_string(M) + ")_" + std::to_string(index) + "(" + vp() + ")";
    case OperatorFamily::boson:
        return index == 0 ? "a_0(alpha=" + scalar_str(vir.alpha) + ")" : "a_" + std::to_string(index);
    }
    return "?";
}

template <ScalarRing S>
FockVector<S> apply(const OperatorSpec<S>& op, const FockVector<S>& v)
{
    int trunc = v.degree() + std::abs(op.index);
    switch (op.family) {
    case OperatorFamily::kerov_U:
        return kerov_U(op.kerov, v);
    case OperatorFamily::kerov_L:
        return kerov_L(op.kerov, v);
    case OperatorFamily::kerov_D:
        return kerov_D(op.kerov, v);
    case OperatorFamily::rimhook:
        return rimhook_kerov(op.r, op.direction, op.kerov, v);
    case OperatorFamily::virasoro:
        return virasoro(op.index, op.vir, v, trunc);
    case OperatorFamily::m_virasoro:
        return m_virasoro(op.M, op.index, op.vir, v, trunc);
    case OperatorFamily::boson:
        return op.index == 0 ? boson_zero_eigenvalue(op.vir.alpha, v) : boson(op.index, v, trunc);
    }
    throw DomainError("unknown operator family");
}

template <ScalarRing S>
CommutatorReport<S> commutator_check(const OperatorSpec<S>& a_op, const OperatorSpec<S>& b_op,
                                     const LinearCombination<S>& expected, int degree, int charge)
{
    CommutatorReport<S> report{a_op, b_op, degree, charge, 0, {}};
    for (const MayaState& s : basis_states(degree, charge)) {
        FockVector<S> v = FockVector<S>::basis(s);
        FockVector<S> delta = apply(a_op, apply(b_op, v)) - apply(b_op, apply(a_op, v));
        for (const auto& [c, op] : expected.terms)
            delta -= apply(op, v) * c;
        delta -= v * expected.identity;
        ++report.checked;
        if (!delta.is_zero())
            report.discrepancies.push_back({s, std::move(delta)});
    }
    return report;
}

#define VFOCK_INSTANTIATE(S)                                                                                   \
    template FockVector<S> kerov_U<S>(const KerovParams<S>&, const FockVector<S>&);                            \
    template FockVector<S> kerov_L<S>(const KerovParams<S>&, const FockVector<S>&);                            \
    template FockVector<S> kerov_D<S>(const KerovParams<S>&, const FockVector<S>&);                            \
    template FockVector<S> rimhook_kerov<S>(int, HookDirection, const KerovParams<S>&, const FockVector<S>&);  \
    template FockVector<S> virasoro<S>(int, const VirasoroParams<S>&, const FockVector<S>&, int);              \
    template FockVector<S> m_virasoro<S>(int, int, const VirasoroParams<S>&, const FockVector<S>&, int,        \
                                         TupleWeight);                                                         \
    template Family<S> boson_family<S>();                                                                      \
    template Family<S> virasoro_family<S>(const VirasoroParams<S>&);                                           \
    template Family<S> m_virasoro_family<S>(int, const VirasoroParams<S>&);                                    \
    template FockVector<S> exp_raising<S>(const std::map<int, S>&, const Family<S>&, const FockVector<S>&, int); \
    template S exp_lowering_bra<S>(const std::map<int, S>&, const Family<S>&, const Partition&, int);          \
    template struct OperatorSpec<S>;                                                                           \
    template FockVector<S> apply<S>(const OperatorSpec<S>&, const FockVector<S>&);                             \
    template CommutatorReport<S> commutator_check<S>(const OperatorSpec<S>&, const OperatorSpec<S>&,           \
                                                     const LinearCombination<S>&, int, int);

VFOCK_INSTANTIATE(Rational)
VFOCK_INSTANTIATE(Poly)

#undef VFOCK_INSTANTIATE

} // namespace vfock
