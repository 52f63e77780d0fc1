#pragma once

// Operator families acting on the wedge space: Kerov sl2 triple, rim-hook
// Kerov operators, modified Virasoro generators built from Heisenberg bosons,
// their M-fold generalization, truncated exponentials of raising operators,
// and a commutator test harness.
//
// Conventions fixed here and used everywhere downstream:
//  * Virasoro parameters are (alpha, gamma) where alpha is the a_0
//    eigenvalue and gamma stands for i*beta, so the central charge
//    1 + 12 beta^2 reads 1 - 12 gamma^2.
//  * L_0 = (alpha^2 - gamma^2)/2 + sum_{j>0} a_{-j} a_j.
//  * L_{-k} moves one particle k steps right with coefficient
//    (alpha - gamma*k) + start + k/2, start being the particle's coordinate
//    before the jump; L_k moves one particle k steps left with coefficient
//    (alpha + gamma*k) + end + k/2. Hence the Kerov triple (U, L, D) with
//    parameters (z, w) is (L_{-1}, 2 L_0, L_1) at alpha = (z + w)/2,
//    gamma = (w - z)/2.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "vfock/fock.hpp"

namespace vfock {

template <ScalarRing S>
struct KerovParams {
    S z;
    S w;
};

template <ScalarRing S>
struct VirasoroParams {
    S alpha;
    S gamma;
};

// Virasoro parameters equivalent to the Kerov triple with parameters (z, w).
template <ScalarRing S>
VirasoroParams<S> virasoro_params_for_kerov(const KerovParams<S>& p)
{
    return {(p.z + p.w) / Rational(2), (p.w - p.z) / Rational(2)};
}

// Virasoro parameters realizing the r-rim-hook Kerov operators: L_{-r} = r U_r,
// L_r = r D_r.
template <ScalarRing S>
VirasoroParams<S> virasoro_params_for_rimhook(int r, const KerovParams<S>& p)
{
    return {(p.z + p.w) * S(Rational(r, 2)), (p.w - p.z) / Rational(2)};
}

template <ScalarRing S>
FockVector<S> kerov_U(const KerovParams<S>& p, const FockVector<S>& v);
template <ScalarRing S>
FockVector<S> kerov_L(const KerovParams<S>& p, const FockVector<S>& v);
template <ScalarRing S>
FockVector<S> kerov_D(const KerovParams<S>& p, const FockVector<S>& v);

enum class HookDirection { raise, lower, diagonal };

// Operators induced on the wedge by u_r v_x = (z + x/r + 1/2) v_{x+r},
// d_r v_x = (w + x/r - 1/2) v_{x-r}. The diagonal operator is the induced
// l_r v_x = (z + w + 2x/r) v_x summed over the finite deviation from the
// vacuum, shifted by the constant <0|D_r U_r|0> so that [D_r, U_r] = L_r.
template <ScalarRing S>
FockVector<S> rimhook_kerov(int r, HookDirection dir, const KerovParams<S>& p, const FockVector<S>& v);

// Modified Virasoro generator L_k(alpha, gamma). Requires trunc >= degree(v) + |k|.
template <ScalarRing S>
FockVector<S> virasoro(int k, const VirasoroParams<S>& p, const FockVector<S>& v, int trunc);

// symmetric: weight 1/M! per ordered tuple, i.e. 1/|Stab| per multiset.
// once_per_multiset: weight 1 per multiset, i.e. |Stab|/M! per ordered tuple.
enum class TupleWeight { symmetric, once_per_multiset };

// M-fold generator gamma*k*a_k + sum over M-tuples with sum k of
// :a_{k_1} ... a_{k_M}:, a_0 contributing alpha, weighted as above. With the
// symmetric weight and M = 2 this is virasoro(k) for k != 0.
template <ScalarRing S>
FockVector<S> m_virasoro(int M, int k, const VirasoroParams<S>& p, const FockVector<S>& v, int trunc,
                         TupleWeight weight = TupleWeight::symmetric);

// A family of operators indexed by a signed mode number; index -k raises the
// degree by k, index k lowers it by k.
template <ScalarRing S>
using Family = std::function<FockVector<S>(int index, const FockVector<S>&)>;

template <ScalarRing S>
Family<S> boson_family();
template <ScalarRing S>
Family<S> virasoro_family(const VirasoroParams<S>& p);
template <ScalarRing S>
Family<S> m_virasoro_family(int M, const VirasoroParams<S>& p);

// sum_m (1/m!) (sum_k x_k Op_{-k})^m v, keeping degrees <= max_degree. Every
// key of `terms` must be >= 1.
template <ScalarRing S>
FockVector<S> exp_raising(const std::map<int, S>& terms, const Family<S>& family, const FockVector<S>& v,
                          int max_degree);

// <0| exp(sum_k y_k Op_k) |lambda>, evaluated by applying the lowering
// operators to |lambda> and reading off the vacuum coefficient.
template <ScalarRing S>
S exp_lowering_bra(const std::map<int, S>& terms, const Family<S>& family, const Partition& lambda, int max_degree);

enum class OperatorFamily { kerov_U, kerov_L, kerov_D, rimhook, virasoro, m_virasoro, boson };

template <ScalarRing S>
struct OperatorSpec {
    OperatorFamily family = OperatorFamily::boson;
    int index = 0;                       // mode number for virasoro / m_virasoro / boson
    int r = 1;                           // rim-hook length
    HookDirection direction = HookDirection::raise;
    int M = 2;
    KerovParams<S> kerov{};
    VirasoroParams<S> vir{};             // vir.alpha doubles as the a_0 eigenvalue for boson(0)

    static OperatorSpec U(const KerovParams<S>& p) { return {OperatorFamily::kerov_U, 0, 1, HookDirection::raise, 2, p, {}}; }
    static OperatorSpec L(const KerovParams<S>& p) { return {OperatorFamily::kerov_L, 0, 1, HookDirection::diagonal, 2, p, {}}; }
    static OperatorSpec D(const KerovParams<S>& p) { return {OperatorFamily::kerov_D, 0, 1, HookDirection::lower, 2, p, {}}; }
    static OperatorSpec rimhook(int r, HookDirection d, const KerovParams<S>& p) { return {OperatorFamily::rimhook, 0, r, d, 2, p, {}}; }
    static OperatorSpec virasoro(int k, const VirasoroParams<S>& p) { return {OperatorFamily::virasoro, k, 1, HookDirection::raise, 2, {}, p}; }
    static OperatorSpec m_virasoro(int M, int k, const VirasoroParams<S>& p) { return {OperatorFamily::m_virasoro, k, 1, HookDirection::raise, M, {}, p}; }
    static OperatorSpec boson(int k, const S& alpha = S()) { return {OperatorFamily::boson, k, 1, HookDirection::raise, 2, {}, {alpha, S()}}; }

    std::string label() const;
};

// Applies the operator with the smallest truncation that is exact for v.
template <ScalarRing S>
FockVector<S> apply(const OperatorSpec<S>& op, const FockVector<S>& v);

template <ScalarRing S>
struct LinearCombination {
    std::vector<std::pair<S, OperatorSpec<S>>> terms;
    S identity;
};

template <ScalarRing S>
struct Discrepancy {
    MayaState basis;
    FockVector<S> delta;
};

template <ScalarRing S>
struct CommutatorReport {
    OperatorSpec<S> lhs;
    OperatorSpec<S> rhs;
    int degree = 0;
    int charge = 0;
    std::size_t checked = 0;
    std::vector<Discrepancy<S>> discrepancies;

    bool ok() const { return discrepancies.empty(); }
};

// Evaluates [A, B] v - expected v on every basis state of the given charge
// with degree <= degree.
template <ScalarRing S>
CommutatorReport<S> commutator_check(const OperatorSpec<S>& a, const OperatorSpec<S>& b,
                                     const LinearCombination<S>& expected, int degree, int charge = 0);

} // namespace vfock
