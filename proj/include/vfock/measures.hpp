#pragma once

// Unnormalized weights of Schur, Virasoro and M-Virasoro measures on
// partitions of bounded size, and brute-force correlation functions of the
// induced point process on Z + 1/2.
//
// Miwa coordinates throughout: the complete homogeneous functions are the
// coefficients of exp(sum_k x_k t^k), so p_k = k x_k.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vfock/operators.hpp"

namespace vfock {

template <ScalarRing S>
struct MiwaParams {
    std::map<int, S> x;
    std::map<int, S> y;
};

enum class MeasureKind { schur, virasoro, m_virasoro };

std::string to_string(MeasureKind kind);
MeasureKind parse_measure_kind(std::string_view text);

// Virasoro-type measures use the raising family with alpha = z on the ket
// side and the lowering family with alpha = w on the bra side, both with the
// shared gamma (zero by default). At gamma = 0 the ket generators act by
// (z + start + k/2) and the bra generators by (w + end + k/2).
template <ScalarRing S>
struct MeasureSpec {
    MeasureKind kind = MeasureKind::schur;
    MiwaParams<S> params;
    KerovParams<S> kerov{};
    S gamma{};
    int M = 2;
    int N = 0;
};

template <ScalarRing S>
struct WeightTable {
    int N = 0;
    // Sizes 0..N, each size in reverse lexicographic order.
    std::vector<std::pair<Partition, S>> weights;
    S z_trunc;

    S weight(const Partition& lambda) const;
};

// h_0..h_N for exp(sum_k x_k t^k), via n h_n = sum_k k x_k h_{n-k}.
template <ScalarRing S>
std::vector<S> complete_homogeneous(const std::map<int, S>& x, int N);

// Division-free determinant (Laplace expansion with memoized minors).
template <ScalarRing S>
S determinant(const std::vector<std::vector<S>>& m);

// det[h_{lambda_i - i + j}] from a precomputed h-sequence covering |lambda|.
template <ScalarRing S>
S jacobi_trudi(const Partition& lambda, const std::vector<S>& h);

template <ScalarRing S>
S schur_polynomial(const Partition& lambda, const std::map<int, S>& x);

template <ScalarRing S>
S schur_weight(const Partition& lambda, const MiwaParams<S>& p);

template <ScalarRing S>
WeightTable<S> schur_weight_table(const MeasureSpec<S>& spec);
template <ScalarRing S>
WeightTable<S> virasoro_weight_table(const MeasureSpec<S>& spec);
template <ScalarRing S>
WeightTable<S> m_virasoro_weight_table(const MeasureSpec<S>& spec);
// Dispatches on spec.kind.
template <ScalarRing S>
WeightTable<S> weight_table(const MeasureSpec<S>& spec);

// <lambda| exp(sum x_k L_{-k}) |0> and <0| exp(sum y_k L_k) |lambda> for all
// |lambda| <= N, as used by the Virasoro-type tables.
template <ScalarRing S>
std::map<Partition, S> ket_factors(const std::map<int, S>& x, const Family<S>& family, int N);
template <ScalarRing S>
std::map<Partition, S> bra_factors(const std::map<int, S>& y, const Family<S>& family, int N);

// exp(sum_k k x_k y_k) expanded to total degree N.
template <ScalarRing S>
S cauchy_normalizer(const MiwaParams<S>& p, int N);

// Probability under the truncated normalized table that every point is a
// particle of Conf(lambda). Throws DomainError if z_trunc vanishes.
Rational correlation(const std::set<HalfInt>& points, const WeightTable<Rational>& table);

} // namespace vfock
