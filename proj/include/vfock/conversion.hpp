#pragma once

// Single-row Virasoro coefficients as sums over particle trajectories, and
// their conversion into Schur parameters: the Virasoro ket factors equal
// s_lambda(X) where h_N(X) reproduces the single-row values.

#include <map>
#include <vector>

#include "vfock/measures.hpp"

namespace vfock {

struct JumpComposition {
    std::vector<int> jumps;
    HalfInt start = HalfInt::from_doubled(-1);

    int total() const;
};

// All compositions of n (ordered sequences of positive integers), in
// lexicographic order.
std::vector<std::vector<int>> compositions_of(int n);

template <ScalarRing S>
struct LinearInZ {
    S a; // coefficient of z
    S b; // constant term
};

// prod_t (z + p_{t-1} + j_t/2) with p_0 = start and p_t = p_{t-1} + j_t.
template <ScalarRing S>
S path_polynomial(const JumpComposition& c, const S& z);

// Sum over compositions (j_1..j_R) of N of prod_t x_{j_t} * path_polynomial / R!.
template <ScalarRing S>
S vir_row(int N, const std::map<int, S>& x, const S& z);

// X_1..X_{N_max} with h_N(X) = rows[N-1], solved one index at a time.
template <ScalarRing S>
std::vector<S> invert_rows(const std::vector<S>& rows);

template <ScalarRing S>
std::vector<S> schur_params_from_vir(const std::map<int, S>& x, const S& z, int N_max);

// Runs the inversion over the polynomial ring in z and splits each X_N into
// A_N z + B_N. Throws FalsifiedError naming N if some X_N has z-degree > 1.
std::vector<LinearInZ<Rational>> z_linearity_witness(const std::map<int, Rational>& x, int N_max);

// sum over compositions (k_1..k_R) of N of prod x_{k_t} / R! * k_2 (k_2 + k_3) ... (k_2 + ... + k_R).
template <ScalarRing S>
S a_coeff_closed(int N, const std::map<int, S>& x);

// Literal printed form: sum over compositions (l_1..l_n) of N of
// (-1)^(n-1) * N!/(l_1!...l_n!) * v_{l_1}...v_{l_n} / n, v_l = vir_row(l) at z = 0.
template <ScalarRing S>
S b_coeff_closed(int N, const std::map<int, S>& x);

// Same sum without the multinomial: the coefficient of u^N in
// log(1 + sum_l v_l u^l).
template <ScalarRing S>
S b_coeff_log_series(int N, const std::map<int, S>& x);

// Bra-side rows <0| exp(sum y_k L_k) |(N)> with lowering coefficients
// (w + end + k/2), and their Schur parameters.
template <ScalarRing S>
std::vector<S> bra_rows(const std::map<int, S>& y, const S& w, int N_max);
template <ScalarRing S>
std::vector<S> y_side_params(const std::map<int, S>& y, const S& w, int N_max);
std::vector<LinearInZ<Rational>> w_linearity_witness(const std::map<int, Rational>& y, int N_max);

} // namespace vfock
