#include "vfock/conversion.hpp"

#include <numeric>

namespace vfock {

int JumpComposition::total() const
{
    return std::accumulate(jumps.begin(), jumps.end(), 0);
}

std::vector<std::vector<int>> compositions_of(int n)
{
    std::vector<std::vector<int>> out;
    if (n < 0)
        return out;
    std::vector<int> current;
    auto extend = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int j = 1; j <= remaining; ++j) {
            current.push_back(j);
            self(self, remaining - j);
            current.pop_back();
        }
    };
    extend(extend, n);
    return out;
}

template <ScalarRing S>
S path_polynomial(const JumpComposition& c, const S& z)
{
    S out(Rational(1));
    int pos = c.start.doubled();
    for (int j : c.jumps) {
        if (j < 1)
            throw DomainError("jumps must be positive");
        out = out * (z + S(Rational(pos + j, 2)));
        pos += 2 * j;
    }
    return out;
}

namespace {

template <ScalarRing S>
S x_at(const std::map<int, S>& x, int k)
{
    auto it = x.find(k);
    return it == x.end() ? S() : it->second;
}

template <ScalarRing S>
S monomial(const std::map<int, S>& x, const std::vector<int>& ks)
{
    S m(Rational(1));
    for (int k : ks) {
        m = m * x_at(x, k);
        if (m.is_zero())
            break;
    }
    return m;
}

// Splits a polynomial of degree <= 1 in its variable; `n` names the index.
LinearInZ<Rational> split_linear(const Poly& p, int n)
{
    if (p.degree() > 1)
        throw FalsifiedError("X_" + std::to_string(n) + " has degree " + std::to_string(p.degree()) +
                             " in the parameter: " + p.str());
    return {p.coeff(1), p.coeff(0)};
}

std::map<int, Poly> lift(const std::map<int, Rational>& x)
{
    std::map<int, Poly> out;
    for (const auto& [k, v] : x)
        out.emplace(k, Poly(v));
    return out;
}

} // namespace

template <ScalarRing S>
S vir_row(int N, const std::map<int, S>& x, const S& z)
{
    S acc;
    for (const auto& ks : compositions_of(N)) {
        S m = monomial(x, ks);
        if (m.is_zero())
            continue;
        acc = acc + m * path_polynomial<S>({ks}, z) / factorial(static_cast<unsigned>(ks.size()));
    }
    return acc;
}

template <ScalarRing S>
std::vector<S> invert_rows(const std::vector<S>& rows)
{
    std::vector<S> X;
    std::map<int, S> partial;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        int n = static_cast<int>(i) + 1;
        // h_n is X_n plus terms in X_1..X_{n-1} only.
        S rest = complete_homogeneous(partial, n)[static_cast<std::size_t>(n)];
        S xn = rows[i] - rest;
        X.push_back(xn);
        partial[n] = xn;
    }
    return X;
}

template <ScalarRing S>
std::vector<S> schur_params_from_vir(const std::map<int, S>& x, const S& z, int N_max)
{
    std::vector<S> rows;
    for (int n = 1; n <= N_max; ++n)
        rows.push_back(vir_row(n, x, z));
    return invert_rows(rows);
}

std::vector<LinearInZ<Rational>> z_linearity_witness(const std::map<int, Rational>& x, int N_max)
{
    auto X = schur_params_from_vir(lift(x), Poly::variable(), N_max);
    std::vector<LinearInZ<Rational>> out;
    for (std::size_t i = 0; i < X.size(); ++i)
        out.push_back(split_linear(X[i], static_cast<int>(i) + 1));
    return out;
}

template <ScalarRing S>
S a_coeff_closed(int N, const std::map<int, S>& x)
{
    S acc;
    for (const auto& ks : compositions_of(N)) {
        S m = monomial(x, ks);
        if (m.is_zero())
            continue;
        long weight = 1;
        long partial = 0;
        for (std::size_t t = 1; t < ks.size(); ++t) {
            partial += ks[t];
            weight *= partial;
        }
        acc = acc + m * S(Rational(weight)) / factorial(static_cast<unsigned>(ks.size()));
    }
    return acc;
}

namespace {

template <ScalarRing S>
S b_series(int N, const std::map<int, S>& x, bool multinomial)
{
    std::vector<S> v(static_cast<std::size_t>(N + 1));
    for (int l = 1; l <= N; ++l)
        v[static_cast<std::size_t>(l)] = vir_row(l, x, S());
    S acc;
    for (const auto& ls : compositions_of(N)) {
        S m(Rational(1));
        Rational coeff(1);
        for (int l : ls) {
            m = m * v[static_cast<std::size_t>(l)];
            coeff /= factorial(static_cast<unsigned>(l));
        }
        if (m.is_zero())
            continue;
        auto n = static_cast<long>(ls.size());
        Rational c = multinomial ? coeff * factorial(static_cast<unsigned>(N)) : Rational(1);
        c /= Rational(n);
        if (n % 2 == 0)
            c = -c;
        acc = acc + m * S(c);
    }
    return acc;
}

} // namespace

template <ScalarRing S>
S b_coeff_closed(int N, const std::map<int, S>& x)
{
    return b_series(N, x, true);
}

template <ScalarRing S>
S b_coeff_log_series(int N, const std::map<int, S>& x)
{
    return b_series(N, x, false);
}

template <ScalarRing S>
std::vector<S> bra_rows(const std::map<int, S>& y, const S& w, int N_max)
{
    auto family = virasoro_family<S>({w, S()});
    std::vector<S> rows;
    for (int n = 1; n <= N_max; ++n)
        rows.push_back(exp_lowering_bra(y, family, Partition{n}, n));
    return rows;
}

template <ScalarRing S>
std::vector<S> y_side_params(const std::map<int, S>& y, const S& w, int N_max)
{
    return invert_rows(bra_rows(y, w, N_max));
}

std::vector<LinearInZ<Rational>> w_linearity_witness(const std::map<int, Rational>& y, int N_max)
{
    auto Y = y_side_params(lift(y), Poly::variable(), N_max);
    std::vector<LinearInZ<Rational>> out;
    for (std::size_t i = 0; i < Y.size(); ++i)
        out.push_back(split_linear(Y[i], static_cast<int>(i) + 1));
    return out;
}

#define VFOCK_INSTANTIATE(S)                                                            \
    template S path_polynomial<S>(const JumpComposition&, const S&);                    \
    template S vir_row<S>(int, const std::map<int, S>&, const S&);                      \
    template std::vector<S> invert_rows<S>(const std::vector<S>&);                      \
    template std::vector<S> schur_params_from_vir<S>(const std::map<int, S>&, const S&, int); \
    template S a_coeff_closed<S>(int, const std::map<int, S>&);                         \
    template S b_coeff_closed<S>(int, const std::map<int, S>&);                         \
    template S b_coeff_log_series<S>(int, const std::map<int, S>&);                     \
    template std::vector<S> bra_rows<S>(const std::map<int, S>&, const S&, int);        \
    template std::vector<S> y_side_params<S>(const std::map<int, S>&, const S&, int);

VFOCK_INSTANTIATE(Rational)
VFOCK_INSTANTIATE(Poly)

#undef VFOCK_INSTANTIATE

} // namespace vfock
