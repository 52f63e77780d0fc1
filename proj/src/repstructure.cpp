#include "vfock/repstructure.hpp"

#include <map>

namespace vfock {

namespace {

int partition_count(int n)
{
    return n < 0 ? 0 : static_cast<int>(partitions_of(n).size());
}

} // namespace

template <ScalarRing S>
int degree_shift(const OperatorSpec<S>& op)
{
    switch (op.family) {
    case OperatorFamily::kerov_U:
        return 1;
    case OperatorFamily::kerov_D:
        return -1;
    case OperatorFamily::kerov_L:
        return 0;
    case OperatorFamily::rimhook:
        return op.direction == HookDirection::raise ? op.r : op.direction == HookDirection::lower ? -op.r : 0;
    case OperatorFamily::virasoro:
    case OperatorFamily::m_virasoro:
    case OperatorFamily::boson:
        return -op.index;
    }
    throw DomainError("unknown operator family");
}

template <ScalarRing S>
GradedMatrix<S> matrix_of(const OperatorSpec<S>& op, int N)
{
    if (N < 0)
        throw DomainError("negative degree " + std::to_string(N));
    GradedMatrix<S> m;
    m.from_degree = N;
    m.to_degree = N + degree_shift(op);
    m.cols = partitions_of(N);
    if (m.to_degree >= 0)
        m.rows = partitions_of(m.to_degree);
    std::map<MayaState, std::size_t> row_index;
    for (std::size_t i = 0; i < m.rows.size(); ++i)
        row_index.emplace(MayaState::from_partition(m.rows[i]), i);
    m.entries.assign(m.rows.size(), std::vector<S>(m.cols.size()));
    for (std::size_t j = 0; j < m.cols.size(); ++j) {
        FockVector<S> image = apply(op, FockVector<S>::basis(m.cols[j]));
        for (const auto& [state, c] : image.terms()) {
            auto it = row_index.find(state);
            if (it == row_index.end())
                throw DomainError(op.label() + " is not graded: image of " + m.cols[j].str() +
                                  " leaves degree " + std::to_string(m.to_degree));
            m.entries[it->second][j] = c;
        }
    }
    return m;
}

template <ScalarRing S>
int matrix_rank(std::vector<std::vector<S>> a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    S prev(Rational(1));
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = exact_div(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev);
            a[i][c] = S();
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

template <ScalarRing S>
int rank_of_D(int N, const S& w)
{
    return matrix_rank(matrix_of(OperatorSpec<S>::D({S(), w}), N).entries);
}

std::vector<FockVector<Rational>> kernel_basis(const OperatorSpec<Rational>& op, int N)
{
    GradedMatrix<Rational> m = matrix_of(op, N);
    auto a = m.entries;
    const std::size_t rows = a.size();
    const std::size_t cols = m.cols.size();

    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        Rational inv = Rational(1) / a[r][c];
        for (auto& x : a[r])
            x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero())
                continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }

    std::vector<FockVector<Rational>> basis;
    std::size_t next_pivot = 0;
    for (std::size_t f = 0; f < cols; ++f) {
        if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == f) {
            ++next_pivot;
            continue;
        }
        FockVector<Rational> v;
        v.add(MayaState::from_partition(m.cols[f]), Rational(1));
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            v.add(MayaState::from_partition(m.cols[pivot_cols[i]]), -a[i][f]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<HighestWeight> highest_weight_check(int N, const Rational& z, const Rational& w)
{
    const KerovParams<Rational> p{z, w};
    const Rational expected = z * w + Rational(2 * N);
    std::vector<HighestWeight> out;
    for (auto& v : kernel_basis(OperatorSpec<Rational>::D(p), N)) {
        if (!kerov_D(p, v).is_zero())
            throw FalsifiedError("kernel vector in degree " + std::to_string(N) + " is not killed by D");
        FockVector<Rational> lv = kerov_L(p, v);
        if (lv != v * expected)
            throw FalsifiedError("kernel vector in degree " + std::to_string(N) +
                                 " is not an L-eigenvector with eigenvalue " + expected.str());
        out.push_back({std::move(v), expected});
    }
    return out;
}

std::string to_string(KerovCase c)
{
    switch (c) {
    case KerovCase::both_nonzero:
        return "both-nonzero";
    case KerovCase::both_zero:
        return "both-zero";
    case KerovCase::z_zero:
        return "z-zero";
    case KerovCase::w_zero:
        return "w-zero";
    }
    return "?";
}

KerovCase classify(const Rational& z, const Rational& w)
{
    if (z.is_zero())
        return w.is_zero() ? KerovCase::both_zero : KerovCase::z_zero;
    return w.is_zero() ? KerovCase::w_zero : KerovCase::both_nonzero;
}

bool DecompositionReport::ok() const
{
    for (const auto& r : relations)
        if (!r.holds)
            return false;
    for (const auto& d : degrees)
        if (!d.ok)
            return false;
    return true;
}

DecompositionReport decomposition_report(const Rational& z, const Rational& w, int N_max)
{
    using V = FockVector<Rational>;
    const KerovParams<Rational> p{z, w};
    DecompositionReport report;
    report.z = z;
    report.w = w;
    report.kerov_case = classify(z, w);

    const V vac = V::vacuum();
    const V box = V::basis(Partition{1});
    const V u_vac = kerov_U(p, vac);
    const V d_box = kerov_D(p, box);
    const V d_vac = kerov_D(p, vac);
    const V l_vac = kerov_L(p, vac);
    const V l_box = kerov_L(p, box);
    auto add = [&](std::string name, bool holds, std::string detail = {}) {
        report.relations.push_back({std::move(name), holds, std::move(detail)});
    };

    add("D|0> = 0", d_vac.is_zero());
    switch (report.kerov_case) {
    case KerovCase::both_nonzero:
        add("U|0> = z|1> != 0", u_vac == box * z && !u_vac.is_zero(), "|1> lies in the module generated by |0>");
        add("D|1> = w|0> != 0", d_box == vac * w && !d_box.is_zero());
        add("L|0> = zw|0>", l_vac == vac * (z * w), "|0> is a highest-weight vector of weight zw");
        break;
    case KerovCase::both_zero:
        add("U|0> = 0", u_vac.is_zero());
        add("L|0> = 0", l_vac.is_zero(), "|0> spans a one-dimensional invariant line");
        add("D|1> = 0", d_box.is_zero());
        add("L|1> = 2|1>", l_box == box * Rational(2), "|1> is a highest-weight vector of weight 2");
        break;
    case KerovCase::z_zero:
        add("U|0> = 0", u_vac.is_zero());
        add("D|1> = w|0>", d_box == vac * w, "the relation holds with the scalar w, not 1");
        break;
    case KerovCase::w_zero:
        add("U|0> = z|1>", u_vac == box * z, "the relation holds with the scalar z, not 1");
        add("D|1> = 0", d_box.is_zero());
        break;
    }

    for (int N = 0; N <= N_max; ++N) {
        DegreeData d;
        d.N = N;
        d.dimension = partition_count(N);
        d.rank_D = matrix_rank(matrix_of(OperatorSpec<Rational>::D(p), N).entries);
        d.rank_U = matrix_rank(matrix_of(OperatorSpec<Rational>::U(p), N).entries);
        d.verma_multiplicity = d.dimension - partition_count(N - 1);
        bool eigen_ok = true;
        try {
            for (const auto& hw : highest_weight_check(N, z, w))
                d.eigenvalues.push_back(hw.eigenvalue);
        } catch (const FalsifiedError&) {
            eigen_ok = false;
        }
        d.kernel_dim = static_cast<int>(kernel_basis(OperatorSpec<Rational>::D(p), N).size());
        d.ok = eigen_ok && d.rank_D + d.kernel_dim == d.dimension &&
               static_cast<int>(d.eigenvalues.size()) == d.kernel_dim;
        // Above degree 1 the kernel of D has the Verma multiplicity and U is injective.
        if (N >= 2)
            d.ok = d.ok && d.kernel_dim == d.verma_multiplicity;
        if (N >= 1)
            d.ok = d.ok && d.rank_U == d.dimension;
        report.degrees.push_back(std::move(d));
    }
    return report;
}

#define VFOCK_INSTANTIATE(S)                                                \
    template int degree_shift<S>(const OperatorSpec<S>&);                   \
    template GradedMatrix<S> matrix_of<S>(const OperatorSpec<S>&, int);     \
    template int matrix_rank<S>(std::vector<std::vector<S>>);               \
    template int rank_of_D<S>(int, const S&);

VFOCK_INSTANTIATE(Rational)
VFOCK_INSTANTIATE(Poly)

#undef VFOCK_INSTANTIATE

} // namespace vfock
