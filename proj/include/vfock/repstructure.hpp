#pragma once

// Graded matrices of the Kerov operators, exact ranks and kernels, and the
// structure of the Kerov sl2 representation: highest-weight vectors in each
// degree and the relations among |0> and |1> that distinguish the four
// parameter cases z, w = 0 / != 0.

#include <string>
#include <vector>

#include "vfock/operators.hpp"

namespace vfock {

template <ScalarRing S>
struct GradedMatrix {
    int from_degree = 0;
    int to_degree = 0;
    std::vector<Partition> rows; // basis of the target degree, reverse lexicographic
    std::vector<Partition> cols; // basis of the source degree
    std::vector<std::vector<S>> entries;

    const S& at(std::size_t row, std::size_t col) const { return entries[row][col]; }
};

// Degree shift of a graded operator: target degree = N + degree_shift(op).
template <ScalarRing S>
int degree_shift(const OperatorSpec<S>& op);

// Matrix of op restricted to the charge-0 component of degree N. Throws
// DomainError if some image leaves the expected graded component.
template <ScalarRing S>
GradedMatrix<S> matrix_of(const OperatorSpec<S>& op, int N);

// Fraction-free (Bareiss) elimination. Over Poly this is the generic rank.
template <ScalarRing S>
int matrix_rank(std::vector<std::vector<S>> m);

template <ScalarRing S>
int rank_of_D(int N, const S& w);

// Exact nullspace basis, one vector per free column of the reduced echelon form.
std::vector<FockVector<Rational>> kernel_basis(const OperatorSpec<Rational>& op, int N);

struct HighestWeight {
    FockVector<Rational> vector;
    Rational eigenvalue;
};

// Basis of ker D in degree N with their L-eigenvalues. Throws FalsifiedError
// if some basis vector is not annihilated by D or is not an L-eigenvector
// with eigenvalue zw + 2N.
std::vector<HighestWeight> highest_weight_check(int N, const Rational& z, const Rational& w);

enum class KerovCase { both_nonzero, both_zero, z_zero, w_zero };

std::string to_string(KerovCase c);
KerovCase classify(const Rational& z, const Rational& w);

struct Relation {
    std::string name;     // e.g. "D|1> = w|0>"
    bool holds = false;
    std::string detail;
};

struct DegreeData {
    int N = 0;
    int dimension = 0;          // p(N)
    int rank_D = 0;
    int kernel_dim = 0;
    int verma_multiplicity = 0; // p(N) - p(N-1)
    int rank_U = 0;             // U from degree N to N+1
    std::vector<Rational> eigenvalues;
    bool ok = false;
};

struct DecompositionReport {
    Rational z;
    Rational w;
    KerovCase kerov_case = KerovCase::both_nonzero;
    std::vector<Relation> relations;
    std::vector<DegreeData> degrees;

    bool ok() const;
};

DecompositionReport decomposition_report(const Rational& z, const Rational& w, int N_max);

} // namespace vfock
