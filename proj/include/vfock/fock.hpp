#pragma once

// Semi-infinite wedge space. A basis vector is a Maya state: a configuration
// of particles on Z + 1/2 that agrees with the charge-0 vacuum (particles
// exactly at the negative half-integers) away from a finite set. Vectors are
// finitely supported linear combinations over a ScalarRing.

#include <algorithm>
#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "vfock/errors.hpp"
#include "vfock/partitions.hpp"
#include "vfock/scalar.hpp"

namespace vfock {

class MayaState {
public:
    // Charge-0 vacuum.
    MayaState() = default;
    static MayaState from_partition(const Partition& lambda, int charge = 0);

    // Occupied positive positions and vacated negative positions, doubled and ascending.
    const std::vector<int>& above() const { return above_; }
    const std::vector<int>& below() const { return below_; }

    int charge() const { return static_cast<int>(above_.size()) - static_cast<int>(below_.size()); }
    // Size of the partition labelling this state within its charge sector.
    int degree() const;
    Partition partition() const;

    bool occupied(HalfInt x) const;
    // Number of particles strictly to the right of x.
    int particles_above(HalfInt x) const;
    // Number of particles strictly between a and b (either order).
    int particles_between(HalfInt a, HalfInt b) const;

    // Lowest vacant and highest occupied positions.
    HalfInt lowest_hole() const;
    HalfInt highest_particle() const;

    MayaState with_particle(HalfInt x) const;
    MayaState without_particle(HalfInt x) const;

    friend auto operator<=>(const MayaState&, const MayaState&) = default;

private:
    std::vector<int> above_;
    std::vector<int> below_;
};

template <ScalarRing S>
class FockVector {
public:
    using Map = std::map<MayaState, S>;

    FockVector() = default;
    explicit FockVector(int charge) : charge_(charge) {}

    static FockVector basis(const MayaState& state, const S& coeff = S(Rational(1)))
    {
        FockVector v(state.charge());
        v.add(state, coeff);
        return v;
    }
    static FockVector basis(const Partition& lambda, int charge = 0)
    {
        return basis(MayaState::from_partition(lambda, charge));
    }
    static FockVector vacuum() { return basis(MayaState()); }

    int charge() const { return charge_; }
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    S coeff(const MayaState& state) const
    {
        auto it = terms_.find(state);
        return it == terms_.end() ? S() : it->second;
    }
    S coeff(const Partition& lambda) const { return coeff(MayaState::from_partition(lambda, charge_)); }

    void add(const MayaState& state, const S& c)
    {
        if (state.charge() != charge_) {
            if (!terms_.empty())
                throw DomainError("mixing charge sectors in one vector");
            charge_ = state.charge();
        }
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(state, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    // Largest / smallest degree among stored states; -1 for the zero vector.
    int degree() const
    {
        int d = -1;
        for (const auto& [s, c] : terms_)
            d = std::max(d, s.degree());
        return d;
    }
    int min_degree() const
    {
        int d = -1;
        for (const auto& [s, c] : terms_)
            d = d < 0 ? s.degree() : std::min(d, s.degree());
        return d;
    }

    FockVector truncated(int max_degree) const
    {
        FockVector out(charge_);
        for (const auto& [s, c] : terms_)
            if (s.degree() <= max_degree)
                out.terms_.emplace(s, c);
        return out;
    }

    // Terms ordered by degree, then by partition in reverse lexicographic order.
    std::vector<std::pair<MayaState, S>> sorted_terms() const
    {
        std::vector<std::pair<MayaState, S>> out(terms_.begin(), terms_.end());
        std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            int da = a.first.degree();
            int db = b.first.degree();
            if (da != db)
                return da < db;
            return a.first.partition() > b.first.partition();
        });
        return out;
    }

    template <class F>
    auto map_coeffs(F&& f) const
    {
        using T = std::decay_t<decltype(f(std::declval<const S&>()))>;
        FockVector<T> out(charge_);
        for (const auto& [s, c] : terms_)
            out.add(s, f(c));
        return out;
    }

    FockVector& operator+=(const FockVector& o)
    {
        if (o.charge_ != charge_ && !o.is_zero()) {
            if (!is_zero())
                throw DomainError("adding vectors from different charge sectors");
            charge_ = o.charge_;
        }
        for (const auto& [s, c] : o.terms_)
            add(s, c);
        return *this;
    }
    FockVector& operator-=(const FockVector& o)
    {
        return *this += o * S(Rational(-1));
    }
    FockVector& operator*=(const S& c)
    {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second = it->second * c;
            if (it->second.is_zero())
                it = terms_.erase(it);
            else
                ++it;
        }
        return *this;
    }

    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(FockVector a, const S& c) { return a *= c; }
    friend FockVector operator*(const S& c, FockVector a) { return a *= c; }
    friend bool operator==(const FockVector& a, const FockVector& b)
    {
        if (a.is_zero() && b.is_zero())
            return true;
        return a.charge_ == b.charge_ && a.terms_ == b.terms_;
    }

private:
    int charge_ = 0;
    Map terms_;
};

// <u|v> for the basis in which Maya states are orthonormal. Throws on a charge mismatch.
template <ScalarRing S>
S inner(const FockVector<S>& u, const FockVector<S>& v);

// Creation of a particle at x, with sign (-1)^(particles right of x).
template <ScalarRing S>
FockVector<S> psi(HalfInt x, const FockVector<S>& v);

// Annihilation at x; the adjoint of psi.
template <ScalarRing S>
FockVector<S> psi_star(HalfInt x, const FockVector<S>& v);

// Heisenberg generator a_k = sum_x psi_{x-k} psi*_x for k != 0. Requires
// trunc >= degree(v) + |k|.
template <ScalarRing S>
FockVector<S> boson(int k, const FockVector<S>& v, int trunc);

// a_0 is central and acts by the scalar alpha.
template <ScalarRing S>
FockVector<S> boson_zero_eigenvalue(const S& alpha, const FockVector<S>& v)
{
    return v * alpha;
}

// Apply `f(state) -> FockVector` to every basis component and recombine.
template <ScalarRing S, class F>
FockVector<S> apply_linear(const FockVector<S>& v, int out_charge, F&& f)
{
    FockVector<S> out(out_charge);
    for (const auto& [state, c] : v.terms())
        out += f(state) * c;
    return out;
}

// All basis states of the given charge with degree <= max_degree.
std::vector<MayaState> basis_states(int max_degree, int charge = 0);

// Particle jumps of a single state by `shift` (positive: rightward), with the
// wedge sign. Used by every single-jump operator.
struct Jump {
    HalfInt from;
    HalfInt to;
    MayaState result;
    int sign = 1;
};
std::vector<Jump> single_jumps(const MayaState& state, int shift);

} // namespace vfock
