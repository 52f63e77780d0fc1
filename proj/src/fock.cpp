#include "vfock/fock.hpp"

#include <cstdlib>

namespace vfock {

MayaState MayaState::from_partition(const Partition& lambda, int charge)
{
    int count = lambda.length() + std::abs(charge) + 1;
    std::vector<int> occupied;
    occupied.reserve(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i)
        occupied.push_back(2 * lambda.part(static_cast<std::size_t>(i - 1)) - 2 * i + 1 + 2 * charge);
    // Every position below occupied.back() is filled.
    MayaState s;
    for (auto it = occupied.rbegin(); it != occupied.rend(); ++it)
        if (*it > 0)
            s.above_.push_back(*it);
    for (int d = occupied.back() + 2; d < 0; d += 2)
        if (!std::binary_search(occupied.begin(), occupied.end(), d, std::greater<>()))
            s.below_.push_back(d);
    return s;
}

int MayaState::degree() const
{
    long sum = 0;
    for (int d : above_)
        sum += d;
    for (int d : below_)
        sum -= d;
    long c = charge();
    return static_cast<int>((sum - c * c) / 2);
}

Partition MayaState::partition() const
{
    int c = charge();
    int deepest_hole = below_.empty() ? 1 : below_.front();
    std::vector<int> parts;
    int i = 0;
    auto visit = [&](int d) {
        ++i;
        int part = (d + 2 * i - 1 - 2 * c) / 2;
        if (part > 0)
            parts.push_back(part);
        return part;
    };
    for (auto it = above_.rbegin(); it != above_.rend(); ++it)
        visit(*it);
    for (int d = -1;; d -= 2) {
        if (std::binary_search(below_.begin(), below_.end(), d))
            continue;
        int part = visit(d);
        if (part == 0 && d < deepest_hole)
            break;
    }
    return Partition(std::move(parts));
}

bool MayaState::occupied(HalfInt x) const
{
    int d = x.doubled();
    if (d > 0)
        return std::binary_search(above_.begin(), above_.end(), d);
    return !std::binary_search(below_.begin(), below_.end(), d);
}

int MayaState::particles_above(HalfInt x) const
{
    int d = x.doubled();
    if (d > 0)
        return static_cast<int>(above_.end() - std::upper_bound(above_.begin(), above_.end(), d));
    // Negative half-integers strictly between x and 0, minus the holes among them.
    int negatives = (-d - 1) / 2;
    int holes = static_cast<int>(below_.end() - std::upper_bound(below_.begin(), below_.end(), d));
    return static_cast<int>(above_.size()) + negatives - holes;
}

int MayaState::particles_between(HalfInt a, HalfInt b) const
{
    HalfInt lo = std::min(a, b);
    HalfInt hi = std::max(a, b);
    if (lo == hi)
        return 0;
    return particles_above(lo) - particles_above(hi) - (occupied(hi) ? 1 : 0);
}

HalfInt MayaState::lowest_hole() const
{
    if (!below_.empty())
        return HalfInt::from_doubled(below_.front());
    int d = 1;
    for (int a : above_) {
        if (a != d)
            break;
        d += 2;
    }
    return HalfInt::from_doubled(d);
}

HalfInt MayaState::highest_particle() const
{
    if (!above_.empty())
        return HalfInt::from_doubled(above_.back());
    int d = -1;
    for (auto it = below_.rbegin(); it != below_.rend(); ++it) {
        if (*it != d)
            break;
        d -= 2;
    }
    return HalfInt::from_doubled(d);
}

MayaState MayaState::with_particle(HalfInt x) const
{
    if (occupied(x))
        throw DomainError("position " + x.str() + " already occupied");
    MayaState s = *this;
    int d = x.doubled();
    if (d > 0)
        s.above_.insert(std::upper_bound(s.above_.begin(), s.above_.end(), d), d);
    else
        s.below_.erase(std::lower_bound(s.below_.begin(), s.below_.end(), d));
    return s;
}

MayaState MayaState::without_particle(HalfInt x) const
{
    if (!occupied(x))
        throw DomainError("position " + x.str() + " is empty");
    MayaState s = *this;
    int d = x.doubled();
    if (d > 0)
        s.above_.erase(std::lower_bound(s.above_.begin(), s.above_.end(), d));
    else
        s.below_.insert(std::upper_bound(s.below_.begin(), s.below_.end(), d), d);
    return s;
}

std::vector<Jump> single_jumps(const MayaState& state, int shift)
{
    std::vector<Jump> out;
    if (shift == 0)
        return out;
    int reach = 2 * std::abs(shift);
    int lo = std::min(state.lowest_hole().doubled(), -1) - reach;
    int hi = std::max(state.highest_particle().doubled(), 1) + reach;
    for (int d = hi; d >= lo; d -= 2) {
        HalfInt from = HalfInt::from_doubled(d);
        HalfInt to = from + shift;
        if (!state.occupied(from) || state.occupied(to))
            continue;
        int between = state.particles_between(from, to);
        out.push_back({from, to, state.without_particle(from).with_particle(to), between % 2 ? -1 : 1});
    }
    return out;
}

std::vector<MayaState> basis_states(int max_degree, int charge)
{
    std::vector<MayaState> out;
    for (const auto& p : partitions_up_to(max_degree))
        out.push_back(MayaState::from_partition(p, charge));
    return out;
}

template <ScalarRing S>
S inner(const FockVector<S>& u, const FockVector<S>& v)
{
    if (u.charge() != v.charge())
        throw DomainError("inner product across charge sectors " + std::to_string(u.charge()) + " and " +
                          std::to_string(v.charge()));
    S acc;
    const auto& small = u.support_size() <= v.support_size() ? u : v;
    const auto& large = &small == &u ? v : u;
    for (const auto& [s, c] : small.terms()) {
        auto it = large.terms().find(s);
        if (it != large.terms().end())
            acc = acc + c * it->second;
    }
    return acc;
}

template <ScalarRing S>
FockVector<S> psi(HalfInt x, const FockVector<S>& v)
{
    return apply_linear(v, v.charge() + 1, [x](const MayaState& s) {
        FockVector<S> out(s.charge() + 1);
        if (!s.occupied(x))
            out.add(s.with_particle(x), S(Rational(s.particles_above(x) % 2 ? -1 : 1)));
        return out;
    });
}

template <ScalarRing S>
FockVector<S> psi_star(HalfInt x, const FockVector<S>& v)
{
    return apply_linear(v, v.charge() - 1, [x](const MayaState& s) {
        FockVector<S> out(s.charge() - 1);
        if (s.occupied(x))
            out.add(s.without_particle(x), S(Rational(s.particles_above(x) % 2 ? -1 : 1)));
        return out;
    });
}

template <ScalarRing S>
FockVector<S> boson(int k, const FockVector<S>& v, int trunc)
{
    if (k == 0)
        throw DomainError("a_0 acts by a scalar; use boson_zero_eigenvalue");
    if (v.is_zero())
        return FockVector<S>(v.charge());
    if (trunc < v.degree() + std::abs(k))
        throw TruncationError("boson a_" + std::to_string(k) + " needs truncation >= " +
                              std::to_string(v.degree() + std::abs(k)) + ", got " + std::to_string(trunc));
    return apply_linear(v, v.charge(), [k](const MayaState& s) {
        FockVector<S> out(s.charge());
        for (const auto& j : single_jumps(s, -k))
            out.add(j.result, S(Rational(j.sign)));
        return out;
    });
}

#define VFOCK_INSTANTIATE(S)                                                   \
    template S inner<S>(const FockVector<S>&, const FockVector<S>&);           \
    template FockVector<S> psi<S>(HalfInt, const FockVector<S>&);              \
    template FockVector<S> psi_star<S>(HalfInt, const FockVector<S>&);         \
    template FockVector<S> boson<S>(int, const FockVector<S>&, int);

VFOCK_INSTANTIATE(Rational)
VFOCK_INSTANTIATE(Poly)

#undef VFOCK_INSTANTIATE

} // namespace vfock
