#include "vfock/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "vfock/errors.hpp"

namespace vfock {

HalfInt HalfInt::from_doubled(int doubled)
{
    if (doubled % 2 == 0)
        throw DomainError("half-integer coordinate must have odd doubled value, got " + std::to_string(doubled));
    return HalfInt(doubled);
}

HalfInt HalfInt::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos || text.substr(slash + 1) != "2")
        throw ParseError("half-integer must be written p/2: '" + std::string(text) + "'");
    std::string_view num = text.substr(0, slash);
    if (!num.empty() && num.front() == '+')
        num.remove_prefix(1);
    int p = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
    if (ec != std::errc() || ptr != num.data() + num.size() || num.empty())
        throw ParseError("half-integer must be written p/2: '" + std::string(text) + "'");
    if (p % 2 == 0)
        throw ParseError("half-integer numerator must be odd: '" + std::string(text) + "'");
    return HalfInt(p);
}

std::string HalfInt::str() const
{
    return std::to_string(doubled_) + "/2";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::conjugate() const
{
    std::vector<int> out;
    if (!parts_.empty()) {
        for (int c = 1; c <= parts_.front(); ++c) {
            int len = 0;
            while (len < length() && parts_[static_cast<std::size_t>(len)] >= c)
                ++len;
            out.push_back(len);
        }
    }
    return Partition(std::move(out));
}

std::string Partition::str() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

std::vector<HalfInt> conf(const Partition& lambda, int cutoff)
{
    if (cutoff < lambda.length())
        throw DomainError("conf cutoff " + std::to_string(cutoff) + " is below the number of parts " +
                          std::to_string(lambda.length()));
    std::vector<HalfInt> out;
    out.reserve(static_cast<std::size_t>(cutoff));
    for (int i = 1; i <= cutoff; ++i)
        out.push_back(HalfInt::from_doubled(2 * lambda.part(static_cast<std::size_t>(i - 1)) - 2 * i + 1));
    return out;
}

Partition partition_from_conf(const std::vector<HalfInt>& positions, int charge)
{
    for (std::size_t i = 1; i < positions.size(); ++i)
        if (positions[i] >= positions[i - 1])
            throw DomainError("particle positions must be strictly decreasing");
    if (charge != 0)
        throw DomainError("charge " + std::to_string(charge) + " sector contains no partition");
    if (positions.empty())
        return Partition();
    int n = static_cast<int>(positions.size());
    // The implicit continuation -i + 1/2 (i > n) must lie below the list.
    if (positions.back().doubled() < -2 * n + 1)
        throw DomainError("configuration ending at " + positions.back().str() +
                          " cannot be continued by the vacuum sea");
    std::vector<int> parts;
    for (int i = 1; i <= n; ++i) {
        int p = (positions[static_cast<std::size_t>(i - 1)].doubled() + 2 * i - 1) / 2;
        if (p == 0)
            break;
        parts.push_back(p);
    }
    return Partition(std::move(parts));
}

std::vector<Box> addable_boxes(const Partition& lambda)
{
    std::vector<Box> out;
    for (int i = 1; i <= lambda.length() + 1; ++i) {
        int len = lambda.part(static_cast<std::size_t>(i - 1));
        if (i == 1 || lambda.part(static_cast<std::size_t>(i - 2)) > len)
            out.push_back({i, len + 1});
    }
    return out;
}

std::vector<Box> removable_boxes(const Partition& lambda)
{
    std::vector<Box> out;
    for (int i = 1; i <= lambda.length(); ++i) {
        int len = lambda.part(static_cast<std::size_t>(i - 1));
        if (lambda.part(static_cast<std::size_t>(i)) < len)
            out.push_back({i, len});
    }
    return out;
}

Partition add_box(const Partition& lambda, const Box& box)
{
    std::vector<int> parts = lambda.parts();
    auto row = static_cast<std::size_t>(box.row - 1);
    if (row == parts.size())
        parts.push_back(0);
    if (row > parts.size() || parts[row] + 1 != box.col)
        throw DomainError("box is not addable");
    ++parts[row];
    return Partition(std::move(parts));
}

Partition remove_box(const Partition& lambda, const Box& box)
{
    std::vector<int> parts = lambda.parts();
    auto row = static_cast<std::size_t>(box.row - 1);
    if (row >= parts.size() || parts[row] != box.col)
        throw DomainError("box is not removable");
    if (--parts[row] == 0)
        parts.pop_back();
    return Partition(std::move(parts));
}

namespace {

std::vector<RimHookMove> rim_hooks(const Partition& lambda, int r, bool addition)
{
    if (r < 1)
        throw DomainError("rim hook length must be positive");
    std::vector<HalfInt> positions = conf(lambda, lambda.length() + r);
    auto occupied = [&](HalfInt x) {
        if (x < positions.back())
            return true;
        return std::binary_search(positions.begin(), positions.end(), x, std::greater<>());
    };
    std::vector<RimHookMove> out;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        HalfInt from = positions[i];
        HalfInt to = addition ? from + r : from - r;
        if (occupied(to))
            continue;
        HalfInt lo = std::min(from, to);
        HalfInt hi = std::max(from, to);
        int between = 0;
        for (HalfInt p : positions)
            if (p > lo && p < hi)
                ++between;
        std::vector<HalfInt> moved = positions;
        moved[i] = to;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        RimHookMove m;
        m.result = partition_from_conf(moved, 0);
        m.height = between + 1;
        m.start = from;
        m.length = r;
        m.addition = addition;
        // The leftmost box of the strip sits at content (left endpoint + 1/2).
        m.leftmost_content = (lo.doubled() + 1) / 2;
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace

std::vector<RimHookMove> rim_hooks_addable(const Partition& lambda, int r)
{
    return rim_hooks(lambda, r, true);
}

std::vector<RimHookMove> rim_hooks_removable(const Partition& lambda, int r)
{
    return rim_hooks(lambda, r, false);
}

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> current;
    std::function<void(int, int)> extend = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            extend(remaining - p, p);
            current.pop_back();
        }
    };
    extend(n, n);
    return out;
}

std::vector<Partition> partitions_up_to(int max_size)
{
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n) {
        auto part = partitions_of(n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace vfock
