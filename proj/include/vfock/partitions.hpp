#pragma once

// Young diagrams, their half-integer particle configurations, boxes, and rim
// hooks (border strips). Every other module indexes its vectors by these.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace vfock {

// A point of Z + 1/2, stored as the odd integer 2x.
class HalfInt {
public:
    constexpr HalfInt() = default;
    static HalfInt from_doubled(int doubled);
    // Parses "p/2" with p odd.
    static HalfInt parse(std::string_view text);

    constexpr int doubled() const { return doubled_; }
    std::string str() const;

    HalfInt operator+(int shift) const { return from_doubled(doubled_ + 2 * shift); }
    HalfInt operator-(int shift) const { return from_doubled(doubled_ - 2 * shift); }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

private:
    constexpr explicit HalfInt(int d) : doubled_(d) {}
    int doubled_ = 1;
};

class Partition {
public:
    Partition() = default;
    // Throws DomainError unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // Part i (0-based); zero past the last part.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const;
    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    // Plain lexicographic order on the parts.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct Box {
    int row = 1;
    int col = 1;
    int content() const { return col - row; }
    friend auto operator<=>(const Box&, const Box&) = default;
};

// One rim-hook addition or removal, read off a single particle jump.
struct RimHookMove {
    Partition result;
    int height = 1;             // rows occupied by the hook
    int leftmost_content = 0;   // content of the hook's leftmost box
    HalfInt start;              // particle coordinate before the jump
    int length = 1;             // number of boxes, equal to the jump size
    bool addition = true;

    HalfInt end() const { return addition ? start + length : start - length; }
};

// First `cutoff` particle coordinates lambda_i - i + 1/2, strictly decreasing.
std::vector<HalfInt> conf(const Partition& lambda, int cutoff);

// Inverse of conf: the list is continued downward by consecutive positions.
// Throws DomainError for non-decreasing input or a nonzero charge.
Partition partition_from_conf(const std::vector<HalfInt>& positions, int charge = 0);

// Corner boxes, sorted by content descending.
std::vector<Box> addable_boxes(const Partition& lambda);
std::vector<Box> removable_boxes(const Partition& lambda);
Partition add_box(const Partition& lambda, const Box& box);
Partition remove_box(const Partition& lambda, const Box& box);

// All r-rim-hooks that can be added to / removed from lambda, one per
// particle of conf(lambda) that can jump r steps right / left. Sorted by the
// start coordinate descending.
std::vector<RimHookMove> rim_hooks_addable(const Partition& lambda, int r);
std::vector<RimHookMove> rim_hooks_removable(const Partition& lambda, int r);

// All partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

// Partitions of every size 0..max_size, each size in reverse lexicographic order.
std::vector<Partition> partitions_up_to(int max_size);

} // namespace vfock
