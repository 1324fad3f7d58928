#ifndef LOLAB_SUBSETS_HPP_
#define LOLAB_SUBSETS_HPP_

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Subset/bitmask arithmetic and polymorphism value tables.
//
// Variables are 1-based externally ([n] = {1,...,n}); bit i-1 of a mask
// represents membership of variable i. Tables are dense arrays of length
// 2^n indexed by mask, so the arity is capped at 24.

namespace lolab {

inline constexpr int kMaxArity = 24;

inline std::uint32_t full_mask(int n) { return (std::uint32_t{1} << n) - 1; }

inline int popcount(std::uint32_t m) { return std::popcount(m); }

inline void check_arity(int n) {
    if (n < 1 || n > kMaxArity)
        throw std::invalid_argument("arity out of range [1," +
                                    std::to_string(kMaxArity) + "]");
}

struct SubsetMask {
    std::uint32_t bits = 0;
    int n = 0;

    SubsetMask() = default;
    SubsetMask(std::uint32_t bits_, int n_) : bits(bits_), n(n_) {
        check_arity(n_);
        if (bits_ > full_mask(n_))
            throw std::invalid_argument("mask bits exceed 2^n - 1");
    }

    static SubsetMask empty(int n_) { return SubsetMask(0, n_); }
    static SubsetMask full(int n_) { return SubsetMask(full_mask(n_), n_); }

    bool contains(int element) const {  // 1-based
        return element >= 1 && element <= n && (bits >> (element - 1)) & 1;
    }
    int size() const { return popcount(bits); }
    SubsetMask complement() const { return SubsetMask(full_mask(n) ^ bits, n); }
    bool disjoint(const SubsetMask& other) const { return (bits & other.bits) == 0; }

    friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
};

// Elements of a mask as 1-based indices.
std::vector<int> mask_elements(std::uint32_t mask);

// f : 2^[n] -> {0,...,target_size-1} as a dense value table.
struct PolyTable {
    int arity = 0;
    int target_size = 3;
    std::vector<std::uint8_t> values;  // length 1 << arity, index = mask

    PolyTable() = default;
    PolyTable(int arity_, int target_size_, std::vector<std::uint8_t> values_);

    std::uint8_t operator()(std::uint32_t mask) const { return values[mask]; }

    friend bool operator==(const PolyTable&, const PolyTable&) = default;
};

struct PartitionTriple {
    std::uint32_t x = 0, y = 0, z = 0;
    int n = 0;

    friend bool operator==(const PartitionTriple&, const PartitionTriple&) = default;
};

// Visits every unordered partition (X,Y,Z) of [n] into three (possibly
// empty) parts exactly once, in canonical form x <= y <= z by bits, with
// x ascending outermost.
template <class F>
void for_each_partition(int n, F&& fn) {
    check_arity(n);
    const std::uint32_t full = full_mask(n);
    for (std::uint32_t x = 0; x <= full; ++x) {
        const std::uint32_t rest = full & ~x;
        for (std::uint32_t y = 0;; y = (y - rest) & rest) {  // submasks ascending
            const std::uint32_t z = rest & ~y;
            if (x <= y && y <= z) fn(x, y, z);
            if (y == rest) break;
        }
    }
}

std::vector<PartitionTriple> iterate_partitions(int n);

struct ParseError : std::runtime_error {
    enum class Kind { Header, Length, Digit };
    Kind kind;
    ParseError(Kind kind_, const std::string& what_)
        : std::runtime_error(what_), kind(kind_) {}
};

// "poly <n> <l>\n" followed by 2^n digit characters and a newline.
std::string encode_table(const PolyTable& f);
PolyTable decode_table(std::string_view text);

}  // namespace lolab

#endif
