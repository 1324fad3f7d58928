#include "lolab/families.hpp"

#include <stdexcept>

namespace lolab {

PolyTable block_family_g(int n, int t, std::uint32_t block) {
    check_arity(n);
    if (n < 7) throw std::invalid_argument("block family requires arity >= 7");
    if (t < 1 || t > n) throw std::invalid_argument("dictator out of range");
    if (block > full_mask(n) || popcount(block) != 7)
        throw std::invalid_argument("block must be a 7-element subset of [n]");
    const std::uint32_t tbit = std::uint32_t{1} << (t - 1);
    std::vector<std::uint8_t> values(std::size_t{1} << n, 0);
    for (std::uint32_t s = 0; s < values.size(); ++s) {
        const int hits = popcount(s & block);
        if (hits >= 4)
            values[s] = 2;
        else if (hits >= 1 && (s & tbit))
            values[s] = 1;
    }
    return PolyTable(n, 3, std::move(values));
}

PolyTable block_family_f(int n, int t, std::uint32_t block) {
    PolyTable f = block_family_g(n, t, block);
    f.values[block] = 1;
    f.values[full_mask(n)] = 1;
    return f;
}

PolyTable threshold_family(int n, int t, int star) {
    check_arity(n);
    if (n < 7) throw std::invalid_argument("threshold family requires arity >= 7");
    if (t < 1 || t > n || star < 1 || star > n)
        throw std::invalid_argument("variable index out of range");
    const std::uint32_t tbit = std::uint32_t{1} << (t - 1);
    const std::uint32_t sbit = std::uint32_t{1} << (star - 1);
    std::vector<std::uint8_t> values(std::size_t{1} << n, 0);
    for (std::uint32_t s = 0; s < values.size(); ++s) {
        const int size = popcount(s);
        const bool two = 2 * size > n || (2 * size == n && (s & sbit));
        if (two)
            values[s] = 2;
        else if (s & tbit)
            values[s] = 1;
    }
    return PolyTable(n, 3, std::move(values));
}

}  // namespace lolab
