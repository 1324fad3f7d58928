#include "lolab/polymorph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lolab {

PolyWitness is_polymorphism(const PolyTable& f, const Relation3& target) {
    if (target.domain_size() != f.target_size)
        throw std::invalid_argument("target domain size does not match table");
    if (!target.symmetric())
        throw std::invalid_argument(
            "partition characterization requires a symmetric target");
    PolyWitness w;
    w.ok = true;
    const std::uint32_t full = full_mask(f.arity);
    for (std::uint32_t x = 0; x <= full && w.ok; ++x) {
        const std::uint32_t rest = full & ~x;
        const int fx = f(x);
        for (std::uint32_t y = 0;; y = (y - rest) & rest) {
            const std::uint32_t z = rest & ~y;
            if (x <= y && y <= z && !target.contains(fx, f(y), f(z))) {
                w.ok = false;
                w.violation = PartitionTriple{x, y, z, f.arity};
                w.values = {fx, f(y), f(z)};
                break;
            }
            if (y == rest) break;
        }
    }
    return w;
}

PolyTable projection(int n, int t, int target_size) {
    check_arity(n);
    if (t < 1 || t > n) throw std::invalid_argument("projection coordinate out of range");
    std::vector<std::uint8_t> values(std::size_t{1} << n, 0);
    const std::uint32_t bit = std::uint32_t{1} << (t - 1);
    for (std::uint32_t m = 0; m < values.size(); ++m)
        values[m] = (m & bit) ? 1 : 0;
    return PolyTable(n, target_size, std::move(values));
}

PolyTable threshold_lo2_h2(int m) {
    if (m < 1) throw std::invalid_argument("threshold parameter must be positive");
    const int n = 3 * m + 1;
    if (n > kMaxArity) throw std::invalid_argument("arity cap exceeded (m <= 7)");
    std::vector<std::uint8_t> values(std::size_t{1} << n, 0);
    for (std::uint32_t mask = 0; mask < values.size(); ++mask)
        values[mask] = popcount(mask) >= m + 1 ? 1 : 0;
    return PolyTable(n, 2, std::move(values));
}

namespace {

struct Searcher {
    int n;
    const Relation3& target;
    EnumFilter filter;
    std::uint64_t budget;

    std::vector<std::uint32_t> order;           // masks, ascending (popcount, bits)
    std::vector<int> pos;                       // inverse of order
    std::vector<std::vector<PartitionTriple>> completed;  // per step
    std::vector<std::uint8_t> values;
    EnumResult out;

    Searcher(int n_, const Relation3& target_, EnumFilter filter_, std::uint64_t budget_)
        : n(n_), target(target_), filter(filter_), budget(budget_) {
        const std::size_t count = std::size_t{1} << n;
        order.resize(count);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
            const int pa = popcount(a), pb = popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        pos.resize(count);
        for (std::size_t i = 0; i < count; ++i) pos[order[i]] = static_cast<int>(i);
        completed.resize(count);
        for_each_partition(n, [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
            const int step = std::max({pos[x], pos[y], pos[z]});
            completed[step].push_back(PartitionTriple{x, y, z, n});
        });
        values.assign(count, 0);
    }

    bool step_ok(std::size_t step) const {
        for (const auto& p : completed[step])
            if (!target.contains(values[p.x], values[p.y], values[p.z])) return false;
        return true;
    }

    // Returns false once the budget is exhausted.
    bool dfs(std::size_t step) {
        if (step == order.size()) {
            out.tables.emplace_back(n, target.domain_size(), values);
            return true;
        }
        const std::uint32_t mask = order[step];
        const int limit = (filter == EnumFilter::NoSmall2Set && popcount(mask) <= 3)
                              ? 2
                              : target.domain_size();
        for (int v = 0; v < limit; ++v) {
            if (++out.nodes > budget) {
                out.complete = false;
                return false;
            }
            values[mask] = static_cast<std::uint8_t>(v);
            if (step_ok(step) && !dfs(step + 1)) return false;
        }
        values[mask] = 0;
        return true;
    }
};

}  // namespace

EnumResult enumerate_polymorphisms(int n, const Relation3& target, EnumFilter filter,
                                   std::uint64_t budget) {
    check_arity(n);
    if (filter == EnumFilter::All && n > 4)
        throw std::invalid_argument("full enumeration is limited to arity 4");
    if (filter == EnumFilter::NoSmall2Set && n > 6)
        throw std::invalid_argument("filtered enumeration is limited to arity 6");
    if (!target.symmetric())
        throw std::invalid_argument("enumeration requires a symmetric target");

    Searcher s(n, target, filter, budget);
    s.dfs(0);
    std::sort(s.out.tables.begin(), s.out.tables.end(),
              [](const PolyTable& a, const PolyTable& b) { return a.values < b.values; });
    return std::move(s.out);
}

}  // namespace lolab
